"""Exact, executable verification of the polynomial representations and
operator identities behind the closed-form solvers.

Every check here runs in exact rational arithmetic; equality is meant
literally, never to a tolerance.  The module also produces the
machine-readable errata report listing each printed formula of the source
derivation that disagrees with the inversion oracle, together with the
verified replacement.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .orthopoly import (
    RatPoly,
    bessel_poly,
    hermite_prob_poly,
    laguerre_poly,
    touchard_poly,
)
from .series import ExpLaurent


def _x2_derive(e: ExpLaurent) -> ExpLaurent:
    # u^2 d/du = -(d/d(1/u))
    return -e.recip_derive()


def _derive_n(e: ExpLaurent, n: int) -> ExpLaurent:
    for _ in range(n):
        e = e.derive()
    return e


def bessel_reciprocal_rep(n: int) -> ExpLaurent:
    """Laurent polynomial e^{-x} x^(n+1) (d/dx)^n [e^x / x^(n+1)], exactly.

    The exponential factors must cancel; the result is a polynomial in 1/x
    equal to the Bessel polynomial B_n(-2/x).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    e = _derive_n(ExpLaurent(1, {-(n + 1): 1}), n)
    result = e * ExpLaurent(-1, {n + 1: 1})
    if result.rate != 0:
        raise ArithmeticError("exponential factors failed to cancel")
    return result


def reciprocal_rep_matches_bessel(n: int) -> bool:
    """Exact coefficient-wise equality of the derivative form with B_n(-2/x)."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = bessel_reciprocal_rep(n)
    terms = {}
    for k, c in enumerate(bessel_poly(n).coeffs):
        if c:
            terms[-k] = c * Fraction(-2) ** k
    return lhs == ExpLaurent(0, terms)


def _reciprocal_to_poly(e: ExpLaurent) -> RatPoly:
    """Convert a Laurent polynomial in u = 1/x (powers <= 0) to a polynomial in x."""
    if not e.is_zero and e.max_power() > 0:
        raise ValueError("expression has positive powers of the reciprocal variable")
    coeffs = {}
    for k, c in e.items():
        coeffs[-k] = c
    size = max(coeffs) + 1 if coeffs else 0
    return RatPoly([coeffs.get(i, Fraction(0)) for i in range(size)])


def classical_bessel_rodrigues(n: int) -> RatPoly:
    """B_n(x) from 2^{-n} e^{2/x} (d/dx)^n [e^{-2/x} x^{2n}], computed exactly.

    Substituting u = 1/x turns d/dx into the reciprocal-variable derivative
    -u^2 d/du, which keeps the computation inside ExpLaurent.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    e = ExpLaurent(-2, {-2 * n: 1})
    for _ in range(n):
        e = e.recip_derive()
    result = e * ExpLaurent(2, {0: 1}) * Fraction(1, 2**n)
    if result.rate != 0:
        raise ArithmeticError("exponential factors failed to cancel")
    return _reciprocal_to_poly(result)


def reciprocal_rep_equivalence(n: int) -> bool:
    """Exact equality of the two derivative pipelines producing B_n(-2/x):

    e^{-x} (x^2 d/dx)^n [e^x / x^{2n}]  ==  e^{-x} x^{n+1} (d/dx)^n [e^x / x^{n+1}]
    """
    if n < 1:
        raise ValueError("n must be positive")
    lhs = ExpLaurent(1, {-2 * n: 1})
    for _ in range(n):
        lhs = _x2_derive(lhs)
    lhs = lhs * ExpLaurent(-1, {0: 1})
    rhs = bessel_reciprocal_rep(n)
    return lhs == rhs


def operator_identity_check(n: int, g: ExpLaurent) -> bool:
    """Exact check of (x^2 D)^n g == x^{n+1} D^n (x^{n-1} g) on a concrete g."""
    if n < 1:
        raise ValueError("n must be positive")
    lhs = g
    for _ in range(n):
        lhs = _x2_derive(lhs)
    rhs = _derive_n(g * ExpLaurent.monomial(n - 1), n) * ExpLaurent.monomial(n + 1)
    return lhs == rhs


def _commutator_basis() -> list:
    basis = [ExpLaurent.monomial(k) for k in range(-3, 4)]
    basis += [ExpLaurent(1, {k: 1}) for k in range(-3, 4)]
    return basis


def commutator_check(n: int) -> bool:
    """Both commutation rules, applied to a spanning set of basis expressions:

    D (x^n .) - (x^n .) D == n x^{n-1} .      and
    D^n (x .) - (x .) D^n == n D^{n-1}
    """
    if n < 1:
        raise ValueError("n must be positive")
    xn = ExpLaurent.monomial(n)
    xnm1 = ExpLaurent.monomial(n - 1)
    u = ExpLaurent.monomial(1)
    for g in _commutator_basis():
        lhs1 = (xn * g).derive() - xn * g.derive()
        if lhs1 != n * xnm1 * g:
            return False
        lhs2 = _derive_n(u * g, n) - u * _derive_n(g, n)
        if lhs2 != n * _derive_n(g, n - 1):
            return False
    return True


@dataclass(frozen=True)
class RodriguesSpec:
    """One instance of the weight-based polynomial construction
    P_n = (1/W) (d/dx)^n [W Q^n]."""

    weight: str  # "bessel" | "hermite" | "laguerre" | "touchard"
    n: int
    alpha: int = 0


@dataclass(frozen=True)
class RodriguesResult:
    """Raw Rodrigues output plus the constant relating it to the library family.

    ``poly == normalization * <family constructor>(n)`` exactly; for the
    Touchard weight the variable is y = e^x.
    """

    family: str
    n: int
    poly: RatPoly
    normalization: Fraction
    variable: str


def rodrigues_polynomial(spec: RodriguesSpec) -> RodriguesResult:
    """Evaluate the weight-based construction exactly for one family member.

    Weights and Q factors: bessel (e^{-2/x}, Q = x^2), hermite (e^{-x^2/2},
    Q = 1), laguerre (x^alpha e^{-x}, Q = x), touchard (e^{e^x}, Q = 1).
    The Hermite and Touchard weights are not Laurent-representable, so they
    use the equivalent exact derivation rules on plain polynomials:
    p -> p' - x p under e^{-x^2/2}, and p -> y (p + p') in y = e^x.
    """
    n = spec.n
    if n < 0:
        raise ValueError("n must be non-negative")
    if spec.weight == "hermite":
        p = RatPoly([1])
        x = RatPoly([0, 1])
        for _ in range(n):
            p = p.derivative() - x * p
        return RodriguesResult("hermite", n, p, Fraction((-1) ** n), "x")
    if spec.weight == "touchard":
        p = RatPoly([1])
        y = RatPoly([0, 1])
        for _ in range(n):
            p = y * (p + p.derivative())
        return RodriguesResult("touchard", n, p, Fraction(1), "y=e^x")
    if spec.weight == "laguerre":
        alpha = spec.alpha
        if alpha < 0:
            raise ValueError("alpha must be non-negative")
        e = _derive_n(ExpLaurent(-1, {n + alpha: 1}), n)
        result = e * ExpLaurent(1, {-alpha: 1})
        if result.rate != 0:
            raise ArithmeticError("exponential factors failed to cancel")
        coeffs = {}
        for k, c in result.items():
            if k < 0:
                raise ArithmeticError("negative powers left over")
            coeffs[k] = c
        size = max(coeffs) + 1 if coeffs else 0
        poly = RatPoly([coeffs.get(i, Fraction(0)) for i in range(size)])
        return RodriguesResult("laguerre", n, poly, Fraction(factorial(n)), "x")
    if spec.weight == "bessel":
        e = ExpLaurent(-2, {-2 * n: 1})
        for _ in range(n):
            e = e.recip_derive()
        result = e * ExpLaurent(2, {0: 1})
        if result.rate != 0:
            raise ArithmeticError("exponential factors failed to cancel")
        return RodriguesResult(
            "bessel", n, _reciprocal_to_poly(result), Fraction(2**n), "x"
        )
    raise ValueError(f"unknown weight {spec.weight!r}")


def random_exp_laurent(rng: random.Random) -> ExpLaurent:
    """Random nonzero expression with powers in [-4, 4] and rate in {-2, 0, 1}."""
    rate = rng.choice((-2, 0, 1))
    terms = {}
    for _ in range(rng.randint(1, 4)):
        power = rng.randint(-4, 4)
        coeff = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        if coeff:
            terms[power] = terms.get(power, Fraction(0)) + coeff
    if not any(terms.values()):
        terms[0] = Fraction(1)
    return ExpLaurent(rate, terms)


# --- errata report -----------------------------------------------------------

ERRATA = [
    {
        "claimId": "ratio-series-closed-form",
        "paperLocation": "Sec. 3.1, Eq. (6)",
        "printedForm": "x = t + sum_n (t-s)^n l^n / n * L^(1)_{n-1}(n(t-s))",
        "verifiedForm": "x = s + sum_n l^n e^{n s} (s-t) / n * L^(1)_{n-1}(n(t-s))",
        "status": "corrected",
    },
    {
        "claimId": "hermite-rodrigues-sign",
        "paperLocation": "Sec. 3.2, Eq. (11)",
        "printedForm": "H_n(x) = e^{x^2/2} (d/dx)^n e^{-x^2/2}",
        "verifiedForm": "e^{x^2/2} (d/dx)^n e^{-x^2/2} = (-1)^n He_n(x)",
        "status": "corrected",
    },
    {
        "claimId": "gauss-series-closed-form",
        "paperLocation": "Sec. 3.2, Eq. (13)",
        "printedForm": "x = a + sum_n l^n/n! * e^{+n a^2/2} H_{n-1}(sqrt(n) a)",
        "verifiedForm": "x = a + sum_n l^n/n! * (-1)^{n-1} n^{(n-1)/2} e^{-n a^2/2} He_{n-1}(sqrt(n) a)",
        "status": "corrected",
    },
    {
        "claimId": "touchard-series-prefactor",
        "paperLocation": "Sec. 3.3, Eq. (16)",
        "printedForm": "x = a + sum_n l^n/n! * e^{e^a} T_{n-1}(a + log n)",
        "verifiedForm": "x = a + sum_n l^n/n! * e^{n e^a} phi_{n-1}(n e^a)",
        "status": "corrected",
    },
    {
        "claimId": "bessel-rep-summation-bound",
        "paperLocation": "Sec. 2, Eq. (4)",
        "printedForm": "sum_{k=0}^{n} (n-1+k)!/((n-1-k)! k!) (-1/x)^k",
        "verifiedForm": "upper limit n-1: the (n-1-k)! factor is undefined at k = n",
        "status": "corrected",
    },
    {
        "claimId": "classical-rodrigues-list-typos",
        "paperLocation": "Sec. 2, displayed list after the derivative table",
        "printedForm": "mixed e^{1/z} / e^{2/x} weights and exponent typos (x^{3*2} for x^{2*3})",
        "verifiedForm": "all rows follow from 2^{-n} e^{2/x} (d/dx)^n [e^{-2/x} x^{2n}]",
        "status": "typographical",
    },
]


def errata_report() -> list:
    """Machine-readable list of printed-form discrepancies (copies)."""
    return [dict(entry) for entry in ERRATA]


def identity_suite(max_n: int = 10, samples: int = 20, seed: int = 20140) -> dict:
    """Run every identity check up to max_n and collect a verdict record.

    Returns {"checks": [...], "errata": [...], "allPassed": bool}; intended
    for the CLI ``verify`` command.
    """
    checks = []

    def record(name: str, n, passed: bool):
        checks.append({"check": name, "n": n, "passed": bool(passed)})

    for n in range(1, max_n + 1):
        record("reciprocal-rep-matches-bessel", n, reciprocal_rep_matches_bessel(n))
    for n in range(0, min(max_n, 10) + 1):
        record(
            "classical-bessel-rodrigues",
            n,
            classical_bessel_rodrigues(n) == bessel_poly(n),
        )
    for n in range(1, min(max_n, 8) + 1):
        record("reciprocal-rep-equivalence", n, reciprocal_rep_equivalence(n))
        record("commutator-rules", n, commutator_check(n))
    rng = random.Random(seed)
    inputs = [random_exp_laurent(rng) for _ in range(samples)]
    for n in range(1, min(max_n, 8) + 1):
        ok = all(operator_identity_check(n, g) for g in inputs)
        record("reciprocal-derivative-operator-identity", n, ok)
    for n in range(0, min(max_n, 8) + 1):
        r = rodrigues_polynomial(RodriguesSpec("hermite", n))
        record(
            "rodrigues-hermite", n, r.poly == r.normalization * hermite_prob_poly(n)
        )
        r = rodrigues_polynomial(RodriguesSpec("touchard", n))
        record("rodrigues-touchard", n, r.poly == r.normalization * touchard_poly(n))
        r = rodrigues_polynomial(RodriguesSpec("laguerre", n, alpha=1))
        record(
            "rodrigues-laguerre", n, r.poly == r.normalization * laguerre_poly(n, 1)
        )
        r = rodrigues_polynomial(RodriguesSpec("bessel", n))
        record("rodrigues-bessel", n, r.poly == r.normalization * bessel_poly(n))
    return {
        "checks": checks,
        "errata": errata_report(),
        "allPassed": all(c["passed"] for c in checks),
    }
