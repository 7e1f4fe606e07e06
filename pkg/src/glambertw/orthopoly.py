"""Exact constructors for the classical polynomial families used by the solvers.

Each family is built two independent ways (explicit sum and recurrence) so
transcription slips in either path show up as a cross-check failure rather
than a wrong root.  Conventions:

* Bessel (Krall-Frink):  B_n(z) = sum_k (n+k)!/((n-k)! k!) (z/2)^k
* generalized Laguerre:  L_n^(a)(x) = sum_k (-1)^k C(n+a, n-k) x^k / k!
* probabilists' Hermite: He_{n+1} = x He_n - n He_{n-1}
* Touchard/Bell in y=e^x: phi_{n+1}(y) = y (phi_n(y) + phi_n'(y)),
  whose coefficients are Stirling numbers of the second kind.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .series import signed_log


class RatPoly:
    """Dense univariate polynomial with exact rational coefficients.

    Canonical form: trailing zero coefficients stripped; the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def derivative(self) -> "RatPoly":
        return RatPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Horner evaluation; exact when x is int or Fraction."""
        if not self.coeffs:
            return x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        if isinstance(other, RatPoly):
            n = max(len(self.coeffs), len(other.coeffs))
            return RatPoly(
                [self.coefficient(k) + other.coefficient(k) for k in range(n)]
            )
        return self + RatPoly([other])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, RatPoly):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatPoly):
            if not self.coeffs or not other.coeffs:
                return RatPoly([])
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RatPoly(out)
        return RatPoly([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        if not self.coeffs:
            return "RatPoly(0)"
        body = " + ".join(f"({c})x^{k}" if k else f"({c})" for k, c in enumerate(self.coeffs))
        return f"RatPoly({body})"


def poly_eval(p: RatPoly, x):
    """Evaluate p at x; exact for int/Fraction input, float for float input."""
    return p(x)


def poly_eval_signed_log(p: RatPoly, x):
    """Overflow-safe (sign, ln|p(x)|): evaluates exactly, then takes the log.

    The argument is converted to an exact Fraction first, so the only
    rounding is in the final logarithm.
    """
    xf = x if isinstance(x, Fraction) else Fraction(x)
    return signed_log(p(xf))


@lru_cache(maxsize=None)
def bessel_poly(n: int) -> RatPoly:
    """Krall-Frink Bessel polynomial B_n by its explicit sum.

    All coefficients are integers; this is asserted.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    coeffs = []
    for k in range(n + 1):
        c = Fraction(
            math.factorial(n + k),
            math.factorial(n - k) * math.factorial(k) * 2**k,
        )
        assert c.denominator == 1, f"non-integer Bessel coefficient at n={n}, k={k}"
        coeffs.append(c)
    return RatPoly(coeffs)


def bessel_poly_recurrence(n: int) -> RatPoly:
    """B_n via the three-term recurrence B_n = (2n-1) z B_{n-1} + B_{n-2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev = RatPoly([1])
    if n == 0:
        return prev
    cur = RatPoly([1, 1])
    z = RatPoly([0, 1])
    for m in range(2, n + 1):
        prev, cur = cur, (2 * m - 1) * z * cur + prev
    return cur


@lru_cache(maxsize=None)
def laguerre_poly(n: int, alpha: int) -> RatPoly:
    """Generalized Laguerre polynomial L_n^(alpha) by its explicit sum."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    coeffs = [
        Fraction((-1) ** k * math.comb(n + alpha, n - k), math.factorial(k))
        for k in range(n + 1)
    ]
    return RatPoly(coeffs)


def laguerre_poly_recurrence(n: int, alpha: int) -> RatPoly:
    """L_n^(alpha) via (m+1) L_{m+1} = (2m+alpha+1 - x) L_m - (m+alpha) L_{m-1}."""
    prev = RatPoly([1])
    if n == 0:
        return prev
    cur = RatPoly([1 + alpha, -1])
    x = RatPoly([0, 1])
    for m in range(1, n):
        nxt = (((2 * m + alpha + 1) - x) * cur - (m + alpha) * prev) * Fraction(1, m + 1)
        prev, cur = cur, nxt
    return cur


@lru_cache(maxsize=None)
def hermite_prob_poly(n: int) -> RatPoly:
    """Probabilists' Hermite He_n via He_{m+1} = x He_m - m He_{m-1}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    prev = RatPoly([1])
    if n == 0:
        return prev
    cur = RatPoly([0, 1])
    x = RatPoly([0, 1])
    for m in range(1, n):
        prev, cur = cur, x * cur - m * prev
    return cur


def hermite_prob_poly_explicit(n: int) -> RatPoly:
    """He_n by the explicit sum over x^(n-2m) monomials."""
    coeffs = [Fraction(0)] * (n + 1)
    for m in range(n // 2 + 1):
        coeffs[n - 2 * m] = Fraction(
            (-1) ** m * math.factorial(n),
            math.factorial(m) * math.factorial(n - 2 * m) * 2**m,
        )
    return RatPoly(coeffs)


@lru_cache(maxsize=None)
def touchard_poly(n: int) -> RatPoly:
    """Touchard/Bell polynomial phi_n in y = e^x, via phi_{m+1} = y (phi_m + phi_m')."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cur = RatPoly([1])
    y = RatPoly([0, 1])
    for _ in range(n):
        cur = y * (cur + cur.derivative())
    return cur


def touchard_poly_stirling(n: int) -> RatPoly:
    """phi_n from the explicit Stirling-number formula S(n,k) = (1/k!) sum_j (-1)^j C(k,j) (k-j)^n."""
    if n == 0:
        return RatPoly([1])
    coeffs = [Fraction(0)]
    for k in range(1, n + 1):
        s = sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1))
        coeffs.append(Fraction(s, math.factorial(k)))
    return RatPoly(coeffs)
