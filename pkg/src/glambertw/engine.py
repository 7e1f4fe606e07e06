"""Series-inversion oracle for equations of the form x = a + l*f(x).

The coefficients of the root branch through x(0) = a are computed directly
from truncated-series arithmetic,

    c_n = (1/n) * [w^(n-1)] f(a + w)^n,

with no orthogonal-polynomial shortcut, so the closed forms elsewhere in
the package can be validated term by term against an independent pipeline.

Exact backend: when the base point and the descriptor parameters arrive as
``int`` / ``Fraction`` and the descriptor's transcendental content factors
as a single exp(q*a) scale with rational q, the whole inversion runs in
exact rational arithmetic and only the final conversion to float rounds.
That covers every family except the doubly-exponential one, whose
prefactor exp(n*e^a) is not of that form; it always uses the binary64
backend.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

from .series import TruncSeries, exp_linear, exp_series, signed_log, _is_exact


class PoleAtBaseError(ValueError):
    """Expansion point coincides with a pole or excluded point of f."""


def _safe_exp(x: float) -> float:
    if x > 709.0:
        return math.inf
    return math.exp(x)


def _expw_float(base: float, order: int) -> TruncSeries:
    """Series of exp(w) at the given base point, float coefficients."""
    coeffs = [1.0]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] / k)
    return TruncSeries(base, coeffs, 0)


@dataclass(frozen=True)
class PlainExp:
    """f(x) = e^x (the classical Lambert W limit)."""

    name = "plainexp"

    def check_base(self, a) -> None:
        pass

    def value(self, x: float) -> float:
        return _safe_exp(x)

    def dvalue(self, x: float) -> float:
        return _safe_exp(x)

    def series(self, a, order: int) -> TruncSeries:
        return exp_linear(1 if _is_exact(a) else 1.0, a, order)


@dataclass(frozen=True)
class ExpOverLinear:
    """f(x) = e^x / (x - b); the base point must avoid the pole at b."""

    b: Union[float, Fraction]
    name = "expoverlinear"

    def check_base(self, a) -> None:
        if a == self.b:
            raise PoleAtBaseError(f"base point {a} coincides with the pole b={self.b}")

    def value(self, x: float) -> float:
        return _safe_exp(x) / (x - float(self.b))

    def dvalue(self, x: float) -> float:
        d = x - float(self.b)
        return _safe_exp(x) * (d - 1.0) / (d * d)

    def series(self, a, order: int) -> TruncSeries:
        self.check_base(a)
        if _is_exact(a) and _is_exact(self.b):
            denom = TruncSeries.linear(Fraction(a) - Fraction(self.b), a, order)
            return exp_linear(1, a, order) * denom.recip()
        denom = TruncSeries.linear(float(a) - float(self.b), float(a), order)
        return exp_linear(1.0, float(a), order) * denom.recip()


@dataclass(frozen=True)
class ExpTimesLinear:
    """f(x) = e^x * (x - t)."""

    t: Union[float, Fraction]
    name = "exptimeslinear"

    def check_base(self, a) -> None:
        pass

    def value(self, x: float) -> float:
        return _safe_exp(x) * (x - float(self.t))

    def dvalue(self, x: float) -> float:
        return _safe_exp(x) * (x - float(self.t) + 1.0)

    def series(self, a, order: int) -> TruncSeries:
        if _is_exact(a) and _is_exact(self.t):
            lin = TruncSeries.linear(Fraction(a) - Fraction(self.t), a, order)
            return exp_linear(1, a, order) * lin
        lin = TruncSeries.linear(float(a) - float(self.t), float(a), order)
        return exp_linear(1.0, float(a), order) * lin


@dataclass(frozen=True)
class Gauss:
    """f(x) = exp(-x^2 / 2)."""

    name = "gauss"

    def check_base(self, a) -> None:
        pass

    def value(self, x: float) -> float:
        return math.exp(-0.5 * x * x)

    def dvalue(self, x: float) -> float:
        return -x * math.exp(-0.5 * x * x)

    def series(self, a, order: int) -> TruncSeries:
        # f(a+w) = exp(-a^2/2) * exp(-a*w - w^2/2); the prefactor is
        # exp((-a/2) * a), so it fits the symbolic escale slot exactly.
        if _is_exact(a):
            aF = Fraction(a)
            zero = Fraction(0)
            body = [zero, -aF, Fraction(-1, 2)] + [zero] * (order - 2)
            expo = TruncSeries(a, body[: order + 1])
            scaled_one = TruncSeries.one(a, order)
            return TruncSeries(a, scaled_one.coeffs, -aF / 2) * exp_series(expo)
        af = float(a)
        body = [0.0, -af, -0.5] + [0.0] * (order - 2)
        expo = TruncSeries(af, body[: order + 1])
        return math.exp(-0.5 * af * af) * exp_series(expo)


@dataclass(frozen=True)
class DoubleExp:
    """f(x) = exp(e^x); always evaluated on the floating backend."""

    name = "doubleexp"

    def check_base(self, a) -> None:
        pass

    def value(self, x: float) -> float:
        return _safe_exp(_safe_exp(x))

    def dvalue(self, x: float) -> float:
        return _safe_exp(x + _safe_exp(x))

    def series(self, a, order: int) -> TruncSeries:
        af = float(a)
        y = math.exp(af)
        g = (_expw_float(af, order) - 1.0) * y
        return exp_series(g) * math.exp(y)


@dataclass(frozen=True)
class SqExpRecip:
    """f(x) = x^2 * exp(-2/x); the base point must avoid x = 0."""

    name = "sqexprecip"

    def check_base(self, a) -> None:
        if a == 0:
            raise PoleAtBaseError("base point 0 is an essential singularity of exp(-2/x)")

    def value(self, x: float) -> float:
        if x == 0.0:
            return 0.0
        arg = -2.0 / x
        return x * x * _safe_exp(arg) if arg <= 709.0 else math.inf

    def dvalue(self, x: float) -> float:
        arg = -2.0 / x
        return (2.0 * x + 2.0) * _safe_exp(arg)

    def series(self, a, order: int) -> TruncSeries:
        # exp(-2/(a+w)) = exp(-2/a) * exp(g(w)), g = 2w / (a (a+w)), and
        # exp(-2/a) = exp((-2/a^2) * a) again fits the escale slot.
        self.check_base(a)
        if _is_exact(a):
            aF = Fraction(a)
            rec = TruncSeries.linear(aF, a, order).recip()
            w = TruncSeries.linear(Fraction(0), a, order) if order >= 1 else None
            if w is None:
                g = TruncSeries(a, (Fraction(0),))
            else:
                g = w * rec * (Fraction(2) / aF)
            square = TruncSeries(
                a,
                tuple(
                    [aF * aF] + ([2 * aF, Fraction(1)] + [Fraction(0)] * (order - 2))[:order]
                ),
            )
            scaled_one = TruncSeries(a, TruncSeries.one(a, order).coeffs, -2 / (aF * aF))
            return square * scaled_one * exp_series(g)
        af = float(a)
        rec = TruncSeries.linear(af, af, order).recip()
        if order >= 1:
            w = TruncSeries.linear(0.0, af, order)
            g = w * rec * (2.0 / af)
        else:
            g = TruncSeries(af, (0.0,))
        square = TruncSeries(
            af, tuple([af * af] + ([2 * af, 1.0] + [0.0] * (order - 2))[:order])
        )
        return square * exp_series(g) * math.exp(-2.0 / af)


FunctionalDescriptor = Union[
    PlainExp, ExpOverLinear, ExpTimesLinear, Gauss, DoubleExp, SqExpRecip
]


def f_series(desc: FunctionalDescriptor, a, order: int) -> TruncSeries:
    """Taylor series of f(a + w) to the given order."""
    desc.check_base(a)
    return desc.series(a, order)


@dataclass(frozen=True)
class SeriesSolution:
    """Root expansion x(l) = base + sum_n coeffs[n-1] * l^n."""

    family: FunctionalDescriptor
    base: float
    order: int
    coeffs: tuple

    def coefficient(self, n: int) -> float:
        """c_n for 1 <= n <= order."""
        if not 1 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 1..{self.order}")
        return self.coeffs[n - 1]


def _exact_ladder(S: TruncSeries, order: int):
    """Exact power ladder: yields (n, q_n, escale_n) with c_n = q_n * exp(escale_n * base)."""
    P = S
    for n in range(1, order + 1):
        q = Fraction(P.coeff(n - 1)) / n
        yield n, q, P.escale
        if n < order:
            P = P * S


def lagrange_coefficients(desc: FunctionalDescriptor, a, order: int) -> SeriesSolution:
    """Inversion coefficients c_1..c_order of x = a + l*f(x) through x(0) = a.

    Each c_n is (1/n) times the w^(n-1) coefficient of f(a+w)^n, computed
    by a single power ladder at full order so that truncation never leaks
    into lower-order coefficients.
    """
    desc.check_base(a)
    S = desc.series(a, order)
    exact = all(_is_exact(c) for c in S.coeffs)
    if exact:
        base_f = Fraction(a)
        coeffs = []
        for _, q, esc in _exact_ladder(S, order):
            s, lg = signed_log(q)
            if s == 0:
                coeffs.append(0.0)
            else:
                coeffs.append(s * _safe_exp(lg + float(Fraction(esc) * base_f)))
        return SeriesSolution(desc, float(a), order, tuple(coeffs))
    coeffs = []
    P = S
    for n in range(1, order + 1):
        coeffs.append(P.coeff(n - 1) / n)
        if n < order:
            P = P * S
    return SeriesSolution(desc, float(a), order, tuple(coeffs))


def lagrange_coefficients_exact(
    desc: FunctionalDescriptor, a, order: int
) -> list:
    """Exact inversion coefficients as (rational, escale) pairs.

    c_n = pair[0] * exp(pair[1] * a) with pair[0] a Fraction and pair[1]
    the rational exponent multiple.  Requires exact inputs and a
    descriptor whose series has rational coefficients.
    """
    desc.check_base(a)
    if not _is_exact(a):
        raise ValueError("exact backend needs an int or Fraction base point")
    S = desc.series(a, order)
    if not all(_is_exact(c) for c in S.coeffs):
        raise ValueError(f"exact backend unavailable for {desc.name} at this base")
    return [(q, esc) for _, q, esc in _exact_ladder(S, order)]


@dataclass
class SummationResult:
    value: float
    terms_used: int
    diverged: bool
    stopped_early: bool
    partials: list


def sum_terms(
    base: float,
    term_fn: Callable[[int], float],
    max_terms: int,
    tol: float,
) -> SummationResult:
    """base + sum of term_fn(n), n = 1..max_terms, with stopping rules.

    Stops early once |t_n| <= tol * |partial sum| holds for two consecutive
    n, so a single vanishing term of a lacunary series does not end the sum;
    exact zeros are skipped without counting as a used term.  Divergence is
    flagged after three consecutive growing |t_n| with n >= 5, or on a
    non-finite term; it is a reported state, not an error.
    """
    partial = base
    partials = [base]
    prev_abs: Optional[float] = None
    growth = 0
    small = 0
    used = 0
    diverged = False
    stopped_early = False
    for n in range(1, max_terms + 1):
        t = term_fn(n)
        if not math.isfinite(t):
            diverged = True
            break
        if abs(t) <= tol * abs(partial):
            small += 1
            if t != 0.0:
                partial += t
                partials.append(partial)
                used = n
            if small >= 2:
                stopped_early = True
                break
            continue
        small = 0
        partial += t
        partials.append(partial)
        used = n
        if prev_abs is not None and abs(t) > prev_abs:
            growth += 1
            if growth >= 3 and n >= 5:
                diverged = True
                break
        else:
            growth = 0
        prev_abs = abs(t)
    return SummationResult(partial, used, diverged, stopped_early, partials)


def series_eval(
    sol: SeriesSolution,
    l: float,
    tol: float = 1e-12,
    max_terms: Optional[int] = None,
):
    """Partial sum of the root series at coupling l.

    Returns (value, terms_used, diverged); the divergence flag follows the
    growth heuristic of :func:`sum_terms`.
    """
    limit = sol.order if max_terms is None else min(max_terms, sol.order)

    def term(n: int) -> float:
        return sol.coeffs[n - 1] * l**n

    res = sum_terms(sol.base, term, limit, tol)
    return res.value, res.terms_used, res.diverged
