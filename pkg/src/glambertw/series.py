"""Truncated power series and exponential-Laurent arithmetic.

Two coefficient backends run through one code path: exact rationals
(``int`` / ``fractions.Fraction``) for identity verification, and binary64
floats for numeric solving.  An exact :class:`TruncSeries` keeps any
transcendental prefactor ``exp(escale * base)`` out of the rational
coefficients by carrying ``escale`` symbolically; the floating backend
folds the prefactor into the coefficients instead.

All values are immutable after construction and every operation is a pure
function, so instances may be shared freely across threads.
"""

from __future__ import annotations

import math
from fractions import Fraction


class NonInvertibleSeriesError(ZeroDivisionError):
    """Reciprocal requested for a series whose constant term is zero."""


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


class TruncSeries:
    """Power series in the local variable w = x - base, truncated at fixed order.

    The represented value is ``exp(escale * base) * sum(c[k] * w**k)``.
    Arithmetic never reads or writes coefficients beyond the truncation
    order, and combining two series requires matching base and order.
    """

    __slots__ = ("base", "coeffs", "escale")

    def __init__(self, base, coeffs, escale=0):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        self.base = base
        self.coeffs = coeffs
        self.escale = escale

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, base, order: int) -> "TruncSeries":
        zero = value * 0
        return cls(base, (value,) + (zero,) * order)

    @classmethod
    def one(cls, base, order: int) -> "TruncSeries":
        return cls.constant(1, base, order)

    @classmethod
    def linear(cls, const, base, order: int) -> "TruncSeries":
        """Series of ``const + w``."""
        zero = const * 0
        one = zero + 1
        if order == 0:
            return cls(base, (const,))
        return cls(base, (const, one) + (zero,) * (order - 1))

    def coeff(self, k: int):
        """k-th coefficient (the rational part; ``escale`` is not folded in)."""
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} outside 0..{self.order}")
        return self.coeffs[k]

    def _check_compatible(self, other: "TruncSeries") -> None:
        if self.base != other.base or self.order != other.order:
            raise ValueError("mismatched base or order")

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._check_compatible(other)
            if self.escale != other.escale:
                raise ValueError("cannot add series with different exponential prefactors")
            return TruncSeries(
                self.base,
                tuple(a + b for a, b in zip(self.coeffs, other.coeffs)),
                self.escale,
            )
        if self.escale != 0:
            raise ValueError("cannot add a scalar to a series with an exponential prefactor")
        return TruncSeries(self.base, (self.coeffs[0] + other,) + self.coeffs[1:], 0)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.base, tuple(-c for c in self.coeffs), self.escale)

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return self + (-other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            self._check_compatible(other)
            a, b = self.coeffs, other.coeffs
            n = self.order
            out = []
            for k in range(n + 1):
                acc = a[0] * b[k]
                for i in range(1, k + 1):
                    acc += a[i] * b[k - i]
                out.append(acc)
            return TruncSeries(self.base, out, self.escale + other.escale)
        return TruncSeries(self.base, tuple(c * other for c in self.coeffs), self.escale)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "TruncSeries":
        """n-th power by binary powering; n = 0 gives the constant-one series."""
        if not isinstance(n, int):
            raise TypeError("series power must be an integer")
        if n < 0:
            raise ValueError("negative power; use recip() first")
        if n == 0:
            return TruncSeries.one(self.base, self.order)
        result = None
        square = self
        while n:
            if n & 1:
                result = square if result is None else result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def recip(self) -> "TruncSeries":
        """Multiplicative inverse to the truncation order.

        Requires a nonzero constant term; the exponential prefactor is negated.
        """
        c0 = self.coeffs[0]
        if c0 == 0:
            raise NonInvertibleSeriesError("constant term is zero")
        inv0 = Fraction(1) / c0 if _is_exact(c0) else 1.0 / c0
        out = [inv0]
        for k in range(1, self.order + 1):
            acc = self.coeffs[1] * out[k - 1]
            for i in range(2, k + 1):
                acc += self.coeffs[i] * out[k - i]
            out.append(-inv0 * acc)
        return TruncSeries(self.base, out, -self.escale)

    def eval(self, w):
        """Evaluate at local offset w (prefactor applied, as a float if nonzero)."""
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * w + c
        if self.escale != 0:
            acc = float(acc) * math.exp(float(self.escale) * float(self.base))
        return acc

    def as_floats(self) -> "TruncSeries":
        """Floating twin with the exponential prefactor folded into the coefficients."""
        if self.escale == 0:
            return TruncSeries(float(self.base), tuple(float(c) for c in self.coeffs), 0)
        shift = float(Fraction(self.escale) * Fraction(self.base)) if _is_exact(self.base) \
            else float(self.escale) * float(self.base)
        out = []
        for c in self.coeffs:
            s, lg = signed_log(c)
            out.append(s * math.exp(lg + shift) if s else 0.0)
        return TruncSeries(float(self.base), tuple(out), 0)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.base == other.base
            and self.escale == other.escale
            and self.coeffs == other.coeffs
        )

    __hash__ = None

    def __repr__(self):
        tag = f", escale={self.escale!r}" if self.escale != 0 else ""
        return f"TruncSeries(base={self.base!r}, coeffs={list(self.coeffs)!r}{tag})"


def exp_linear(c, base, order: int) -> TruncSeries:
    """Series of ``exp(c * (base + w))`` to the given order.

    With exact (int/Fraction) ``c`` and ``base`` the prefactor exp(c*base)
    is carried symbolically in ``escale`` and the coefficients are the exact
    rationals c**k / k!; otherwise the prefactor is folded in numerically.
    """
    if _is_exact(c) and _is_exact(base):
        term = Fraction(1)
        coeffs = [term]
        for k in range(1, order + 1):
            term = term * c / k
            coeffs.append(term)
        return TruncSeries(base, coeffs, c)
    scale = math.exp(float(c) * float(base))
    coeffs = [scale]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * c / k)
    return TruncSeries(base, coeffs, 0)


def exp_series(s: TruncSeries) -> TruncSeries:
    """``exp`` of a series with zero constant term (finite Taylor sum).

    Exactness follows the coefficient type of ``s``.
    """
    if s.coeffs[0] != 0:
        raise ValueError("exp of a series needs a zero constant term")
    if s.escale != 0:
        raise ValueError("exp of a series with an exponential prefactor is not supported")
    result = TruncSeries.one(s.base, s.order)
    term = TruncSeries.one(s.base, s.order)
    for k in range(1, s.order + 1):
        term = term * s * Fraction(1, k)
        result = result + term
    return result


def signed_log(q):
    """(sign, ln|q|) decomposition, exact for arbitrarily large rationals.

    Returns sign 0 and -inf for zero.  Large integers are fed to
    ``math.log`` directly, which handles values beyond the float range.
    """
    if isinstance(q, Fraction):
        num, den = q.numerator, q.denominator
        if num == 0:
            return 0, float("-inf")
        sign = 1 if num > 0 else -1
        return sign, math.log(-num if num < 0 else num) - math.log(den)
    if isinstance(q, int):
        if q == 0:
            return 0, float("-inf")
        return (1 if q > 0 else -1), math.log(-q if q < 0 else q)
    if q == 0.0:
        return 0, float("-inf")
    return (1 if q > 0 else -1), math.log(abs(q))


class ExpLaurent:
    """Finite Laurent polynomial times ``exp(rate * u)``, exact coefficients.

    Closed under d/du, under the reciprocal-variable derivative
    d/d(1/u) = -u^2 d/du, and under multiplication; stored sparsely with no
    zero coefficients.
    """

    __slots__ = ("rate", "_terms")

    def __init__(self, rate: int, terms):
        tidy = {}
        for k, v in dict(terms).items():
            v = v if isinstance(v, Fraction) else Fraction(v)
            if v != 0:
                tidy[int(k)] = v
        self.rate = int(rate)
        self._terms = tidy

    @classmethod
    def monomial(cls, power: int, coeff=1, rate: int = 0) -> "ExpLaurent":
        return cls(rate, {power: coeff})

    @classmethod
    def zero(cls) -> "ExpLaurent":
        return cls(0, {})

    def items(self):
        """(power, coefficient) pairs in ascending power order."""
        return sorted(self._terms.items())

    def coefficient(self, power: int) -> Fraction:
        return self._terms.get(power, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def min_power(self) -> int:
        return min(self._terms)

    def max_power(self) -> int:
        return max(self._terms)

    def derive(self) -> "ExpLaurent":
        """Exact d/du: c*u^k maps to c*rate*u^k + c*k*u^(k-1)."""
        out = {}
        for k, c in self._terms.items():
            if self.rate:
                out[k] = out.get(k, Fraction(0)) + c * self.rate
            if k:
                out[k - 1] = out.get(k - 1, Fraction(0)) + c * k
        return ExpLaurent(self.rate, out)

    def recip_derive(self) -> "ExpLaurent":
        """Derivative with respect to the reciprocal variable: -u^2 d/du."""
        out = {}
        for k, c in self._terms.items():
            if self.rate:
                out[k + 2] = out.get(k + 2, Fraction(0)) - c * self.rate
            if k:
                out[k + 1] = out.get(k + 1, Fraction(0)) - c * k
        return ExpLaurent(self.rate, out)

    def __mul__(self, other):
        if isinstance(other, ExpLaurent):
            out = {}
            for k1, c1 in self._terms.items():
                for k2, c2 in other._terms.items():
                    k = k1 + k2
                    out[k] = out.get(k, Fraction(0)) + c1 * c2
            return ExpLaurent(self.rate + other.rate, out)
        return ExpLaurent(self.rate, {k: c * other for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __add__(self, other: "ExpLaurent") -> "ExpLaurent":
        if not isinstance(other, ExpLaurent):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.rate != other.rate:
            raise ValueError("cannot add expressions with different exponential rates")
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return ExpLaurent(self.rate, out)

    def __neg__(self) -> "ExpLaurent":
        return ExpLaurent(self.rate, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "ExpLaurent") -> "ExpLaurent":
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ExpLaurent):
            return NotImplemented
        if self.is_zero and other.is_zero:
            return True
        return self.rate == other.rate and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"({c})*u^{k}" for k, c in self.items()) or "0"
        if self.rate:
            return f"ExpLaurent(exp({self.rate}u) * [{body}])"
        return f"ExpLaurent({body})"
