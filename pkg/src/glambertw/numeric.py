"""Independent numerical ground truth: safeguarded root finding, Lambert W,
convergence-radius estimation, and series acceleration.

Everything here deliberately avoids the series machinery it is used to
check: Newton iterates on hand-coded residual derivatives, the W evaluator
is a Halley iteration, and the radius estimators work on raw coefficient
ratios.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple


class NoRootError(RuntimeError):
    """No sign change in the search interval and Newton stagnated."""


class OutOfBranchError(ValueError):
    """Argument below -1/e, outside the principal Lambert W branch."""


class InsufficientTermsError(ValueError):
    """Too few terms or partial sums for the requested estimate."""


@dataclass(frozen=True)
class RootProblem:
    """Residual function, its derivative, and a search interval."""

    residual: Callable[[float], float]
    dresidual: Callable[[float], float]
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError("search interval needs lo < hi")


def newton_solve(p: RootProblem, x0: float, tol: float, max_iter: int = 200) -> float:
    """Newton iteration safeguarded by bisection on the bracketing interval.

    Falls back to a bisection step whenever a Newton step would leave
    [lo, hi] or the derivative magnitude drops below 1e-14.  Raises
    :class:`NoRootError` when the interval carries no sign change and the
    iteration stagnates.
    """
    lo, hi = p.lo, p.hi
    flo, fhi = p.residual(lo), p.residual(hi)
    if abs(flo) <= tol:
        return lo
    if abs(fhi) <= tol:
        return hi
    bracketed = (flo > 0) != (fhi > 0)
    x = min(max(x0, lo), hi)
    for _ in range(max_iter):
        fx = p.residual(x)
        if abs(fx) <= tol:
            return x
        if bracketed:
            if (fx > 0) == (flo > 0):
                lo, flo = x, fx
            else:
                hi, fhi = x, fx
        d = p.dresidual(x)
        use_bisection = True
        if math.isfinite(d) and abs(d) >= 1e-14:
            step = fx / d
            cand = x - step
            if math.isfinite(cand) and lo <= cand <= hi and cand != x:
                x = cand
                use_bisection = False
        if use_bisection:
            if not bracketed:
                raise NoRootError(
                    "no sign change in the search interval and Newton stagnated"
                )
            x = 0.5 * (lo + hi)
            if hi - lo <= 4 * math.ulp(max(abs(lo), abs(hi), 1.0)):
                fx = p.residual(x)
                if abs(fx) <= tol:
                    return x
                raise NoRootError("bracket collapsed before reaching tolerance")
    fx = p.residual(x)
    if abs(fx) <= tol:
        return x
    raise NoRootError(f"did not reach |residual| <= {tol} in {max_iter} iterations")


def bracket_scan(p: RootProblem, steps: int) -> List[Tuple[float, float]]:
    """Sign-change subintervals of the uniform grid over [lo, hi]."""
    if steps < 2:
        raise ValueError("need at least 2 steps")
    xs = [p.lo + (p.hi - p.lo) * i / steps for i in range(steps + 1)]
    fs = [p.residual(x) for x in xs]
    out = []
    for i in range(steps):
        a, b = fs[i], fs[i + 1]
        if not (math.isfinite(a) and math.isfinite(b)):
            continue
        if a == 0.0 and b == 0.0:
            continue
        if (a <= 0.0 < b) or (b <= 0.0 < a) or (a < 0.0 <= b) or (b < 0.0 <= a):
            out.append((xs[i], xs[i + 1]))
    return out


@dataclass(frozen=True)
class RadiusEstimate:
    """Empirical convergence-radius estimate from coefficient ratios."""

    estimate: float
    method: str
    n_used: int
    confidence: str

    def to_dict(self) -> dict:
        return {
            "estimate": self.estimate,
            "method": self.method,
            "nUsed": self.n_used,
            "confidence": self.confidence,
        }


def radius_estimate(coeffs, method: str = "ratio") -> RadiusEstimate:
    """Convergence-radius estimate for a series with the given c_1, c_2, ... .

    ``method="ratio"``: reciprocal of the limsup (max over the trailing
    half) of the gap-adjusted ratios |c_{n+1}/c_n|.  ``method="dombSykes"``:
    least-squares extrapolation of the ratios against 1/n to 1/n -> 0.
    Zero coefficients are skipped with the ratio adjusted for the index
    gap, so lacunary series are handled.  Confidence is "noisy" when the
    trailing-half ratios spread by more than 20%.
    """
    cs = list(getattr(coeffs, "coeffs", coeffs))
    nonzero = [(i + 1, abs(c)) for i, c in enumerate(cs) if c != 0 and math.isfinite(c)]
    if len(nonzero) < 10:
        raise InsufficientTermsError("need at least 10 nonzero coefficients")
    ratios = []
    for (n0, c0), (n1, c1) in zip(nonzero, nonzero[1:]):
        ratios.append((n1, (c1 / c0) ** (1.0 / (n1 - n0))))
    tail = ratios[len(ratios) // 2 :]
    vals = [r for _, r in tail]
    top = max(vals)
    spread_noisy = top > 0 and (top - min(vals)) > 0.2 * top
    confidence = "noisy" if spread_noisy else "stable"
    if method == "ratio":
        estimate = math.inf if top == 0.0 else 1.0 / top
    elif method == "dombSykes":
        # straight-line fit of ratio against 1/n; the intercept is 1/radius
        xs = [1.0 / n for n, _ in tail]
        ys = vals
        m = len(xs)
        xbar = sum(xs) / m
        ybar = sum(ys) / m
        sxx = sum((x - xbar) ** 2 for x in xs)
        if sxx == 0.0:
            intercept = ybar
        else:
            slope = sum((x - xbar) * (y - ybar) for x, y in zip(xs, ys)) / sxx
            intercept = ybar - slope * xbar
        estimate = math.inf if intercept <= 0.0 else 1.0 / intercept
    else:
        raise ValueError(f"unknown method {method!r}")
    return RadiusEstimate(estimate, method, len(tail) + 1, confidence)


def wynn_epsilon(partial_sums: Sequence[float]) -> float:
    """Epsilon-table extrapolation of a sequence of partial sums.

    Returns the deepest even-column entry; a column whose denominator
    falls below 1e-300 in magnitude terminates the table early (standard
    anti-breakdown rule).  Exact on geometric sequences.
    """
    s = [float(v) for v in partial_sums]
    if len(s) < 5:
        raise InsufficientTermsError("need at least 5 partial sums")
    best = s[-1]
    prev = [0.0] * (len(s) + 1)
    cur = s
    k = 0
    while len(cur) >= 2:
        nxt = []
        for i in range(len(cur) - 1):
            denom = cur[i + 1] - cur[i]
            if abs(denom) < 1e-300 or not math.isfinite(denom):
                nxt = None
                break
            nxt.append(prev[i + 1] + 1.0 / denom)
        if nxt is None or not all(math.isfinite(v) for v in nxt):
            break
        prev, cur = cur, nxt
        k += 1
        if k % 2 == 0 and cur:
            best = cur[-1]
    return best


_INV_E = math.exp(-1.0)


def lambert_w_principal(z: float) -> float:
    """Principal-branch Lambert W via Halley iteration.

    Valid for z >= -1/e; the result satisfies |W e^W - z| <= 1e-14 max(1,|z|).
    """
    if not math.isfinite(z):
        raise ValueError("need a finite argument")
    if z < -_INV_E:
        # tolerate rounding right at the branch point
        if z < -_INV_E - 1e-15:
            raise OutOfBranchError(f"{z} is below -1/e; no real principal value")
        z = -_INV_E
    if z == 0.0:
        return 0.0
    if z < -0.25:
        p = math.sqrt(2.0 * (math.e * z + 1.0))
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)))
    elif z < math.e:
        w = math.log1p(z) if z > -0.5 else z
    else:
        lz = math.log(z)
        w = lz - math.log(lz)
    for _ in range(100):
        ew = math.exp(w)
        f = w * ew - z
        wp1 = w + 1.0
        denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1) if wp1 != 0.0 else ew
        if denom == 0.0:
            break
        dw = f / denom
        w -= dw
        if abs(dw) <= 1e-16 * (2.0 + abs(w)):
            break
    return w


def compare_report(
    family: str,
    params: dict,
    opts=None,
    paper_as_printed: bool = False,
) -> dict:
    """Series result vs. the Newton oracle for one parameter set.

    Returns the solve report fields plus ``newtonRoot``, ``difference``,
    ``radiusEstimate`` and, when requested, the root of the printed
    (uncorrected) series form.
    """
    from . import solvers  # deferred: solvers imports this module for wynn

    if opts is None:
        opts = solvers.SolveOptions()
    report = solvers.solve_family(family, params, opts)
    newton_root = oracle_root(family, params, center=report.root)
    record = report.to_dict()
    record["newtonRoot"] = newton_root
    record["difference"] = abs(report.root - newton_root)
    try:
        cs = solvers.family_coefficients(family, params, max(opts.max_terms, 20))
        record["radiusEstimate"] = radius_estimate(cs).to_dict()
    except (InsufficientTermsError, ValueError):
        record["radiusEstimate"] = None
    if paper_as_printed:
        printed = solvers.solve_family(family, params, opts, paper_as_printed=True)
        record["paperAsPrintedRoot"] = printed.root
        record["paperAsPrintedDifference"] = abs(printed.root - newton_root)
    return record


def residual_problem(family: str, params: dict, lo: float, hi: float) -> RootProblem:
    """RootProblem for the original equation of the named family."""
    from . import solvers

    f, df = solvers.residual_functions(family, params)
    return RootProblem(f, df, lo, hi)


def oracle_root(
    family: str,
    params: dict,
    center: Optional[float] = None,
    tol: float = 1e-13,
) -> float:
    """Newton root of the original equation near the given center.

    Scans widening intervals around the center for a sign change, then
    polishes with the safeguarded Newton iteration.
    """
    if center is None or not math.isfinite(center):
        center = float(params.get("a", params.get("s", 0.0)))
    last_error: Exception = NoRootError("no bracket found")
    for radius in (0.5, 1.0, 2.0, 4.0, 8.0):
        lo, hi = center - radius, center + radius
        if family == "besselrecip":
            # keep the scan on one side of the essential singularity at 0
            if center > 0:
                lo = max(lo, 1e-6)
            elif center < 0:
                hi = min(hi, -1e-6)
        p = residual_problem(family, params, lo, hi)
        brackets = bracket_scan(p, 400)
        if not brackets:
            continue
        blo, bhi = min(brackets, key=lambda br: abs(0.5 * (br[0] + br[1]) - center))
        try:
            return newton_solve(
                RootProblem(p.residual, p.dresidual, blo, bhi),
                0.5 * (blo + bhi),
                tol,
            )
        except NoRootError as exc:
            last_error = exc
    raise last_error
