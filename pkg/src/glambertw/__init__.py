"""Series solvers for generalized Lambert W equations.

Transcendental equations mixing polynomial/rational and exponential parts,
such as (x - a)(x - b) = l e^x, are solved by series inversion whose terms
are closed forms in classical orthogonal polynomials.  An exact rational
engine verifies every closed form and polynomial identity the solvers rely
on, and a numeric harness (safeguarded Newton, Lambert W, Wynn epsilon,
radius estimation) provides independent ground truth.
"""

from .engine import (
    DoubleExp,
    ExpOverLinear,
    ExpTimesLinear,
    Gauss,
    PlainExp,
    PoleAtBaseError,
    SeriesSolution,
    SqExpRecip,
    f_series,
    lagrange_coefficients,
    lagrange_coefficients_exact,
    series_eval,
)
from .identities import (
    RodriguesResult,
    RodriguesSpec,
    bessel_reciprocal_rep,
    classical_bessel_rodrigues,
    commutator_check,
    errata_report,
    identity_suite,
    operator_identity_check,
    reciprocal_rep_equivalence,
    reciprocal_rep_matches_bessel,
    rodrigues_polynomial,
)
from .numeric import (
    InsufficientTermsError,
    NoRootError,
    OutOfBranchError,
    RadiusEstimate,
    RootProblem,
    bracket_scan,
    compare_report,
    lambert_w_principal,
    newton_solve,
    oracle_root,
    radius_estimate,
    wynn_epsilon,
)
from .orthopoly import (
    RatPoly,
    bessel_poly,
    hermite_prob_poly,
    laguerre_poly,
    poly_eval,
    touchard_poly,
)
from .series import ExpLaurent, NonInvertibleSeriesError, TruncSeries, exp_linear
from .solvers import (
    DegenerateParamsError,
    QuadExpParams,
    RatioExpParams,
    ScalarShiftParams,
    SolveOptions,
    SolveReport,
    besselrecip_solve,
    doubleexp_solve,
    gauss_solve,
    plainexp_solve,
    quadexp_solve,
    quadexp_term,
    ratioexp_solve,
    solve_family,
)

__version__ = "0.1.0"

__all__ = [
    "DoubleExp",
    "ExpOverLinear",
    "ExpTimesLinear",
    "Gauss",
    "PlainExp",
    "PoleAtBaseError",
    "SeriesSolution",
    "SqExpRecip",
    "f_series",
    "lagrange_coefficients",
    "lagrange_coefficients_exact",
    "series_eval",
    "RodriguesResult",
    "RodriguesSpec",
    "bessel_reciprocal_rep",
    "classical_bessel_rodrigues",
    "commutator_check",
    "errata_report",
    "identity_suite",
    "operator_identity_check",
    "reciprocal_rep_equivalence",
    "reciprocal_rep_matches_bessel",
    "rodrigues_polynomial",
    "InsufficientTermsError",
    "NoRootError",
    "OutOfBranchError",
    "RadiusEstimate",
    "RootProblem",
    "bracket_scan",
    "compare_report",
    "lambert_w_principal",
    "newton_solve",
    "oracle_root",
    "radius_estimate",
    "wynn_epsilon",
    "RatPoly",
    "bessel_poly",
    "hermite_prob_poly",
    "laguerre_poly",
    "poly_eval",
    "touchard_poly",
    "ExpLaurent",
    "NonInvertibleSeriesError",
    "TruncSeries",
    "exp_linear",
    "DegenerateParamsError",
    "QuadExpParams",
    "RatioExpParams",
    "ScalarShiftParams",
    "SolveOptions",
    "SolveReport",
    "besselrecip_solve",
    "doubleexp_solve",
    "gauss_solve",
    "plainexp_solve",
    "quadexp_solve",
    "quadexp_term",
    "ratioexp_solve",
    "solve_family",
]
