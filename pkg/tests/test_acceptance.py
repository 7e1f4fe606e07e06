"""Acceptance suite: one test per release criterion, at the pinned tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.
"""

import json
import math
import random
import time
from fractions import Fraction as F

import pytest

import glambertw.solvers as S
from glambertw.cli import main as cli_main
from glambertw.engine import (
    DoubleExp,
    ExpOverLinear,
    ExpTimesLinear,
    Gauss,
    lagrange_coefficients,
    lagrange_coefficients_exact,
    PlainExp,
)
from glambertw.identities import (
    bessel_reciprocal_rep,
    commutator_check,
    operator_identity_check,
    random_exp_laurent,
    reciprocal_rep_matches_bessel,
)
from glambertw.numeric import (
    lambert_w_principal,
    oracle_root,
    radius_estimate,
    wynn_epsilon,
)
from glambertw.series import ExpLaurent
from glambertw.solvers import (
    QuadExpParams,
    ScalarShiftParams,
    SolveOptions,
    plainexp_solve,
    quadexp_solve,
)

# reciprocal-variable integer coefficients, rows n = 0..5
TABLE_ROWS = [
    [1],
    [1, -2],
    [1, -6, 12],
    [1, -12, 60, -120],
    [1, -20, 180, -840, 1680],
    [1, -30, 420, -3360, 15120, -30240],
]


def _ok(msg):
    print(f"PASS {msg}")


def test_c01_derivative_representation_table_exact():
    start = time.perf_counter()
    for n, ints in enumerate(TABLE_ROWS):
        expected = ExpLaurent(0, {-k: c for k, c in enumerate(ints)})
        assert bessel_reciprocal_rep(n) == expected, f"row n={n}"
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    _ok(f"criterion 1: derivative-representation table n=0..5 exact ({elapsed:.3f}s)")


def test_c02_reciprocal_rep_identity_to_12():
    start = time.perf_counter()
    for n in range(1, 13):
        assert reciprocal_rep_matches_bessel(n), f"n={n}"
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _ok(f"criterion 2: derivative representation equals B_n(-2/x) for n<=12 ({elapsed:.3f}s)")


def test_c03_operator_identity_and_commutators():
    start = time.perf_counter()
    rng = random.Random(31415)
    inputs = [random_exp_laurent(rng) for _ in range(20)]
    for n in range(1, 9):
        assert all(operator_identity_check(n, g) for g in inputs), f"identity n={n}"
        assert commutator_check(n), f"commutators n={n}"
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0
    _ok(f"criterion 3: operator identity + commutators exact for n<=8 ({elapsed:.3f}s)")


def test_c04_quadexp_term_equivalence_100_draws():
    rng = random.Random(2718)
    draws = []
    while len(draws) < 100:
        a = F(rng.randint(-16, 16), 8)
        b = F(rng.randint(-16, 16), 8)
        if a == b:
            continue
        l = F(rng.choice((-1, 1)), 128) * abs(a - b)
        assert abs(float(l) * math.exp(a) / float(a - b)) <= 0.1
        draws.append((a, b, l))
    worst = 0.0
    for a, b, l in draws:
        sol = lagrange_coefficients(ExpOverLinear(b), a, 15)
        p = QuadExpParams(float(a), float(b), float(l))
        for n in range(1, 16):
            closed = S.quadexp_term(n, p)
            engine = sol.coeffs[n - 1] * float(l) ** n
            denom = max(abs(closed), abs(engine), 1e-300)
            worst = max(worst, abs(closed - engine) / denom)
    assert worst <= 1e-10
    _ok(f"criterion 4: closed-form terms == engine terms, n<=15, 100 draws (worst rel {worst:.2e})")


def test_c05_end_to_end_root_accuracy_grid():
    start = time.perf_counter()
    worst = 0.0
    for l in (0.05, 0.1, 0.2):
        rep = quadexp_solve(QuadExpParams(0.0, -3.0, l))
        newton = oracle_root("quadexp", {"a": 0.0, "b": -3.0, "l": l}, tol=1e-13)
        assert rep.converged and rep.terms_used <= 40
        worst = max(worst, abs(rep.root - newton))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-9
    assert elapsed < 1.0
    _ok(f"criterion 5: grid roots within {worst:.2e} of Newton ({elapsed:.3f}s)")


def test_c06_lambert_limit():
    rep = plainexp_solve(ScalarShiftParams(0.0, 0.1))
    w_root = -lambert_w_principal(-0.1)
    assert abs(rep.root - w_root) <= 1e-12
    b = -1e6
    repq = quadexp_solve(QuadExpParams(0.0, b, 0.1 * abs(b)))
    l_eff = 0.1 * abs(b) * math.exp(0.0) / (-b)
    repp = plainexp_solve(ScalarShiftParams(0.0, l_eff))
    assert abs(repq.root - repp.root) <= 1e-4
    _ok(
        "criterion 6: Lambert limit (series vs W: "
        f"{abs(rep.root - w_root):.2e}; b->-inf: {abs(repq.root - repp.root):.2e})"
    )


GAUSS_WITNESSES = [F(1), F(1, 2), F(-3, 4)]
RATIO_WITNESSES = [(F(0), F(-2)), (F(1, 2), F(-1, 2)), (F(-1), F(1))]
DEXP_WITNESSES = [0.0, -1.0, 0.25]


def test_c07_corrected_closed_forms_and_errata_regression():
    worst = 0.0
    # engine-vs-closed-form coefficient equality, n <= 12
    for sF, tF in RATIO_WITNESSES:
        sol = lagrange_coefficients(ExpTimesLinear(tF), sF, 12)
        p = S.RatioExpParams(float(sF), float(tF), 1.0)
        for n in range(1, 13):
            closed = S.ratioexp_term(n, p)
            denom = max(abs(closed), abs(sol.coeffs[n - 1]), 1e-300)
            worst = max(worst, abs(closed - sol.coeffs[n - 1]) / denom)
    for aF in GAUSS_WITNESSES:
        sol = lagrange_coefficients(Gauss(), aF, 12)
        p = ScalarShiftParams(float(aF), 1.0)
        for n in range(1, 13):
            closed = S.gauss_term(n, p)
            denom = max(abs(closed), abs(sol.coeffs[n - 1]), 1e-300)
            worst = max(worst, abs(closed - sol.coeffs[n - 1]) / denom)
    for a in DEXP_WITNESSES:
        sol = lagrange_coefficients(DoubleExp(), a, 12)
        p = ScalarShiftParams(a, 1.0)
        for n in range(1, 13):
            closed = S.doubleexp_term(n, p)
            denom = max(abs(closed), abs(sol.coeffs[n - 1]), 1e-300)
            worst = max(worst, abs(closed - sol.coeffs[n - 1]) / denom)
    assert worst <= 1e-12
    # errata regression: the printed n=2 terms are visibly different
    min_gap = math.inf
    for sF, tF in RATIO_WITNESSES:
        p = S.RatioExpParams(float(sF), float(tF), 0.05)
        sol = lagrange_coefficients(ExpTimesLinear(tF), sF, 2)
        engine_term = sol.coeffs[1] * p.l**2
        gap = abs(S.ratioexp_term_printed(2, p) - engine_term) / abs(engine_term)
        min_gap = min(min_gap, gap)
    for aF in GAUSS_WITNESSES:
        p = ScalarShiftParams(float(aF), 0.2)
        sol = lagrange_coefficients(Gauss(), aF, 2)
        engine_term = sol.coeffs[1] * p.l**2
        gap = abs(S.gauss_term_printed(2, p) - engine_term) / abs(engine_term)
        min_gap = min(min_gap, gap)
    for a in DEXP_WITNESSES:
        p = ScalarShiftParams(a, 0.05)
        sol = lagrange_coefficients(DoubleExp(), a, 2)
        engine_term = sol.coeffs[1] * p.l**2
        gap = abs(S.doubleexp_term_printed(2, p) - engine_term) / abs(engine_term)
        min_gap = min(min_gap, gap)
    assert min_gap > 1e-3
    # and the discrepancies are recorded
    from glambertw.identities import errata_report

    ids = {e["claimId"] for e in errata_report()}
    assert {
        "ratio-series-closed-form",
        "gauss-series-closed-form",
        "touchard-series-prefactor",
    } <= ids
    _ok(
        f"criterion 7: corrected forms match engine (worst rel {worst:.2e}); "
        f"printed forms differ at n=2 (min rel gap {min_gap:.2e}) and are recorded"
    )


def test_c08_radius_estimation():
    sol = lagrange_coefficients(PlainExp(), 0, 40)
    inv_e = math.exp(-1)
    errs = []
    for method in ("ratio", "dombSykes"):
        est = radius_estimate(sol, method=method)
        errs.append(abs(est.estimate - inv_e) / inv_e)
        assert errs[-1] <= 0.05, method
    geo = [3.0**-n for n in range(1, 41)]
    for method in ("ratio", "dombSykes"):
        est = radius_estimate(geo, method=method)
        assert abs(est.estimate - 3.0) / 3.0 <= 0.01, method
    _ok(
        "criterion 8: radius estimates (tree series err "
        f"ratio {errs[0]:.2%}, Domb-Sykes {errs[1]:.2%}; geometric exact)"
    )


def test_c09_wynn_acceleration_gains_two_digits():
    cs = S.family_coefficients("quadexp", {"a": 0.0, "b": -3.0, "l": 1.0}, 40)
    rad = radius_estimate(cs).estimate
    l = 0.8 * rad
    p = QuadExpParams(0.0, -3.0, l)
    partials = []
    total = 0.0
    for n in range(1, 26):
        total += S.quadexp_term(n, p)
        partials.append(total)
    newton = oracle_root("quadexp", {"a": 0.0, "b": -3.0, "l": l}, tol=1e-13)
    raw_err = abs(partials[-1] - newton)
    acc_err = abs(wynn_epsilon(partials) - newton)
    digits = math.log10(raw_err / max(acc_err, 1e-300))
    assert digits >= 2.0
    _ok(
        f"criterion 9: Wynn epsilon at l=0.8*radius gains {digits:.1f} digits "
        f"(raw {raw_err:.1e} -> {acc_err:.1e})"
    )


def test_c10_cli_contract(capsys):
    # valid solve -> 0
    code = cli_main(
        ["solve", "--family", "quadexp", "--a", "0", "--b", "-3", "--l", "0.1"]
    )
    out = capsys.readouterr().out
    assert code == 0
    record = json.loads(out)
    assert list(record.keys()) == [
        "family",
        "params",
        "root",
        "termsUsed",
        "residual",
        "converged",
        "branch",
        "accelerated",
        "warnings",
    ]
    line = out.strip()
    assert json.dumps(json.loads(line)) == line  # byte-stable round trip
    # degenerate a == b -> 1
    code = cli_main(
        ["solve", "--family", "quadexp", "--a", "1", "--b", "1", "--l", "0.1"]
    )
    capsys.readouterr()
    assert code == 1
    # divergent coupling -> 1
    code = cli_main(["solve", "--family", "plainexp", "--a", "0", "--l", "0.9"])
    out = capsys.readouterr().out
    assert code == 1
    assert json.loads(out)["converged"] is False
    # verify suite -> 0
    code = cli_main(["verify", "--suite", "identities", "--max-n", "10"])
    out = capsys.readouterr().out
    assert code == 0
    assert json.loads(out)["allPassed"] is True
    _ok("criterion 10: CLI exit codes 0/1/1/0 with schema-stable JSON")
