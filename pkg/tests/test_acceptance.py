"""Acceptance suite.

Each test prints one [PASS]/[FAIL] line; run with ``pytest -v -s`` to see
them.  Criteria cover the counterexample reproduction, the disk formulas,
grid-scale coefficient cross-validation and inequalities, the stability
sweeps, the geometric disk-image property, and CLI determinism, each with
its stated tolerance and runtime budget.
"""

import subprocess
import sys
import time

import numpy as np
import pytest

from janostab.inequalities import (
    GridSpec,
    check_alternating_identity,
    check_coeff_pair_inequality,
    check_coeff_positivity,
    check_weighted_pair_inequality,
)
from janostab.janowski import JanowskiParams, coeff_recurrence, convolution_coeffs
from janostab.subordination import (
    KNOWN_COUNTEREXAMPLE,
    SampleGrid,
    check_cross_order_stability,
    check_derivative_modulus_bound,
    check_power_product_subordination,
    check_stability_vs_base,
    mobius_image_disk,
    reference_disk_comparison,
    self_margin_at,
    stability_ratio,
)

K = KNOWN_COUNTEREXAMPLE


def finish(name: str, ok: bool, detail: str):
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_a01_counterexample_reproduction():
    t0 = time.perf_counter()
    ratio = stability_ratio(K.params, K.n, K.z0)
    margin_closed, _, _ = self_margin_at(K.params, K.n, K.z0, 0.98, "closed_form")
    margin_mobius, _, _ = self_margin_at(K.params, K.n, K.z0, 0.983, "mobius_image")
    elapsed = time.perf_counter() - t0
    component_err = max(abs(ratio.real - 0.8697), abs(ratio.imag - 0.5845))
    ok = (
        component_err <= 1e-3
        and margin_closed > 0.0
        and margin_mobius > 0.0
        and elapsed < 1.0
    )
    finish(
        "A01 counterexample reproduction",
        ok,
        f"ratio={ratio:.6f}, component err {component_err:.2e} <= 1e-3, "
        f"margins closed@0.98={margin_closed:.4f} mobius@0.983={margin_mobius:.4f} "
        f"(both > 0), {elapsed:.3f}s < 1s",
    )


def test_a02_closed_form_disk_evaluation():
    from janostab.subordination import closed_form_disk

    disk = closed_form_disk(K.params, 0.98)
    a, b, r = K.params.A, K.params.B, 0.98
    den = b * b - r * r * a * a
    direct_center = (r * r * a - b) / den
    direct_radius = r * (a - b) / den
    cmp = reference_disk_comparison(K.params, 0.98)
    ok = (
        abs(disk.center.real - direct_center) <= 1e-6
        and abs(disk.radius - direct_radius) <= 1e-6
        and cmp["reference_center"] == 0.634444
        and cmp["reference_radius"] == 0.576521
        and cmp["flagged"]
        and 1e-3 < cmp["center_delta"] < 1e-2
        and 1e-3 < cmp["radius_delta"] < 1e-2
    )
    finish(
        "A02 closed-form disk evaluation",
        ok,
        f"computed ({disk.center.real:.6f}, {disk.radius:.6f}) matches direct "
        f"evaluation at 1e-6; reference (0.634444, 0.576521) recorded, "
        f"deltas ({cmp['center_delta']:.4f}, {cmp['radius_delta']:.4f}) flagged",
    )


def test_a03_coefficient_oracle_equivalence():
    t0 = time.perf_counter()
    grid = GridSpec.default(n_max=200, allow_positive_A=True)
    worst = 0.0
    count = 0
    for params in grid.iter_params():
        rec = coeff_recurrence(params, 200).values
        conv = convolution_coeffs(params, 200)
        scale = np.maximum(1.0, np.abs(rec))
        worst = max(worst, float(np.max(np.abs(conv - rec) / scale)))
        count += 1
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed < 30.0
    finish(
        "A03 coefficient oracle equivalence",
        ok,
        f"{count} parameter points, n <= 200, worst relative gap {worst:.2e} "
        f"<= 1e-10, {elapsed:.1f}s < 30s",
    )


def test_a04_coefficient_positivity():
    t0 = time.perf_counter()
    grid = GridSpec.default(n_max=500)
    report = check_coeff_positivity(grid, tol=1e-12)
    elapsed = time.perf_counter() - t0
    ok = report.passed and elapsed < 60.0
    finish(
        "A04 coefficient positivity",
        ok,
        f"{report.checked} coefficients, {len(report.violations)} below -1e-12, "
        f"min margin {report.min_margin:.3e}, {elapsed:.1f}s < 60s",
    )


def test_a05_pair_inequalities():
    t0 = time.perf_counter()
    pair_grid = GridSpec.default(n_max=500)
    pair = check_coeff_pair_inequality(pair_grid, tol=1e-12)
    weighted_grid = GridSpec.default(n_max=100, m_max=100)
    weighted = check_weighted_pair_inequality(weighted_grid, tol=1e-10)
    elapsed = time.perf_counter() - t0
    ok = pair.passed and weighted.passed and elapsed < 60.0
    finish(
        "A05 pair inequalities",
        ok,
        f"pair: {pair.checked} values min {pair.min_margin:.3e} (tol 1e-12); "
        f"weighted: {weighted.checked} values min {weighted.min_margin:.3e} "
        f"(tol 1e-10); {elapsed:.1f}s < 60s",
    )


def test_a06_alternating_identity():
    worst = 0.0
    for lam in GridSpec.default(n_max=1).lambda_values:
        report = check_alternating_identity(lam, 100, tol=1e-10)
        assert report.passed
        worst = max(worst, -report.min_margin)
    ok = worst <= 1e-10
    finish(
        "A06 alternating identity",
        ok,
        f"20 lambda values, n <= 100, max |sum| {worst:.2e} <= 1e-10",
    )


def test_a07_base_stability_sweep():
    t0 = time.perf_counter()
    lattice = [-1.0, -0.75, -0.5, -0.25, 0.0]
    pairs = [(a, b) for a in lattice for b in lattice if b < a]
    for alpha in (0.5, 0.75, 0.9):  # A = 1 - 2*alpha, B = -1
        pair = (1.0 - 2.0 * alpha, -1.0)
        if pair not in pairs:
            pairs.append(pair)
    grid = SampleGrid()  # radii (0.9, 0.99, 0.999) x 4096 angles
    worst = -np.inf
    checks = 0
    for a, b in sorted(pairs):
        for lam in (0.1, 0.3, 0.5, 0.7, 0.9, 1.0):
            params = JanowskiParams(a, b, lam)
            for n in range(1, 33):
                report = check_stability_vs_base(params, n, grid, tol=1e-6)
                assert report.verdict == "pass", report
                worst = max(worst, report.worst_margin)
                checks += 1
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-6 and elapsed < 300.0
    finish(
        "A07 base stability sweep",
        ok,
        f"{checks} (params, n) checks incl. the B=-1 slope cases, "
        f"max margin {worst:.3e} <= 1e-6, {elapsed:.0f}s < 300s",
    )


def test_a08_derivative_modulus_bound():
    worst = np.inf
    checks = 0
    for a, b, lam in ((-0.5, -1.0, 0.5), (-0.2, -0.8, 0.3), (-0.679, -0.97, 0.3)):
        params = JanowskiParams(a, b, lam)
        for n in (1, 3, 8):
            report = check_derivative_modulus_bound(params, n, tol=1e-5)
            assert report.passed, report
            worst = min(worst, report.min_margin)
            checks += 1
    ok = worst >= -1e-5
    finish(
        "A08 derivative modulus bound",
        ok,
        f"{checks} (params, n) sweeps on the default grid, "
        f"min margin {worst:.2e} >= -1e-5",
    )


CROSS_ORDER_TUPLES = [
    (0.3, 0.7, -0.9, 4),
    (0.5, 0.5, -1.0, 1),
    (0.1, 0.9, -0.5, 8),
    (0.2, 0.4, -0.8, 16),
    (0.7, 0.7, -0.3, 2),
    (0.05, 1.0, -1.0, 6),
    (0.9, 1.0, -0.6, 3),
    (0.4, 0.8, -0.95, 12),
    (0.6, 0.9, -0.2, 5),
    (0.25, 0.75, -0.7, 32),
]

PRODUCT_TUPLES = [
    (0.4, 0.9, -0.8, [[0.5], [-0.7]]),
    (1.0, 1.0, -1.0, [[1.0]]),
    (0.3, 0.7, -0.85, [[0.3, -0.6]]),
    (2.0, 1.5, -0.5, [[-0.9], [0.2, 0.5]]),
    (0.05, 0.05, -0.99, [[0.8]]),
    (1.2, 0.7, -0.4, [[0.6, 0.3]]),
    (0.5, 2.5, -0.75, [[-1.0], [1.0]]),
    (3.0, 0.2, -0.6, [[0.45]]),
    (0.8, 0.8, -0.9, [[0.7, -0.7]]),
    (1.5, 2.0, -0.35, [[-0.25], [0.1, -0.9]]),
]


def test_a09_cross_order_and_product_suites():
    worst_cross = -np.inf
    for mu, lam, b, n in CROSS_ORDER_TUPLES:
        report = check_cross_order_stability(mu, lam, b, n, tol=1e-6)
        assert report.verdict == "pass", (mu, lam, b, n, report)
        worst_cross = max(worst_cross, report.worst_margin)
    worst_product = np.inf
    for alpha, beta, b, seeds in PRODUCT_TUPLES:
        report = check_power_product_subordination(alpha, beta, b, seeds, tol=1e-6)
        assert report.passed, (alpha, beta, b, seeds)
        worst_product = min(worst_product, report.min_margin)
    ok = worst_cross <= 1e-6 and worst_product >= -1e-6
    finish(
        "A09 cross-order and product suites",
        ok,
        f"10 cross-order tuples max margin {worst_cross:.2e} <= 1e-6; "
        f"10 product tuples min margin {worst_product:.2e} >= -1e-6",
    )


def test_a10_mobius_image_correctness():
    rng = np.random.default_rng(20250810)
    worst = 0.0
    for _ in range(20):
        a = rng.uniform(-0.95, -0.05)
        b = rng.uniform(-1.0, a - 0.01)
        r = rng.uniform(0.05, 0.99)
        params = JanowskiParams(a, b, 0.5)
        disk = mobius_image_disk(params, r)
        w = disk.boundary_points(10_000)
        z_back = (1.0 - w) / (a * w - b)
        worst = max(worst, float(np.max(np.abs(np.abs(z_back) - r))))
    ok = worst <= 1e-9
    finish(
        "A10 mobius image correctness",
        ok,
        f"20 random (A, B, r), 1e4 boundary points each, "
        f"max | |inverse| - r | = {worst:.2e} <= 1e-9",
    )


CLI_CASES = [
    ["coeffs", "--A", "-0.5", "--B", "-1", "--lambda", "0.5", "--n-max", "60",
     "--method", "both"],
    ["verify-lemmas", "--step", "0.5", "--lambda-step", "0.5", "--n-max", "40",
     "--m-max", "8", "--alt-n-max", "30"],
    ["check-stability", "--A", "-0.5", "--B", "-1", "--lambda", "0.5",
     "--n-max", "2", "--radii", "0.9,0.99", "--samples", "256"],
    ["self-check", "--samples", "256", "--radii", "0.9,0.99"],
    ["search", "--n-values", "1,2", "--coarse-radii", "16", "--coarse-angles", "32",
     "--refine-iters", "4"],
]


def test_a11_cli_determinism(tmp_path):
    def run_cli(args, cwd):
        proc = subprocess.run(
            [sys.executable, "-m", "janostab", *args],
            capture_output=True,
            cwd=cwd,
        )
        return proc.stdout

    mismatches = []
    for args in CLI_CASES:
        first = run_cli(args, tmp_path)
        second = run_cli(args, tmp_path)
        if first != second or not first:
            mismatches.append(args[0])
    for tag in ("one", "two"):
        out_dir = tmp_path / tag
        out_dir.mkdir()
        run_cli(
            ["plot", "--angles", "256", "--boundary-samples", "128",
             "--out", str(out_dir / "fig.svg"), "--csv-dir", str(out_dir)],
            tmp_path,
        )
    svg_a = (tmp_path / "one" / "fig.svg").read_bytes()
    svg_b = (tmp_path / "two" / "fig.svg").read_bytes()
    if svg_a != svg_b or not svg_a:
        mismatches.append("plot-svg")
    for name in ("disk_boundary.csv", "g_curve.csv", "point.csv"):
        if (tmp_path / "one" / name).read_bytes() != (tmp_path / "two" / name).read_bytes():
            mismatches.append(name)
    ok = not mismatches
    finish(
        "A11 CLI determinism",
        ok,
        "byte-identical repeats for coeffs, verify-lemmas, check-stability, "
        "self-check, search, plot (SVG + CSVs)"
        + (f"; mismatches: {mismatches}" if mismatches else ""),
    )
