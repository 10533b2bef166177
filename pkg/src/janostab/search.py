"""Counterexample discovery for the subordination checks.

A violation is one probe point whose stability ratio escapes the target
disk; a single strictly positive margin falsifies the subordination, which
is all a disproof needs.  The search is a coarse polar scan followed by
coordinate-descent refinement on (|z|, arg z); it is heuristic, not a
certified global optimizer.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .janowski import JanowskiParams, janowski_series
from .series import (
    DEFAULT_EPS_ZERO,
    DEFAULT_RAY_STEPS,
    TruncatedSeries,
    circle_log_values,
    ray_log_values,
)
from .subordination import DiskSpec, _mobius_power_margins, disk_for

__all__ = [
    "SWEEP_CSV_HEADER",
    "SearchSpec",
    "SweepCell",
    "Violation",
    "find_self_stability_violation",
    "sweep_parameter_grid",
]

SWEEP_CSV_HEADER = (
    "A",
    "B",
    "lambda",
    "n",
    "margin",
    "z_re",
    "z_im",
    "G_re",
    "G_im",
    "disk_center_re",
    "disk_center_im",
    "disk_radius",
    "disk_source",
)


@dataclass(frozen=True)
class SearchSpec:
    """One search configuration.

    ``target`` selects the disk the ratio is tested against: ``"self"``
    uses the image disk of |z| <= r (where violations are expected for
    -1 <= B < A < 0), ``"base"`` uses the disk center 1 radius |B| (where
    none should exist for A <= 0).
    """

    params: JanowskiParams
    n_values: tuple
    r: float
    coarse_radii: int = 64
    coarse_angles: int = 256
    refine_iters: int = 16
    disk_source: str = "mobius_image"
    target: str = "self"
    steps: int = DEFAULT_RAY_STEPS

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(n) for n in self.n_values))
        if any(n < 1 for n in self.n_values) or not self.n_values:
            raise ValueError("n_values must be a non-empty list of integers >= 1")
        if not 0.0 < self.r < 1.0:
            raise ValueError("need 0 < r < 1")
        if self.coarse_radii < 16 or self.coarse_angles < 16:
            raise ValueError("coarse grid must have at least 16 points per axis")
        if self.refine_iters < 0:
            raise ValueError("refine_iters must be >= 0")
        if self.target not in ("self", "base"):
            raise ValueError("target must be 'self' or 'base'")


@dataclass(frozen=True)
class Violation:
    """A witnessed escape from the target disk.

    ``margin`` equals |ratio - disk.center| - disk.radius for the stored
    fields, so every violation is independently re-verifiable.
    """

    params: JanowskiParams
    n: int
    z: complex
    ratio: complex
    disk: DiskSpec
    margin: float

    def to_json_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "n": self.n,
            "z": {"re": self.z.real, "im": self.z.imag},
            "ratio": {"re": self.ratio.real, "im": self.ratio.imag},
            "disk": self.disk.to_json_dict(),
            "margin": self.margin,
        }


@dataclass(frozen=True)
class SweepCell:
    """Best margin found in one (A, B, lambda, n) cell of a parameter sweep."""

    params: JanowskiParams
    n: int
    margin: float
    z: complex
    ratio: complex
    disk: DiskSpec
    disk_source: str

    def to_csv_row(self) -> list:
        return [
            self.params.A,
            self.params.B,
            self.params.lam,
            self.n,
            self.margin,
            self.z.real,
            self.z.imag,
            self.ratio.real,
            self.ratio.imag,
            self.disk.center.real,
            self.disk.center.imag,
            self.disk.radius,
            self.disk_source,
        ]


def _target_disk(spec_target: str, disk_source: str, params: JanowskiParams, r: float) -> DiskSpec:
    if spec_target == "base":
        return DiskSpec(1.0 + 0.0j, abs(params.B))
    return disk_for(disk_source, params, r)


def _coarse_scan(
    series: TruncatedSeries,
    params: JanowskiParams,
    disk: DiskSpec,
    r: float,
    n_radii: int,
    n_angles: int,
    steps: int,
    eps_zero: float = DEFAULT_EPS_ZERO,
):
    """Margins, ratio values and sample points on the coarse polar grid."""
    radii = [(j + 1) * r / n_radii for j in range(n_radii)]
    L, failed, rho = circle_log_values(series, radii, n_angles, steps=steps, eps_zero=eps_zero)
    theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
    zs = rho[:, None] * np.exp(1j * theta)[None, :]
    margins, vals, pole = _mobius_power_margins(
        L, zs, 1.0 / params.lam, params.A, params.B, disk
    )
    bad = failed | pole
    margins = np.where(bad, np.nan, margins)
    return margins, vals, zs, int(bad.sum()), margins.size


def _margin_fn(series, params, disk, steps, eps_zero=DEFAULT_EPS_ZERO):
    """Scalar margin closure used by refinement."""

    def margin_at(z: complex):
        L, failed = ray_log_values(series, np.asarray(z), steps=steps, eps_zero=eps_zero)
        if bool(failed):
            return None, None
        den = 1.0 + params.A * z
        if abs(den) < 1e-12:
            return None, None
        ratio = (1.0 + params.B * z) / den * complex(np.exp(complex(L) / params.lam))
        return disk.margin(ratio), ratio

    return margin_at


def _refine(margin_at, z_start: complex, r_limit: float, step_r: float, step_t: float, iters: int):
    """Coordinate descent on (|z|, arg z) with shrinking steps.

    Returns the per-round best (margin, z, ratio) history; the best value
    never decreases from one round to the next.
    """
    rho = abs(z_start)
    theta = cmath.phase(z_start)
    best_margin, best_ratio = margin_at(z_start)
    if best_margin is None:
        return []
    history = [(best_margin, z_start, best_ratio)]
    for _ in range(iters):
        improved = False
        for d_rho, d_theta in ((step_r, 0.0), (-step_r, 0.0), (0.0, step_t), (0.0, -step_t)):
            cand_rho = min(max(rho + d_rho, 0.0), r_limit)
            cand_theta = theta + d_theta
            z = cmath.rect(cand_rho, cand_theta)
            margin, ratio = margin_at(z)
            if margin is not None and margin > best_margin:
                best_margin, best_ratio = margin, ratio
                rho, theta = cand_rho, cand_theta
                improved = True
        if not improved:
            step_r *= 0.5
            step_t *= 0.5
        history.append((best_margin, cmath.rect(rho, theta), best_ratio))
    return history


def find_self_stability_violation(spec: SearchSpec) -> list:
    """Scan |z| <= r for strictly positive margins, refine the best point,
    and return every violation found sorted by descending margin.

    Branch-failure samples are skipped; more than half of them failing is
    treated as an error rather than a silently shrunken search region.
    """
    disk_cache = {}
    violations = []
    for n in spec.n_values:
        disk = _target_disk(spec.target, spec.disk_source, spec.params, spec.r)
        disk_cache[n] = disk
        series = janowski_series(spec.params, n)
        margins, vals, zs, failures, total = _coarse_scan(
            series, spec.params, disk, spec.r, spec.coarse_radii, spec.coarse_angles, spec.steps
        )
        if failures * 2 > total:
            raise RuntimeError(
                f"{failures} of {total} samples failed branch continuation"
            )
        flat_m = margins.ravel()
        flat_z = zs.ravel()
        flat_v = vals.ravel()
        seen = {}
        for k in np.flatnonzero(np.isfinite(flat_m) & (flat_m > 0.0)):
            z = complex(flat_z[k])
            ratio = complex(flat_v[k])
            seen[z] = Violation(
                spec.params, n, z, ratio, disk, float(abs(ratio - disk.center) - disk.radius)
            )
        finite = np.isfinite(flat_m)
        if finite.any() and spec.refine_iters > 0:
            k_best = int(np.nanargmax(np.where(finite, flat_m, -np.inf)))
            margin_at = _margin_fn(series, spec.params, disk, spec.steps)
            history = _refine(
                margin_at,
                complex(flat_z[k_best]),
                spec.r,
                spec.r / spec.coarse_radii,
                2.0 * np.pi / spec.coarse_angles,
                spec.refine_iters,
            )
            if history:
                margin, z, ratio = history[-1]
                if margin > 0.0:
                    seen[z] = Violation(
                        spec.params, n, z, ratio, disk,
                        float(abs(ratio - disk.center) - disk.radius),
                    )
        violations.extend(seen.values())
    violations.sort(key=lambda v: (-v.margin, v.z.real, v.z.imag, v.n))
    return violations


def sweep_parameter_grid(
    a_values,
    b_values,
    lambda_values,
    n_values,
    r: float,
    coarse_radii: int = 64,
    coarse_angles: int = 256,
    refine_iters: int = 8,
    disk_source: str = "mobius_image",
    steps: int = DEFAULT_RAY_STEPS,
) -> list:
    """Best self-stability margin per (A, B, lambda, n) cell.

    Values must lie inside -1 <= B < A < 0 and 0 < lambda <= 1; pairs with
    B >= A are dropped.  Cells are emitted in lexicographic order and each
    records the best margin found with its witness, whether or not it is
    positive.
    """
    a_values = sorted(float(v) for v in a_values)
    b_values = sorted(float(v) for v in b_values)
    lambda_values = sorted(float(v) for v in lambda_values)
    n_values = sorted(int(n) for n in n_values)
    for v in a_values:
        if not -1.0 < v < 0.0:
            raise ValueError(f"A values must lie in (-1, 0), got {v!r}")
    for v in b_values:
        if not -1.0 <= v < 0.0:
            raise ValueError(f"B values must lie in [-1, 0), got {v!r}")
    if any(n < 1 for n in n_values) or not n_values:
        raise ValueError("n_values must be a non-empty list of integers >= 1")
    if not 0.0 < r < 1.0:
        raise ValueError("need 0 < r < 1")
    cells = []
    for a in a_values:
        for b in b_values:
            if not b < a:
                continue
            for lam in lambda_values:
                params = JanowskiParams(a, b, lam)
                disk = disk_for(disk_source, params, r)
                for n in n_values:
                    series = janowski_series(params, n)
                    margins, vals, zs, failures, total = _coarse_scan(
                        series, params, disk, r, coarse_radii, coarse_angles, steps
                    )
                    if failures * 2 > total:
                        raise RuntimeError(
                            f"{failures} of {total} samples failed branch continuation"
                        )
                    flat_m = margins.ravel()
                    finite = np.isfinite(flat_m)
                    k = int(np.nanargmax(np.where(finite, flat_m, -np.inf)))
                    best_z = complex(zs.ravel()[k])
                    best_ratio = complex(vals.ravel()[k])
                    best_margin = float(flat_m[k])
                    if refine_iters > 0:
                        margin_at = _margin_fn(series, params, disk, steps)
                        history = _refine(
                            margin_at,
                            best_z,
                            r,
                            r / coarse_radii,
                            2.0 * np.pi / coarse_angles,
                            refine_iters,
                        )
                        if history and history[-1][0] > best_margin:
                            best_margin, best_z, best_ratio = history[-1]
                            best_margin = float(
                                abs(best_ratio - disk.center) - disk.radius
                            )
                    cells.append(
                        SweepCell(params, n, best_margin, best_z, best_ratio, disk, disk_source)
                    )
    return cells
