"""Numerical subordination (stability) checks for the Janowski-type family.

For v(z) = ((1+Az)/(1+Bz))**lam with partial sum s_n, stability of v with
respect to a target family member is a subordination statement about
s_n(v)/v.  Raising that ratio to the power 1/lam turns each check into a
geometric one: the "stability ratio"

    (1+Bz) * s_n(v, z)**(1/lam) / (1+Az)

must map sample sets into a closed disk (center 1, radius |B| for the check
against the A=0 base member; the image of |z| <= r under the Mobius map
(1+Bz)/(1+Az) for the check against the family member itself).  Maxima of
the relevant moduli occur near the boundary, so sampling concentrates on
circles close to |z| = 1 (or |z| = r).

Powers use the analytic branch continued along rays from the origin; see
:mod:`janostab.series`.  Everything here is pure and deterministic: the
same inputs always produce the same report, and ties for the worst sample
break toward the lexicographically smallest (re, im).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .inequalities import InequalityReport, InequalityViolation
from .janowski import JanowskiParams, janowski_series
from .series import (
    DEFAULT_EPS_ZERO,
    DEFAULT_RAY_STEPS,
    TruncatedSeries,
    circle_log_values,
    ray_log_values,
    real_power_on_ray,
)

__all__ = [
    "DISK_SOURCES",
    "DiskSpec",
    "KNOWN_COUNTEREXAMPLE",
    "PoleError",
    "SampleGrid",
    "StabilityReport",
    "check_cross_order_stability",
    "check_derivative_modulus_bound",
    "check_power_product_subordination",
    "check_stability_vs_base",
    "check_stability_vs_self",
    "closed_form_disk",
    "disk_for",
    "mobius_image_disk",
    "mobius_target",
    "reference_disk_comparison",
    "self_margin_at",
    "stability_defect",
    "stability_ratio",
]

DEFAULT_TOL = 1e-6
POLE_EPS = 1e-12
DISK_SOURCES = ("closed_form", "mobius_image")


class PoleError(ArithmeticError):
    """Evaluation requested too close to the pole z = -1/A."""


@dataclass(frozen=True)
class DiskSpec:
    """Closed disk |w - center| <= radius."""

    center: complex
    radius: float

    def __post_init__(self):
        c = complex(self.center)
        if not (np.isfinite(c.real) and np.isfinite(c.imag)):
            raise ValueError("center must be finite")
        if not (np.isfinite(self.radius) and self.radius >= 0.0):
            raise ValueError("radius must be finite and >= 0")
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", float(self.radius))

    def margin(self, w: complex) -> float:
        """Signed distance of w outside the disk (positive = outside)."""
        return abs(complex(w) - self.center) - self.radius

    def boundary_points(self, count: int) -> np.ndarray:
        """``count`` equispaced boundary points, starting at angle 0."""
        theta = 2.0 * np.pi * np.arange(count) / count
        return self.center + self.radius * np.exp(1j * theta)

    def to_json_dict(self) -> dict:
        return {
            "center": {"re": self.center.real, "im": self.center.imag},
            "radius": self.radius,
        }


@dataclass(frozen=True)
class SampleGrid:
    """Circles plus optional explicit probe points.

    ``radii`` must be strictly increasing and lie in (0, 1); the base-member
    check reads them as disk radii, the self check as fractions of its r.
    An empty radius list is allowed when explicit points are supplied.
    """

    radii: tuple = (0.9, 0.99, 0.999)
    points_per_circle: int = 4096
    extra_points: tuple = ()

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        if any(not 0.0 < r < 1.0 for r in radii):
            raise ValueError("radii must lie in (0, 1)")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")
        if self.points_per_circle < 8:
            raise ValueError("points_per_circle must be >= 8")
        extras = tuple(complex(z) for z in self.extra_points)
        for z in extras:
            if not (np.isfinite(z.real) and np.isfinite(z.imag)):
                raise ValueError("extra points must be finite")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "extra_points", extras)

    @classmethod
    def default(cls) -> "SampleGrid":
        return cls()


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of one subordination check.

    ``verdict`` is ``pass`` when the worst sampled margin stays within
    tolerance, ``violated`` when some sample escapes the target disk, and
    ``branch_failure`` when any sample's ray power was undefined (the
    worst margin then covers the valid samples only).
    """

    verdict: str
    worst_margin: float
    worst_point: Optional[complex]
    n: int
    params: JanowskiParams
    sample_radii: tuple
    points_per_circle: int
    disk_source: Optional[str] = None
    disk: Optional[DiskSpec] = None
    mu: Optional[float] = None

    def to_json_dict(self) -> dict:
        doc = {
            "verdict": self.verdict,
            "worst_margin": self.worst_margin if np.isfinite(self.worst_margin) else None,
            "worst_point": None
            if self.worst_point is None
            else {"re": self.worst_point.real, "im": self.worst_point.imag},
            "n": self.n,
            "params": self.params.as_dict(),
            "grid": {"radii": list(self.sample_radii), "points": self.points_per_circle},
        }
        if self.disk_source is not None:
            doc["disk_source"] = self.disk_source
        if self.disk is not None:
            doc["disk"] = self.disk.to_json_dict()
        if self.mu is not None:
            doc["mu"] = self.mu
        return doc


# --- Mobius target and image disks -----------------------------------------

def mobius_target(params: JanowskiParams, z) -> complex:
    """(1+Bz)/(1+Az), the univalent target of the self-stability check."""
    z = complex(z)
    den = 1.0 + params.A * z
    if abs(den) < POLE_EPS:
        raise PoleError(f"z={z!r} is within {POLE_EPS:g} of the pole -1/A")
    return (1.0 + params.B * z) / den


def closed_form_disk(params: JanowskiParams, r: float) -> DiskSpec:
    """Disk from the closed-form center/radius expressions

        C(r) = (r**2*A - B) / (B**2 - r**2*A**2)
        R(r) = r*(A - B)   / (B**2 - r**2*A**2)

    evaluated literally.  These differ slightly from the true Mobius image
    of |z| <= r (see :func:`mobius_image_disk`); both are kept so the two
    target conventions can be compared.
    """
    if r < 0.0:
        raise ValueError("r must be >= 0")
    a, b = params.A, params.B
    den = b * b - r * r * a * a
    if den <= POLE_EPS:
        raise ValueError(f"degenerate denominator B^2 - r^2*A^2 = {den!r}")
    return DiskSpec((r * r * a - b) / den, r * (a - b) / den)


def mobius_image_disk(params: JanowskiParams, r: float) -> DiskSpec:
    """Exact image of |z| <= r under (1+Bz)/(1+Az).

    Center (1 - A*B*r**2)/(1 - A**2*r**2), radius (A-B)*r/(1 - A**2*r**2);
    every boundary point w of the result satisfies |(1-w)/(Aw-B)| = r.
    """
    if r < 0.0:
        raise ValueError("r must be >= 0")
    a, b = params.A, params.B
    if abs(a) * r >= 1.0:
        raise ValueError("need |A|*r < 1")
    den = 1.0 - a * a * r * r
    if abs(den) < POLE_EPS:
        raise ValueError("degenerate denominator 1 - A^2*r^2")
    return DiskSpec((1.0 - a * b * r * r) / den, (a - b) * r / den)


def disk_for(source: str, params: JanowskiParams, r: float) -> DiskSpec:
    if source == "closed_form":
        return closed_form_disk(params, r)
    if source == "mobius_image":
        return mobius_image_disk(params, r)
    raise ValueError(f"disk source must be one of {DISK_SOURCES}")


# --- known counterexample configuration -------------------------------------

@dataclass(frozen=True)
class CounterexampleConfig:
    params: JanowskiParams
    n: int
    z0: complex
    r: float


#: Configuration at which the family is known to escape its own target disk.
KNOWN_COUNTEREXAMPLE = CounterexampleConfig(
    params=JanowskiParams(-0.679, -0.97, 0.3),
    n=1,
    z0=complex(0.915282, -0.357037),
    r=0.98,
)

#: Center/radius previously reported for the closed-form disk of the
#: configuration above.  Direct evaluation of the closed-form expressions at
#: r = 0.98 gives (0.638181..., 0.572516...) instead, a ~4e-3 discrepancy;
#: the reported numbers coincide with evaluating the same expressions at
#: r = |z0| ~ 0.982454.  Both are recorded so reports can flag the gap.
REFERENCE_DISK_CENTER = 0.634444
REFERENCE_DISK_RADIUS = 0.576521
REFERENCE_FLAG_THRESHOLD = 1e-3


def reference_disk_comparison(params: JanowskiParams, r: float) -> dict:
    """Compare the computed closed-form disk with the recorded reference
    values for the known configuration; ``flagged`` marks a discrepancy
    beyond ``REFERENCE_FLAG_THRESHOLD``."""
    disk = closed_form_disk(params, r)
    center_delta = abs(disk.center.real - REFERENCE_DISK_CENTER)
    radius_delta = abs(disk.radius - REFERENCE_DISK_RADIUS)
    return {
        "reference_center": REFERENCE_DISK_CENTER,
        "reference_radius": REFERENCE_DISK_RADIUS,
        "computed_center": disk.center.real,
        "computed_radius": disk.radius,
        "center_delta": center_delta,
        "radius_delta": radius_delta,
        "flagged": bool(
            center_delta > REFERENCE_FLAG_THRESHOLD
            or radius_delta > REFERENCE_FLAG_THRESHOLD
        ),
    }


# --- pointwise values --------------------------------------------------------

def stability_ratio(
    params: JanowskiParams,
    n: int,
    z,
    steps: int = DEFAULT_RAY_STEPS,
    eps_zero: float = DEFAULT_EPS_ZERO,
) -> complex:
    """(1+Bz) * s_n(v, z)**(1/lam) / (1+Az) on the ray-continued branch.

    This is the (1/lam)-power of s_n(v)/v; its value at 0 is exactly 1.
    Raises :class:`PoleError` near z = -1/A and propagates
    :class:`~janostab.series.BranchFailureError` from the power.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    z = complex(z)
    den = 1.0 + params.A * z
    if abs(den) < POLE_EPS:
        raise PoleError(f"z={z!r} is within {POLE_EPS:g} of the pole -1/A")
    s = janowski_series(params, n)
    power = real_power_on_ray(s, 1.0 / params.lam, z, steps=steps, eps_zero=eps_zero)
    return (1.0 + params.B * z) / den * power


def stability_defect(
    params: JanowskiParams,
    n: int,
    z,
    steps: int = DEFAULT_RAY_STEPS,
    eps_zero: float = DEFAULT_EPS_ZERO,
) -> complex:
    """1 minus the stability ratio (same code path, so exactly 1 - ratio)."""
    return 1.0 - stability_ratio(params, n, z, steps=steps, eps_zero=eps_zero)


def self_margin_at(
    params: JanowskiParams,
    n: int,
    z,
    r: float,
    disk_source: str = "mobius_image",
    steps: int = DEFAULT_RAY_STEPS,
):
    """Margin of the stability ratio at one probe point against the
    self-stability target disk for |z| <= r.

    Returns ``(margin, ratio, disk)``; a positive margin is a witnessed
    subordination violation.
    """
    disk = disk_for(disk_source, params, r)
    ratio = stability_ratio(params, n, z, steps=steps)
    return disk.margin(ratio), ratio, disk


# --- sweep engine ------------------------------------------------------------

def _worst_sample(margins: np.ndarray, points: np.ndarray):
    """Max margin with deterministic tie-break (smallest (re, im))."""
    valid = np.isfinite(margins)
    if not valid.any():
        return float("nan"), None
    m_max = margins[valid].max()
    ties = points[valid & (margins == m_max)]
    order = np.lexsort((ties.imag, ties.real))
    return float(m_max), complex(ties[order[0]])


def _mobius_power_margins(L, zs, exponent, a_coef, b_coef, disk):
    """Margins of (1+Bz)/(1+Az)*exp(exponent*L) against ``disk``."""
    den = 1.0 + a_coef * zs
    pole = np.abs(den) < POLE_EPS
    with np.errstate(invalid="ignore", over="ignore"):
        vals = (1.0 + b_coef * zs) / np.where(pole, 1.0, den) * np.exp(exponent * L)
        margins = np.abs(vals - disk.center) - disk.radius
    margins = np.where(pole, np.nan, margins)
    return margins, vals, pole


def _sweep_margins(
    series: TruncatedSeries,
    exponent: float,
    a_coef: float,
    b_coef: float,
    disk: DiskSpec,
    circle_radii: Sequence[float],
    points_per_circle: int,
    extra_points: Sequence[complex],
    steps: int,
    eps_zero: float,
):
    """Worst disk margin of the powered Mobius ratio over circles and
    explicit points.  Returns (worst_margin, worst_point, any_failed)."""
    margin_chunks = []
    point_chunks = []
    any_failed = False
    if circle_radii:
        L, failed, rho = circle_log_values(
            series, circle_radii, points_per_circle, steps=steps, eps_zero=eps_zero
        )
        theta = 2.0 * np.pi * np.arange(points_per_circle) / points_per_circle
        zs = rho[:, None] * np.exp(1j * theta)[None, :]
        margins, _, pole = _mobius_power_margins(L, zs, exponent, a_coef, b_coef, disk)
        margins = np.where(failed, np.nan, margins)
        any_failed = bool((failed | pole).any())
        margin_chunks.append(margins.ravel())
        point_chunks.append(zs.ravel())
    if extra_points:
        targets = np.array([complex(z) for z in extra_points])
        L, failed = ray_log_values(series, targets, steps=steps, eps_zero=eps_zero)
        margins, _, pole = _mobius_power_margins(
            L, targets, exponent, a_coef, b_coef, disk
        )
        margins = np.where(failed, np.nan, margins)
        any_failed = any_failed or bool((failed | pole).any())
        margin_chunks.append(np.atleast_1d(margins))
        point_chunks.append(np.atleast_1d(targets))
    if not margin_chunks:
        raise ValueError("sample grid is empty: no circles and no extra points")
    worst, worst_point = _worst_sample(
        np.concatenate(margin_chunks), np.concatenate(point_chunks)
    )
    return worst, worst_point, any_failed


def _verdict(worst: float, any_failed: bool, tol: float) -> str:
    if any_failed:
        return "branch_failure"
    return "pass" if worst <= tol else "violated"


# --- stability checks ---------------------------------------------------------

def check_stability_vs_base(
    params: JanowskiParams,
    n: int,
    grid: Optional[SampleGrid] = None,
    tol: float = DEFAULT_TOL,
    steps: int = DEFAULT_RAY_STEPS,
    eps_zero: float = DEFAULT_EPS_ZERO,
    allow_outside: bool = False,
) -> StabilityReport:
    """Check |ratio(z) - 1| <= |B| over the grid, the criterion for the
    n-th partial sum to be subordinate to the A=0 base member.

    Parameters outside the proven range A <= 0 are rejected unless
    ``allow_outside`` permits exploratory use.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not params.base_stable_range and not allow_outside:
        raise ValueError(
            "params outside the established range A <= 0; "
            "pass allow_outside=True for exploratory checks"
        )
    grid = grid or SampleGrid.default()
    series = janowski_series(params, n)
    disk = DiskSpec(1.0 + 0.0j, abs(params.B))
    worst, worst_point, failed = _sweep_margins(
        series,
        1.0 / params.lam,
        params.A,
        params.B,
        disk,
        grid.radii,
        grid.points_per_circle,
        grid.extra_points,
        steps,
        eps_zero,
    )
    return StabilityReport(
        verdict=_verdict(worst, failed, tol),
        worst_margin=worst,
        worst_point=worst_point,
        n=n,
        params=params,
        sample_radii=grid.radii,
        points_per_circle=grid.points_per_circle,
        disk=disk,
    )


def check_stability_vs_self(
    params: JanowskiParams,
    n: int,
    r: float,
    grid: Optional[SampleGrid] = None,
    disk_source: str = "mobius_image",
    tol: float = DEFAULT_TOL,
    steps: int = DEFAULT_RAY_STEPS,
    eps_zero: float = DEFAULT_EPS_ZERO,
) -> StabilityReport:
    """Check whether the ratio maps |z| <= r into the image of |z| <= r
    under the Mobius target, the criterion for self-subordination.

    ``grid.radii`` are read as fractions of ``r`` so the circles stay inside
    the probed subdisk; ``grid.extra_points`` are absolute and may probe any
    point.  Verdict is ``violated`` as soon as one sample escapes the disk
    by more than ``tol``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 < r < 1.0:
        raise ValueError("need 0 < r < 1")
    grid = grid or SampleGrid.default()
    disk = disk_for(disk_source, params, r)
    series = janowski_series(params, n)
    circle_radii = tuple(f * r for f in grid.radii)
    worst, worst_point, failed = _sweep_margins(
        series,
        1.0 / params.lam,
        params.A,
        params.B,
        disk,
        circle_radii,
        grid.points_per_circle,
        grid.extra_points,
        steps,
        eps_zero,
    )
    return StabilityReport(
        verdict=_verdict(worst, failed, tol),
        worst_margin=worst,
        worst_point=worst_point,
        n=n,
        params=params,
        sample_radii=circle_radii,
        points_per_circle=grid.points_per_circle,
        disk_source=disk_source,
        disk=disk,
    )


def check_cross_order_stability(
    mu: float,
    lam: float,
    b_coef: float,
    n: int,
    grid: Optional[SampleGrid] = None,
    tol: float = DEFAULT_TOL,
    steps: int = DEFAULT_RAY_STEPS,
    eps_zero: float = DEFAULT_EPS_ZERO,
) -> StabilityReport:
    """Partial sums of the order-mu A=0 member against the order-lam base:
    |(1+Bz) * s_n(v_mu)(z)**(1/lam) - 1| must stay within |B|.

    The (1+Bz)**lam factor inside the lam-th root contributes exactly
    (1+Bz) because 1+Bz stays in the right half-plane on the disk, so its
    principal logarithm is already the analytic branch.  With mu = lam this
    collapses to :func:`check_stability_vs_base` at A = 0.
    """
    if not 0.0 < mu <= lam <= 1.0:
        raise ValueError("need 0 < mu <= lam <= 1")
    if not -1.0 <= b_coef < 0.0:
        raise ValueError("need -1 <= B < 0")
    if n < 1:
        raise ValueError("n must be >= 1")
    grid = grid or SampleGrid.default()
    series = janowski_series(JanowskiParams(0.0, b_coef, mu), n)
    disk = DiskSpec(1.0 + 0.0j, abs(b_coef))
    worst, worst_point, failed = _sweep_margins(
        series,
        1.0 / lam,
        0.0,
        b_coef,
        disk,
        grid.radii,
        grid.points_per_circle,
        grid.extra_points,
        steps,
        eps_zero,
    )
    return StabilityReport(
        verdict=_verdict(worst, failed, tol),
        worst_margin=worst,
        worst_point=worst_point,
        n=n,
        params=JanowskiParams(0.0, b_coef, lam),
        sample_radii=grid.radii,
        points_per_circle=grid.points_per_circle,
        disk=disk,
        mu=mu,
    )


# --- defect-derivative bound ---------------------------------------------------

def _defect_values(
    series: TruncatedSeries,
    params: JanowskiParams,
    targets: np.ndarray,
    steps: int,
    eps_zero: float,
):
    """Vectorized defect 1 - ratio over an array of points."""
    L, failed = ray_log_values(series, targets, steps=steps, eps_zero=eps_zero)
    den = 1.0 + params.A * targets
    pole = np.abs(den) < POLE_EPS
    with np.errstate(invalid="ignore", over="ignore"):
        vals = 1.0 - (1.0 + params.B * targets) / np.where(pole, 1.0, den) * np.exp(
            L / params.lam
        )
    return vals, failed | pole


def _real_axis_slope(series, params, x: float, steps: int, eps_zero: float) -> float:
    """Defect derivative at a real point by a complex step, which avoids
    subtractive cancellation (the defect is real on [0, 1) in range)."""
    h = 1e-100
    vals, failed = _defect_values(
        series, params, np.asarray(complex(x, h)), steps, eps_zero
    )
    if bool(failed):
        raise ValueError(f"defect undefined at real point {x!r}")
    return float(np.imag(vals)) / h


def check_derivative_modulus_bound(
    params: JanowskiParams,
    n: int,
    grid: Optional[SampleGrid] = None,
    tol: float = DEFAULT_TOL,
    fd_step: float = 1e-6,
    steps: int = DEFAULT_RAY_STEPS,
    eps_zero: float = DEFAULT_EPS_ZERO,
    allow_outside: bool = False,
) -> InequalityReport:
    """Check |d'(z)| <= d'(|z|) for the stability defect d = 1 - ratio.

    d' at complex points comes from a central difference with real step
    ``fd_step``; d' at the real point |z| from a complex step.  The checked
    quantity is d'(|z|) - |d'(z)|, which must stay >= -tol.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not params.base_stable_range and not allow_outside:
        raise ValueError(
            "params outside the established range A <= 0; "
            "pass allow_outside=True for exploratory checks"
        )
    grid = grid or SampleGrid.default()
    series = janowski_series(params, n)
    checked = 0
    violations = []
    min_margin = np.inf

    def scan(points: np.ndarray, slopes: np.ndarray):
        nonlocal checked, min_margin
        targets = np.concatenate([points + fd_step, points - fd_step])
        vals, failed = _defect_values(series, params, targets, steps, eps_zero)
        half = points.size
        bad = failed[:half] | failed[half:]
        deriv = (vals[:half] - vals[half:]) / (2.0 * fd_step)
        margins = slopes - np.abs(deriv)
        margins = np.where(bad, np.nan, margins)
        good = np.isfinite(margins)
        checked += int(good.sum())
        if good.any():
            min_margin = min(min_margin, float(margins[good].min()))
        for k in np.flatnonzero(good & (margins < -tol)):
            violations.append(
                InequalityViolation(
                    params.A,
                    params.B,
                    params.lam,
                    n,
                    None,
                    float(margins[k]),
                    point=complex(points[k]),
                )
            )

    theta = 2.0 * np.pi * np.arange(grid.points_per_circle) / grid.points_per_circle
    ring = np.exp(1j * theta)
    for r in grid.radii:
        slope = _real_axis_slope(series, params, r, steps, eps_zero)
        scan(r * ring, np.full(grid.points_per_circle, slope))
    if grid.extra_points:
        pts = np.array(grid.extra_points)
        slopes = np.array(
            [_real_axis_slope(series, params, abs(z), steps, eps_zero) for z in pts]
        )
        scan(pts, slopes)
    return InequalityReport(checked, tuple(violations), float(min_margin))


# --- product subordination ------------------------------------------------------

def _schwarz_eval(seed: Sequence[complex], z: np.ndarray) -> np.ndarray:
    """Test function from a seed: [c] gives c*z; [c1, c2] gives the
    disk-automorphism composite z*(c1 + c2*z)/(1 + conj(c1)*c2*z).  Either
    form satisfies |u(z)| <= |z| on the closed unit disk."""
    if len(seed) == 1:
        return seed[0] * z
    c1, c2 = seed
    return z * (c1 + c2 * z) / (1.0 + np.conj(c1) * c2 * z)


def _parse_seed(seed) -> tuple:
    vals = tuple(complex(c) for c in seed)
    if len(vals) not in (1, 2):
        raise ValueError("a seed is a list of 1 or 2 coefficients")
    for c in vals:
        if not (np.isfinite(c.real) and np.isfinite(c.imag)):
            raise ValueError("seed coefficients must be finite")
        if abs(c) > 1.0 + 1e-12:
            raise ValueError(f"seed coefficient {c!r} exceeds the unit bound")
    return vals


def check_power_product_subordination(
    alpha: float,
    beta: float,
    b_coef: float,
    schwarz_seeds,
    grid: Optional[SampleGrid] = None,
    tol: float = DEFAULT_TOL,
) -> InequalityReport:
    """Products of subordinate powers stay subordinate: with u, v built
    from the seeds, W = ((1+B*u)**alpha * (1+B*v)**beta)**(1/(alpha+beta))
    must satisfy |W - 1| <= |B| on the samples.

    All ordered seed pairs are checked; the checked quantity is
    |B| - |W - 1|.  Principal logarithms suffice because 1 + B*u(z) stays
    in the right half-plane for |z| < 1.  Raises ``ValueError`` when a
    seed's test function breaks the bound |u(z)| <= |z| on the samples.
    """
    if alpha <= 0.0 or beta <= 0.0:
        raise ValueError("need alpha, beta > 0")
    if not -1.0 <= b_coef < 0.0:
        raise ValueError("need -1 <= B < 0")
    seeds = [_parse_seed(s) for s in schwarz_seeds]
    if not seeds:
        raise ValueError("need at least one seed")
    grid = grid or SampleGrid.default()
    samples = []
    theta = 2.0 * np.pi * np.arange(grid.points_per_circle) / grid.points_per_circle
    ring = np.exp(1j * theta)
    for r in grid.radii:
        samples.append(r * ring)
    if grid.extra_points:
        samples.append(np.array(grid.extra_points))
    if not samples:
        raise ValueError("sample grid is empty: no circles and no extra points")
    zs = np.concatenate(samples)
    images = []
    for idx, seed in enumerate(seeds):
        u = _schwarz_eval(seed, zs)
        excess = float((np.abs(u) - np.abs(zs)).max())
        if excess > 1e-12:
            raise ValueError(
                f"invalid seed {list(seed)!r}: |u(z)| exceeds |z| by {excess:g}"
            )
        images.append(u)
    checked = 0
    violations = []
    min_margin = np.inf
    total = alpha + beta
    for i, u in enumerate(images):
        for j, v in enumerate(images):
            w = np.exp(
                (alpha * np.log(1.0 + b_coef * u) + beta * np.log(1.0 + b_coef * v))
                / total
            )
            margins = abs(b_coef) - np.abs(w - 1.0)
            checked += margins.size
            min_margin = min(min_margin, float(margins.min()))
            for k in np.flatnonzero(margins < -tol):
                violations.append(
                    InequalityViolation(
                        None, b_coef, None, j, i, float(margins[k]), point=complex(zs[k])
                    )
                )
    return InequalityReport(checked, tuple(violations), float(min_margin))
