"""Figure geometry and deterministic SVG rendering.

The figure shows, on one complex-plane chart: the self-stability target
disk for |z| <= r under both disk conventions, the closed curve traced by
the stability ratio on |z| = r, and the ratio at one marked witness point.
Geometry is computed once and can be dumped to / reloaded from CSV; the
SVG is a pure function of the geometry, so a replot from CSV reproduces
the original file byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .janowski import JanowskiParams, janowski_series
from .serialize import csv_text, fmt6
from .series import BranchFailureError, circle_log_values
from .subordination import DISK_SOURCES, disk_for, stability_ratio

__all__ = [
    "FigureGeometry",
    "compute_figure_geometry",
    "geometry_csv_documents",
    "load_geometry_csvs",
    "render_svg",
]

CSV_NAMES = ("disk_boundary.csv", "g_curve.csv", "point.csv")

_STYLE = {
    "closed_form": ("#4878cf", 'stroke-dasharray="8,5" '),
    "mobius_image": ("#d65f5f", ""),
}
_CURVE_COLOR = "#2f9e44"
_SCALE = 500.0


@dataclass(frozen=True)
class FigureGeometry:
    """Plot-ready data: disk boundaries by source, ratio curve, witness."""

    boundaries: tuple  # ((source, complex ndarray), ...)
    curve: np.ndarray
    point: complex


def compute_figure_geometry(
    params: JanowskiParams,
    n: int,
    r: float,
    z0: complex,
    curve_angles: int = 1024,
    boundary_samples: int = 720,
    steps: int = 64,
) -> FigureGeometry:
    """Build the figure geometry; raises BranchFailureError when the ratio
    is undefined somewhere along the curve or at the witness."""
    if not 0.0 < r < 1.0:
        raise ValueError("need 0 < r < 1")
    if curve_angles < 8:
        raise ValueError("curve_angles must be >= 8")
    boundaries = []
    for source in DISK_SOURCES:
        disk = disk_for(source, params, r)
        boundaries.append((source, disk.boundary_points(boundary_samples)))
    series = janowski_series(params, n)
    L, failed, rho = circle_log_values(series, [r], curve_angles, steps=steps)
    if bool(failed.any()):
        raise BranchFailureError("ratio curve hit a vanishing partial sum")
    theta = 2.0 * np.pi * np.arange(curve_angles) / curve_angles
    zs = rho[0] * np.exp(1j * theta)
    curve = (1.0 + params.B * zs) / (1.0 + params.A * zs) * np.exp(L[0] / params.lam)
    point = stability_ratio(params, n, z0, steps=steps)
    return FigureGeometry(tuple(boundaries), curve, complex(point))


def geometry_csv_documents(geom: FigureGeometry) -> dict:
    """CSV texts keyed by file name (re/im columns, 17-digit floats)."""
    boundary_rows = []
    for source, pts in geom.boundaries:
        boundary_rows.extend([source, float(w.real), float(w.imag)] for w in pts)
    return {
        "disk_boundary.csv": csv_text(("source", "re", "im"), boundary_rows),
        "g_curve.csv": csv_text(
            ("re", "im"), [[float(w.real), float(w.imag)] for w in geom.curve]
        ),
        "point.csv": csv_text(
            ("re", "im"), [[geom.point.real, geom.point.imag]]
        ),
    }


def load_geometry_csvs(directory) -> FigureGeometry:
    """Rebuild geometry from the three CSV files in ``directory``."""
    from pathlib import Path

    directory = Path(directory)
    grouped: dict = {}
    order = []
    lines = (directory / "disk_boundary.csv").read_text(encoding="utf-8").splitlines()
    for line in lines[1:]:
        source, re_s, im_s = line.split(",")
        if source not in grouped:
            grouped[source] = []
            order.append(source)
        grouped[source].append(complex(float(re_s), float(im_s)))
    boundaries = tuple((s, np.array(grouped[s])) for s in order)
    lines = (directory / "g_curve.csv").read_text(encoding="utf-8").splitlines()
    curve = np.array(
        [complex(float(a), float(b)) for a, b in (ln.split(",") for ln in lines[1:])]
    )
    lines = (directory / "point.csv").read_text(encoding="utf-8").splitlines()
    re_s, im_s = lines[1].split(",")
    return FigureGeometry(boundaries, curve, complex(float(re_s), float(im_s)))


def _xy(w: complex):
    return _SCALE * w.real, -_SCALE * w.imag


def _path(points: np.ndarray, color: str, extra: str = "") -> str:
    coords = " ".join(
        f"{fmt6(x)},{fmt6(y)}" for x, y in (_xy(complex(w)) for w in points)
    )
    return (
        f'<path d="M {coords} Z" fill="none" stroke="{color}" '
        f'stroke-width="2" {extra}/>'
    )


def render_svg(geom: FigureGeometry) -> str:
    """Deterministic SVG 1.1 text for the figure.

    The viewport auto-fits the drawn geometry with 5% padding; axes are
    drawn through the origin with tick marks at unit steps.  Coordinates
    carry exactly 6 decimals, so identical geometry yields identical bytes.
    """
    pts = [complex(w) for _, b in geom.boundaries for w in b]
    pts.extend(complex(w) for w in geom.curve)
    pts.append(geom.point)
    pts.append(0j)  # keep the axes' origin inside the viewport
    xs, ys = zip(*(_xy(w) for w in pts))
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    pad = 0.05 * max(x1 - x0, y1 - y0, 1.0)
    x0, x1, y0, y1 = x0 - pad, x1 + pad, y0 - pad, y1 + pad
    width, height = x1 - x0, y1 - y0

    out = []
    out.append('<?xml version="1.0" encoding="UTF-8"?>')
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt6(width)}" height="{fmt6(height)}" '
        f'viewBox="{fmt6(x0)} {fmt6(y0)} {fmt6(width)} {fmt6(height)}">'
    )
    out.append(
        f'<rect x="{fmt6(x0)}" y="{fmt6(y0)}" width="{fmt6(width)}" '
        f'height="{fmt6(height)}" fill="#ffffff"/>'
    )
    # axes through the origin with unit ticks
    axis = 'stroke="#999999" stroke-width="1"'
    out.append(f'<line x1="{fmt6(x0)}" y1="0.000000" x2="{fmt6(x1)}" y2="0.000000" {axis}/>')
    out.append(f'<line x1="0.000000" y1="{fmt6(y0)}" x2="0.000000" y2="{fmt6(y1)}" {axis}/>')
    tick = 6.0
    k = int(np.ceil(x0 / _SCALE))
    while k * _SCALE <= x1:
        x = k * _SCALE
        out.append(
            f'<line x1="{fmt6(x)}" y1="{fmt6(-tick)}" x2="{fmt6(x)}" y2="{fmt6(tick)}" {axis}/>'
        )
        out.append(
            f'<text x="{fmt6(x + 4)}" y="{fmt6(tick + 14)}" font-family="monospace" '
            f'font-size="12" fill="#666666">{k}</text>'
        )
        k += 1
    k = int(np.ceil(y0 / _SCALE))
    while k * _SCALE <= y1:
        y = k * _SCALE
        out.append(
            f'<line x1="{fmt6(-tick)}" y1="{fmt6(y)}" x2="{fmt6(tick)}" y2="{fmt6(y)}" {axis}/>'
        )
        if k != 0:
            out.append(
                f'<text x="{fmt6(tick + 4)}" y="{fmt6(y - 4)}" font-family="monospace" '
                f'font-size="12" fill="#666666">{-k}</text>'
            )
        k += 1
    for source, boundary in geom.boundaries:
        color, extra = _STYLE.get(source, ("#555555", ""))
        out.append(_path(boundary, color, extra))
    out.append(_path(geom.curve, _CURVE_COLOR))
    px, py = _xy(geom.point)
    out.append(f'<circle cx="{fmt6(px)}" cy="{fmt6(py)}" r="4" fill="#000000"/>')
    out.append(
        f'<text x="{fmt6(px + 8)}" y="{fmt6(py - 8)}" font-family="monospace" '
        f'font-size="13" fill="#000000">ratio at witness</text>'
    )
    # legend, anchored to the top-left of the padded viewport
    lx, ly = x0 + 12, y0 + 20
    legend = [
        ("target disk, closed-form expressions", _STYLE["closed_form"][0]),
        ("target disk, exact circle image", _STYLE["mobius_image"][0]),
        ("ratio on the circle |z| = r", _CURVE_COLOR),
    ]
    for i, (label, color) in enumerate(legend):
        y = ly + 18 * i
        out.append(
            f'<line x1="{fmt6(lx)}" y1="{fmt6(y - 4)}" x2="{fmt6(lx + 24)}" '
            f'y2="{fmt6(y - 4)}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{fmt6(lx + 30)}" y="{fmt6(y)}" font-family="monospace" '
            f'font-size="13" fill="#333333">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
