"""Coefficients and series of the power quotient ((1+Az)/(1+Bz))**lam.

Two independent constructions are provided.  The convolution method
multiplies the binomial series of (1+Az)**lam and (1+Bz)**(-lam) term by
term; the recurrence method integrates the first-order linear ODE the
function satisfies, which gives the three-term relation

    (n+1) a_{n+1} = (lam*(A-B) - (A+B)*n) a_n - A*B*(n-1) a_{n-1}.

The recurrence is the production method; the convolution is retained as a
cross-validation oracle (the two must agree to ~1e-10 relative for the
parameter ranges in scope).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .series import TruncatedSeries

__all__ = [
    "CoeffSequence",
    "JanowskiParams",
    "coeff_convolution",
    "coeff_recurrence",
    "coeff_sequence",
    "convolution_coeffs",
    "falling_factorial",
    "janowski_series",
    "rising_factorial",
]

METHODS = ("convolution", "recurrence")


@dataclass(frozen=True)
class JanowskiParams:
    """Parameter triple (A, B, lam) with -1 <= B < A <= 1 and 0 < lam <= 1.

    ``base_stable_range`` records whether the stricter range A <= 0 holds,
    the range on which stability against the A=0 base member is established.
    lam = 0 is rejected as degenerate (the function is identically 1).
    """

    A: float
    B: float
    lam: float
    base_stable_range: bool = field(init=False)

    def __post_init__(self):
        a, b, lam = float(self.A), float(self.B), float(self.lam)
        if not (np.isfinite(a) and np.isfinite(b) and np.isfinite(lam)):
            raise ValueError("parameters must be finite")
        if not -1.0 <= b < a <= 1.0:
            raise ValueError(f"need -1 <= B < A <= 1, got A={a!r}, B={b!r}")
        if not 0.0 < lam <= 1.0:
            raise ValueError(f"need 0 < lam <= 1, got lam={lam!r}")
        object.__setattr__(self, "A", a)
        object.__setattr__(self, "B", b)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "base_stable_range", a <= 0.0)

    def as_dict(self) -> dict:
        return {"A": self.A, "B": self.B, "lambda": self.lam}


def falling_factorial(lam: float, k: int) -> float:
    """lam*(lam-1)*...*(lam-k+1); empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = 1.0
    for j in range(k):
        out *= lam - j
    return out


def rising_factorial(lam: float, k: int) -> float:
    """lam*(lam+1)*...*(lam+k-1); empty product 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = 1.0
    for j in range(k):
        out *= lam + j
    return out


def _falling_over_factorial(lam: float, c: float, n_max: int) -> np.ndarray:
    """Array of binom(lam, k) * c**k for k = 0..n_max via ratio recurrence."""
    if n_max == 0:
        return np.ones(1)
    k = np.arange(1, n_max + 1)
    return np.concatenate(([1.0], np.cumprod(c * (lam - k + 1) / k)))


def _rising_over_factorial(lam: float, c: float, n_max: int) -> np.ndarray:
    """Array of ((lam)_k / k!) * c**k for k = 0..n_max via ratio recurrence."""
    if n_max == 0:
        return np.ones(1)
    k = np.arange(1, n_max + 1)
    return np.concatenate(([1.0], np.cumprod(c * (lam + k - 1) / k)))


def convolution_coeffs(params: JanowskiParams, n_max: int) -> np.ndarray:
    """Coefficients a_0..a_n_max by convolving the two binomial factor series.

    a_n = sum_k binom(lam,k) A**k * ((lam)_{n-k}/(n-k)!) (-B)**(n-k); the
    terms come from the incremental ratio recurrences, never from raw
    factorial quotients.
    """
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    p = _falling_over_factorial(params.lam, params.A, n_max)
    q = _rising_over_factorial(params.lam, -params.B, n_max)
    return np.convolve(p, q)[: n_max + 1]


def coeff_convolution(params: JanowskiParams, n: int) -> float:
    """Single coefficient a_n by the convolution formula."""
    return float(convolution_coeffs(params, n)[n])


@dataclass(frozen=True)
class CoeffSequence:
    """Real coefficients a_0..a_N with the parameters and method recorded."""

    values: np.ndarray
    params: JanowskiParams
    method: str

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("values must be a non-empty one-dimensional array")
        if arr[0] != 1.0:
            raise ValueError("a_0 must be exactly 1")
        if not np.all(np.isfinite(arr)):
            raise ValueError("coefficients must be finite")
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "values", arr)

    @property
    def n_max(self) -> int:
        return self.values.size - 1


def coeff_recurrence(params: JanowskiParams, n_max: int) -> CoeffSequence:
    """Coefficients a_0..a_n_max by the three-term recurrence."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    a_coef, b_coef, lam = params.A, params.B, params.lam
    out = np.empty(n_max + 1)
    out[0] = 1.0
    if n_max >= 1:
        out[1] = lam * (a_coef - b_coef)
    lead = lam * (a_coef - b_coef)
    s = a_coef + b_coef
    p = a_coef * b_coef
    for n in range(1, n_max):
        out[n + 1] = ((lead - s * n) * out[n] - p * (n - 1) * out[n - 1]) / (n + 1)
    return CoeffSequence(out, params, "recurrence")


def coeff_sequence(
    params: JanowskiParams, n_max: int, method: str = "recurrence"
) -> CoeffSequence:
    """Coefficient sequence by either method."""
    if method == "recurrence":
        return coeff_recurrence(params, n_max)
    if method == "convolution":
        return CoeffSequence(convolution_coeffs(params, n_max), params, "convolution")
    raise ValueError(f"method must be one of {METHODS}")


def janowski_series(
    params: JanowskiParams, order: int, method: str = "recurrence"
) -> TruncatedSeries:
    """The coefficient sequence lifted to a truncated series."""
    return TruncatedSeries(coeff_sequence(params, order, method).values)
