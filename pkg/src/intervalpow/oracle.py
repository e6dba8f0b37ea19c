"""Brute-force sampling of the image of a box under ``x**y``.

The oracle is an under-approximation: each sample is a genuine point value,
so a sample outside an evaluator's result is a soundness bug in that
evaluator.  Negative bases are only paired with exponents that are fractions
with odd denominator, evaluated with the sign their numerator parity
dictates.  Samples that overflow binary64 are kept as ``+-inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .interval import Interval

__all__ = [
    "GridSpec",
    "ImageSample",
    "ContainmentReport",
    "Tightness",
    "sample_image",
    "check_containment",
    "estimate_tightness",
]

DIVERGENCE_THRESHOLD = 1e300
ORACLE_ULPS = 4
ORACLE_REL = 1e-12
# stand-in magnitude for an infinite bound when laying out the sample grid
_UNBOUNDED_SPAN = 1e6


@dataclass(frozen=True)
class GridSpec:
    bases: int = 100
    exps: int = 100
    max_den: int = 99
    threshold: float = DIVERGENCE_THRESHOLD

    def __post_init__(self):
        if self.bases < 2 or self.exps < 2:
            raise ValueError(f"grid needs at least 2x2 points, got {self.bases}x{self.exps}")
        if self.max_den < 1:
            raise ValueError(f"max_den must be >= 1, got {self.max_den}")
        if not self.threshold > 0:
            raise ValueError("divergence threshold must be positive")

    @classmethod
    def parse(cls, text: str, **kw) -> GridSpec:
        """``"<bases>x<exps>"``, e.g. ``"100x100"``."""
        try:
            nb, ne = (int(p) for p in text.lower().split("x"))
        except ValueError:
            raise ValueError(f"malformed grid {text!r}: expected <bases>x<exps>") from None
        return cls(bases=nb, exps=ne, **kw)


@dataclass(frozen=True, eq=False)
class ImageSample:
    bases: np.ndarray
    exps: np.ndarray
    values: np.ndarray
    saw_unbounded_above: bool = False
    saw_unbounded_below: bool = False

    @property
    def empty(self) -> bool:
        return self.values.size == 0

    def __len__(self) -> int:
        return int(self.values.size)

    @classmethod
    def nothing(cls) -> ImageSample:
        z = np.empty(0, dtype=np.float64)
        return cls(z, z.copy(), z.copy())


def _span(iv: Interval) -> tuple[float, float]:
    lo, hi = iv.lo, iv.hi
    if math.isinf(lo) and math.isinf(hi):
        return -_UNBOUNDED_SPAN, _UNBOUNDED_SPAN
    if math.isinf(lo):
        lo = hi - _UNBOUNDED_SPAN * max(1.0, abs(hi))
    if math.isinf(hi):
        hi = lo + _UNBOUNDED_SPAN * max(1.0, abs(lo))
    return lo, hi


def _grid(iv: Interval, n: int, extra: tuple[float, ...] = ()) -> np.ndarray:
    lo, hi = _span(iv)
    pts = np.clip(np.linspace(lo, hi, n), lo, hi)
    keep = [e for e in extra if lo < e < hi]
    if keep:
        pts = np.concatenate([pts, keep])
    return np.unique(pts + 0.0)


def sample_image(x: Interval, y: Interval, grid: GridSpec | None = None) -> ImageSample:
    """Sample ``{a**b}`` over the box ``x`` by ``y``.

    Bases are a uniform grid over ``x`` (plus ``0`` when ``x`` straddles it).
    Nonnegative bases are paired with a uniform exponent grid over ``y``;
    negative bases with the nearest even- and odd-numerator fractions of odd
    denominator ``<= grid.max_den`` to each exponent grid point, kept only if
    they lie in ``y``.
    """
    grid = grid or GridSpec()
    if x.empty or y.empty or (x.lo == x.hi and math.isinf(x.lo)) or (y.lo == y.hi and math.isinf(y.lo)):
        return ImageSample.nothing()
    bases = _grid(x, grid.bases, extra=(0.0,))
    exps = _grid(y, grid.exps)
    ylo, yhi = _span(y)
    if bases[0] < 0.0:
        fnum, fden = _kernels.odd_fractions(exps, ylo, yhi, grid.max_den)
        if fnum.size:
            pairs = np.unique(np.stack([fnum, fden], axis=1), axis=0)
            fnum, fden = np.ascontiguousarray(pairs[:, 0]), np.ascontiguousarray(pairs[:, 1])
    else:
        fnum = fden = np.empty(0, dtype=np.int64)
    b, e, v = _kernels.power_samples(bases, exps, fnum, fden)
    big = np.abs(v) > grid.threshold
    return ImageSample(
        bases=b,
        exps=e,
        values=v,
        saw_unbounded_above=bool(np.any(big & (v > 0))),
        saw_unbounded_below=bool(np.any(big & (v < 0))),
    )


@dataclass(frozen=True)
class ContainmentReport:
    passed: bool
    witness: tuple[float, float, float] | None = None
    reason: str = ""

    def summary(self) -> str:
        if self.passed:
            return "PASS"
        b, e, v = self.witness
        return f"FAIL {b!r} {e!r} {v!r}"

    def __bool__(self) -> bool:
        return self.passed


def _tolerance(v: np.ndarray) -> np.ndarray:
    a = np.abs(v)
    return ORACLE_ULPS * np.spacing(a) + ORACLE_REL * a


def check_containment(result: Interval, sample: ImageSample, threshold: float = DIVERGENCE_THRESHOLD) -> ContainmentReport:
    """Check every sample against ``result``.

    Finite samples may sit up to ``4 ulps + 1e-12`` relative outside the
    result, which absorbs the oracle's own rounding.  Overflowed samples need
    an infinite bound.  If any sample exceeded the divergence threshold the
    matching bound of the result must reach past the threshold as well.
    """
    if sample.empty:
        return ContainmentReport(True)
    v = sample.values

    def fail(i: int, reason: str) -> ContainmentReport:
        return ContainmentReport(False, (float(sample.bases[i]), float(sample.exps[i]), float(v[i])), reason)

    if result.empty:
        return fail(0, "result is empty but the image is not")
    with np.errstate(invalid="ignore"):
        tol = np.where(np.isfinite(v), _tolerance(np.where(np.isfinite(v), v, 0.0)), 0.0)
        above = v > result.hi + tol
        below = v < result.lo - tol
    if np.any(above):
        return fail(int(np.flatnonzero(above)[0]), "sample above result")
    if np.any(below):
        return fail(int(np.flatnonzero(below)[0]), "sample below result")
    if sample.saw_unbounded_above and result.hi < threshold:
        return fail(int(np.argmax(v)), "divergence above threshold not covered")
    if sample.saw_unbounded_below and result.lo > -threshold:
        return fail(int(np.argmin(v)), "divergence below threshold not covered")
    return ContainmentReport(True)


@dataclass(frozen=True)
class Tightness:
    """Overestimation of a result's bounds beyond the sampled extrema.

    ``applicable`` is False when the result or the sample is empty, or when a
    bound or extremum is infinite; the gap fields are NaN then.
    """

    applicable: bool
    upper_abs: float = math.nan
    lower_abs: float = math.nan
    upper_rel: float = math.nan
    lower_rel: float = math.nan
    sample_max: float = math.nan
    sample_min: float = math.nan

    def within(self, rel: float = 0.01, ulps: int = 4) -> bool:
        """Both gaps at most ``max(rel*|extremum|, ulps*ulp(extremum))``."""
        if not self.applicable:
            return True
        return all(
            gap <= max(rel * abs(e), ulps * math.ulp(abs(e)))
            for gap, e in ((self.upper_abs, self.sample_max), (self.lower_abs, self.sample_min))
        )


def _rel(gap: float, extremum: float) -> float:
    if extremum == 0.0:
        return 0.0 if gap <= 0.0 else math.inf
    return gap / abs(extremum)


def estimate_tightness(result: Interval, sample: ImageSample) -> Tightness:
    if result.empty or sample.empty or not result.is_bounded:
        return Tightness(False)
    vmax, vmin = float(np.max(sample.values)), float(np.min(sample.values))
    if not (math.isfinite(vmax) and math.isfinite(vmin)):
        return Tightness(False)
    up, down = result.hi - vmax, vmin - result.lo
    return Tightness(True, up, down, _rel(up, vmax), _rel(down, vmin), vmax, vmin)
