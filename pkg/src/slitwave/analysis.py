"""Measurements on intensity profiles: extrema, visibility, flux and peak ratios.

Extremum positions are refined off the grid with a three-point parabolic fit
through the extremal sample and its neighbours, so locations are good to well
below one grid spacing wherever the profile is smooth.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AnalysisError, GridMismatchError
from .field import IntensityProfile, SampledField

__all__ = [
    "PeakReport",
    "intensity",
    "find_minima",
    "find_peaks",
    "visibility",
    "flux_ratio",
    "peak_attenuation",
]


@dataclass(frozen=True, eq=False)
class PeakReport:
    """Detected peaks: refined positions (ascending) and matching heights."""

    positions: np.ndarray
    heights: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        h = np.asarray(self.heights, dtype=float)
        if pos.shape != h.shape or pos.ndim != 1:
            raise ValueError("positions and heights must be 1-d arrays of equal length")
        if pos.size > 1 and not np.all(np.diff(pos) > 0):
            raise ValueError("peak positions must be strictly increasing")
        if h.size and h.min() <= 0:
            raise ValueError("peak heights must be positive")
        pos = pos.copy()
        h = h.copy()
        pos.setflags(write=False)
        h.setflags(write=False)
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "heights", h)

    def __len__(self) -> int:
        return self.positions.size


def intensity(field: SampledField) -> IntensityProfile:
    """|amplitude|^2 per sample, on the field's own grid."""
    a = field.amplitudes
    return IntensityProfile(field.grid, a.real * a.real + a.imag * a.imag)


def _parabolic_refine(y: np.ndarray, v: np.ndarray, i: int, spacing: float):
    """Vertex of the parabola through samples i-1, i, i+1; (position, value)."""
    left, mid, right = v[i - 1], v[i], v[i + 1]
    denom = left - 2.0 * mid + right
    # denom is strictly nonzero for strict extrema, but guard anyway
    if denom == 0.0:
        return y[i], mid
    offset = 0.5 * (left - right) / denom
    return y[i] + offset * spacing, mid - 0.25 * (left - right) * offset


def _strict_extrema(values: np.ndarray, minima: bool) -> np.ndarray:
    v = values
    if v.size < 3:
        return np.empty(0, dtype=int)
    inner = v[1:-1]
    if minima:
        hits = (inner < v[:-2]) & (inner < v[2:])
    else:
        hits = (inner > v[:-2]) & (inner > v[2:])
    return np.nonzero(hits)[0] + 1


def find_minima(profile: IntensityProfile, depth_threshold: float = 0.05) -> np.ndarray:
    """Refined positions of local minima deeper than depth_threshold * max.

    A sample qualifies when it is strictly below both neighbours and its
    value is strictly below depth_threshold times the profile maximum.
    Positions come back sorted ascending; flat or monotone profiles give
    an empty result.
    """
    v = profile.values
    idx = _strict_extrema(v, minima=True)
    if idx.size == 0:
        return np.empty(0, dtype=float)
    cutoff = depth_threshold * v.max()
    idx = idx[v[idx] < cutoff]
    y = profile.grid.positions
    spacing = profile.grid.spacing
    out = np.array([_parabolic_refine(y, v, int(i), spacing)[0] for i in idx])
    return np.sort(out)


def find_peaks(profile: IntensityProfile, prominence_threshold: float = 0.05) -> PeakReport:
    """Refined local maxima at least prominence_threshold * max high."""
    v = profile.values
    idx = _strict_extrema(v, minima=False)
    if idx.size == 0:
        return PeakReport(np.empty(0), np.empty(0))
    cutoff = prominence_threshold * v.max()
    idx = idx[v[idx] >= cutoff]
    y = profile.grid.positions
    spacing = profile.grid.spacing
    refined = [_parabolic_refine(y, v, int(i), spacing) for i in idx]
    refined.sort(key=lambda t: t[0])
    pos = np.array([p for p, _ in refined])
    h = np.array([hh for _, hh in refined])
    return PeakReport(pos, h)


def visibility(profile: IntensityProfile, window: tuple) -> float:
    """(Imax - Imin)/(Imax + Imin) over samples inside the window.

    window is an inclusive (low, high) position interval that must contain
    at least three grid samples. A constant profile has zero visibility.
    """
    lo, hi = float(window[0]), float(window[1])
    if not lo < hi:
        raise ValueError(f"window must satisfy low < high, got ({lo}, {hi})")
    y = profile.grid.positions
    sel = (y >= lo) & (y <= hi)
    if np.count_nonzero(sel) < 3:
        raise ValueError(
            f"window ({lo}, {hi}) covers fewer than 3 grid samples"
        )
    v = profile.values[sel]
    vmax, vmin = float(v.max()), float(v.min())
    if vmax + vmin == 0.0:
        return 0.0
    return (vmax - vmin) / (vmax + vmin)


def flux_ratio(test: IntensityProfile, baseline: IntensityProfile) -> float:
    """Ratio of grid-weighted total fluxes, test over baseline."""
    if test.grid != baseline.grid:
        raise GridMismatchError("test and baseline profiles use different grids")
    base = float(np.sum(baseline.values) * baseline.grid.spacing)
    if base == 0.0:
        raise AnalysisError("baseline profile has zero flux, ratio undefined")
    return float(np.sum(test.values) * test.grid.spacing) / base


def peak_attenuation(test: PeakReport, baseline: PeakReport) -> float:
    """Largest fractional height decrease among position-matched peaks.

    Peaks are paired in ascending-position order; a pair further apart than
    half the smallest baseline peak separation does not match. The result is
    clipped to [0, 1], so peaks that grew contribute zero.
    """
    if len(test) != len(baseline):
        raise AnalysisError(
            f"peak count mismatch: test has {len(test)}, baseline has {len(baseline)}"
        )
    if len(baseline) == 0:
        raise AnalysisError("no peaks to compare")
    if len(baseline) > 1:
        tolerance = 0.5 * float(np.min(np.diff(baseline.positions)))
        off = np.abs(test.positions - baseline.positions)
        if np.any(off > tolerance):
            raise AnalysisError(
                "peak positions do not match the baseline within half the "
                "baseline peak separation"
            )
    drop = 1.0 - test.heights / baseline.heights
    return float(np.clip(drop.max(), 0.0, 1.0))
