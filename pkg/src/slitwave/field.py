"""Sampled one-dimensional complex fields on uniform transverse grids.

Everything downstream works with relative amplitudes: intensities are plain
|amplitude|^2 and flux is the grid-weighted intensity sum, so absolute
radiometric units never enter. All numerics are double precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GridMismatchError

__all__ = [
    "WaveContext",
    "TransverseGrid",
    "SampledField",
    "Mask",
    "IntensityProfile",
    "make_grid",
    "total_flux",
    "apply_mask",
]


@dataclass(frozen=True)
class WaveContext:
    """Monochromatic scalar wave of a fixed vacuum wavelength in meters."""

    wavelength: float

    def __post_init__(self):
        if not (isinstance(self.wavelength, (int, float)) and self.wavelength > 0):
            raise ValueError(f"wavelength must be a positive length, got {self.wavelength!r}")
        object.__setattr__(self, "wavelength", float(self.wavelength))

    @property
    def wavenumber(self) -> float:
        """k = 2*pi/wavelength, rad/m."""
        return 2.0 * math.pi / self.wavelength


@dataclass(frozen=True)
class TransverseGrid:
    """Uniform grid of n_samples positions spanning [center - half_width, center + half_width].

    For a single sample the grid degenerates to the one position {center};
    its spacing is then the full span, so that one sample still carries a
    quadrature weight.
    """

    center: float
    half_width: float
    n_samples: int

    def __post_init__(self):
        if not (isinstance(self.half_width, (int, float)) and self.half_width > 0):
            raise ValueError(f"half_width must be positive, got {self.half_width!r}")
        if not (isinstance(self.n_samples, (int, np.integer)) and self.n_samples >= 1):
            raise ValueError(f"n_samples must be a positive integer, got {self.n_samples!r}")
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "half_width", float(self.half_width))
        object.__setattr__(self, "n_samples", int(self.n_samples))

    @property
    def spacing(self) -> float:
        if self.n_samples == 1:
            return 2.0 * self.half_width
        return 2.0 * self.half_width / (self.n_samples - 1)

    @cached_property
    def positions(self) -> np.ndarray:
        # offsets are exact (integers and half-integers), so odd grids are
        # exactly symmetric about the center and rebuilding the same grid
        # reproduces positions bit for bit
        if self.n_samples == 1:
            pos = np.array([self.center], dtype=float)
        else:
            offsets = np.arange(self.n_samples, dtype=float) - (self.n_samples - 1) / 2.0
            pos = self.center + offsets * self.spacing
        pos.setflags(write=False)
        return pos


def make_grid(center: float, half_width: float, n_samples: int) -> TransverseGrid:
    """Build a uniform transverse grid; see TransverseGrid for conventions."""
    return TransverseGrid(center, half_width, n_samples)


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    if arr.ndim != 1:
        raise ValueError(f"expected a one-dimensional array, got shape {arr.shape}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SampledField:
    """Complex amplitude samples living on a grid at one axial position (m)."""

    grid: TransverseGrid
    amplitudes: np.ndarray
    axial_position: float

    def __post_init__(self):
        amps = _frozen_array(self.amplitudes, np.complex128)
        if amps.shape != (self.grid.n_samples,):
            raise ValueError(
                f"amplitude count {amps.shape[0] if amps.ndim == 1 else amps.shape} "
                f"does not match grid n_samples {self.grid.n_samples}"
            )
        if not np.all(np.isfinite(amps.real) & np.isfinite(amps.imag)):
            raise ValueError("amplitudes must be finite")
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "axial_position", float(self.axial_position))


@dataclass(frozen=True, eq=False)
class Mask:
    """Real transmission factors in [0, 1], one per grid sample."""

    grid: TransverseGrid
    transmission: np.ndarray

    def __post_init__(self):
        t = _frozen_array(self.transmission, np.float64)
        if t.shape != (self.grid.n_samples,):
            raise ValueError(
                f"transmission count does not match grid n_samples {self.grid.n_samples}"
            )
        if not np.all(np.isfinite(t)) or t.min() < 0.0 or t.max() > 1.0:
            raise ValueError("transmission values must lie in [0, 1]")
        object.__setattr__(self, "transmission", t)


@dataclass(frozen=True, eq=False)
class IntensityProfile:
    """Non-negative relative intensity samples on a grid."""

    grid: TransverseGrid
    values: np.ndarray

    def __post_init__(self):
        v = _frozen_array(self.values, np.float64)
        if v.shape != (self.grid.n_samples,):
            raise ValueError(f"value count does not match grid n_samples {self.grid.n_samples}")
        if not np.all(np.isfinite(v)) or v.min() < 0.0:
            raise ValueError("intensity values must be finite and non-negative")
        object.__setattr__(self, "values", v)


def total_flux(field: SampledField) -> float:
    """Grid-weighted power sum(|amplitude|^2) * spacing, in relative units."""
    a = field.amplitudes
    return float(np.sum(a.real * a.real + a.imag * a.imag) * field.grid.spacing)


def apply_mask(field: SampledField, mask: Mask) -> SampledField:
    """Multiply a field pointwise by a transmission mask on the same grid."""
    if mask.grid != field.grid:
        raise GridMismatchError("field and mask are sampled on different grids")
    return SampledField(field.grid, field.amplitudes * mask.transmission, field.axial_position)
