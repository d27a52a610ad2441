"""Optical elements acting on one plane: slit apertures, wire arrays, a thin lens.

Apertures and wires are binary masks; sample positions landing exactly on an
edge count as inside the element (the comparison is <=). The lens is a pure
phase factor with no rim, so its aperture is whatever grid it is applied on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import Mask, SampledField, TransverseGrid, WaveContext

__all__ = [
    "SlitSpec",
    "LensSpec",
    "WireArraySpec",
    "slit_mask",
    "wire_mask",
    "lens_phase",
    "apply_lens",
]


@dataclass(frozen=True)
class SlitSpec:
    """A transmitting slit: center position and full width, meters."""

    center: float
    width: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError(f"slit width must be positive, got {self.width!r}")
        object.__setattr__(self, "center", float(self.center))
        object.__setattr__(self, "width", float(self.width))


@dataclass(frozen=True)
class LensSpec:
    """An ideal thin lens characterized by its focal length, meters."""

    focal_length: float

    def __post_init__(self):
        if not self.focal_length > 0:
            raise ValueError(f"focal length must be positive, got {self.focal_length!r}")
        object.__setattr__(self, "focal_length", float(self.focal_length))


@dataclass(frozen=True)
class WireArraySpec:
    """Opaque wires of one common width centered at the given positions."""

    centers: tuple
    wire_width: float

    def __post_init__(self):
        centers = tuple(float(c) for c in self.centers)
        width = float(self.wire_width)
        if width < 0:
            raise ValueError(f"wire width must be non-negative, got {width}")
        for i in range(len(centers)):
            for j in range(i + 1, len(centers)):
                if abs(centers[i] - centers[j]) < width:
                    raise ValueError(
                        f"wires at {centers[i]} and {centers[j]} overlap "
                        f"for width {width}"
                    )
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "wire_width", width)


def slit_mask(grid: TransverseGrid, slits: Sequence[SlitSpec]) -> Mask:
    """Binary mask transmitting inside any of the slits; empty list blocks all."""
    y = grid.positions
    t = np.zeros(grid.n_samples)
    for s in slits:
        t[np.abs(y - s.center) <= 0.5 * s.width] = 1.0
    return Mask(grid, t)


def wire_mask(grid: TransverseGrid, wires: WireArraySpec) -> Mask:
    """Binary mask blocking inside any wire; the complement of slit_mask."""
    y = grid.positions
    t = np.ones(grid.n_samples)
    for c in wires.centers:
        t[np.abs(y - c) <= 0.5 * wires.wire_width] = 0.0
    return Mask(grid, t)


def lens_phase(y, lens: LensSpec, ctx: WaveContext):
    """Phase delay delta(y) = -2k * sqrt(4f^2 + y^2) of the thin lens.

    The constant part -4kf at y = 0 is kept as is; only phase differences
    matter downstream. Accepts a scalar or an array of positions.
    """
    f = lens.focal_length
    return -2.0 * ctx.wavenumber * np.sqrt(4.0 * f * f + np.square(y))


def apply_lens(field: SampledField, lens: LensSpec, ctx: WaveContext) -> SampledField:
    """Multiply a field by the unimodular lens factor exp(i*delta(y))."""
    delta = lens_phase(field.grid.positions, lens, ctx)
    return SampledField(
        field.grid, field.amplitudes * np.exp(1j * delta), field.axial_position
    )
