"""Free-space propagation between parallel planes by direct Huygens quadrature.

Every target sample is the grid-weighted sum of spherical wavelets
exp(i*k*r)/r radiated by every source sample, with r the straight-line
distance between the two points. No obliquity factor and no overall
proportionality constant are applied; callers that care about absolute
scale normalize the source flux instead. The sum is a plain midpoint rule
over the source grid, accurate once the kernel phase advances by well under
pi between neighbouring source samples (see required_samples).
"""
from __future__ import annotations

import math

import numpy as np

from .errors import GeometryError
from .field import SampledField, TransverseGrid, WaveContext

__all__ = ["propagate", "required_samples"]

# Targets are processed in fixed-size blocks. This bounds the size of the
# distance matrix held in memory and, because the reduction always runs over
# the full source axis, keeps the summation order of every target sample
# independent of grid sizes and block boundaries: reruns are bit-identical.
_TARGET_BLOCK = 512


def propagate(
    source: SampledField,
    target_grid: TransverseGrid,
    target_axial_position: float,
    ctx: WaveContext,
    extra_phase=None,
) -> SampledField:
    """Propagate a sampled field to a parallel plane further down the axis.

    Parameters
    ----------
    source : SampledField
        Field at the source plane.
    target_grid : TransverseGrid
        Transverse sampling of the target plane.
    target_axial_position : float
        Axial position of the target plane (m); must exceed the source's.
    ctx : WaveContext
        Carries the wavenumber k.
    extra_phase : array_like, optional
        Additional phase (rad) applied per source sample inside the kernel
        exponent, i.e. the wavelet becomes exp(i*(k*r + phi_j))/r. Handy for
        phase elements located exactly at the source plane.

    Returns
    -------
    SampledField
        Field on target_grid at target_axial_position.
    """
    dz = float(target_axial_position) - source.axial_position
    if not dz > 0.0:
        raise GeometryError(
            f"target plane must lie beyond the source plane, got axial separation {dz}"
        )
    if extra_phase is not None:
        phi = np.asarray(extra_phase, dtype=np.float64)
        if phi.shape != source.amplitudes.shape:
            raise ValueError(
                f"extra_phase length {phi.shape} does not match "
                f"source sample count {source.amplitudes.shape}"
            )
        if not np.all(np.isfinite(phi)):
            raise ValueError("extra_phase must be finite")
    else:
        phi = None

    k = ctx.wavenumber
    ys = source.grid.positions
    yt = target_grid.positions
    weight = source.grid.spacing
    amps = source.amplitudes

    out = np.empty(target_grid.n_samples, dtype=np.complex128)
    dz2 = dz * dz
    for start in range(0, yt.size, _TARGET_BLOCK):
        block = yt[start : start + _TARGET_BLOCK]
        delta = block[:, None] - ys[None, :]
        r = np.sqrt(dz2 + delta * delta)
        phase = k * r
        if phi is not None:
            phase += phi[None, :]
        np.sum(amps[None, :] * np.exp(1j * phase) / r, axis=1, out=out[start : start + block.size])
    out *= weight
    return SampledField(target_grid, out, float(target_axial_position))


def required_samples(
    aperture_extent: float,
    target_extent: float,
    z: float,
    ctx: WaveContext,
    oversampling: float = 8.0,
) -> int:
    """Minimum source sample count for a well-resolved quadrature.

    Returns the smallest number of uniformly spaced samples across an
    aperture of full width ``aperture_extent`` such that the kernel phase
    k*r changes by at most pi/oversampling between neighbouring source
    samples, for the worst-case target point on a plane of full width
    ``target_extent`` at distance ``z``.
    """
    if not aperture_extent > 0:
        raise ValueError(f"aperture_extent must be positive, got {aperture_extent}")
    if target_extent < 0:
        raise ValueError(f"target_extent must be non-negative, got {target_extent}")
    if not z > 0:
        raise ValueError(f"z must be positive, got {z}")
    if not oversampling >= 1:
        raise ValueError(f"oversampling must be at least 1, got {oversampling}")

    # worst-case |d(kr)/dy'| over both planes: the largest transverse offset
    # between a source sample and a target sample
    offset = 0.5 * (aperture_extent + target_extent)
    slope = offset / math.hypot(z, offset)
    if slope == 0.0:
        return 1
    max_step = math.pi / (oversampling * ctx.wavenumber * slope)
    return max(1, math.ceil(aperture_extent / max_step))
