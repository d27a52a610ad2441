"""Closed-form references used by the test suite to validate the engine.

These deliberately do not touch the propagation code: they are textbook
far-field and paraxial expressions evaluated directly, so agreement between
the two routes is meaningful.
"""
from __future__ import annotations

import numpy as np

from .field import WaveContext

__all__ = ["fraunhofer_double_slit", "thin_lens_paraxial_phase"]


def fraunhofer_double_slit(y, wavelength: float, distance: float, separation: float, width: float):
    """Far-field double-slit intensity, normalized to 1 on the axis.

    cos^2(pi*d*y/(lambda*L)) * sinc^2(pi*w*y/(lambda*L)) with sinc(x) =
    sin(x)/x and sinc(0) = 1. Valid in the regime L >> d^2/lambda where both
    slit envelopes collapse onto the axis.
    """
    arg = np.asarray(y, dtype=float) / (wavelength * distance)
    fringes = np.cos(np.pi * separation * arg) ** 2
    # np.sinc(t) is sin(pi t)/(pi t), so pass w*y/(lambda L) directly
    envelope = np.sinc(width * arg) ** 2
    return fringes * envelope


def thin_lens_paraxial_phase(y, f: float, ctx: WaveContext):
    """Quadratic lens phase -k*y^2/(2f), the small-angle reference."""
    return -ctx.wavenumber * np.square(y) / (2.0 * f)
