"""Scalar wave optics on a line: slits, lenses, wires, and direct
Huygens-Fresnel propagation between parallel planes.

The package simulates the classic two-slit experiment and its imaging
variants by summing spherical wavelets from every source sample at every
target sample, with no paraxial or far-field shortcuts. Everything is
deterministic: the same configuration produces bit-identical profiles.
"""
from .analysis import (
    PeakReport,
    find_minima,
    find_peaks,
    flux_ratio,
    intensity,
    peak_attenuation,
    visibility,
)
from .elements import (
    LensSpec,
    SlitSpec,
    WireArraySpec,
    apply_lens,
    lens_phase,
    slit_mask,
    wire_mask,
)
from .errors import (
    AnalysisError,
    ConfigError,
    GeometryError,
    GridMismatchError,
    NoFiniteImageError,
    SimulationError,
    VirtualImageError,
)
from .field import (
    IntensityProfile,
    Mask,
    SampledField,
    TransverseGrid,
    WaveContext,
    apply_mask,
    make_grid,
    total_flux,
)
from .propagation import propagate, required_samples
from .reference import fraunhofer_double_slit, thin_lens_paraxial_phase
from .scenarios import (
    SLIT_STATES,
    ExperimentConfig,
    GridSpec,
    ScenarioResult,
    image_distance,
    scenario_interference,
    scenario_lens_image,
    scenario_wires,
    source_field,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisError",
    "ConfigError",
    "ExperimentConfig",
    "GeometryError",
    "GridMismatchError",
    "GridSpec",
    "IntensityProfile",
    "LensSpec",
    "Mask",
    "NoFiniteImageError",
    "PeakReport",
    "SLIT_STATES",
    "SampledField",
    "ScenarioResult",
    "SimulationError",
    "SlitSpec",
    "TransverseGrid",
    "VirtualImageError",
    "WaveContext",
    "WireArraySpec",
    "apply_lens",
    "apply_mask",
    "find_minima",
    "find_peaks",
    "flux_ratio",
    "fraunhofer_double_slit",
    "image_distance",
    "intensity",
    "lens_phase",
    "make_grid",
    "peak_attenuation",
    "propagate",
    "required_samples",
    "scenario_interference",
    "scenario_lens_image",
    "scenario_wires",
    "slit_mask",
    "source_field",
    "thin_lens_paraxial_phase",
    "total_flux",
    "visibility",
    "wire_mask",
    "__version__",
]
