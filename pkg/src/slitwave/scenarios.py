"""End-to-end experiment pipelines over a declarative configuration.

Three scenarios mirror the classic two-slit-with-lens setup:

* ``scenario_interference``: slits -> free space -> screen at distance u.
* ``scenario_lens_image``: slits -> distance u -> thin lens -> distance v
  -> image plane, with v from the thin-lens relation unless overridden.
* ``scenario_wires``: as the lens pipeline, but thin wires are parked on the
  interference minima of the lens-plane pattern before the lens phase, and
  every slit state runs once with and once without them.

All distances in meters. Each scenario run normalizes its source to unit
flux, so profiles from different slit states share a scale.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .analysis import find_minima, find_peaks, intensity, flux_ratio, peak_attenuation, visibility
from .elements import LensSpec, SlitSpec, WireArraySpec, apply_lens, slit_mask, wire_mask
from .errors import ConfigError, NoFiniteImageError, VirtualImageError
from .field import IntensityProfile, SampledField, TransverseGrid, WaveContext, total_flux
from .propagation import propagate, required_samples

__all__ = [
    "SLIT_STATES",
    "GridSpec",
    "ExperimentConfig",
    "ScenarioResult",
    "image_distance",
    "source_field",
    "scenario_interference",
    "scenario_lens_image",
    "scenario_wires",
]

SLIT_STATES = ("both", "upper_only", "lower_only")

# Default transverse half extent of the lens and image planes. Acts as the
# lens aperture, since the lens itself has no rim.
DEFAULT_SCREEN_HALF_WIDTH = 5e-3

# Default wire width. Tuned once against the default geometry so that the
# single-slit wires run shows a 10% peak attenuation, then frozen; see the
# wire_interception demo for the tuning sweep.
DEFAULT_WIRE_WIDTH = 6.13e-5


@dataclass(frozen=True)
class GridSpec:
    """Declarative stand-in for a TransverseGrid inside a config."""

    center_m: float
    half_width_m: float
    n_samples: int

    def __post_init__(self):
        if not self.half_width_m > 0:
            raise ConfigError(f"grid half_width_m must be positive, got {self.half_width_m!r}")
        if not (isinstance(self.n_samples, (int, np.integer)) and self.n_samples >= 1):
            raise ConfigError(f"grid n_samples must be a positive integer, got {self.n_samples!r}")
        object.__setattr__(self, "center_m", float(self.center_m))
        object.__setattr__(self, "half_width_m", float(self.half_width_m))
        object.__setattr__(self, "n_samples", int(self.n_samples))

    def build(self) -> TransverseGrid:
        return TransverseGrid(self.center_m, self.half_width_m, self.n_samples)


def image_distance(u: float, lens: LensSpec) -> float:
    """Image-side conjugate distance v = 1/(1/f - 1/u) of a thin lens."""
    if not u > 0:
        raise ValueError(f"object distance must be positive, got {u}")
    f = lens.focal_length
    if u == f:
        raise NoFiniteImageError(f"object at the focal plane (u = f = {f}), no finite image")
    if u < f:
        raise VirtualImageError(f"object inside the focal length (u = {u} < f = {f})")
    return 1.0 / (1.0 / f - 1.0 / u)


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one experiment; every field has a usable default.

    The slits sit symmetrically about the axis at ±slit_separation_m/2 in a
    source plane at axial position 0; the lens plane is at u_m and the image
    plane at u_m + v_m. Optional fields left as None are filled in by
    resolve(): v_m from the thin-lens relation, grids from the sampling
    rules below.

    Default grids: the source grid spans both slits plus half a sample of
    margin, with spacing an integer fraction of the slit width so that slit
    edges always fall midway between samples (the open width is then exact
    at every resolution, which is what makes resolution-doubling checks
    converge cleanly). Lens and image grids span ±5 mm with the sample count
    given by required_samples at the configured oversampling.
    """

    wavelength_m: float = 650e-9
    slit_width_m: float = 100e-6
    slit_separation_m: float = 2e-3
    u_m: float = 1.0
    focal_length_m: float | None = 0.5
    v_m: float | None = None
    slit_state: str = "both"
    wire_count: int = 6
    wire_width_m: float = DEFAULT_WIRE_WIDTH
    wire_centers_m: tuple | None = None
    source_samples_per_slit: int = 64
    oversampling: float = 8.0
    source_grid: GridSpec | None = None
    screen_grid: GridSpec | None = None
    image_grid: GridSpec | None = None

    def __post_init__(self):
        checks = [
            ("wavelength_m", self.wavelength_m),
            ("slit_width_m", self.slit_width_m),
            ("slit_separation_m", self.slit_separation_m),
            ("u_m", self.u_m),
        ]
        for name, value in checks:
            if not (isinstance(value, (int, float)) and value > 0):
                raise ConfigError(f"{name} must be positive, got {value!r}")
        if self.focal_length_m is not None and not self.focal_length_m > 0:
            raise ConfigError(f"focal_length_m must be positive, got {self.focal_length_m!r}")
        if self.v_m is not None and not self.v_m > 0:
            raise ConfigError(f"v_m must be positive, got {self.v_m!r}")
        if self.slit_state not in SLIT_STATES:
            raise ConfigError(
                f"slit_state must be one of {SLIT_STATES}, got {self.slit_state!r}"
            )
        if self.wire_count < 0:
            raise ConfigError(f"wire_count must be non-negative, got {self.wire_count!r}")
        if self.wire_width_m < 0:
            raise ConfigError(f"wire_width_m must be non-negative, got {self.wire_width_m!r}")
        if self.source_samples_per_slit < 1:
            raise ConfigError(
                f"source_samples_per_slit must be at least 1, got {self.source_samples_per_slit!r}"
            )
        if not self.oversampling >= 1:
            raise ConfigError(f"oversampling must be at least 1, got {self.oversampling!r}")
        if self.wire_centers_m is not None:
            object.__setattr__(
                self, "wire_centers_m", tuple(float(c) for c in self.wire_centers_m)
            )

    # -- derived pieces ----------------------------------------------------

    @property
    def ctx(self) -> WaveContext:
        return WaveContext(self.wavelength_m)

    @property
    def upper_slit(self) -> SlitSpec:
        return SlitSpec(+0.5 * self.slit_separation_m, self.slit_width_m)

    @property
    def lower_slit(self) -> SlitSpec:
        return SlitSpec(-0.5 * self.slit_separation_m, self.slit_width_m)

    @property
    def lens(self) -> LensSpec | None:
        if self.focal_length_m is None:
            return None
        return LensSpec(self.focal_length_m)

    @property
    def fringe_spacing_m(self) -> float:
        """lambda * u / d, the two-slit fringe period at the lens plane."""
        return self.wavelength_m * self.u_m / self.slit_separation_m

    def resolve(self) -> "ExperimentConfig":
        """Fill every optional field in; idempotent."""
        v = self.v_m
        if v is None and self.lens is not None:
            v = image_distance(self.u_m, self.lens)

        source = self.source_grid
        if source is None:
            spacing = self.slit_width_m / self.source_samples_per_slit
            span = self.slit_separation_m + self.slit_width_m
            n = int(round(span / spacing)) + 2
            source = GridSpec(0.0, 0.5 * spacing * (n - 1), n)

        # the screen (lens-plane) grid feeds the second propagation leg, so
        # its sampling is set by the leg it radiates, not the one it receives
        screen = self.screen_grid
        image = self.image_grid
        if screen is None or image is None:
            half = DEFAULT_SCREEN_HALF_WIDTH
            z_next = v if v is not None else self.u_m
            n = required_samples(2 * half, 2 * half, z_next, self.ctx, self.oversampling)
            if screen is None:
                screen = GridSpec(0.0, half, n)
            if image is None:
                image = GridSpec(0.0, half, n)

        return dataclasses.replace(
            self, v_m=v, source_grid=source, screen_grid=screen, image_grid=image
        )


@dataclass(frozen=True, eq=False)
class ScenarioResult:
    """Named intensity profiles and scalar metrics, plus the resolved config."""

    profiles: dict
    metrics: dict
    config: ExperimentConfig


def source_field(config: ExperimentConfig, state: str) -> SampledField:
    """Unit-flux field over the slits open in the given state, at axial 0.

    If nothing transmits (e.g. the source grid misses the slits) the field
    is identically zero and is returned unnormalized.
    """
    if state not in SLIT_STATES:
        raise ValueError(f"state must be one of {SLIT_STATES}, got {state!r}")
    cfg = config if config.source_grid is not None else config.resolve()
    grid = cfg.source_grid.build()
    slits = {
        "both": (cfg.upper_slit, cfg.lower_slit),
        "upper_only": (cfg.upper_slit,),
        "lower_only": (cfg.lower_slit,),
    }[state]
    mask = slit_mask(grid, slits)
    field = SampledField(grid, mask.transmission.astype(np.complex128), 0.0)
    flux = total_flux(field)
    if flux == 0.0:
        return field
    return SampledField(grid, field.amplitudes / np.sqrt(flux), 0.0)


def _lens_plane_field(cfg: ExperimentConfig, state: str) -> SampledField:
    return propagate(source_field(cfg, state), cfg.screen_grid.build(), cfg.u_m, cfg.ctx)


def scenario_interference(config: ExperimentConfig) -> ScenarioResult:
    """Two-slit interference screen at distance u (no lens, no wires)."""
    cfg = config.resolve()
    profiles = {}
    reports = {}
    for state, key in (("both", "both"), ("upper_only", "upper"), ("lower_only", "lower")):
        profiles[key] = intensity(_lens_plane_field(cfg, state))
        reports[key] = find_peaks(profiles[key])
    fringe = cfg.fringe_spacing_m
    metrics = {
        "fringe_spacing_m": fringe,
        "visibility_both": visibility(profiles["both"], (-2.5 * fringe, 2.5 * fringe)),
        "peak_count_both": float(len(reports["both"])),
        "peak_count_upper": float(len(reports["upper"])),
        "peak_count_lower": float(len(reports["lower"])),
    }
    return ScenarioResult(profiles, metrics, cfg)


def scenario_lens_image(config: ExperimentConfig) -> ScenarioResult:
    """Image the slits through the lens: u to the lens, v to the image plane."""
    cfg = config.resolve()
    if cfg.lens is None:
        raise ConfigError("scenario_lens_image requires focal_length_m")
    image_grid = cfg.image_grid.build()
    image_z = cfg.u_m + cfg.v_m
    profiles = {}
    reports = {}
    for state, key in (("both", "both"), ("upper_only", "upper"), ("lower_only", "lower")):
        at_lens = apply_lens(_lens_plane_field(cfg, state), cfg.lens, cfg.ctx)
        profiles[key] = intensity(propagate(at_lens, image_grid, image_z, cfg.ctx))
        reports[key] = find_peaks(profiles[key])
    magnification = cfg.v_m / cfg.u_m
    metrics = {
        "image_distance_m": cfg.v_m,
        "magnification": magnification,
        "expected_peak_separation_m": magnification * cfg.slit_separation_m,
        "peak_count_both": float(len(reports["both"])),
        "peak_count_upper": float(len(reports["upper"])),
        "peak_count_lower": float(len(reports["lower"])),
    }
    if len(reports["both"]) == 2:
        metrics["peak_separation_m"] = float(np.diff(reports["both"].positions)[0])
        metrics["peak_low_m"] = float(reports["both"].positions[0])
        metrics["peak_high_m"] = float(reports["both"].positions[1])
    if len(reports["upper"]) == 1:
        metrics["upper_image_peak_m"] = float(reports["upper"].positions[0])
    if len(reports["lower"]) == 1:
        metrics["lower_image_peak_m"] = float(reports["lower"].positions[0])
    return ScenarioResult(profiles, metrics, cfg)


def scenario_wires(config: ExperimentConfig) -> ScenarioResult:
    """Park wires on the lens-plane interference minima, image with and without.

    Wire centers default to the wire_count innermost minima of the both-slits
    lens-plane pattern; explicit wire_centers_m in the config win. Both the
    both-slits and upper-only states run through the identical wire mask.
    """
    cfg = config.resolve()
    if cfg.lens is None:
        raise ConfigError("scenario_wires requires focal_length_m")
    screen = cfg.screen_grid.build()
    image_grid = cfg.image_grid.build()
    image_z = cfg.u_m + cfg.v_m

    lens_fields = {
        "both": _lens_plane_field(cfg, "both"),
        "upper": _lens_plane_field(cfg, "upper_only"),
    }

    if cfg.wire_centers_m is not None:
        centers = cfg.wire_centers_m
    else:
        minima = find_minima(intensity(lens_fields["both"]))
        if minima.size < cfg.wire_count:
            raise ConfigError(
                f"only {minima.size} interference minima detected at the lens plane, "
                f"cannot place {cfg.wire_count} wires"
            )
        innermost = minima[np.argsort(np.abs(minima), kind="stable")[: cfg.wire_count]]
        centers = tuple(float(c) for c in np.sort(innermost))
    wires = WireArraySpec(centers, cfg.wire_width_m)
    blocker = wire_mask(screen, wires)

    profiles = {}
    for key in ("both", "upper"):
        base = lens_fields[key]
        wired = SampledField(screen, base.amplitudes * blocker.transmission, base.axial_position)
        for tag, fld in ((f"{key}_no_wires", base), (f"{key}_wires", wired)):
            at_lens = apply_lens(fld, cfg.lens, cfg.ctx)
            profiles[tag] = intensity(propagate(at_lens, image_grid, image_z, cfg.ctx))

    metrics = {
        "wire_width_m": cfg.wire_width_m,
        "flux_ratio_both_slits": flux_ratio(profiles["both_wires"], profiles["both_no_wires"]),
        "flux_ratio_single_slit": flux_ratio(profiles["upper_wires"], profiles["upper_no_wires"]),
        "peak_attenuation_both_slits": peak_attenuation(
            find_peaks(profiles["both_wires"]), find_peaks(profiles["both_no_wires"])
        ),
        "peak_attenuation_single_slit": peak_attenuation(
            find_peaks(profiles["upper_wires"]), find_peaks(profiles["upper_no_wires"])
        ),
    }
    for i, c in enumerate(centers):
        metrics[f"wire_center_{i}_m"] = c
    return ScenarioResult(profiles, metrics, cfg)
