"""Command-line front end: JSON config in, CSV profiles and metrics out.

Usage:

    slitwave --scenario wires --out results/
    slitwave --scenario interference --config my.json --out results/ \
        --set slit_separation_m=4e-3 --samples-override 600

The config document is a single JSON object. Required keys: wavelength_m,
slit_width_m, slit_separation_m, u_m, focal_length_m (null for no lens) and
grids (an object, possibly empty, with optional complete "source", "screen",
"image" sections). Everything else defaults. The fully resolved config is
echoed to config_resolved.json next to the CSVs and re-parses to the exact
configuration that ran.

Exit codes: 0 success, 2 configuration error, 3 numerical or scenario error.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
from dataclasses import dataclass, field

from .errors import ConfigError, SimulationError
from .scenarios import (
    SLIT_STATES,
    ExperimentConfig,
    GridSpec,
    ScenarioResult,
    scenario_interference,
    scenario_lens_image,
    scenario_wires,
)

__all__ = ["RunManifest", "parse_config", "default_document", "run", "main"]

SCENARIOS = {
    "interference": scenario_interference,
    "lens_image": scenario_lens_image,
    "wires": scenario_wires,
}

_REQUIRED_KEYS = ("wavelength_m", "slit_width_m", "slit_separation_m", "u_m", "focal_length_m", "grids")
_OPTIONAL_KEYS = (
    "v_m",
    "slit_state",
    "wire_count",
    "wire_width_m",
    "wire_centers_m",
    "source_samples_per_slit",
    "oversampling",
)
_GRID_SECTIONS = ("source", "screen", "image")
_GRID_KEYS = ("center_m", "half_width_m", "n_samples")

# 17 significant digits: enough for float64 to survive text round-trips bit-for-bit
_FLOAT_FMT = "%.16e"


@dataclass(frozen=True)
class RunManifest:
    """Everything one CLI invocation needs."""

    scenario: str
    config_path: str | None
    output_dir: str
    overrides: dict = field(default_factory=dict)
    samples_override: int | None = None


def default_document() -> dict:
    """Minimal config document; parse_config fills in all defaults."""
    cfg = ExperimentConfig()
    return {
        "wavelength_m": cfg.wavelength_m,
        "slit_width_m": cfg.slit_width_m,
        "slit_separation_m": cfg.slit_separation_m,
        "u_m": cfg.u_m,
        "focal_length_m": cfg.focal_length_m,
        "grids": {},
    }


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _positive_number(doc: dict, key: str, path: str) -> None:
    value = doc[key]
    if not (_is_number(value) and value > 0):
        raise ConfigError(f"{path} must be a positive number, got {value!r}")


def _grid_spec(section: dict, path: str) -> GridSpec:
    if not isinstance(section, dict):
        raise ConfigError(f"{path} must be an object, got {type(section).__name__}")
    for key in _GRID_KEYS:
        if key not in section:
            raise ConfigError(f"missing required config key: {path}.{key}")
    unknown = set(section) - set(_GRID_KEYS)
    if unknown:
        raise ConfigError(f"unknown config key: {path}.{sorted(unknown)[0]}")
    if not _is_number(section["center_m"]):
        raise ConfigError(f"{path}.center_m must be a number, got {section['center_m']!r}")
    _positive_number(section, "half_width_m", f"{path}.half_width_m")
    n = section["n_samples"]
    if not (isinstance(n, int) and not isinstance(n, bool) and n >= 1):
        raise ConfigError(f"{path}.n_samples must be a positive integer, got {n!r}")
    return GridSpec(section["center_m"], section["half_width_m"], n)


def parse_config(text: str) -> ExperimentConfig:
    """Parse and fully resolve a JSON config document.

    Missing required keys, unknown keys, and non-positive lengths all raise
    ConfigError naming the offending key path.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ConfigError(f"config must be a JSON object, got {type(doc).__name__}")

    for key in _REQUIRED_KEYS:
        if key not in doc:
            raise ConfigError(f"missing required config key: {key}")
    unknown = set(doc) - set(_REQUIRED_KEYS) - set(_OPTIONAL_KEYS)
    if unknown:
        raise ConfigError(f"unknown config key: {sorted(unknown)[0]}")

    for key in ("wavelength_m", "slit_width_m", "slit_separation_m", "u_m"):
        _positive_number(doc, key, key)
    if doc["focal_length_m"] is not None:
        _positive_number(doc, "focal_length_m", "focal_length_m")
    if doc.get("v_m") is not None:
        _positive_number(doc, "v_m", "v_m")

    grids = doc["grids"]
    if not isinstance(grids, dict):
        raise ConfigError(f"grids must be an object, got {type(grids).__name__}")
    unknown = set(grids) - set(_GRID_SECTIONS)
    if unknown:
        raise ConfigError(f"unknown config key: grids.{sorted(unknown)[0]}")
    specs = {
        name: _grid_spec(grids[name], f"grids.{name}") for name in _GRID_SECTIONS if name in grids
    }

    centers = doc.get("wire_centers_m")
    if centers is not None:
        if not isinstance(centers, (list, tuple)) or not all(_is_number(c) for c in centers):
            raise ConfigError(f"wire_centers_m must be a list of numbers, got {centers!r}")
        centers = tuple(float(c) for c in centers)

    kwargs = {
        "wavelength_m": doc["wavelength_m"],
        "slit_width_m": doc["slit_width_m"],
        "slit_separation_m": doc["slit_separation_m"],
        "u_m": doc["u_m"],
        "focal_length_m": doc["focal_length_m"],
        "wire_centers_m": centers,
        "source_grid": specs.get("source"),
        "screen_grid": specs.get("screen"),
        "image_grid": specs.get("image"),
    }
    for key in ("v_m", "slit_state", "wire_count", "wire_width_m", "source_samples_per_slit", "oversampling"):
        if key in doc:
            kwargs[key] = doc[key]
    return ExperimentConfig(**kwargs).resolve()


def to_document(config: ExperimentConfig) -> dict:
    """Inverse of parse_config for resolved configs."""
    grids = {}
    for name, spec in (
        ("source", config.source_grid),
        ("screen", config.screen_grid),
        ("image", config.image_grid),
    ):
        if spec is not None:
            grids[name] = {
                "center_m": spec.center_m,
                "half_width_m": spec.half_width_m,
                "n_samples": spec.n_samples,
            }
    return {
        "wavelength_m": config.wavelength_m,
        "slit_width_m": config.slit_width_m,
        "slit_separation_m": config.slit_separation_m,
        "u_m": config.u_m,
        "focal_length_m": config.focal_length_m,
        "v_m": config.v_m,
        "slit_state": config.slit_state,
        "wire_count": config.wire_count,
        "wire_width_m": config.wire_width_m,
        "wire_centers_m": list(config.wire_centers_m) if config.wire_centers_m is not None else None,
        "source_samples_per_slit": config.source_samples_per_slit,
        "oversampling": config.oversampling,
        "grids": grids,
    }


def _set_path(doc: dict, dotted: str, value) -> None:
    parts = dotted.split(".")
    node = doc
    for part in parts[:-1]:
        child = node.setdefault(part, {})
        if not isinstance(child, dict):
            raise ConfigError(f"cannot override {dotted}: {part} is not an object")
        node = child
    node[parts[-1]] = value


def _apply_overrides(doc: dict, overrides: dict) -> None:
    for key, value in overrides.items():
        if not key:
            raise ConfigError("override key must be non-empty")
        _set_path(doc, key, value)


def _profile_csv(profile) -> str:
    lines = ["position_m,intensity_rel"]
    for y, v in zip(profile.grid.positions, profile.values):
        lines.append(f"{_FLOAT_FMT % y},{_FLOAT_FMT % v}")
    return "\n".join(lines) + "\n"


def _metrics_csv(metrics: dict) -> str:
    lines = ["metric_name,value"]
    for name, value in metrics.items():
        lines.append(f"{name},{_FLOAT_FMT % value}")
    return "\n".join(lines) + "\n"


def _write_outputs(result: ScenarioResult, output_dir: str) -> None:
    outputs = [(f"{key}.csv", lambda p=profile: _profile_csv(p)) for key, profile in result.profiles.items()]
    outputs.append(("metrics.csv", lambda: _metrics_csv(result.metrics)))
    outputs.append(
        ("config_resolved.json", lambda: json.dumps(to_document(result.config), indent=2) + "\n")
    )
    written = []
    try:
        for name, render in outputs:
            path = os.path.join(output_dir, name)
            written.append(path)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(render())
    except BaseException:
        # never leave a half-written result directory behind
        for path in written:
            try:
                os.unlink(path)
            except OSError:
                pass
        raise


def run(manifest: RunManifest) -> int:
    """Execute one scenario run; returns the process exit code."""
    try:
        if manifest.scenario not in SCENARIOS:
            raise ConfigError(
                f"unknown scenario {manifest.scenario!r}, expected one of {sorted(SCENARIOS)}"
            )
        if manifest.config_path is None:
            doc = default_document()
        else:
            try:
                with open(manifest.config_path, "r", encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise ConfigError(f"cannot read config file: {exc}") from exc
            try:
                doc = json.loads(text)
            except json.JSONDecodeError as exc:
                raise ConfigError(f"config is not valid JSON: {exc}") from exc
            if not isinstance(doc, dict):
                raise ConfigError(f"config must be a JSON object, got {type(doc).__name__}")
        _apply_overrides(doc, manifest.overrides)
        config = parse_config(json.dumps(doc))
        if manifest.samples_override is not None:
            n = manifest.samples_override
            if n < 1:
                raise ConfigError(f"--samples-override must be a positive integer, got {n}")
            config = dataclasses.replace(
                config,
                screen_grid=dataclasses.replace(config.screen_grid, n_samples=n),
                image_grid=dataclasses.replace(config.image_grid, n_samples=n),
            )
        try:
            os.makedirs(manifest.output_dir, exist_ok=True)
        except OSError as exc:
            raise ConfigError(f"cannot create output directory: {exc}") from exc
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SimulationError as exc:
        # resolution can fail on physics, not syntax, e.g. a virtual image
        print(f"error: {exc}", file=sys.stderr)
        return 3

    try:
        result = SCENARIOS[manifest.scenario](config)
        _write_outputs(result, manifest.output_dir)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SimulationError, ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


def _parse_set(item: str):
    if "=" not in item:
        raise ConfigError(f"--set expects key=value, got {item!r}")
    key, _, raw = item.partition("=")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw  # bare strings like slit_state=upper_only
    return key, value


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="slitwave",
        description="Run a two-slit wave-optics scenario and write CSV profiles.",
    )
    parser.add_argument("--scenario", required=True, choices=sorted(SCENARIOS))
    parser.add_argument("--config", default=None, help="JSON config file (defaults built in)")
    parser.add_argument("--out", required=True, help="output directory for CSVs")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a config key (dotted paths reach into grids); repeatable",
    )
    parser.add_argument(
        "--samples-override",
        type=int,
        default=None,
        help="replace the screen and image sample counts after resolution",
    )
    args = parser.parse_args(argv)

    try:
        overrides = dict(_parse_set(item) for item in args.overrides)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    manifest = RunManifest(
        scenario=args.scenario,
        config_path=args.config,
        output_dir=args.out,
        overrides=overrides,
        samples_override=args.samples_override,
    )
    return run(manifest)


if __name__ == "__main__":
    sys.exit(main())
