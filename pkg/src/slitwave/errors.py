"""Exception types shared across the package."""


class SimulationError(Exception):
    """Base class for every error this package raises on purpose."""


class GridMismatchError(SimulationError, ValueError):
    """Two objects that must share a transverse grid were built on different grids."""


class GeometryError(SimulationError, ValueError):
    """Propagation geometry is invalid, e.g. a non-positive axial distance."""


class AnalysisError(SimulationError, ValueError):
    """A profile measurement is undefined for the given inputs."""


class NoFiniteImageError(SimulationError, ValueError):
    """Object sits at the focal plane; rays leave parallel and never refocus."""


class VirtualImageError(SimulationError, ValueError):
    """Object sits inside the focal length; the image is virtual and unsupported."""


class ConfigError(SimulationError, ValueError):
    """A configuration document is missing keys or carries invalid values."""
