"""Exact triangle-geometry engine: centers, conics, cubics, verification."""

from .kernel import (
    GeometryError,
    HomLine,
    HomPoint,
    Metric,
    RefTriangle,
)

__version__ = "0.1.0"

__all__ = [
    "GeometryError",
    "HomLine",
    "HomPoint",
    "Metric",
    "RefTriangle",
    "__version__",
]
