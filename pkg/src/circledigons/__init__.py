"""Digons in arrangements of pairwise intersecting circles: detection, census and structural checks."""

from .arrangement import (
    CircleFamily,
    DigonKind,
    DigonRecord,
    ValidationError,
    build_arrangement,
    detect_digons_pairwise,
    digon_census,
    enumerate_digon_faces,
    validate_family,
)
from .generators import GeneratorParams, random_family, tight_family, unit_family
from .geom import Circle, Point
from .pipeline import analyze

__version__ = "0.1.0"

__all__ = [
    "Circle",
    "CircleFamily",
    "DigonKind",
    "DigonRecord",
    "GeneratorParams",
    "Point",
    "ValidationError",
    "analyze",
    "build_arrangement",
    "detect_digons_pairwise",
    "digon_census",
    "enumerate_digon_faces",
    "random_family",
    "tight_family",
    "unit_family",
    "validate_family",
]
