"""Saturated drawings of bounded geometric thickness.

Exact rational geometry, thickness-k validation and saturation, convex
constructions (nice matchings, zigzags), the two-color edge-extension
machinery, and an exhaustive oracle for convex position.
"""
from .drawing import Drawing, validate
from .geom import Point, Segment, point
from .saturation import BLUE, RED, Inconclusive, SaturationMode, SearchBudget

__version__ = "0.1.0"

__all__ = ["BLUE", "RED", "Drawing", "Inconclusive", "Point", "SaturationMode",
           "SearchBudget", "Segment", "point", "validate"]
