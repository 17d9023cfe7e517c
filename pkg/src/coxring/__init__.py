"""Cox rings of del Pezzo surfaces from concrete point configurations."""
from .fields import QQ, PrimeField, Rationals, parse_field
from .picard import DivisorClass, enumerate_negative_curves, generators, intersection
from .plane import PointConfiguration, generator_forms, validate_general_position
from .relations import RelationSet, full_ideal, relations_for_ruling
from .rulings import Ruling, enumerate_rulings

__version__ = "0.1.0"

__all__ = [
    "QQ", "PrimeField", "Rationals", "parse_field", "DivisorClass", "enumerate_negative_curves",
    "generators", "intersection", "PointConfiguration", "generator_forms",
    "validate_general_position", "RelationSet", "full_ideal", "relations_for_ruling", "Ruling",
    "enumerate_rulings",
]
