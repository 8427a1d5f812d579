"""Dirac's oscillator representation of the 3+2 de Sitter group, built from Sp(4)."""

from .fock import FockOperator, FockSpace
from .lie_matrix import LABELS, GeneratorSet, sp4_generators, structure_constants
from .quantization import dirac_representation, pipeline_representation
from .symplectic_geometry import LinearField, QuadraticForm

__all__ = [
    "LABELS",
    "FockOperator",
    "FockSpace",
    "GeneratorSet",
    "LinearField",
    "QuadraticForm",
    "dirac_representation",
    "pipeline_representation",
    "sp4_generators",
    "structure_constants",
]
