"""Core number-theory engine for taxicab-forge"""

from src.core.exact import RadicalScalar, sqrt_of_rational
from src.core.families import FamilySpec, SolutionTuple, builtin_families, generate, get_family
from src.core.identities import CubicSeed, FiveCubeSeed, QuadraticFormTuple, certify_identity
from src.core.oracle import find_taxicab, two_cube_representations
from src.core.recurrences import LinearRecurrence2
from src.core.series import Polynomial, RationalFunction

__all__ = [
    "RadicalScalar",
    "sqrt_of_rational",
    "Polynomial",
    "RationalFunction",
    "LinearRecurrence2",
    "CubicSeed",
    "FiveCubeSeed",
    "QuadraticFormTuple",
    "certify_identity",
    "FamilySpec",
    "SolutionTuple",
    "builtin_families",
    "generate",
    "get_family",
    "find_taxicab",
    "two_cube_representations",
]
