"""Diptychs over finite sets: axiom checks, finite groupoids, functor classes and fractions."""

from .errors import DiptychError, InputError
from .finmap import FiniteMap, FiniteSet
from .functor import GroupoidFunctor, classify_functor
from .groupoid import FinGroupoid, classify
from .morita import Fraction, make_fraction, morita_equivalent

__version__ = "0.1.0"

__all__ = ["DiptychError", "InputError", "FiniteMap", "FiniteSet", "GroupoidFunctor",
           "classify_functor", "FinGroupoid", "classify", "Fraction", "make_fraction",
           "morita_equivalent"]
