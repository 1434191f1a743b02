"""Exact invariants of dimension-one almost complete intersections and
singular projective hypersurfaces: Hilbert series, saturation, socle-type
numerators, Lefschetz-style multiplication profiles."""

from .fields import GF65521, QQ, PrimeField, RationalField, field_from_name
from .orders import DEGREVLEX, BlockElim, DegRevLex, order_from_name
from .polynomials import LinearChange, ParseError, Polynomial, Ring, monomial_basis
from .groebner import GroebnerBasis, reduced_groebner
from .ideals import (
    Ideal,
    exact_divide,
    intersect,
    is_regular_sequence,
    krull_dimension_of_quotient,
    minimal_generator_degrees,
    quotient,
    saturate_irrelevant,
)
from .hilbert import HilbertSeries, ci_milnor_series, hilbert_series, quotient_numerator

__version__ = "0.1.0"
