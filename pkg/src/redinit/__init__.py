"""Groebner bases, generic initial ideals and reduction numbers over exact fields."""

from .field import Field
from .grobner import (GroebnerBasis, buchberger, eliminate, initial_ideal, initial_ideal_weight,
                      normal_form, s_polynomial)
from .linear_map import LinearMap, apply_linear_map
from .monomial_ideals import (HilbertFunction, MonomialIdeal, hilbert_function, is_lex_segment,
                              is_strongly_stable, krull_dimension, lex_segment_ideal,
                              minimal_generator_counts, polarize)
from .orders import BlockOrder, DegRevLex, Lex, Permuted, TermOrder, WeightOrder, parse_order
from .parser import ParseError, format_ideal, load_ideal, parse_ideal
from .poly import Polynomial, Ring

__version__ = "0.1.0"
