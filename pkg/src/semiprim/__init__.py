"""Semiprimitivity of algebras given by noncommutative Groebner bases."""

from .freealg import Alphabet, Field, ModInt, MonomialOrder, Poly, compare, divides, leading_monomial, reduce
from .groebner import complete, homogenize, homogenized_system, is_groebner, leading_homogeneous
from .monomial import ObstructionSet, build_graph, is_cyclic_word, normal_words, oracle_cyclic, radical_report
from .textio import ParseError, format_presentation, parse_presentation
from .transfer import Presentation, analyze, check_lm_stability, verify_prop34

__version__ = "0.1.0"
