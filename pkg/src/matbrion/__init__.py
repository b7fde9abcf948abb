"""Exact matroid-twisted Brion sums over the braid fan."""
from .brion import q_matroid, rational_sum_eval, reciprocity_pair, recursion_terms
from .euler import axiom_check, chi_star, hstar, serre_check
from .laurent import LaurentPoly, NotDivisible, ParseError, parse, to_text
from .matroid import Matroid, NotAMatroid
from .plaur import PiecewiseLaurent, family_slide, family_split, from_delta, omega
from .polytope import SetFunction, enumerate_lattice_points

__all__ = [
    "LaurentPoly", "NotDivisible", "ParseError", "parse", "to_text",
    "Matroid", "NotAMatroid", "SetFunction", "enumerate_lattice_points",
    "PiecewiseLaurent", "from_delta", "omega", "family_slide", "family_split",
    "q_matroid", "rational_sum_eval", "reciprocity_pair", "recursion_terms",
    "chi_star", "axiom_check", "hstar", "serre_check",
]
