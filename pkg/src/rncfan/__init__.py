"""Contracted monomial ideals of K[x,y] and the Groebner fan of the rational normal curve."""

from .xy_ideals import ASequence, deviation, h_polynomial, hilbert_h1, is_gr_cm, minplus_product, normalize
from .tpoly import MonomialIdeal, PureBinomial, ideal_components
from .groebner import TermOrder, buchberger, cm_reduced_gb
from .fan import big_cone, cone_system, cones_containing, depth_census, traverse_fan
from .hilbsym import compare_invariants, symbolic_h, symbolic_invariants

__version__ = "0.1.0"

__all__ = [
    "ASequence", "deviation", "h_polynomial", "hilbert_h1", "is_gr_cm", "minplus_product", "normalize",
    "MonomialIdeal", "PureBinomial", "ideal_components",
    "TermOrder", "buchberger", "cm_reduced_gb",
    "big_cone", "cone_system", "cones_containing", "depth_census", "traverse_fan",
    "compare_invariants", "symbolic_h", "symbolic_invariants",
]
