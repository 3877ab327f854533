"""Freeness of deformations of the braid arrangement indexed by weighted digraphs."""

__version__ = "0.1.0"

from .digraph import (
    Digraph,
    SignedGraph,
    contains_forbidden,
    find_admissible_order,
    is_signed_eliminable,
    satisfies_a1a2,
    shi_digraph,
    signed_graph,
)
from .arrangement import (
    Arrangement,
    Hyperplane,
    WeightedDigraph,
    build_arrangement,
    catalan,
    cone,
    restrict,
    shi,
)
from .contraction import WallChoice, admissible_walls, contract
from .polynomial import IntPolynomial, terao_check
from .charpoly import (
    charpoly_deletion_restriction,
    charpoly_finite_field,
    charpoly_mobius,
    intersection_poset,
)
from .freeness import FreenessReport, exponents_formula, is_free, ziegler_multiplicity
from .hereditary import HereditaryReport, contraction_closure, is_hereditarily_free

__all__ = [name for name in dir() if not name.startswith("_")]
