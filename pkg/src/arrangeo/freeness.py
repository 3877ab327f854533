"""Freeness of cA(n, G) from the order criterion, exponents and multiplicities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .arrangement import WeightedDigraph, build_arrangement, cone, restrict, Z0
from .digraph import (
    Digraph,
    SignedGraph,
    _check_order,
    contains_forbidden,
    find_admissible_order,
    order_positions,
    satisfies_a1a2,
)
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class FreenessReport:
    free: bool
    witness_order: Optional[tuple] = None
    exponents: Optional[tuple] = None
    forbidden_witness: Optional[tuple] = None
    notes: tuple = field(default=())

    def to_dict(self) -> dict:
        return {
            "free": self.free,
            "witness_order": list(self.witness_order) if self.witness_order else None,
            "exponents": list(self.exponents) if self.exponents is not None else None,
            "forbidden_witness": (
                {"pattern": self.forbidden_witness[0], "vertices": list(self.forbidden_witness[1])}
                if self.forbidden_witness else None
            ),
            "notes": list(self.notes),
        }


def is_free(wg: WeightedDigraph) -> FreenessReport:
    if len(wg.vertices) < 2:
        raise ValueError("freeness is only defined here for at least two vertices")
    order = find_admissible_order(wg.graph)
    if order is not None:
        return FreenessReport(True, order, tuple(exponents_formula(wg, order)))
    witness = contains_forbidden(wg.graph)
    notes = () if witness else ("no forbidden triple; the signed graph is not signed eliminable",)
    return FreenessReport(False, forbidden_witness=witness, notes=notes)


def _require_admissible(G: Digraph, order) -> tuple:
    order = tuple(order)
    if not satisfies_a1a2(G, order):
        raise ValueError(f"order {order} violates (A1)/(A2)")
    return order


def b_values(G: Digraph, order, check: bool = True) -> dict:
    """``b_i``: arrows between ``i`` and earlier vertices, both directions counted.

    The exponent formula only uses admissible orders, so by default any
    other order is rejected; ``check=False`` accepts every permutation.
    """
    order = _require_admissible(G, order) if check else _check_order(G, order)
    return _b(G, order)


def _b(G: Digraph, order) -> dict:
    E = G.edges
    return {v: sum(((v, j) in E) + ((j, v) in E) for j in order[:p])
            for p, v in enumerate(order) if p > 0}


def exponents_formula(wg: WeightedDigraph, order) -> list:
    order = _require_admissible(wg.graph, order)
    ell, total = len(order), wg.total
    ords = order_positions(order)
    b = _b(wg.graph, order)
    return sorted([0, 1] + [total + ell - ords[v] + 1 + b[v] for v in order[1:]])


def formula_charpoly(wg: WeightedDigraph, order) -> IntPolynomial:
    """Product formula for the un-coned ``A(n, G)``: ``t`` times ``t - e`` over the top exponents."""
    exps = exponents_formula(wg, order)
    exps.remove(1)  # the cone factor t - 1
    return IntPolynomial.from_roots(exps)


def ziegler_multiplicity(wg: WeightedDigraph) -> dict:
    """Multiplicity of each ``x_i = x_j`` on the restriction of the cone to ``z = 0``.

    Counted directly: every lifted wall meets ``z = 0`` in the direction of
    its pair.
    """
    cA = cone(build_arrangement(wg))
    counts = {frozenset(p): 0 for p in itertools.combinations(wg.vertices, 2)}
    for h in cA.hyperplanes:
        counts[h.pair] += 1
    directions = restrict(cA, Z0)
    assert {h.pair for h in directions.hyperplanes} == {p for p, c in counts.items() if c}
    return counts


def d_values(S: SignedGraph, order) -> dict:
    order = tuple(order)
    if sorted(order) != sorted(S.vertices):
        raise ValueError(f"order {order} is not a permutation of {S.vertices}")
    return {v: sum(S.sign(j, v) for j in order[:p]) for p, v in enumerate(order) if p > 0}
