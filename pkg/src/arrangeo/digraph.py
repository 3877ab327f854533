"""Digraphs, the (A1)/(A2) order search, signed graphs and forbidden triples."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional


@dataclass(frozen=True)
class Digraph:
    """A loopless digraph on small integer labels.

    ``vertices`` keeps the declared order; ``edges`` holds ordered pairs
    ``(i, j)`` meaning an arrow from ``i`` to ``j``.
    """

    vertices: tuple
    edges: frozenset

    def __init__(self, vertices: Iterable[int], edges: Iterable = ()):
        vs = tuple(vertices)
        es = frozenset((int(a), int(b)) for a, b in edges)
        if len(set(vs)) != len(vs):
            raise ValueError(f"duplicate vertex labels in {vs}")
        vset = set(vs)
        for a, b in es:
            if a == b:
                raise ValueError(f"loop ({a},{a}) is not allowed")
            if a not in vset or b not in vset:
                raise ValueError(f"edge ({a},{b}) has an endpoint outside {sorted(vset)}")
        object.__setattr__(self, "vertices", vs)
        object.__setattr__(self, "edges", es)

    def __len__(self) -> int:
        return len(self.vertices)

    @cached_property
    def _vset(self) -> frozenset:
        return frozenset(self.vertices)

    def has_vertex(self, v) -> bool:
        return v in self._vset

    def has_edge(self, i, j) -> bool:
        return (i, j) in self.edges

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def relabel(self, mapping: dict) -> "Digraph":
        return Digraph([mapping[v] for v in self.vertices],
                       [(mapping[a], mapping[b]) for a, b in self.edges])

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices),
                "edges": [list(e) for e in self.sorted_edges()]}

    @classmethod
    def from_dict(cls, data: dict) -> "Digraph":
        return cls(data["vertices"], [tuple(e) for e in data.get("edges", [])])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Digraph":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class SignedGraph:
    vertices: tuple
    plus_edges: frozenset
    minus_edges: frozenset

    def __post_init__(self):
        if self.plus_edges & self.minus_edges:
            raise ValueError("a pair cannot be both positive and negative")
        for e in self.plus_edges | self.minus_edges:
            if len(e) != 2:
                raise ValueError(f"bad signed edge {set(e)}")

    def sign(self, i, j) -> int:
        """+1, -1 or 0 for the pair {i, j}."""
        e = frozenset((i, j))
        if e in self.plus_edges:
            return 1
        if e in self.minus_edges:
            return -1
        return 0


def epsilon(G: Digraph, i, j) -> int:
    if i == j:
        raise ValueError("epsilon needs two distinct vertices")
    if not (G.has_vertex(i) and G.has_vertex(j)):
        raise ValueError(f"unknown vertex in ({i},{j})")
    return 1 if (i, j) in G.edges else 0


def induced_subgraph(G: Digraph, S: Iterable[int]) -> Digraph:
    keep = [v for v in G.vertices if v in set(S)]
    missing = set(S) - set(keep)
    if missing:
        raise ValueError(f"vertices {sorted(missing)} are not in the digraph")
    kset = set(keep)
    return Digraph(keep, [(a, b) for a, b in G.edges if a in kset and b in kset])


def empty_digraph(n: int, start: int = 1) -> Digraph:
    return Digraph(range(start, start + n))


def complete_digraph(n: int, start: int = 1) -> Digraph:
    vs = range(start, start + n)
    return Digraph(vs, [(a, b) for a in vs for b in vs if a != b])


def shi_digraph(n: int, start: int = 1) -> Digraph:
    """All arrows ``(j, i)`` with ``i < j``."""
    vs = range(start, start + n)
    return Digraph(vs, [(j, i) for i in vs for j in vs if i < j])


# --- (A1)/(A2) --------------------------------------------------------------

def _check_order(G: Digraph, order) -> tuple:
    order = tuple(order)
    if sorted(order) != sorted(G.vertices) or len(set(order)) != len(order):
        raise ValueError(f"order {order} is not a permutation of {G.vertices}")
    return order


def _top_ok(E: frozenset, k, below) -> bool:
    """Can ``k`` sit above every vertex of ``below``?

    Both conditions only look at triples whose maximum is ``k``, so this is
    independent of how ``below`` is ordered internally.
    """
    for i in below:
        ik = (i, k) in E
        for j in below:
            if i == j:
                continue
            if (i, j) in E and not (ik or (k, j) in E):
                return False
            if ik and (k, j) in E and (i, j) not in E:
                return False
    return True


def satisfies_a1a2(G: Digraph, order) -> bool:
    """Check (A1) and (A2) for ``order`` (listed from minimum to maximum)."""
    order = _check_order(G, order)
    E = G.edges
    return all(_top_ok(E, order[p], order[:p]) for p in range(len(order)))


def _elimination_search(vertices, top_ok) -> Optional[tuple]:
    """Backtracking over the choice of the current maximum vertex.

    ``top_ok(k, rest)`` says whether ``k`` may be the maximum of
    ``rest | {k}``.  Candidates are tried in increasing label order and dead
    subsets are memoised, so the first order found is deterministic.
    """
    dead = set()

    def rec(remaining: frozenset):
        if len(remaining) <= 2:
            # every condition needs a vertex strictly above two others
            return tuple(sorted(remaining))
        if remaining in dead:
            return None
        for k in sorted(remaining):
            rest = remaining - {k}
            if top_ok(k, rest):
                sub = rec(rest)
                if sub is not None:
                    return sub + (k,)
        dead.add(remaining)
        return None

    return rec(frozenset(vertices))


def find_admissible_order(G: Digraph) -> Optional[tuple]:
    """First total order (minimum first) under which (A1) and (A2) hold, else None."""
    E = G.edges
    return _elimination_search(G.vertices, lambda k, rest: _top_ok(E, k, rest))


def admissible_orders_bruteforce(G: Digraph) -> list:
    """Every admissible order, by trying all permutations; meant for small oracles."""
    return [p for p in itertools.permutations(sorted(G.vertices)) if satisfies_a1a2(G, p)]


# --- signed graph -----------------------------------------------------------

def signed_graph(G: Digraph) -> SignedGraph:
    plus, minus = set(), set()
    for i, j in itertools.combinations(G.vertices, 2):
        m = ((i, j) in G.edges) + ((j, i) in G.edges) - 1
        if m == 1:
            plus.add(frozenset((i, j)))
        elif m == -1:
            minus.add(frozenset((i, j)))
    return SignedGraph(tuple(G.vertices), frozenset(plus), frozenset(minus))


def _signed_top_ok(S: SignedGraph, k, below) -> bool:
    for i in below:
        ski = S.sign(k, i)
        if ski == 0:
            continue
        for j in below:
            if i == j:
                continue
            sij = S.sign(i, j)
            skj = S.sign(k, j)
            # {k,i} in E_mu, {i,j} in E_nu with mu != nu  =>  {k,j} in E_nu
            if sij == -ski and skj != sij:
                return False
            # {k,i}, {k,j} in E_mu  =>  {i,j} in E_mu
            if skj == ski and sij != ski:
                return False
    return True


def satisfies_signed_elimination(S: SignedGraph, order) -> bool:
    order = tuple(order)
    if sorted(order) != sorted(S.vertices):
        raise ValueError(f"order {order} is not a permutation of {S.vertices}")
    return all(_signed_top_ok(S, order[p], order[:p]) for p in range(len(order)))


def is_signed_eliminable(S: SignedGraph, brute_force_limit: int = 7) -> Optional[tuple]:
    """A witnessing order for signed eliminability, or None.

    Backtracking decides the question; for at most ``brute_force_limit``
    vertices a negative answer is double-checked over all permutations.
    """
    found = _elimination_search(S.vertices, lambda k, rest: _signed_top_ok(S, k, rest))
    if found is None and len(S.vertices) <= brute_force_limit:
        for p in itertools.permutations(sorted(S.vertices)):
            if satisfies_signed_elimination(S, p):
                return p
    return found


# --- forbidden triples ------------------------------------------------------

# Written on (i, s, t) = (0, 1, 2).
FORBIDDEN = {
    "G3": frozenset({(0, 2), (2, 1)}),
    "G10": frozenset({(0, 2), (2, 1), (1, 0)}),
    "G13": frozenset({(0, 2), (2, 1), (1, 0), (0, 1)}),
}


def _iso_to_pattern(G: Digraph, triple, pattern: frozenset) -> bool:
    E = G.edges
    for perm in itertools.permutations(triple):
        pos = {v: p for p, v in enumerate(perm)}
        got = frozenset((pos[a], pos[b]) for a in triple for b in triple
                        if a != b and (a, b) in E)
        if got == pattern:
            return True
    return False


def contains_forbidden(G: Digraph) -> Optional[tuple]:
    """First induced triple isomorphic to G3, G10 or G13 as ``(name, triple)``."""
    for triple in itertools.combinations(sorted(G.vertices), 3):
        nedges = sum((a, b) in G.edges for a in triple for b in triple if a != b)
        for name, pattern in FORBIDDEN.items():
            if nedges == len(pattern) and _iso_to_pattern(G, triple, pattern):
                return name, triple
    return None


def forbidden_digraph(name: str, labels=(1, 2, 3)) -> Digraph:
    """G3, G10 or G13 on ``labels`` read as (i, s, t)."""
    pattern = FORBIDDEN[name]
    return Digraph(labels, [(labels[a], labels[b]) for a, b in pattern])


def order_positions(order) -> dict:
    """``ord(i)``: 1-based rank of each vertex."""
    return {v: p + 1 for p, v in enumerate(order)}
