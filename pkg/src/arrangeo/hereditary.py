"""Hereditary freeness by memoised search over iterated contractions.

Restricting ``cA(n, G)`` to a lifted wall gives the cone over the
contraction, and restricting to ``z = 0`` gives the braid arrangement, which
is hereditarily free.  Every flat is reached by a chain of single walls, so
``cA(n, G)`` is hereditarily free exactly when every pair reachable by
contractions passes the order criterion.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .arrangement import WeightedDigraph
from .contraction import WallChoice, admissible_walls, contract
from .digraph import find_admissible_order, shi_digraph


# --- canonical forms --------------------------------------------------------

def _vertex_classes(wg: WeightedDigraph) -> dict:
    E = wg.edges
    w = wg.weights
    base = {}
    for v in wg.vertices:
        out = sum((v, x) in E for x in wg.vertices)
        inn = sum((x, v) in E for x in wg.vertices)
        both = sum((v, x) in E and (x, v) in E for x in wg.vertices)
        base[v] = (w[v], out, inn, both)
    # one round of neighbourhood refinement
    return {
        v: (base[v],
            tuple(sorted(base[x] for x in wg.vertices if (v, x) in E)),
            tuple(sorted(base[x] for x in wg.vertices if (x, v) in E)))
        for v in wg.vertices
    }


def canonical_form(wg: WeightedDigraph) -> tuple:
    """``(key, order)``: an isomorphism-invariant key and the vertex order realising it.

    Vertices are sorted by an invariant; ties are broken by taking the
    minimum encoding over all orderings inside each tie class.
    """
    cls = _vertex_classes(wg)
    groups = {}
    for v in sorted(wg.vertices, key=lambda v: (cls[v], v)):
        groups.setdefault(cls[v], []).append(v)
    blocks = [groups[k] for k in sorted(groups)]
    E = wg.edges
    w = wg.weights
    best = None
    for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
        order = [v for part in combo for v in part]
        enc = (tuple(w[v] for v in order),
               tuple((a, b) in E for a in order for b in order if a != b))
        if best is None or enc < best[0]:
            best = (enc, order)
    return (len(wg.vertices),) + best[0], tuple(best[1])


def canonical_digraph(wg: WeightedDigraph) -> WeightedDigraph:
    """Relabel onto ``1..k`` following the canonical order."""
    _, order = canonical_form(wg)
    return wg.relabel({v: p + 1 for p, v in enumerate(order)})


def is_isomorphic(a: WeightedDigraph, b: WeightedDigraph) -> bool:
    return canonical_form(a)[0] == canonical_form(b)[0]


# --- hereditary search ------------------------------------------------------

@dataclass(frozen=True)
class ClosureNode:
    canonical: WeightedDigraph
    provenance: tuple
    node: WeightedDigraph


@dataclass(frozen=True)
class HereditaryReport:
    hereditarily_free: bool
    counterexample_chain: Optional[tuple]
    nodes_visited: int
    failing_node: Optional[WeightedDigraph] = None
    bounded: bool = False

    def to_dict(self) -> dict:
        return {
            "hereditarily_free": self.hereditarily_free,
            "nodes_visited": self.nodes_visited,
            "counterexample_chain": (
                [h.to_list() for h in self.counterexample_chain]
                if self.counterexample_chain is not None else None
            ),
            "failing_node": self.failing_node.to_dict() if self.failing_node else None,
            "bounded": self.bounded,
        }


class HereditarySearch:
    """Memo of verdicts keyed on canonical forms; reusable across roots."""

    def __init__(self, max_weight: Optional[int] = None, max_depth: Optional[int] = None):
        self.max_weight = max_weight
        self.max_depth = max_depth
        self.memo: dict = {}
        self.truncated = False

    def _locally_free(self, wg: WeightedDigraph) -> bool:
        return len(wg.vertices) <= 2 or find_admissible_order(wg.graph) is not None

    def _children(self, wg: WeightedDigraph):
        for h in admissible_walls(wg):
            child = contract(wg, h)
            if self.max_weight is not None and max(child.weights.values()) > self.max_weight:
                self.truncated = True
                continue
            yield h, child

    def verdict(self, wg: WeightedDigraph, depth: int = 0) -> bool:
        key = canonical_form(wg)[0]
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if not self._locally_free(wg):
            ok = False
        elif len(wg.vertices) <= 2:
            ok = True
        elif self.max_depth is not None and depth >= self.max_depth:
            self.truncated = True
            return True  # not memoised: a shallower visit may go further
        else:
            ok = all(self.verdict(child, depth + 1) for _, child in self._children(wg))
        self.memo[key] = ok
        return ok

    def failing_chain(self, wg: WeightedDigraph) -> tuple:
        """First failing chain (walls taken in ``(s, t, w)`` order) below a failing node."""
        chain = []
        node = wg
        while self._locally_free(node):
            for h, child in self._children(node):
                if not self.verdict(child, len(chain) + 1):
                    chain.append(h)
                    node = child
                    break
            else:
                raise RuntimeError("failing node has no failing child")
        return tuple(chain), node


def is_hereditarily_free(wg: WeightedDigraph, max_weight: Optional[int] = None,
                         max_depth: Optional[int] = None,
                         search: Optional[HereditarySearch] = None) -> HereditaryReport:
    if len(wg.vertices) < 2:
        raise ValueError("need at least two vertices")
    search = search or HereditarySearch(max_weight, max_depth)
    ok = search.verdict(wg)
    if ok:
        return HereditaryReport(True, None, len(search.memo), bounded=search.truncated)
    chain, node = search.failing_chain(wg)
    return HereditaryReport(False, chain, len(search.memo), node, bounded=search.truncated)


def contraction_closure(wg: WeightedDigraph, depth: Optional[int] = None) -> list:
    """Breadth-first closure under contraction, one node per isomorphism class."""
    seen = {canonical_form(wg)[0]}
    out = [ClosureNode(canonical_digraph(wg), (), wg)]
    queue = deque([out[0]])
    while queue:
        cur = queue.popleft()
        if depth is not None and len(cur.provenance) >= depth:
            continue
        for h in admissible_walls(cur.node):
            child = contract(cur.node, h)
            key = canonical_form(child)[0]
            if key in seen:
                continue
            seen.add(key)
            item = ClosureNode(canonical_digraph(child), cur.provenance + (h,), child)
            out.append(item)
            queue.append(item)
    return out


# --- the l = 6 Shi counterexample --------------------------------------------

def _six_weights(n) -> dict:
    if isinstance(n, dict):
        weights = {int(k): v for k, v in n.items()}
    else:
        weights = dict(zip(range(1, 7), n))
        if len(n) != 6:
            weights = {}
    if sorted(weights) != list(range(1, 7)):
        raise ValueError("need exactly six weights, for vertices 1..6")
    return weights


def shi6_counterexample_chain(n: Sequence[int] = (0,) * 6) -> tuple:
    """The three walls taking the 6-vertex Shi pair to a copy of G3.

    Fresh labels are 7, 8, 9 in turn: 7 stands for the merged 1 and 4, 8
    for 3 and 6, 9 for 2 and 5.  Returns ``(chain, nodes)`` with the root and
    the three contracted pairs in ``nodes``.
    """
    w = _six_weights(n)
    root = WeightedDigraph(shi_digraph(6), w)
    h1 = WallChoice(1, 4, w[4] + 1)
    g1 = contract(root, h1)
    h2 = WallChoice(3, 6, w[6] + 1)
    g2 = contract(g1, h2)
    h3 = WallChoice(5, 2, 0 if w[5] >= w[2] else w[2])
    g3 = contract(g2, h3)
    return (h1, h2, h3), (root, g1, g2, g3)


def shi_flattening_check(ell: int, m: int = 0, weights: Optional[Sequence[int]] = None) -> bool:
    """Merging ``x_6 = x_7 = ... = x_ell`` by zero walls leaves the 6-vertex Shi pair.

    The merged vertex carries ``max(n_6, ..., n_ell)``.
    """
    if ell <= 6:
        raise ValueError("the flattening needs more than six coordinates")
    n = list(weights) if weights is not None else [m] * ell
    if len(n) != ell:
        raise ValueError(f"need {ell} weights")
    node = WeightedDigraph(shi_digraph(ell), n)
    cur = 6
    for j in range(7, ell + 1):
        h = WallChoice(cur, j, 0)
        node = contract(node, h)
        cur = max(node.vertices)
    target = WeightedDigraph(shi_digraph(6), n[:5] + [max(n[5:])])
    return is_isomorphic(node, target)
