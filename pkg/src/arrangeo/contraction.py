"""Contraction of a weighted digraph along a wall, and the matching restriction."""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import Arrangement, Hyperplane, WeightedDigraph, build_arrangement, restrict
from .digraph import Digraph


@dataclass(frozen=True, order=True)
class WallChoice:
    """The wall ``x_s - x_t = w`` of ``A(n, G)``, written with ``w >= 0``."""

    s: int
    t: int
    w: int

    def hyperplane(self) -> Hyperplane:
        return Hyperplane.make(self.s, self.t, self.w)

    def __str__(self):
        return f"x{self.s} - x{self.t} = {self.w}"

    def to_list(self) -> list:
        return [self.s, self.t, self.w]


def check_wall(wg: WeightedDigraph, h: WallChoice) -> None:
    s, t, w = h.s, h.t, h.w
    if s == t or not (wg.graph.has_vertex(s) and wg.graph.has_vertex(t)):
        raise ValueError(f"wall {h} does not name two distinct vertices")
    if not 0 <= w <= wg.n(t) + wg.eps(t, s):
        raise ValueError(f"wall {h}: w must lie in [0, {wg.n(t) + wg.eps(t, s)}]")


def admissible_walls(wg: WeightedDigraph) -> list:
    """Every wall once, ordered by ``(s, t, w)``; ``w = 0`` walls use ``s < t``.

    Contraction along ``x_s - x_t = 0`` does not depend on the orientation.
    """
    out = []
    vs = sorted(wg.vertices)
    for s in vs:
        for t in vs:
            if s == t:
                continue
            lo = 0 if s < t else 1
            out.extend(WallChoice(s, t, w) for w in range(lo, wg.n(t) + wg.eps(t, s) + 1))
    return out


def fresh_label(wg: WeightedDigraph) -> int:
    return max(wg.vertices) + 1


def contract(wg: WeightedDigraph, h: WallChoice, u: int | None = None) -> WeightedDigraph:
    """The pair ``(n^H, G^H)`` for ``H = {x_s - x_t = w}``.

    ``s`` and ``t`` merge into ``u`` (by default one more than the largest
    label) carrying weight ``max(n_s + w, n_t)``.  Arrows into ``u`` come
    from arrows into ``t``, or into either vertex when ``w = 0``; arrows out
    of ``u`` follow whichever of ``n_s + w`` and ``n_t`` is larger, both on
    a tie.
    """
    check_wall(wg, h)
    s, t, w = h.s, h.t, h.w
    if u is None:
        u = fresh_label(wg)
    elif u in wg.vertices and u not in (s, t):
        raise ValueError(f"label {u} is already used")
    E = wg.edges
    ns, nt = wg.n(s), wg.n(t)
    rest = [v for v in wg.vertices if v not in (s, t)]
    edges = [(a, b) for a, b in E if a in rest and b in rest]
    for i in rest:
        if (i, t) in E or (w == 0 and (i, s) in E):
            edges.append((i, u))
        if ns + w > nt:
            out = (s, i) in E
        elif ns + w < nt:
            out = (t, i) in E
        else:
            out = (s, i) in E or (t, i) in E
        if out:
            edges.append((u, i))
    weights = {v: wg.n(v) for v in rest}
    weights[u] = max(ns + w, nt)
    return WeightedDigraph(Digraph(rest + [u], edges), weights)


def restrict_direct(wg: WeightedDigraph, h: WallChoice, u: int | None = None) -> Arrangement:
    """``A(n, G)^H`` by substitution, in coordinates where ``y_u = x_t``."""
    check_wall(wg, h)
    if u is None:
        u = fresh_label(wg)
    hc = h.hyperplane()
    A = restrict(build_arrangement(wg), hc)
    # restrict() keeps the second coordinate of the canonical form; that is t
    # unless w == 0, where x_s = x_t on H anyway
    kept = hc.j
    mapping = {v: v for v in A.coordinates}
    mapping[kept] = u
    return A.relabel(mapping)


def verify_restriction_equiv(wg: WeightedDigraph, h: WallChoice) -> bool:
    u = fresh_label(wg)
    direct = restrict_direct(wg, h, u)
    merged = contract(wg, h, u)
    # a single vertex left means the empty arrangement on one coordinate
    via = build_arrangement(merged) if len(merged.vertices) > 1 else Arrangement(merged.vertices)
    return (direct.hyperplane_set() == via.hyperplane_set()
            and sorted(direct.coordinates) == sorted(via.coordinates))


def replay_chain(wg: WeightedDigraph, chain) -> list:
    """Apply walls one after another; returns every intermediate pair, root first."""
    nodes = [wg]
    for h in chain:
        nodes.append(contract(nodes[-1], h))
    return nodes
