"""The arrangements A(n, G), their cones, and exact restriction to a wall.

Every hyperplane handled here has the form ``x_i - x_j = c`` with integer
``c`` (or ``x_i - x_j = c z`` in a cone).  Hyperplanes are stored with
``c >= 0``, and with ``i < j`` when ``c == 0``, so the same wall always
gets the same key.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .digraph import Digraph, epsilon, shi_digraph, empty_digraph


@dataclass(frozen=True, order=True)
class Hyperplane:
    """The wall ``x_i - x_j = c``; inside a cone it reads ``x_i - x_j = c z``."""

    i: int
    j: int
    c: int

    @classmethod
    def make(cls, i: int, j: int, c: int) -> "Hyperplane":
        if i == j:
            raise ValueError("a hyperplane needs two distinct coordinates")
        if c < 0 or (c == 0 and i > j):
            i, j, c = j, i, -c
        return cls(i, j, c)

    def canonical(self) -> "Hyperplane":
        return Hyperplane.make(self.i, self.j, self.c)

    @property
    def pair(self) -> frozenset:
        return frozenset((self.i, self.j))

    def offset(self, i: int, j: int) -> int:
        """The constant ``c'`` with this wall equal to ``x_i - x_j = c'``."""
        if (i, j) == (self.i, self.j):
            return self.c
        if (j, i) == (self.i, self.j):
            return -self.c
        raise ValueError(f"{self} does not involve the pair ({i},{j})")

    def equation(self, coned: bool = False) -> str:
        rhs = f"{self.c} z" if coned else str(self.c)
        return f"x{self.i} - x{self.j} = {rhs}"

    def to_dict(self) -> dict:
        return {"i": self.i, "j": self.j, "c": self.c}


class _ZWall:
    """The extra wall ``z = 0`` of a cone."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Z0"

    def equation(self, coned: bool = True) -> str:
        return "z = 0"

    def to_dict(self) -> dict:
        return {"z0": True}


Z0 = _ZWall()


@dataclass(frozen=True)
class Arrangement:
    """A finite set of difference hyperplanes over ``coordinates``.

    With ``coned=True`` the arrangement lives one dimension up: it contains
    ``z = 0`` and each stored hyperplane is read as ``x_i - x_j = c z``.
    """

    coordinates: tuple
    hyperplanes: tuple
    coned: bool = False

    def __init__(self, coordinates: Iterable[int], hyperplanes: Iterable[Hyperplane] = (),
                 coned: bool = False):
        coords = tuple(coordinates)
        cset = set(coords)
        hs = set()
        for h in hyperplanes:
            h = h.canonical()
            if h.i not in cset or h.j not in cset:
                raise ValueError(f"{h} uses a coordinate outside {coords}")
            hs.add(h)
        object.__setattr__(self, "coordinates", coords)
        object.__setattr__(self, "hyperplanes", tuple(sorted(hs)))
        object.__setattr__(self, "coned", bool(coned))

    def __len__(self) -> int:
        return len(self.hyperplanes) + self.coned

    def __iter__(self):
        if self.coned:
            yield Z0
        yield from self.hyperplanes

    def __contains__(self, h) -> bool:
        if h is Z0:
            return self.coned
        return h.canonical() in set(self.hyperplanes)

    @property
    def dimension(self) -> int:
        return len(self.coordinates) + self.coned

    @property
    def is_central(self) -> bool:
        return self.coned or all(h.c == 0 for h in self.hyperplanes)

    def max_constant(self) -> int:
        return max((h.c for h in self.hyperplanes), default=0)

    def hyperplane_set(self) -> frozenset:
        return frozenset(self.hyperplanes)

    def pair_constants(self) -> dict:
        """``{(i, j): {c, ...}}`` over ordered coordinate pairs ``i < j`` (by position)."""
        pos = {v: p for p, v in enumerate(self.coordinates)}
        out: dict = {}
        for h in self.hyperplanes:
            i, j = (h.i, h.j) if pos[h.i] < pos[h.j] else (h.j, h.i)
            out.setdefault((i, j), set()).add(h.offset(i, j))
        return out

    def delete(self, h: Hyperplane) -> "Arrangement":
        h = h.canonical()
        if h not in set(self.hyperplanes):
            raise ValueError(f"{h} is not in the arrangement")
        return Arrangement(self.coordinates, [g for g in self.hyperplanes if g != h], self.coned)

    def relabel(self, mapping: Mapping[int, int]) -> "Arrangement":
        return Arrangement([mapping[v] for v in self.coordinates],
                           [Hyperplane.make(mapping[h.i], mapping[h.j], h.c) for h in self.hyperplanes],
                           self.coned)

    def equations(self) -> list:
        return [h.equation(self.coned) for h in self]

    def to_dict(self) -> dict:
        return {"coordinates": list(self.coordinates), "coned": self.coned,
                "hyperplanes": [h.to_dict() for h in self]}

    @classmethod
    def from_dict(cls, data: dict) -> "Arrangement":
        hs, coned = [], bool(data.get("coned", False))
        for item in data["hyperplanes"]:
            if item.get("z0"):
                coned = True
            else:
                hs.append(Hyperplane.make(int(item["i"]), int(item["j"]), int(item["c"])))
        return cls(data["coordinates"], hs, coned)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def restrict(A: Arrangement, wall) -> Arrangement:
    """Restriction ``A^H`` computed by substitution.

    For ``H: x_s - x_t = w`` the coordinate ``x_s`` is eliminated through
    ``x_s = x_t + w`` (times ``z`` in a cone) and ``x_t`` is kept.  Walls
    that contain ``H`` or miss it disappear, images are deduplicated.
    Restricting a cone to ``z = 0`` gives the central arrangement of the
    distinct directions ``x_i - x_j = 0`` on the same coordinates.
    """
    if wall is Z0:
        if not A.coned:
            raise ValueError("only a cone contains z = 0")
        return Arrangement(A.coordinates, [Hyperplane.make(h.i, h.j, 0) for h in A.hyperplanes])
    wall = wall.canonical()
    if wall not in set(A.hyperplanes):
        raise ValueError(f"{wall} is not in the arrangement")
    s, t, w = wall.i, wall.j, wall.c
    out = []
    for h in A.hyperplanes:
        if h.pair == wall.pair:
            continue  # equal to H or parallel to it
        a, b, c = h.i, h.j, h.c
        # x_s = x_t + w
        if a == s:
            a, c = t, c - w
        elif b == s:
            b, c = t, c + w
        out.append(Hyperplane.make(a, b, c))
    return Arrangement([v for v in A.coordinates if v != s], out, A.coned)


# --- weighted digraphs ------------------------------------------------------

@dataclass(frozen=True)
class WeightedDigraph:
    """The pair ``(n, G)``: a digraph with a nonnegative integer on each vertex."""

    graph: Digraph
    weight_items: tuple

    def __init__(self, graph: Digraph, weights):
        if not isinstance(weights, Mapping):
            weights = dict(zip(graph.vertices, weights))
        weights = {int(k): v for k, v in weights.items()}
        if set(weights) != set(graph.vertices):
            raise ValueError(f"weights {sorted(weights)} do not match vertices {sorted(graph.vertices)}")
        for v, n in weights.items():
            if not isinstance(n, int) or isinstance(n, bool) or n < 0:
                raise ValueError(f"weight of vertex {v} must be a nonnegative integer, got {n!r}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "weight_items", tuple((v, weights[v]) for v in graph.vertices))

    @property
    def weights(self) -> dict:
        return dict(self.weight_items)

    @property
    def vertices(self) -> tuple:
        return self.graph.vertices

    @property
    def edges(self) -> frozenset:
        return self.graph.edges

    def n(self, v: int) -> int:
        return self.weights[v]

    @property
    def total(self) -> int:
        """``|n|``."""
        return sum(n for _, n in self.weight_items)

    def eps(self, i: int, j: int) -> int:
        return epsilon(self.graph, i, j)

    def relabel(self, mapping: Mapping[int, int]) -> "WeightedDigraph":
        w = self.weights
        return WeightedDigraph(self.graph.relabel(mapping), {mapping[v]: w[v] for v in self.vertices})

    def with_graph(self, graph: Digraph) -> "WeightedDigraph":
        return WeightedDigraph(graph, self.weights)

    def to_dict(self) -> dict:
        d = self.graph.to_dict()
        d["weights"] = {str(v): n for v, n in self.weight_items}
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "WeightedDigraph":
        g = Digraph.from_dict(data)
        raw = data.get("weights")
        if raw is None:
            weights = {v: 0 for v in g.vertices}
        elif isinstance(raw, Mapping):
            weights = {int(k): v for k, v in raw.items()}
        else:
            weights = dict(zip(g.vertices, raw))
        return cls(g, weights)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "WeightedDigraph":
        return cls.from_dict(json.loads(text))


def catalan(ell: int, m: int) -> WeightedDigraph:
    _check_family(ell, m)
    return WeightedDigraph(empty_digraph(ell), [m] * ell)


def shi(ell: int, m: int) -> WeightedDigraph:
    _check_family(ell, m)
    return WeightedDigraph(shi_digraph(ell), [m] * ell)


def _check_family(ell, m):
    if ell < 2:
        raise ValueError(f"need at least two coordinates, got {ell}")
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")


def pair_count(wg: WeightedDigraph, i: int, j: int) -> int:
    """Number of walls between ``x_i`` and ``x_j``."""
    return wg.n(i) + wg.n(j) + wg.eps(i, j) + wg.eps(j, i) + 1


def count_hyperplanes(wg: WeightedDigraph) -> int:
    return sum(pair_count(wg, i, j) for i, j in itertools.combinations(wg.vertices, 2))


def build_arrangement(wg: WeightedDigraph) -> Arrangement:
    """All walls ``x_i - x_j = c`` with ``-n_i - eps(i,j) <= c <= n_j + eps(j,i)``."""
    if len(wg.vertices) < 2:
        raise ValueError("A(n, G) needs at least two vertices")
    hs = []
    for i, j in itertools.combinations(wg.vertices, 2):
        lo, hi = -wg.n(i) - wg.eps(i, j), wg.n(j) + wg.eps(j, i)
        hs.extend(Hyperplane.make(i, j, c) for c in range(lo, hi + 1))
    return Arrangement(wg.vertices, hs)


def cone(A: Arrangement) -> Arrangement:
    if A.coned:
        raise ValueError("the arrangement is already a cone")
    return Arrangement(A.coordinates, A.hyperplanes, coned=True)
