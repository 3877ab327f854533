"""Random instance generators shared by the test modules."""

from __future__ import annotations

import itertools
import random

from arrangeo import Digraph, WeightedDigraph, build_arrangement


def random_digraph(rng: random.Random, ell: int, p: float = 0.4, start: int = 1) -> Digraph:
    vs = list(range(start, start + ell))
    return Digraph(vs, [(a, b) for a, b in itertools.permutations(vs, 2) if rng.random() < p])


def random_pair(rng: random.Random, ell: int, max_weight: int = 2, p: float = 0.4) -> WeightedDigraph:
    G = random_digraph(rng, ell, p)
    return WeightedDigraph(G, [rng.randint(0, max_weight) for _ in range(ell)])


def all_digraphs(ell: int, start: int = 1):
    vs = list(range(start, start + ell))
    arcs = list(itertools.permutations(vs, 2))
    for mask in range(1 << len(arcs)):
        yield Digraph(vs, [a for k, a in enumerate(arcs) if mask >> k & 1])


def walls_of(wg: WeightedDigraph) -> set:
    return {(h.i, h.j, h.c) for h in build_arrangement(wg).hyperplanes}
