import pytest

from arrangeo.arrangement import Hyperplane, WeightedDigraph, build_arrangement, shi
from arrangeo.contraction import (
    WallChoice,
    admissible_walls,
    contract,
    replay_chain,
    restrict_direct,
    verify_restriction_equiv,
)
from arrangeo.digraph import Digraph, epsilon, shi_digraph

import oracles
from helpers import random_pair


def example_one():
    G = Digraph([1, 2, 3, 4], [(2, 1), (3, 1), (4, 1), (4, 2), (4, 3)])
    return WeightedDigraph(G, [1, 0, 0, 1])


class TestContract:
    def test_first_worked_example(self):
        # the printed result reuses label t = 4 for the merged vertex
        out = contract(example_one(), WallChoice(1, 4, 0), u=4)
        assert sorted(out.vertices) == [2, 3, 4]
        assert out.weights == {2: 0, 3: 0, 4: 1}
        assert out.edges == {(2, 4), (4, 2), (3, 4), (4, 3)}

    def test_second_worked_example(self):
        wg = WeightedDigraph(shi_digraph(4), [0] * 4)
        out = contract(wg, WallChoice(1, 3, 1), u=3)
        assert out.weights == {2: 0, 3: 1, 4: 0}
        assert out.edges == {(4, 2), (4, 3)}

    def test_fresh_label_default(self):
        out = contract(example_one(), WallChoice(1, 4, 0))
        assert sorted(out.vertices) == [2, 3, 5]

    def test_plain_vertex_identification(self):
        # w = 0 and equal weights: arrows at s or t all move to u
        G = Digraph([1, 2, 3, 4], [(1, 3), (4, 2), (2, 4)])
        out = contract(WeightedDigraph(G, [2, 2, 0, 0]), WallChoice(1, 2, 0), u=9)
        assert out.n(9) == 2
        assert out.edges == {(9, 3), (4, 9), (9, 4)}

    @pytest.mark.parametrize("w", [-1, 3])
    def test_inadmissible_w(self, w):
        with pytest.raises(ValueError):
            contract(WeightedDigraph(shi_digraph(3), [1, 1, 1]), WallChoice(1, 2, w))

    def test_label_clash(self):
        with pytest.raises(ValueError):
            contract(shi(3, 0), WallChoice(1, 2, 0), u=3)

    def test_matches_definition(self, rng):
        for _ in range(200):
            wg = random_pair(rng, rng.randint(2, 5))
            for h in admissible_walls(wg):
                vs, E, W = oracles.contract_from_definition(
                    wg.vertices, wg.edges, wg.weights, h.s, h.t, h.w, 99)
                out = contract(wg, h, 99)
                assert list(out.vertices) == vs and out.edges == E and out.weights == W


class TestRestrictDirect:
    def test_single_arrow_triple(self):
        # labels (i, s, t) = (1, 2, 3), arrow t -> s
        n = {1: 2, 2: 1, 3: 1}
        wg = WeightedDigraph(Digraph([1, 2, 3], [(3, 2)]), n)
        got = restrict_direct(wg, WallChoice(2, 3, n[3] + 1), u=4)
        want = build_arrangement(WeightedDigraph(Digraph([1, 4]), {1: 2, 4: n[2] + n[3] + 1}))
        assert got.hyperplane_set() == want.hyperplane_set()

    def test_g3_triple(self):
        n = {1: 0, 2: 1, 3: 2}
        wg = WeightedDigraph(Digraph([1, 2, 3], [(1, 3), (3, 2)]), n)
        got = restrict_direct(wg, WallChoice(2, 3, n[3] + 1), u=4)
        want = build_arrangement(WeightedDigraph(Digraph([1, 4], [(1, 4)]), {1: 0, 4: n[2] + n[3] + 1}))
        assert got.hyperplane_set() == want.hyperplane_set()

    def test_inadmissible(self):
        with pytest.raises(ValueError):
            restrict_direct(shi(3, 0), WallChoice(1, 2, 2))


class TestEquivalence:
    def test_examples(self):
        assert verify_restriction_equiv(example_one(), WallChoice(1, 4, 0))
        assert verify_restriction_equiv(WeightedDigraph(shi_digraph(4), [0] * 4), WallChoice(1, 3, 1))

    def test_random(self, rng):
        for _ in range(150):
            wg = random_pair(rng, rng.randint(2, 5))
            assert all(verify_restriction_equiv(wg, h) for h in admissible_walls(wg))

    def test_against_substitution_oracle(self, rng):
        for _ in range(80):
            wg = random_pair(rng, 4)
            walls = oracles.walls_from_definition(wg.vertices, wg.edges, wg.weights)
            for h in admissible_walls(wg):
                coords, restricted = oracles.restrict_walls(wg.vertices, walls, h.s, h.t, h.w)
                # substitution keeps x_t; rename it to the merged label
                ren = {(99 if a == h.t else a, 99 if b == h.t else b, c) for a, b, c in restricted}
                out = contract(wg, h, 99)
                got = oracles.normalise_walls(oracles.walls_from_definition(out.vertices, out.edges, out.weights))
                assert got == oracles.normalise_walls(ren)


class TestMaxIdentities:
    """The bounds a neighbour sees towards ``u`` combine those towards ``s`` and ``t``."""

    def test_identities(self, rng):
        for _ in range(200):
            wg = random_pair(rng, rng.randint(3, 5))
            for h in admissible_walls(wg):
                s, t, w = h.s, h.t, h.w
                out = contract(wg, h, 99)
                n, nh = wg.weights, out.weights
                for i in out.vertices:
                    if i == 99:
                        continue
                    e, eh = wg.eps, out.eps
                    assert max(n[i] - w + e(i, s), n[i] + e(i, t)) == nh[i] + eh(i, 99)
                    assert max(n[s] + w + e(s, i), n[t] + e(t, i)) == nh[99] + eh(99, i)
                    lo1, hi1 = -n[i] + w - e(i, s), n[s] + w + e(s, i)
                    lo2, hi2 = -n[i] - e(i, t), n[t] + e(t, i)
                    union = set(range(lo1, hi1 + 1)) | set(range(lo2, hi2 + 1))
                    assert union == set(range(-nh[i] - eh(i, 99), nh[99] + eh(99, i) + 1))

    def test_top_wall_deletes_an_arrow(self):
        # x_s - x_t = n_t + 1 with (t, s) an arrow: removing it removes the arrow
        wg = WeightedDigraph(Digraph([1, 2, 3], [(3, 2), (1, 3)]), [1, 0, 2])
        A = build_arrangement(wg)
        smaller = A.delete(Hyperplane.make(2, 3, 3))
        assert smaller == build_arrangement(WeightedDigraph(Digraph([1, 2, 3], [(1, 3)]), [1, 0, 2]))
        out = contract(wg, WallChoice(2, 3, 3), 9)
        assert out.n(9) == 0 + 2 + 1
        assert epsilon(out.graph, 1, 9) == 1


def test_replay_chain():
    nodes = replay_chain(shi(4, 0), [WallChoice(1, 2, 0), WallChoice(3, 4, 1)])
    assert [len(n.vertices) for n in nodes] == [4, 3, 2]
