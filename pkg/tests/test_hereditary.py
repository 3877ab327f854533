import itertools

import pytest

from arrangeo.arrangement import WeightedDigraph, catalan, shi
from arrangeo.contraction import admissible_walls, contract, replay_chain
from arrangeo.digraph import Digraph, find_admissible_order, shi_digraph
from arrangeo.freeness import is_free
from arrangeo.hereditary import (
    HereditarySearch,
    canonical_form,
    contraction_closure,
    is_hereditarily_free,
    is_isomorphic,
    shi6_counterexample_chain,
    shi_flattening_check,
)
from arrangeo.tables import three_vertex_digraph

import oracles
from helpers import random_pair


def permuted(wg, rng):
    labels = list(wg.vertices)
    target = [v + 10 for v in labels]
    rng.shuffle(target)
    return wg.relabel(dict(zip(labels, target)))


class TestCanonicalForm:
    def test_relabel_invariant(self, rng):
        for _ in range(200):
            wg = random_pair(rng, rng.randint(2, 5), 1)
            assert canonical_form(wg)[0] == canonical_form(permuted(wg, rng))[0]

    def test_agrees_with_brute_isomorphism(self, rng):
        pairs = [random_pair(rng, 4, 1, 0.5) for _ in range(60)]
        for a, b in itertools.combinations(pairs, 2):
            brute = oracles.isomorphic_brute(a.vertices, a.edges, a.weights, b.vertices, b.edges, b.weights)
            assert is_isomorphic(a, b) == brute

    def test_key_encodes_returned_order(self, rng):
        for _ in range(50):
            wg = random_pair(rng, 5, 1, 0.5)
            key, order = canonical_form(wg)
            E, w = wg.edges, wg.weights
            assert sorted(order) == sorted(wg.vertices)
            assert key == (5, tuple(w[v] for v in order),
                           tuple((a, b) in E for a in order for b in order if a != b))


class TestHereditary:
    @pytest.mark.parametrize("ell", [2, 3, 4, 5])
    def test_shi_small(self, ell):
        assert is_hereditarily_free(shi(ell, 0)).hereditarily_free

    @pytest.mark.parametrize("m", [0, 1])
    def test_shi_six_fails(self, m):
        rep = is_hereditarily_free(shi(6, m))
        assert not rep.hereditarily_free
        assert len(rep.counterexample_chain) == 3
        final = replay_chain(shi(6, m), rep.counterexample_chain)[-1]
        assert is_isomorphic(final, rep.failing_node)
        assert not is_free(final).free

    @pytest.mark.parametrize("ell,m", [(3, 2), (4, 1), (5, 2)])
    def test_catalan(self, ell, m):
        assert is_hereditarily_free(catalan(ell, m)).hereditarily_free

    def test_non_free_root(self):
        rep = is_hereditarily_free(WeightedDigraph(three_vertex_digraph("G3"), [0, 0, 0]))
        assert not rep.hereditarily_free and rep.counterexample_chain == ()

    def test_relabel_invariance(self, rng):
        for _ in range(30):
            wg = random_pair(rng, 4, 1)
            assert (is_hereditarily_free(wg).hereditarily_free
                    == is_hereditarily_free(permuted(wg, rng)).hereditarily_free)

    def test_against_exhaustive_recursion(self, rng):
        # plain recursion without memo or canonical forms
        def slow(wg):
            if len(wg.vertices) <= 2:
                return True
            if oracles.some_admissible_order(wg.vertices, wg.edges) is None:
                return False
            return all(slow(contract(wg, h)) for h in admissible_walls(wg))

        for _ in range(25):
            wg = random_pair(rng, 4, 1)
            assert is_hereditarily_free(wg).hereditarily_free == slow(wg)

    def test_bounded_flag(self):
        rep = is_hereditarily_free(shi(5, 0), max_depth=1)
        assert rep.bounded and rep.hereditarily_free

    def test_memo_reuse(self):
        search = HereditarySearch()
        assert is_hereditarily_free(shi(4, 0), search=search).hereditarily_free
        before = len(search.memo)
        is_hereditarily_free(shi(3, 0), search=search)
        assert len(search.memo) == before


class TestClosure:
    def test_two_vertices(self):
        nodes = contraction_closure(shi(2, 0))
        assert all(len(n.node.vertices) <= 2 for n in nodes)
        assert len([n for n in nodes if len(n.node.vertices) == 2]) == 1

    def test_shi_three_contains_second_worked_example_shape(self):
        nodes = contraction_closure(shi(3, 0))
        target = WeightedDigraph(Digraph([2, 3], [(3, 2)]), [0, 1])
        assert any(is_isomorphic(n.node, target) for n in nodes)

    def test_shi_six_reaches_g3(self):
        nodes = contraction_closure(shi(6, 0), depth=3)
        assert any(len(n.node.vertices) == 3 and find_admissible_order(n.node.graph) is None for n in nodes)

    def test_provenance_replays(self):
        for nd in contraction_closure(shi(4, 0)):
            assert is_isomorphic(replay_chain(shi(4, 0), nd.provenance)[-1], nd.canonical)


class TestCounterexampleChain:
    def test_zero_weights(self):
        chain, nodes = shi6_counterexample_chain()
        final = nodes[-1]
        assert sorted(final.vertices) == [7, 8, 9]
        # arrows 6 -> 2 and 2 -> 4 in merged labels (8 -> 9, 9 -> 7)
        assert final.edges == {(8, 9), (9, 7)}
        # weights of the merged 1-4, 2-5, 3-6 vertices
        assert (final.n(7), final.n(9), final.n(8)) == (1, 0, 1)
        assert not is_free(final).free
        # G3 labels: 1 is the middle of the path, 2 its source, 3 its sink
        assert is_isomorphic(final, WeightedDigraph(three_vertex_digraph("G3"), [0, 1, 1]))

    def test_middle_node(self):
        _, nodes = shi6_counterexample_chain()
        g2 = nodes[2]
        assert sorted(g2.vertices) == [2, 5, 7, 8]
        # 4 -> 7 and 6 -> 8 in merged labels
        assert g2.edges == {(5, 2), (8, 2), (5, 7)}
        assert is_free(g2).free and is_free(nodes[1]).free

    def test_other_branch(self):
        chain, nodes = shi6_counterexample_chain((0, 1, 0, 0, 0, 0))
        assert chain[2].w == 1
        assert set(nodes[-1].weights.values()) == {1}
        assert not is_free(nodes[-1]).free

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            shi6_counterexample_chain((0,) * 5)


class TestFlattening:
    @pytest.mark.parametrize("ell,m", [(7, 0), (8, 1), (7, 2)])
    def test_families(self, ell, m):
        assert shi_flattening_check(ell, m)

    def test_small(self):
        with pytest.raises(ValueError):
            shi_flattening_check(6)

    def test_shi_digraph_flattens(self):
        assert shi_flattening_check(8, weights=[0, 1, 0, 2, 0, 1, 0, 3])
        assert shi_digraph(6) == shi(6, 0).graph
