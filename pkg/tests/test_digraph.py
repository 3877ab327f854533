import itertools

import pytest

from arrangeo.digraph import (
    Digraph,
    admissible_orders_bruteforce,
    complete_digraph,
    contains_forbidden,
    empty_digraph,
    epsilon,
    find_admissible_order,
    forbidden_digraph,
    induced_subgraph,
    is_signed_eliminable,
    satisfies_a1a2,
    satisfies_signed_elimination,
    shi_digraph,
    signed_graph,
)
from arrangeo.tables import three_vertex_digraph

import oracles
from helpers import all_digraphs, random_digraph


class TestDigraphType:
    def test_rejects_loops(self):
        with pytest.raises(ValueError):
            Digraph([1, 2], [(1, 1)])

    def test_rejects_unknown_endpoint(self):
        with pytest.raises(ValueError):
            Digraph([1, 2], [(1, 3)])

    def test_rejects_duplicate_labels(self):
        with pytest.raises(ValueError):
            Digraph([1, 1, 2])

    def test_json_round_trip(self):
        G = Digraph([3, 1, 2], [(1, 2), (3, 1)])
        assert Digraph.from_json(G.to_json()) == G

    def test_relabel_is_bijective(self):
        G = shi_digraph(3)
        H = G.relabel({1: 10, 2: 20, 3: 30})
        assert H.edges == {(20, 10), (30, 10), (30, 20)}


class TestEpsilon:
    def test_values(self):
        G = Digraph([1, 2], [(1, 2)])
        assert epsilon(G, 1, 2) == 1
        assert epsilon(G, 2, 1) == 0

    def test_edgeless(self):
        G = empty_digraph(3)
        assert all(epsilon(G, i, j) == 0 for i, j in itertools.permutations(G.vertices, 2))

    @pytest.mark.parametrize("pair", [(1, 1), (1, 5)])
    def test_errors(self, pair):
        with pytest.raises(ValueError):
            epsilon(Digraph([1, 2], [(1, 2)]), *pair)


class TestInducedSubgraph:
    def test_shi_restricts_to_shi(self):
        assert induced_subgraph(shi_digraph(4), {1, 2, 3}) == shi_digraph(3)

    def test_identity(self):
        G = Digraph([1, 2, 3], [(1, 2), (3, 2)])
        assert induced_subgraph(G, G.vertices) == G

    def test_drops_edges(self):
        G = Digraph([1, 2, 3, 4], [(2, 1), (3, 1), (4, 1), (4, 2), (4, 3)])
        assert induced_subgraph(G, {2, 3}).edges == frozenset()

    def test_unknown_vertex(self):
        with pytest.raises(ValueError):
            induced_subgraph(shi_digraph(3), {1, 7})


class TestA1A2:
    def test_single_arrow_with_i_s_t(self):
        # labels i, s, t = 1, 2, 3 with the arrow t -> s
        assert satisfies_a1a2(Digraph([1, 2, 3], [(3, 2)]), (1, 2, 3))

    def test_edgeless_every_order(self):
        G = empty_digraph(4)
        assert all(satisfies_a1a2(G, p) for p in itertools.permutations(G.vertices))

    def test_g3_no_order(self):
        # i -> t -> s
        G = Digraph([1, 2, 3], [(1, 3), (3, 2)])
        assert not any(satisfies_a1a2(G, p) for p in itertools.permutations(G.vertices))

    def test_wrong_vertex_set(self):
        with pytest.raises(ValueError):
            satisfies_a1a2(empty_digraph(3), (1, 2))

    def test_complete_any_order(self):
        G = complete_digraph(4)
        assert all(satisfies_a1a2(G, p) for p in itertools.permutations(G.vertices))

    @pytest.mark.parametrize("name,present", [("G10", False), ("G14", True), ("G13", False)])
    def test_tables(self, name, present):
        assert (find_admissible_order(three_vertex_digraph(name)) is not None) == present

    def test_matches_definition_on_all_three_vertex_orders(self):
        for G in all_digraphs(3):
            for p in itertools.permutations(G.vertices):
                assert satisfies_a1a2(G, p) == oracles.a1a2_holds(G.vertices, G.edges, p)

    def test_search_agrees_with_brute_force_on_four_vertices(self):
        for G in all_digraphs(4):
            found = find_admissible_order(G)
            brute = oracles.some_admissible_order(G.vertices, G.edges)
            assert (found is None) == (brute is None)
            if found is not None:
                assert oracles.a1a2_holds(G.vertices, G.edges, found)

    def test_search_is_deterministic(self, rng):
        G = random_digraph(rng, 6, 0.3)
        assert find_admissible_order(G) == find_admissible_order(G)

    def test_bruteforce_lists_every_order(self):
        G = Digraph([1, 2, 3], [(3, 2)])
        got = admissible_orders_bruteforce(G)
        want = [p for p in itertools.permutations((1, 2, 3)) if oracles.a1a2_holds(G.vertices, G.edges, p)]
        assert got == want

    def test_shi_natural_order(self):
        assert satisfies_a1a2(shi_digraph(6), tuple(range(1, 7)))


class TestSignedGraph:
    def test_round_trip_pair_is_plus(self):
        S = signed_graph(Digraph([1, 2], [(1, 2), (2, 1)]))
        assert S.plus_edges == {frozenset((1, 2))} and not S.minus_edges

    def test_edgeless_all_minus(self):
        S = signed_graph(empty_digraph(3))
        assert len(S.minus_edges) == 3 and not S.plus_edges

    def test_single_arrow_unsigned(self):
        S = signed_graph(Digraph([1, 2], [(1, 2)]))
        assert S.sign(1, 2) == 0

    def test_all_one_sign_eliminable(self):
        assert is_signed_eliminable(signed_graph(empty_digraph(4))) is not None
        assert is_signed_eliminable(signed_graph(complete_digraph(4))) is not None

    def test_witness_is_valid(self, rng):
        for _ in range(200):
            S = signed_graph(random_digraph(rng, 5, 0.5))
            order = is_signed_eliminable(S)
            if order is not None:
                assert satisfies_signed_elimination(S, order)

    def test_matches_brute_force(self):
        for G in all_digraphs(3):
            got = is_signed_eliminable(signed_graph(G), brute_force_limit=0) is not None
            assert got == oracles.signed_eliminable_brute(G.vertices, G.edges)


class TestForbidden:
    @pytest.mark.parametrize("name", ["G3", "G10", "G13"])
    def test_self_containment(self, name):
        G = forbidden_digraph(name)
        assert contains_forbidden(G) == (name, (1, 2, 3))

    def test_patterns_match_tables(self):
        for name in ("G3", "G10", "G13"):
            assert contains_forbidden(three_vertex_digraph(name))[0] == name

    def test_shi_has_none(self):
        assert contains_forbidden(shi_digraph(6)) is None

    def test_final_contraction_digraph(self):
        assert contains_forbidden(Digraph([2, 4, 6], [(6, 2), (2, 4)])) == ("G3", (2, 4, 6))

    def test_matches_pattern_oracle(self, rng):
        targets = {"G3": frozenset({(0, 2), (2, 1)}),
                   "G10": frozenset({(0, 2), (2, 1), (1, 0)}),
                   "G13": frozenset({(0, 2), (2, 1), (1, 0), (0, 1)})}
        for _ in range(300):
            G = random_digraph(rng, 5, 0.45)
            hit = any(pat in targets.values() for _, pat in oracles.induced_patterns(G.vertices, G.edges))
            assert (contains_forbidden(G) is not None) == hit

    def test_forbidden_triples_are_exactly_the_non_admissible_triples(self):
        bad = [G for G in all_digraphs(3) if find_admissible_order(G) is None]
        assert all(contains_forbidden(G) is not None for G in bad)
        # up to isomorphism: 2 labelled G10 cycles, 6 each of G3 and G13
        assert len(bad) == 14
