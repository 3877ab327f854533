"""Decide freeness from an admissible vertex order and read off exponents."""

from arrangeo.arrangement import WeightedDigraph, build_arrangement, cone
from arrangeo.charpoly import charpoly_mobius
from arrangeo.digraph import empty_digraph, find_admissible_order
from arrangeo.freeness import b_values, is_free
from arrangeo.polynomial import factored_form, terao_check
from arrangeo.tables import three_vertex_digraph


def show(chi):
    exps = terao_check(chi)
    return factored_form(exps) if exps is not None else str(chi)

for name in ("G5", "G3"):
    wg = WeightedDigraph(three_vertex_digraph(name), [2, 0, 1])
    rep = is_free(wg)
    chi = charpoly_mobius(cone(build_arrangement(wg)))
    print(f"{name}: free={rep.free} exponents={rep.exponents} chi={show(chi)}")
    print(f"  roots split over the integers: {terao_check(chi)}")

G = three_vertex_digraph("G16")
order = find_admissible_order(G)
print("G16 order", order, "b values", b_values(G, order))

wg = WeightedDigraph(empty_digraph(4), [1, 2, 0, 1])
print("edgeless, |n|=4:", list(is_free(wg).exponents))
