"""A four-vertex digraph whose cone is free although one of its restrictions is not."""

from arrangeo.arrangement import WeightedDigraph, build_arrangement, cone
from arrangeo.charpoly import charpoly_mobius
from arrangeo.contraction import WallChoice, contract
from arrangeo.digraph import Digraph
from arrangeo.freeness import is_free
from arrangeo.hereditary import is_hereditarily_free
from arrangeo.polynomial import factored_form, terao_check


def show(chi):
    exps = terao_check(chi)
    return factored_form(exps) if exps is not None else str(chi)

wg = WeightedDigraph(Digraph([2, 5, 6, 4], [(5, 2), (6, 2), (5, 4)]), [0, 0, 0, 0])
A = cone(build_arrangement(wg))
print(f"{len(A)} hyperplanes, free: {is_free(wg).free}, exponents {list(is_free(wg).exponents)}")
print("chi =", show(charpoly_mobius(A)))

child = contract(wg, WallChoice(5, 2, 0))
print("after contracting along x5 - x2 = 0:", sorted(child.edges), "free:", is_free(child).free)
print("hereditarily free:", is_hereditarily_free(wg).hereditarily_free)
