"""Contract a weighted digraph along a wall and check the result against the true restriction."""

from arrangeo.arrangement import WeightedDigraph
from arrangeo.contraction import WallChoice, admissible_walls, contract, verify_restriction_equiv
from arrangeo.digraph import Digraph, shi_digraph

G = Digraph([1, 2, 3, 4], [(2, 1), (3, 1), (4, 1), (4, 2), (4, 3)])
wg = WeightedDigraph(G, [1, 0, 0, 1])
h = WallChoice(1, 4, 0)
out = contract(wg, h, u=4)
print("first example:", sorted(out.edges), out.weights)
print("  matches restriction:", verify_restriction_equiv(wg, h))

shi4 = WeightedDigraph(shi_digraph(4), [0] * 4)
h = WallChoice(1, 3, 1)
out = contract(shi4, h, u=3)
print("second example:", sorted(out.edges), out.weights)
print("  matches restriction:", verify_restriction_equiv(shi4, h))

walls = admissible_walls(shi4)
print(f"Shi(4, 0) has {len(walls)} walls; all match:",
      all(verify_restriction_equiv(shi4, w) for w in walls))
