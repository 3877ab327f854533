"""Shi arrangements stop being hereditarily free at six vertices; Catalan ones do not."""

from arrangeo.arrangement import catalan, shi
from arrangeo.hereditary import is_hereditarily_free, shi6_counterexample_chain

for ell in range(2, 7):
    rep = is_hereditarily_free(shi(ell, 0))
    print(f"Shi({ell}, 0): hereditarily free={rep.hereditarily_free}, nodes={rep.nodes_visited}")
    if not rep.hereditarily_free:
        print("  failing chain:", rep.counterexample_chain)

for ell in range(2, 6):
    rep = is_hereditarily_free(catalan(ell, 1))
    print(f"Catalan({ell}, 1): hereditarily free={rep.hereditarily_free}, nodes={rep.nodes_visited}")

chain, nodes = shi6_counterexample_chain()
print("explicit Shi(6, 0) chain:")
for wall, node in zip(chain, nodes[1:]):
    print(f"  {wall} -> vertices {sorted(node.vertices)}, edges {sorted(node.edges)}")
