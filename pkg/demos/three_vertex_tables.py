"""Classify all sixteen three-vertex digraphs and print their markdown tables."""

from arrangeo.arrangement import WeightedDigraph
from arrangeo.freeness import is_free
from arrangeo.tables import tables_markdown, three_vertex_digraph

print(tables_markdown())

# Freeness does not depend on the weights; the exponents shift with |n|.
for n in ([0, 0, 0], [1, 0, 2]):
    wg = WeightedDigraph(three_vertex_digraph("G16"), n)
    print(f"G16 with n={n}: exponents {list(is_free(wg).exponents)}")
