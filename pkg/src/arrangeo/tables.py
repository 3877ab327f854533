"""The sixteen digraphs on three vertices, and the markdown reports built from them."""

from __future__ import annotations

from .arrangement import WeightedDigraph, build_arrangement, catalan, cone, shi
from .charpoly import charpoly_mobius
from .digraph import Digraph, find_admissible_order
from .freeness import exponents_formula
from .hereditary import is_hereditarily_free
from .polynomial import terao_check

# Vertex 1 is the top node of each drawing, 2 the lower left, 3 the lower right.
THREE_VERTEX_EDGES = {
    "G1": [],
    "G2": [(2, 1)],
    "G3": [(2, 1), (1, 3)],
    "G4": [(2, 1), (3, 1)],
    "G5": [(2, 1), (2, 3)],
    "G6": [(3, 2), (2, 3)],
    "G7": [(2, 1), (3, 2), (2, 3)],
    "G8": [(1, 2), (3, 2), (2, 3)],
    "G9": [(2, 1), (1, 3), (2, 3)],
    "G10": [(2, 1), (1, 3), (3, 2)],
    "G11": [(1, 2), (1, 3), (3, 2), (2, 3)],
    "G12": [(2, 1), (3, 1), (3, 2), (2, 3)],
    "G13": [(2, 1), (1, 3), (3, 2), (2, 3)],
    "G14": [(2, 1), (1, 2), (3, 2), (2, 3)],
    "G15": [(2, 1), (1, 2), (3, 2), (2, 3), (1, 3)],
    "G16": [(2, 1), (1, 2), (3, 2), (2, 3), (1, 3), (3, 1)],
}


def three_vertex_digraph(name: str) -> Digraph:
    return Digraph((1, 2, 3), THREE_VERTEX_EDGES[name])


def symbolic_exponents(G: Digraph):
    """Exponents as ``{0, 1, |n|+a, ...}``, read off at ``n = 0``; None if not free."""
    order = find_admissible_order(G)
    if order is None:
        return None
    exps = exponents_formula(WeightedDigraph(G, [0] * len(G)), order)
    exps.remove(0)
    exps.remove(1)
    return "{" + ", ".join(["0", "1"] + [f"|n|+{e}" for e in exps]) + "}"


def _cell(text: str) -> str:
    return text.replace("|", "\\|")


def _free_at_zero(G: Digraph) -> bool:
    """Verdict at ``n = 0``; a "No" is backed by a charpoly that does not split."""
    if find_admissible_order(G) is not None:
        return True
    chi = charpoly_mobius(cone(build_arrangement(WeightedDigraph(G, [0] * len(G)))))
    if terao_check(chi) is not None:
        raise AssertionError(f"{G}: charpoly splits although no admissible order exists")
    return False


def tables_markdown() -> str:
    names = list(THREE_VERTEX_EDGES)
    lines = ["## Digraphs on three vertices", ""]
    for start in range(0, 16, 4):
        group = names[start:start + 4]
        lines.append("| | " + " | ".join(group) + " |")
        lines.append("|---|" + "---|" * len(group))
        gs = [three_vertex_digraph(g) for g in group]
        rows = {
            "edges": [" ".join(f"{a}->{b}" for a, b in sorted(G.edges)) or "none" for G in gs],
            "|E|": [str(len(G.edges)) for G in gs],
            "(A1), (A2)": ["Yes" if find_admissible_order(G) else "No" for G in gs],
            "Free": ["Yes" if _free_at_zero(G) else "No" for G in gs],
            "exponents": [_cell(symbolic_exponents(G) or "N/A") for G in gs],
        }
        for label, cells in rows.items():
            lines.append(f"| {_cell(label)} | " + " | ".join(cells) + " |")
        lines.append("")
    lines.append("Characteristic polynomials of the non-free cones at n = 0:")
    lines.append("")
    for name in ("G3", "G10", "G13"):
        wg = WeightedDigraph(three_vertex_digraph(name), [0, 0, 0])
        lines.append(f"- {name}: {charpoly_mobius(cone(build_arrangement(wg)))}")
    lines.append("")
    return "\n".join(lines)


def dichotomy_markdown(max_m: int = 2) -> str:
    lines = ["## Hereditary freeness of the Shi and Catalan cones", "",
             "| family | l | m | hereditarily free | canonical nodes | witness chain |",
             "|---|---|---|---|---|---|"]
    for m in range(max_m + 1):
        for ell in range(2, 7):
            rep = is_hereditarily_free(shi(ell, m))
            chain = "; ".join(str(h) for h in rep.counterexample_chain or ()) or "-"
            lines.append(f"| Shi | {ell} | {m} | {'yes' if rep.hereditarily_free else 'no'} "
                         f"| {rep.nodes_visited} | {chain} |")
    for ell in range(2, 6):
        for m in range(max_m + 1):
            rep = is_hereditarily_free(catalan(ell, m))
            lines.append(f"| Catalan | {ell} | {m} | {'yes' if rep.hereditarily_free else 'no'} "
                         f"| {rep.nodes_visited} | - |")
    lines.append("")
    return "\n".join(lines)
