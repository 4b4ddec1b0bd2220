"""
Structural parameters
=====================

Vertex cover number, modular-width and neighborhood diversity side by side,
plus a modular decomposition tree printed as an outline.
"""

from nodekayles import (
    blowup,
    complete_multipartite,
    gnp,
    minimum_vertex_cover,
    modular_decomposition,
    modular_width,
    nd_partition,
    path,
    spider,
)

graphs = {
    "P4": path(4),
    "K_3,3,3": complete_multipartite([3, 3, 3]),
    "spider(3)": spider(3),
    "gnp(10, 0.5, 1)": gnp(10, 0.5, 1),
    "P4 blown up": blowup(path(4), [2, 3, 1, 2], ["independent", "clique", "clique", "independent"]),
}

print(f"{'graph':18} {'n':>3} {'tau':>4} {'mw':>4} {'nd':>4}")
for name, g in graphs.items():
    tau = len(minimum_vertex_cover(g))
    print(f"{name:18} {g.n:3d} {tau:4d} {modular_width(g):4d} {len(nd_partition(g)):4d}")


def outline(node, depth=0):
    pad = "  " * depth
    if node.kind == "leaf":
        print(f"{pad}{node.vertex}")
        return
    print(f"{pad}{node.kind} {sorted(node.span)}")
    for child in node.children:
        outline(child, depth + 1)


# a prime node whose children are modules of the blowup
print("\nmodular decomposition of the P4 blowup:")
outline(modular_decomposition(graphs["P4 blown up"]))

print("\ntwin classes:")
for c in nd_partition(graphs["P4 blown up"]):
    print(" ", c.kind, sorted(c.members))
