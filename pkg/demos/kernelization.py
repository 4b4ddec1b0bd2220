"""
Kernelization
=============

Twin classes shrink without changing who wins.  Cliques go down to one
vertex, independent classes keep their parity.
"""

from nodekayles import complete_multipartite, disjoint_union, empty, complete, kernelize, nimber, star

for sizes in ([3, 3, 3], [5, 5, 5], [1, 5], [2, 4], [4, 4, 1]):
    g = complete_multipartite(sizes)
    h, trace = kernelize(g)
    print(f"K{sizes}: {g.n} -> {h.n} vertices, nimber {nimber(g)} -> {nimber(h)}, kept {list(trace.kept)}")

# why parity matters: removing one leaf of K_1,3 changes the value
print("\nK_1,3 nimber", nimber(star(3)), "but K_1,2 nimber", nimber(star(2)))

# one pass is not the end of the story
g = disjoint_union(complete(2), empty(2))
once, _ = kernelize(g)
fixed, trace = kernelize(g, until_fixpoint=True)
print(f"\nK2 + 2K1: one pass gives {once.n} vertices, the fixpoint {fixed.n}")
for step in trace.steps:
    print("  ", step.kind, sorted(step.members), "keeps", sorted(step.survivors))
