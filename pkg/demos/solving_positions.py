"""
Solving Node Kayles positions
=============================

Grundy values of a few small graphs, the winning move, and what the
memo table looks like afterwards.
"""

from nodekayles import MemoTable, complete, nimber, optimal_move, path, spider, star
from nodekayles.nimber import residual

# a path on three vertices: taking the middle vertex clears the board
p3 = path(3)
print("P3 nimber:", nimber(p3), "winning move:", optimal_move(p3))

# on P4 every move leaves something worth 1, so the player to move loses
print("P4 nimber:", nimber(path(4)), "winning move:", optimal_move(path(4)))

# any clique is a single move
print("K7 nimber:", nimber(complete(7)))

# stars alternate with the parity of the leaf count
for leaves in range(1, 7):
    print(f"K_1,{leaves} nimber:", nimber(star(leaves)))

# the memo only ever holds connected positions
g = spider(4)
memo = MemoTable(g)
value = nimber(g, memo)
print(f"\nspider(4): n={g.n}, nimber {value}, {len(memo)} memo entries")
print("largest stored positions:")
for key in sorted(memo.keys(), key=len, reverse=True)[:3]:
    print("  ", sorted(key), "->", memo.values[sum(1 << v for v in key)])

# playing the suggested move really does hand over a zero position
v = optimal_move(g, memo)
print("move", v, "leaves", nimber(g, memo, alive=residual(g, v)))
