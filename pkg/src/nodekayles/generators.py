"""Deterministic graph families.

Random families draw from ``random.Random(seed)`` (MT19937 seeded from the
integer seed), consuming values in the order documented on each function, so
a given ``(family, params, seed)`` always yields the same graph.
"""

from __future__ import annotations

import heapq
import itertools
import random
from typing import Iterator, Sequence

from .errors import FamilySpecError
from .graph import Graph

CLIQUE = "clique"
INDEPENDENT = "independent"


def _positive(name, value, allow_zero=False):
    if not isinstance(value, int) or value < (0 if allow_zero else 1):
        bound = "non-negative" if allow_zero else "positive"
        raise FamilySpecError(f"{name} must be a {bound} integer, got {value!r}")


def empty(n: int) -> Graph:
    _positive("n", n, allow_zero=True)
    return Graph(n)


def path(n: int) -> Graph:
    _positive("n", n, allow_zero=True)
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise FamilySpecError(f"cycle needs n >= 3, got {n!r}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    _positive("leaves", leaves, allow_zero=True)
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    _positive("n", n, allow_zero=True)
    return Graph(n, itertools.combinations(range(n), 2))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    return blowup(complete(len(sizes)), sizes, [INDEPENDENT] * len(sizes))


def spider(k: int) -> Graph:
    """Root 0 joined to the first vertex of ``k`` disjoint three-vertex legs.

    Leg ``i`` (0-based) is ``3i+1 - 3i+2 - 3i+3`` and the root is adjacent to
    ``3i+1``.  ``spider(1)`` is the path on four vertices.
    """
    _positive("k", k)
    edges = []
    for i in range(k):
        a, b, c = 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(0, a), (a, b), (b, c)]
    return Graph(3 * k + 1, edges)


def blowup(h: Graph, sizes: Sequence[int], kinds: Sequence[str]) -> Graph:
    """Replace vertex ``i`` of ``h`` by a clique or independent set of ``sizes[i]`` vertices.

    Substituted sets are joined completely when the original vertices were
    adjacent.  New ids are assigned block by block in the order of ``h``.
    """
    if len(sizes) != h.n or len(kinds) != h.n:
        raise FamilySpecError(f"need {h.n} sizes and kinds, got {len(sizes)} and {len(kinds)}")
    blocks = []
    start = 0
    for size, kind in zip(sizes, kinds):
        _positive("block size", size)
        if kind not in (CLIQUE, INDEPENDENT):
            raise FamilySpecError(f"block kind must be 'clique' or 'independent', got {kind!r}")
        blocks.append(range(start, start + size))
        start += size
    edges = []
    for i, (block, kind) in enumerate(zip(blocks, kinds)):
        if kind == CLIQUE:
            edges += itertools.combinations(block, 2)
        for j in range(i + 1, h.n):
            if h.has_edge(i, j):
                edges += itertools.product(block, blocks[j])
    return Graph(start, edges)


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p).

    One ``rng.random()`` draw per pair ``(u, v)``, ``u < v``, in lexicographic
    order; the edge is present when the draw is below ``p``.
    """
    _positive("n", n, allow_zero=True)
    if not 0.0 <= p <= 1.0:
        raise FamilySpecError(f"p must lie in [0, 1], got {p!r}")
    rng = random.Random(seed)
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree decoded from a random Pruefer sequence.

    The sequence is ``n - 2`` draws of ``rng.randrange(n)``.
    """
    _positive("n", n)
    if n == 1:
        return Graph(1)
    rng = random.Random(seed)
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices; bit ``k`` of the counter is the k-th pair."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[k] for k in range(len(pairs)) if code >> k & 1])


FAMILIES = {
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "star": star,
    "complete": complete,
    "complete_multipartite": complete_multipartite,
    "spider": spider,
    "gnp": gnp,
    "random_tree": random_tree,
    "blowup": blowup,
}


def generate(family: str, *params, **kwargs) -> Graph:
    """Dispatch to a generator by name, e.g. ``generate("gnp", 12, 0.5, seed=7)``."""
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise FamilySpecError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    try:
        return fn(*params, **kwargs)
    except TypeError as exc:
        raise FamilySpecError(f"bad parameters for {family}: {exc}") from None


def parse_family(text: str) -> Graph:
    """Build a graph from a compact spec such as ``spider:3``, ``gnp:12:0.5:7``,
    ``complete_multipartite:3,3,3`` or ``random_tree:15:4``.
    """
    name, *fields = text.strip().split(":")
    try:
        if name == "complete_multipartite":
            (sizes,) = fields
            return complete_multipartite([int(s) for s in sizes.split(",")])
        if name == "gnp":
            n, p, seed = fields
            return gnp(int(n), float(p), int(seed))
        if name == "random_tree":
            n, seed = fields
            return random_tree(int(n), int(seed))
        if name in ("blowup",):
            raise FamilySpecError("blowup needs a base graph; use the library call")
        return generate(name, *(int(f) for f in fields))
    except ValueError as exc:
        if isinstance(exc, FamilySpecError):
            raise
        raise FamilySpecError(f"cannot parse family spec {text!r}: {exc}") from None
