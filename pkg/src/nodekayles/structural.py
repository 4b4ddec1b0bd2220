"""Vertex cover number, modular decomposition / modular-width, and
neighborhood diversity.

All routines are the straightforward polynomial (or, for vertex cover,
branching) versions; graphs here are small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CapExceededError, ContractError
from .graph import (
    Graph,
    component_masks,
    is_clique_mask,
    is_independent_mask,
    iter_bits,
    to_set,
)

CLIQUE = "clique"
INDEPENDENT = "independent"

LEAF, SERIES, PARALLEL, PRIME = "leaf", "series", "parallel", "prime"

DEFAULT_VC_MAX_VERTICES = 40


# modules

def _is_module_mask(adj, universe, mask):
    for v in iter_bits(universe & ~mask):
        seen = adj[v] & mask
        if seen and seen != mask:
            return False
    return True


def is_module(g: Graph, s: Iterable[int]) -> bool:
    return _is_module_mask(g.adj, g.full_mask, g.check_members(s))


def _module_closure(adj, universe, mask):
    """Smallest module of ``G[universe]`` containing ``mask``."""
    changed = True
    while changed:
        changed = False
        for v in iter_bits(universe & ~mask):
            seen = adj[v] & mask
            if seen and seen != mask:
                mask |= 1 << v
                changed = True
    return mask


def _split(adj, universe):
    """Kind of the decomposition node for ``G[universe]`` and its maximal strong modules."""
    comps = component_masks(adj, universe)
    if len(comps) > 1:
        return PARALLEL, comps
    coadj = tuple((universe & ~row & ~(1 << v)) if universe >> v & 1 else 0
                  for v, row in enumerate(adj))
    cocomps = component_masks(coadj, universe)
    if len(cocomps) > 1:
        return SERIES, cocomps
    # both G and its complement connected: maximal proper modules partition V
    parts = []
    left = universe
    while left:
        u = (left & -left).bit_length() - 1
        part = 1 << u
        for v in iter_bits(universe & ~part):
            if _module_closure(adj, universe, 1 << u | 1 << v) != universe:
                part |= 1 << v
        parts.append(part)
        left &= ~part
    return PRIME, parts


def maximal_modules_partition(g: Graph) -> list[frozenset[int]]:
    """Components, co-components, or maximal strong modules, whichever applies first."""
    if g.n < 2:
        raise ContractError("maximal_modules_partition needs at least two vertices")
    return [to_set(p) for p in _split(g.adj, g.full_mask)[1]]


# modular decomposition

@dataclass(frozen=True)
class MDNode:
    kind: str
    vertex: int | None = None
    children: tuple[MDNode, ...] = ()

    @property
    def span(self) -> frozenset[int]:
        if self.kind == LEAF:
            return frozenset((self.vertex,))
        return frozenset().union(*(c.span for c in self.children))

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()

    def to_dict(self) -> dict:
        if self.kind == LEAF:
            return {"kind": LEAF, "vertex": self.vertex}
        return {
            "kind": self.kind,
            "vertices": sorted(self.span),
            "children": [c.to_dict() for c in self.children],
        }


def _decompose(adj, universe):
    if universe & (universe - 1) == 0:
        return MDNode(LEAF, vertex=universe.bit_length() - 1)
    kind, parts = _split(adj, universe)
    return MDNode(kind, children=tuple(_decompose(adj, p) for p in parts))


def modular_decomposition(g: Graph) -> MDNode:
    if g.n < 1:
        raise ContractError("modular decomposition of the empty graph is undefined")
    return _decompose(g.adj, g.full_mask)


def modular_width(g: Graph) -> int:
    """Series and parallel nodes count as 2; a prime node counts its children.

    The empty graph gets 0 and a single vertex gets 1.
    """
    if g.n <= 1:
        return g.n
    tree = modular_decomposition(g)
    return max([2] + [len(node.children) for node in tree.nodes() if node.kind == PRIME])


def _check_partition(g, partition):
    masks = [g.check_members(part) for part in partition]
    seen = 0
    for mask in masks:
        if not mask:
            raise ContractError("partition has an empty class")
        if seen & mask:
            raise ContractError("partition classes overlap")
        seen |= mask
    if seen != g.full_mask:
        raise ContractError("partition does not cover every vertex")
    return masks


def quotient_graph(g: Graph, partition: Sequence[Iterable[int]]) -> Graph:
    """Graph on the classes (in the given order), adjacent when completely joined."""
    masks = _check_partition(g, partition)
    for i, mask in enumerate(masks):
        if not _is_module_mask(g.adj, g.full_mask, mask):
            raise ContractError(f"class {i} ({sorted(to_set(mask))}) is not a module")
    edges = []
    for i, a in enumerate(masks):
        rep = (a & -a).bit_length() - 1
        for j in range(i + 1, len(masks)):
            b = masks[j]
            seen = g.adj[rep] & b
            if seen == b:
                edges.append((i, j))
            elif seen:
                raise ContractError(f"classes {i} and {j} are partially joined")
    return Graph(len(masks), edges)


# neighborhood diversity

@dataclass(frozen=True)
class NDClass:
    members: frozenset[int]
    kind: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "members": sorted(self.members)}


@dataclass(frozen=True)
class NDPartition:
    classes: tuple[NDClass, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def to_dict(self) -> list[dict]:
        return [c.to_dict() for c in self.classes]


def _twins(adj, u, v):
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def nd_partition(g: Graph) -> NDPartition:
    """Twin classes: ``u ~ v`` iff ``N(u) - {v} == N(v) - {u}``.

    Classes are listed by smallest member.  A class of size one is labelled
    independent.
    """
    reps: list[int] = []
    masks: list[int] = []
    for v in range(g.n):
        for i, r in enumerate(reps):
            if _twins(g.adj, r, v):
                masks[i] |= 1 << v
                break
        else:
            reps.append(v)
            masks.append(1 << v)
    classes = []
    for mask in masks:
        kind = CLIQUE if mask & (mask - 1) and is_clique_mask(g.adj, mask) else INDEPENDENT
        if kind == INDEPENDENT:
            assert is_independent_mask(g.adj, mask)
        classes.append(NDClass(to_set(mask), kind))
    return NDPartition(tuple(classes))


def neighborhood_diversity(g: Graph) -> int:
    return len(nd_partition(g))


# vertex cover

class _CoverSolver:
    """Minimum vertex cover size of induced subgraphs, memoized by vertex mask."""

    def __init__(self, adj):
        self.adj = adj
        self.cache: dict[int, int] = {}

    def size(self, mask: int) -> int:
        adj = self.adj
        taken = 0
        # degree-0 / degree-1 reductions
        while True:
            for v in iter_bits(mask):
                nbrs = adj[v] & mask
                if not nbrs:
                    mask &= ~(1 << v)
                    break
                if nbrs & (nbrs - 1) == 0:
                    mask &= ~(nbrs | 1 << v)
                    taken += 1
                    break
            else:
                break
        if not mask:
            return taken
        cached = self.cache.get(mask)
        if cached is not None:
            return taken + cached
        comps = component_masks(adj, mask)
        if len(comps) > 1:
            best = sum(self.size(c) for c in comps)
        else:
            v = max(iter_bits(mask), key=lambda u: (adj[u] & mask).bit_count())
            nbrs = adj[v] & mask
            best = 1 + self.size(mask & ~(1 << v))
            if nbrs.bit_count() < best:
                best = min(best, nbrs.bit_count() + self.size(mask & ~nbrs & ~(1 << v)))
        self.cache[mask] = best
        return taken + best


def vertex_cover_number(g: Graph, *, max_n: int = DEFAULT_VC_MAX_VERTICES) -> int:
    if g.n > max_n:
        raise CapExceededError("vertex_cover_number", g.n, max_n)
    return _CoverSolver(g.adj).size(g.full_mask)


def minimum_vertex_cover(g: Graph, *, max_n: int = DEFAULT_VC_MAX_VERTICES) -> frozenset[int]:
    """A minimum vertex cover; among those, the one with the lexicographically
    smallest sorted member list.
    """
    if g.n > max_n:
        raise CapExceededError("minimum_vertex_cover", g.n, max_n)
    solver = _CoverSolver(g.adj)
    tau = solver.size(g.full_mask)
    cover = 0
    rest = g.full_mask
    for v in range(g.n):
        if not rest >> v & 1:
            continue
        if cover.bit_count() + 1 + solver.size(rest & ~(1 << v)) == tau:
            cover |= 1 << v
            rest &= ~(1 << v)
        else:
            nbrs = g.adj[v] & rest
            cover |= nbrs
            rest &= ~(nbrs | 1 << v)
    assert cover.bit_count() == tau
    return to_set(cover)
