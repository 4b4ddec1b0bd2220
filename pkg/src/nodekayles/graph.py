"""Simple undirected graphs on dense vertex ids ``0..n-1``.

Adjacency is kept as one integer bitmask per vertex, so vertex sets used by
the exponential routines are plain ``int`` masks internally.  The public API
speaks ``frozenset[int]`` (the ``VertexSet`` alias) and converts at the edge.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ContractError

VertexSet = frozenset

DEFAULT_MAX_VERTICES = 64


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_set(mask: int) -> frozenset[int]:
    return frozenset(iter_bits(mask))


class Graph:
    """Immutable simple undirected graph.

    >>> g = Graph(3, [(0, 1), (1, 2)])
    >>> g.m, sorted(g.neighbors(1))
    (2, [0, 2])
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ContractError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ContractError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._hash = None

    @classmethod
    def from_masks(cls, adj: Iterable[int]) -> Graph:
        adj = tuple(adj)
        n = len(adj)
        for v, row in enumerate(adj):
            if row >> n or row >> v & 1:
                raise ContractError(f"bad adjacency row for vertex {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ContractError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g.n = n
        g.adj = adj
        g._hash = None
        return g

    # queries

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return to_set(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def check_members(self, vertices: Iterable[int]) -> int:
        """Return the mask of ``vertices``, raising if any id is out of range."""
        mask = 0
        for v in vertices:
            if not (isinstance(v, int) and 0 <= v < self.n):
                raise ContractError(f"vertex {v!r} not in graph on {self.n} vertices")
            mask |= 1 << v
        return mask

    def complement(self) -> Graph:
        full = self.full_mask
        return Graph.from_masks((full ^ row) & ~(1 << v) for v, row in enumerate(self.adj))

    def complement_set(self, s: Iterable[int]) -> frozenset[int]:
        return to_set(self.full_mask & ~self.check_members(s))

    # dunder

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ids ``0..g.n-1`` followed by ``h`` shifted by ``g.n``."""
    return Graph.from_masks(g.adj + tuple(row << g.n for row in h.adj))


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in ascending id order.

    Returns the subgraph and ``mapping`` with ``mapping[i]`` the id in ``g`` of
    new vertex ``i``.
    """
    mask = g.check_members(s)
    return induced_by_mask(g, mask)


def induced_by_mask(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    mapping = tuple(iter_bits(mask))
    index = {v: i for i, v in enumerate(mapping)}
    rows = []
    for v in mapping:
        row = 0
        for u in iter_bits(g.adj[v] & mask):
            row |= 1 << index[u]
        rows.append(row)
    return Graph.from_masks(rows), mapping


def closed_neighborhood_mask(g: Graph, mask: int) -> int:
    out = mask
    for v in iter_bits(mask):
        out |= g.adj[v]
    return out


def closed_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    return to_set(closed_neighborhood_mask(g, g.check_members(s)))


def open_neighborhood(g: Graph, s: Iterable[int]) -> frozenset[int]:
    mask = g.check_members(s)
    return to_set(closed_neighborhood_mask(g, mask) & ~mask)


def component_masks(adj: tuple[int, ...], mask: int) -> list[int]:
    """Connected components of the subgraph induced by ``mask``.

    Components come out ordered by their smallest member.
    """
    comps = []
    while mask:
        comp = frontier = mask & -mask
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= adj[v]
            frontier = reach & mask & ~comp
            comp |= frontier
        comps.append(comp)
        mask &= ~comp
    return comps


def is_connected_mask(adj: tuple[int, ...], mask: int) -> bool:
    if not mask:
        return False
    comp = frontier = mask & -mask
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & mask & ~comp
        comp |= frontier
    return comp == mask


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [to_set(c) for c in component_masks(g.adj, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return is_connected_mask(g.adj, g.full_mask)


def is_independent_mask(adj: tuple[int, ...], mask: int) -> bool:
    return all(not (adj[v] & mask) for v in iter_bits(mask))


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    return is_independent_mask(g.adj, g.check_members(s))


def is_clique_mask(adj: tuple[int, ...], mask: int) -> bool:
    return all((adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))
