"""Nim-preserving kernel of at most ``2 * nd(G)`` vertices.

Each clique twin class shrinks to one vertex.  Each independent twin class
of size >= 3 shrinks to one vertex when its size is odd and two when even:
removing an even number of mutually non-adjacent twins leaves the nimber
unchanged, whereas removing an odd number can change it (``K_{1,3}`` has
nimber 1 but ``K_{1,2}`` has nimber 2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ContractError
from .graph import Graph, induced_by_mask, is_clique_mask, is_independent_mask, to_set
from .structural import CLIQUE, INDEPENDENT, _is_module_mask, nd_partition


def parity(k: int) -> int:
    return k & 1


@dataclass(frozen=True)
class ReductionStep:
    members: frozenset[int]
    kind: str
    survivors: frozenset[int]
    removed: frozenset[int]

    def to_dict(self):
        return {
            "kind": self.kind,
            "members": sorted(self.members),
            "survivors": sorted(self.survivors),
            "removed": sorted(self.removed),
        }


@dataclass(frozen=True)
class ReductionTrace:
    """Steps in the order applied; vertex ids refer to the input graph."""

    steps: tuple[ReductionStep, ...]
    n: int

    @property
    def removed(self) -> frozenset[int]:
        return frozenset().union(*(s.removed for s in self.steps))

    @property
    def kept(self) -> tuple[int, ...]:
        """Input ids of the kernel vertices; kernel vertex ``i`` is ``kept[i]``."""
        gone = self.removed
        return tuple(v for v in range(self.n) if v not in gone)

    def replay(self, g: Graph) -> Graph:
        if g.n != self.n:
            raise ContractError("trace was recorded on a graph of a different size")
        mask = g.full_mask
        for step in self.steps:
            for v in step.removed:
                mask &= ~(1 << v)
        return induced_by_mask(g, mask)[0]

    def to_dict(self):
        return {"n": self.n, "kept": list(self.kept), "steps": [s.to_dict() for s in self.steps]}


def _survivors(members, kind):
    ordered = sorted(members)
    if kind == CLIQUE:
        return frozenset(ordered[:1])
    return frozenset(ordered[:2 - parity(len(ordered))])


def _checked_module(g, m, kind, min_size):
    mask = g.check_members(m)
    if mask.bit_count() < min_size:
        raise ContractError(f"{kind} module needs at least {min_size} vertices")
    if not _is_module_mask(g.adj, g.full_mask, mask):
        raise ContractError(f"{sorted(to_set(mask))} is not a module")
    shape_ok = is_clique_mask(g.adj, mask) if kind == CLIQUE else is_independent_mask(g.adj, mask)
    if not shape_ok:
        raise ContractError(f"{sorted(to_set(mask))} is not {'a clique' if kind == CLIQUE else 'independent'}")
    return mask


def _drop(g, mask, kind):
    keep = _survivors(to_set(mask), kind)
    gone = mask & ~sum(1 << v for v in keep)
    return induced_by_mask(g, g.full_mask & ~gone)[0]


def reduce_clique_module(g: Graph, m: Iterable[int]) -> Graph:
    """Collapse a clique module to its smallest vertex."""
    mask = _checked_module(g, m, CLIQUE, 2)
    return _drop(g, mask, CLIQUE)


def reduce_independent_module(g: Graph, m: Iterable[int]) -> Graph:
    """Shrink an independent module to 1 (odd size) or 2 (even size) smallest vertices."""
    mask = _checked_module(g, m, INDEPENDENT, 3)
    return _drop(g, mask, INDEPENDENT)


def _one_pass(g):
    classes = sorted(nd_partition(g), key=lambda c: (c.kind != CLIQUE, min(c.members)))
    steps = []
    for cls in classes:
        size = len(cls.members)
        if (cls.kind == CLIQUE and size >= 2) or (cls.kind == INDEPENDENT and size >= 3):
            keep = _survivors(cls.members, cls.kind)
            steps.append(ReductionStep(cls.members, cls.kind, keep, cls.members - keep))
    return steps


def kernelize(g: Graph, *, until_fixpoint: bool = False) -> tuple[Graph, ReductionTrace]:
    """Reduce every twin class of ``g`` once (clique classes first).

    A single pass is what the size bound needs, but it is not idempotent:
    ``K2 + 2K1`` becomes ``3K1``, whose three isolated vertices are a fresh
    independent class.  ``until_fixpoint=True`` repeats passes until nothing
    changes; the trace then covers every pass, in input ids.
    """
    steps = _one_pass(g)
    while True:
        removed = frozenset().union(*(s.removed for s in steps))
        mask = sum(1 << v for v in range(g.n) if v not in removed)
        h, kept = induced_by_mask(g, mask)
        if not until_fixpoint:
            break
        more = _one_pass(h)
        if not more:
            break
        for s in more:
            steps.append(ReductionStep(
                frozenset(kept[v] for v in s.members), s.kind,
                frozenset(kept[v] for v in s.survivors), frozenset(kept[v] for v in s.removed)))
    return h, ReductionTrace(tuple(steps), g.n)
