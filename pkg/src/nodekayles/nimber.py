"""Sprague-Grundy values of Node Kayles positions.

A position is the set of vertices still alive in a fixed base graph.  Moving
at ``v`` deletes ``N[v]``.  :func:`nimber` splits positions into connected
components, XORs their values, and memoizes only connected positions, so the
memo ends up holding exactly the reachable K-sets.  :func:`nimber_bruteforce`
never splits and serves as the independent check.
"""

from __future__ import annotations

from functools import reduce
from operator import xor
from typing import Iterable

from .errors import CapExceededError, ContractError
from .graph import (
    DEFAULT_MAX_VERTICES,
    Graph,
    component_masks,
    is_connected_mask,
    iter_bits,
    to_set,
)

DEFAULT_ORACLE_MAX_VERTICES = 20


def mex(values: Iterable[int]) -> int:
    seen = set(values)
    k = 0
    while k in seen:
        k += 1
    return k


def nim_sum(values: Iterable[int]) -> int:
    return reduce(xor, values, 0)


class MemoConflictError(AssertionError):
    """A memo key was stored twice with different values."""


class MemoTable:
    """Nimbers of connected positions, keyed by alive-set bitmask.

    A table is bound to the first graph it is used with; passing it to
    :func:`nimber` together with a different graph is an error.
    """

    def __init__(self, graph: Graph | None = None):
        self.graph = graph
        self.values: dict[int, int] = {}
        self.hits = 0
        self.misses = 0

    def bind(self, g: Graph) -> None:
        if self.graph is None:
            self.graph = g
        elif self.graph != g:
            raise ContractError("memo table is bound to a different graph")

    def store(self, key: int, value: int) -> None:
        old = self.values.get(key)
        if old is not None and old != value:
            raise MemoConflictError(f"key {key:#x} stored as {old} and {value}")
        self.values[key] = value

    def keys(self) -> list[frozenset[int]]:
        return [to_set(k) for k in sorted(self.values)]

    def __len__(self):
        return len(self.values)

    def __contains__(self, key):
        if not isinstance(key, int):
            key = sum(1 << v for v in key)
        return key in self.values

    @property
    def stats(self) -> dict:
        return {"entries": len(self.values), "hits": self.hits, "misses": self.misses}


def _check_cap(g, cap, what):
    if g.n > cap:
        raise CapExceededError(what, g.n, cap)


def _alive_mask(g, alive):
    return g.full_mask if alive is None else g.check_members(alive)


def _nim(adj, mask, memo):
    if not mask:
        return 0
    comps = component_masks(adj, mask)
    if len(comps) > 1:
        value = 0
        for comp in comps:
            value ^= _nim_connected(adj, comp, memo)
        return value
    return _nim_connected(adj, mask, memo)


def _nim_connected(adj, mask, memo):
    value = memo.values.get(mask)
    if value is not None:
        memo.hits += 1
        return value
    memo.misses += 1
    options = {_nim(adj, mask & ~(adj[v] | 1 << v), memo) for v in iter_bits(mask)}
    value = mex(options)
    memo.store(mask, value)
    return value


def nimber(g: Graph, memo: MemoTable | None = None, *, alive: Iterable[int] | None = None,
           max_n: int = DEFAULT_MAX_VERTICES) -> int:
    """Nimber of the position ``alive`` (default: all of ``g``).

    Pass a :class:`MemoTable` to keep the table across calls on the same graph
    or to inspect which connected positions were visited.
    """
    _check_cap(g, max_n, "nimber")
    if memo is None:
        memo = MemoTable(g)
    else:
        memo.bind(g)
    return _nim(g.adj, _alive_mask(g, alive), memo)


def nimber_bruteforce(g: Graph, *, max_n: int = DEFAULT_ORACLE_MAX_VERTICES) -> int:
    """Nimber straight from the mex recursion over raw alive sets, no component splitting."""
    _check_cap(g, max_n, "nimber_bruteforce")
    adj = g.adj
    closed = [row | 1 << v for v, row in enumerate(adj)]
    table: dict[int, int] = {0: 0}

    def nim(mask):
        value = table.get(mask)
        if value is None:
            value = mex(nim(mask & ~closed[v]) for v in iter_bits(mask))
            table[mask] = value
        return value

    return nim(g.full_mask)


def wins_by_minimax(g: Graph, *, max_n: int = DEFAULT_ORACLE_MAX_VERTICES) -> bool:
    """Whether the player to move wins, by plain win/loss search (no nimbers)."""
    _check_cap(g, max_n, "wins_by_minimax")
    closed = [row | 1 << v for v, row in enumerate(g.adj)]
    table: dict[int, bool] = {0: False}

    def wins(mask):
        result = table.get(mask)
        if result is None:
            result = any(not wins(mask & ~closed[v]) for v in iter_bits(mask))
            table[mask] = result
        return result

    return wins(g.full_mask)


def first_player_wins(g: Graph, memo: MemoTable | None = None, **kwargs) -> bool:
    return nimber(g, memo, **kwargs) > 0


def residual(g: Graph, v: int, alive: Iterable[int] | None = None) -> frozenset[int]:
    """Alive set after moving at ``v``."""
    mask = _alive_mask(g, alive)
    if not mask >> v & 1:
        raise ContractError(f"vertex {v} is not alive")
    return to_set(mask & ~(g.adj[v] | 1 << v))


def optimal_move(g: Graph, memo: MemoTable | None = None, *, alive: Iterable[int] | None = None,
                 max_n: int = DEFAULT_MAX_VERTICES) -> int | None:
    """Smallest vertex whose move leaves a zero position, or ``None`` if the position is lost."""
    _check_cap(g, max_n, "optimal_move")
    if memo is None:
        memo = MemoTable(g)
    else:
        memo.bind(g)
    mask = _alive_mask(g, alive)
    if _nim(g.adj, mask, memo) == 0:
        return None
    for v in iter_bits(mask):
        if _nim(g.adj, mask & ~(g.adj[v] | 1 << v), memo) == 0:
            return v
    raise AssertionError("nonzero nimber without a move to zero")


def memo_keys_connected(g: Graph, memo: MemoTable) -> bool:
    return all(is_connected_mask(g.adj, key) for key in memo.values)
