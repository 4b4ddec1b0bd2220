"""K-set enumeration and the counting checks built on it.

A K-set of ``G`` is a nonempty ``W`` inducing a connected subgraph with
``W = V - N[X]`` for some independent ``X``.  Enumeration here backtracks over
independent sets and never touches the nimber DP, so :func:`ksets_via_dp`
and :func:`enumerate_ksets` can check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, ContractError
from .generators import spider
from .graph import (
    Graph,
    closed_neighborhood_mask,
    component_masks,
    induced_by_mask,
    is_connected_mask,
    is_independent_mask,
    iter_bits,
    to_mask,
    to_set,
)
from .nimber import MemoTable, nimber
from .structural import _is_module_mask, minimum_vertex_cover, quotient_graph

DEFAULT_ENUM_MAX_VERTICES = 24


@dataclass(frozen=True)
class KSetTriple:
    w: frozenset[int]
    separator: frozenset[int]
    x: frozenset[int]


class KSetFamily:
    """Deduplicated K-sets of ``base``, stored as bitmasks."""

    def __init__(self, base: Graph, masks: Iterable[int]):
        self.base = base
        self.masks = frozenset(masks)

    @property
    def sets(self) -> frozenset[frozenset[int]]:
        return frozenset(to_set(m) for m in self.masks)

    def __len__(self):
        return len(self.masks)

    def __iter__(self) -> Iterator[frozenset[int]]:
        for m in sorted(self.masks, key=lambda m: (m.bit_count(), sorted(iter_bits(m)))):
            yield to_set(m)

    def __contains__(self, s):
        return (s if isinstance(s, int) else to_mask(s)) in self.masks

    def __eq__(self, other):
        if not isinstance(other, KSetFamily):
            return NotImplemented
        return self.base == other.base and self.masks == other.masks

    def __repr__(self):
        return f"KSetFamily({[sorted(s) for s in self]})"


def _check_cap(g, cap, what):
    if g.n > cap:
        raise CapExceededError(what, g.n, cap)


def _independent_sets(adj, universe):
    """Yield ``(x, dominated)`` for every independent ``x`` inside ``universe``.

    Only undominated vertices above the last pick are branched on.
    """
    stack = [(0, 0, universe)]
    while stack:
        x, dom, cand = stack.pop()
        yield x, dom
        for v in iter_bits(cand):
            closed = adj[v] | 1 << v
            above = cand >> (v + 1) << (v + 1)
            stack.append((x | 1 << v, dom | closed, above & ~closed))


def _kset_masks(adj, universe):
    found = set()
    # a K-set is connected, so it is a K-set of the component holding it
    for comp in component_masks(adj, universe):
        for _, dom in _independent_sets(adj, comp):
            found.update(component_masks(adj, comp & ~dom))
    return found


def enumerate_ksets(g: Graph, *, max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> KSetFamily:
    _check_cap(g, max_n, "enumerate_ksets")
    return KSetFamily(g, _kset_masks(g.adj, g.full_mask))


def count_ksets(g: Graph, *, max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> int:
    return len(enumerate_ksets(g, max_n=max_n))


def ksets_via_dp(g: Graph, *, max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> KSetFamily:
    """Connected positions memoized while computing the nimber of ``g``."""
    _check_cap(g, max_n, "ksets_via_dp")
    memo = MemoTable(g)
    nimber(g, memo)
    return KSetFamily(g, memo.values)


# triples

def kset_triple_violation(g: Graph, t: KSetTriple) -> str | None:
    """Why ``t`` is not a K-set triple of ``g``, or ``None`` if it is."""
    w, sep, x = (g.check_members(s) for s in (t.w, t.separator, t.x))
    if w & sep or w & x or sep & x or (w | sep | x) != g.full_mask:
        return "not-a-partition"
    if not is_independent_mask(g.adj, x):
        return "x-not-independent"
    closed_x = closed_neighborhood_mask(g, x)
    if sep != closed_x & ~x:
        return "separator-not-open-neighborhood"
    if w != g.full_mask & ~closed_x:
        return "w-not-complement-of-closed-neighborhood"
    if not w:
        return "w-empty"
    if not is_connected_mask(g.adj, w):
        return "w-disconnected"
    if any(g.adj[v] & x for v in iter_bits(w)):
        return "w-x-edge"
    return None


def verify_kset_triple(g: Graph, t: KSetTriple) -> bool:
    return kset_triple_violation(g, t) is None


def _triple(g, x, dom):
    return KSetTriple(to_set(g.full_mask & ~dom), to_set(dom & ~x), to_set(x))


def enumerate_kset_triples(g: Graph, *, max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> Iterator[KSetTriple]:
    """Every K-set triple of ``g``, one per independent set ``X``."""
    _check_cap(g, max_n, "enumerate_kset_triples")
    for x, dom in _independent_sets(g.adj, g.full_mask):
        w = g.full_mask & ~dom
        if is_connected_mask(g.adj, w):
            yield _triple(g, x, dom)


def witness_triple(g: Graph, w: Iterable[int], *, max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> KSetTriple | None:
    """Some K-set triple with first part ``w``, or ``None`` if ``w`` is not a K-set."""
    _check_cap(g, max_n, "witness_triple")
    target = g.check_members(w)
    if not is_connected_mask(g.adj, target):
        return None
    # X must avoid N[W]
    room = g.full_mask & ~closed_neighborhood_mask(g, target)
    for x, dom in _independent_sets(g.adj, room):
        if g.full_mask & ~dom == target:
            return _triple(g, x, dom)
    return None


# bounds

def vc_bound(n: int, tau: int) -> int:
    return 3 ** tau + n - tau - 2 ** tau


@dataclass(frozen=True)
class VCBoundReport:
    kappa: int
    tau: int
    bound: int
    holds: bool

    def to_dict(self):
        return {"kappa": self.kappa, "tau": self.tau, "bound": self.bound, "holds": self.holds}


def check_vc_bound(g: Graph, *, max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> VCBoundReport:
    kappa = count_ksets(g, max_n=max_n)
    tau = len(minimum_vertex_cover(g))
    bound = vc_bound(g.n, tau)
    return VCBoundReport(kappa, tau, bound, kappa <= bound)


@dataclass(frozen=True)
class InjectivityReport:
    cover: frozenset[int]
    triples: int
    holds: bool
    collision: tuple[KSetTriple, KSetTriple] | None = None


def check_tripartition_injectivity(g: Graph, cover: Iterable[int] | None = None) -> InjectivityReport:
    """Triples with ``W`` meeting the cover map to distinct ordered tripartitions of it."""
    cover = frozenset(minimum_vertex_cover(g) if cover is None else cover)
    seen: dict[tuple, KSetTriple] = {}
    count = 0
    for t in enumerate_kset_triples(g):
        key = (t.w & cover, t.separator & cover, t.x & cover)
        if not key[0]:
            continue
        count += 1
        if key in seen:
            return InjectivityReport(cover, count, False, (seen[key], t))
        seen[key] = t
    return InjectivityReport(cover, count, True)


def spider_kset_count(k: int) -> int:
    """Closed form for the spider with ``k >= 2`` legs (fails at ``k = 1``)."""
    return 3 ** k + 4 * k


@dataclass(frozen=True)
class SpiderReport:
    k: int
    kappa: int
    expected: int
    root_ksets: int
    legs_ok: bool
    holds: bool

    def to_dict(self):
        return {"k": self.k, "kappa": self.kappa, "expected": self.expected,
                "root_ksets": self.root_ksets, "legs_ok": self.legs_ok, "holds": self.holds}


def check_spider(k: int) -> SpiderReport:
    """Count the K-sets of ``spider(k)`` and check their per-leg shape.

    Off the root, leg ``i`` must carry exactly ``{a}``, ``{c}``, ``{b, c}`` and
    ``{a, b, c}`` (``a`` next to the root, ``c`` the far end).  Every K-set
    through the root meets each leg in nothing, ``{a}``, or the whole leg.
    """
    g = spider(k)
    family = enumerate_ksets(g)
    legs = [(1 << 3 * i + 1, 1 << 3 * i + 2, 1 << 3 * i + 3) for i in range(k)]
    legs_ok = True
    root_count = 0
    off_root = {m for m in family.masks if not m & 1}
    for a, b, c in legs:
        leg = a | b | c
        expected = {a, c, b | c, leg}
        if {m for m in off_root if m & leg} != expected:
            legs_ok = False
    for m in family.masks:
        if m & 1:
            root_count += 1
            for a, b, c in legs:
                if m & (a | b | c) not in (0, a, a | b | c):
                    legs_ok = False
    legs_ok = legs_ok and root_count == 3 ** k
    expected = spider_kset_count(k)
    kappa = len(family)
    return SpiderReport(k, kappa, expected, root_count, legs_ok, legs_ok and kappa == expected)


@dataclass(frozen=True)
class ExpansionReport:
    kappa: int
    kappa_quotient: int
    kappa_parts: tuple[int, ...]
    membership: bool
    inequality: bool
    counterexample: frozenset[int] | None = None

    @property
    def holds(self) -> bool:
        return self.membership and self.inequality

    def to_dict(self):
        return {
            "kappa": self.kappa,
            "kappa_quotient": self.kappa_quotient,
            "kappa_parts": list(self.kappa_parts),
            "membership": self.membership,
            "inequality": self.inequality,
            "holds": self.holds,
            "counterexample": None if self.counterexample is None else sorted(self.counterexample),
        }


def check_expansion_decomposition(g: Graph, partition: Sequence[Iterable[int]], *,
                                  max_n: int = DEFAULT_ENUM_MAX_VERTICES) -> ExpansionReport:
    """Every K-set of ``g`` is the expansion of a K-set of the quotient or a
    K-set of one class; also check the resulting count inequality.
    """
    _check_cap(g, max_n, "check_expansion_decomposition")
    parts = [g.check_members(p) for p in partition]
    for p in parts:
        if not _is_module_mask(g.adj, g.full_mask, p):
            raise ContractError(f"{sorted(to_set(p))} is not a module")
    h = quotient_graph(g, partition)

    family = _kset_masks(g.adj, g.full_mask)
    quotient_family = _kset_masks(h.adj, h.full_mask)
    expansions = set()
    for u in quotient_family:
        mask = 0
        for i in iter_bits(u):
            mask |= parts[i]
        expansions.add(mask)

    inside = set()
    kappa_parts = []
    for p in parts:
        sub, mapping = induced_by_mask(g, p)
        sub_family = _kset_masks(sub.adj, sub.full_mask)
        kappa_parts.append(len(sub_family))
        inside.update(to_mask(mapping[i] for i in iter_bits(m)) for m in sub_family)

    counterexample = None
    for m in sorted(family):
        if m not in expansions and m not in inside:
            counterexample = to_set(m)
            break
    inequality = len(family) <= len(quotient_family) + sum(kappa_parts)
    return ExpansionReport(len(family), len(quotient_family), tuple(kappa_parts),
                           counterexample is None, inequality, counterexample)
