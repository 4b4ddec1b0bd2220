"""Per-instance checks used by ``nodekayles verify``.

Each check returns a plain dict with a ``holds`` flag plus whatever witnesses
make a failure readable.
"""

from __future__ import annotations

from .graph import Graph, component_masks, disjoint_union, induced_by_mask
from .kernel import kernelize
from .ksets import check_expansion_decomposition, check_spider, check_vc_bound
from .nimber import DEFAULT_ORACLE_MAX_VERTICES, nimber, nimber_bruteforce
from .structural import maximal_modules_partition, neighborhood_diversity, quotient_graph


def vc_bound(g: Graph) -> dict:
    return check_vc_bound(g).to_dict()


def spider_count(k: int) -> dict:
    return check_spider(k).to_dict()


def expansion(g: Graph, partition=None) -> dict:
    """Expansion check against ``partition``, by default the top-level modular split."""
    if partition is None:
        partition = maximal_modules_partition(g) if g.n >= 2 else [frozenset(g.vertices)]
    report = check_expansion_decomposition(g, partition).to_dict()
    report["partition"] = [sorted(p) for p in partition]
    return report


def kernel(g: Graph, oracle_max_n: int = DEFAULT_ORACLE_MAX_VERTICES) -> dict:
    h, trace = kernelize(g)
    nd = neighborhood_diversity(g)
    if g.n <= oracle_max_n:
        method, before, after = "bruteforce", nimber_bruteforce(g, max_n=oracle_max_n), nimber_bruteforce(h, max_n=oracle_max_n)
    else:
        method, before, after = "dp", nimber(g), nimber(h)
    size_ok = h.n <= 2 * nd
    return {
        "n": g.n,
        "nd": nd,
        "kernel_n": h.n,
        "size_bound": 2 * nd,
        "nimber": before,
        "kernel_nimber": after,
        "method": method,
        "holds": size_ok and before == after,
    }


def nimsum(g1: Graph, g2: Graph, oracle_max_n: int = DEFAULT_ORACLE_MAX_VERTICES) -> dict:
    """Nimber of the disjoint union (by the splitting-free oracle when small enough)
    against the XOR of the parts.
    """
    union = disjoint_union(g1, g2)
    a, b = nimber(g1), nimber(g2)
    if union.n <= oracle_max_n:
        method, whole = "bruteforce", nimber_bruteforce(union, max_n=oracle_max_n)
    else:
        method, whole = "dp", nimber(union)
    return {"nimber_1": a, "nimber_2": b, "nimber_union": whole, "method": method,
            "holds": whole == a ^ b}


def _is_forest(h: Graph) -> bool:
    return h.m == h.n - len(component_masks(h.adj, h.full_mask))


def tree_quotient(t: Graph) -> dict:
    """Quotient of every node of the modular decomposition of ``t`` is acyclic."""
    checked = 0
    stack = [t.full_mask] if t.n >= 2 else []
    while stack:
        mask = stack.pop()
        sub, mapping = induced_by_mask(t, mask)
        parts = [frozenset(p) for p in maximal_modules_partition(sub)]
        h = quotient_graph(sub, parts)
        checked += 1
        if not _is_forest(h):
            return {"n": t.n, "quotients": checked, "holds": False,
                    "counterexample": [sorted(mapping[v] for v in p) for p in parts]}
        for p in parts:
            if len(p) >= 2:
                stack.append(sum(1 << mapping[v] for v in p))
    return {"n": t.n, "quotients": checked, "holds": True}
