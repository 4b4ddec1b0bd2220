"""Reproducible test corpora shared by the CLI ``verify`` command and the test suite."""

from __future__ import annotations

import random
from typing import Iterator

from .generators import INDEPENDENT, CLIQUE, all_graphs, blowup, gnp, random_tree
from .graph import Graph

GNP_PROBABILITIES = (0.2, 0.5, 0.8)


def exhaustive(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """All labelled graphs with ``min_n..max_n`` vertices."""
    for n in range(min_n, max_n + 1):
        yield from all_graphs(n)


def gnp_corpus(count: int = 500, max_n: int = 14) -> Iterator[tuple[str, Graph]]:
    """Instance ``i`` is ``gnp(1 + i % max_n, P[i % 3], seed=i)``.

    Since 14 and 3 are coprime, every (n, p) pair recurs regularly.
    """
    for i in range(count):
        n = 1 + i % max_n
        p = GNP_PROBABILITIES[i % len(GNP_PROBABILITIES)]
        yield f"gnp:{n}:{p}:{i}", gnp(n, p, i)


def nimsum_pairs(count: int = 200, max_n: int = 10, seed: int = 0) -> Iterator[tuple[str, Graph, Graph]]:
    rng = random.Random(seed)
    for _ in range(count):
        specs = []
        for _side in range(2):
            n = rng.randint(1, max_n)
            p = rng.choice(GNP_PROBABILITIES)
            s = rng.getrandbits(32)
            specs.append((n, p, s))
        label = " + ".join(f"gnp:{n}:{p}:{s}" for n, p, s in specs)
        yield label, gnp(*specs[0]), gnp(*specs[1])


def tree_corpus(count: int = 100, max_n: int = 15, seed: int = 0) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        s = rng.getrandbits(32)
        yield f"random_tree:{n}:{s}", random_tree(n, s)


def blowup_corpus(count: int = 100, max_quotient: int = 5, max_class: int = 3,
                  seed: int = 0) -> Iterator[tuple[str, Graph, list[frozenset[int]]]]:
    """Random blowups with their natural class partition."""
    rng = random.Random(seed)
    for _ in range(count):
        k = rng.randint(1, max_quotient)
        hs = rng.getrandbits(32)
        h = gnp(k, 0.5, hs)
        sizes = [rng.randint(1, max_class) for _ in range(k)]
        kinds = [rng.choice((CLIQUE, INDEPENDENT)) for _ in range(k)]
        g = blowup(h, sizes, kinds)
        parts, start = [], 0
        for size in sizes:
            parts.append(frozenset(range(start, start + size)))
            start += size
        label = f"blowup(gnp:{k}:0.5:{hs}, {sizes}, {[kind[0] for kind in kinds]})"
        yield label, g, parts
