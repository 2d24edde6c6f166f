"""Exhaustive generation of small graph classes up to isomorphism.

Classes handled here are hereditary (closed under deleting a vertex), so
every member of order n arises from a member of order n-1 by adding one
vertex: for connected classes, delete any non-cut vertex.  Generation is
therefore "extend every representative in every allowed way, keep the
members, dedupe by canonical form".

The minimal classes are reached through hereditary superclasses:

* minimally 2-connected  = 2-connected and kappa(u, v) <= 2 on every edge
* minimally 2-edge-conn. = 2-edge-connected and lambda(u, v) <= 2 on every edge
* minimally k-connected  is contained in "kappa(u, v) <= k on every edge"
"""

from __future__ import annotations

from itertools import combinations, product
from typing import Callable, Iterable, Iterator

import numpy as np

from . import _kernels
from .canon import canonical_form
from .graph import MultiGraph

Rows = Callable[[int], Iterable[tuple[int, ...]]]
Accept = Callable[[np.ndarray], bool]


def simple_rows(m: int, connected: bool = True) -> Iterator[tuple[int, ...]]:
    """Adjacency rows of a new vertex joined by simple edges to a subset."""
    for bits in range(1 if connected else 0, 1 << m):
        yield tuple((bits >> i) & 1 for i in range(m))


def doubled_rows(m: int) -> Iterator[tuple[int, ...]]:
    """A new vertex hanging off one old vertex by a doubled edge."""
    for w in range(m):
        row = [0] * m
        row[w] = 2
        yield tuple(row)


def any_rows(m: int, max_mult: int) -> Iterator[tuple[int, ...]]:
    return product(range(max_mult + 1), repeat=m)


def edge_bound(mode: int, k: int) -> Accept:
    """Accept matrices where every adjacent pair has local value <= k."""

    def accept(mat: np.ndarray) -> bool:
        us, vs = np.nonzero(np.triu(mat, 1))
        if us.size == 0:
            return True
        kern = _kernels.active
        return kern.first_pair_above(mat, mode, us.astype(np.int64), vs.astype(np.int64), k) < 0

    return accept


def grow(n: int, rows: Rows, accept: Accept | None = None) -> dict[int, list[np.ndarray]]:
    """Representatives of the class at every order 1..n (dict order -> matrices)."""
    levels = {1: [np.zeros((1, 1), dtype=np.int64)]}
    for m in range(1, n):
        seen: dict = {}
        for parent in levels[m]:
            for row in rows(m):
                child = np.zeros((m + 1, m + 1), dtype=np.int64)
                child[:m, :m] = parent
                child[m, :m] = row
                child[:m, m] = row
                if accept is not None and not accept(child):
                    continue
                key = canonical_form(MultiGraph.from_matrix(child))
                if key not in seen:
                    seen[key] = child
        levels[m + 1] = [seen[k] for k in sorted(seen)]
    return levels
