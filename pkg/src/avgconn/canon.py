"""Canonical forms for small multigraphs.

Individualization-refinement: colour refinement on multiplicity-weighted
neighbourhoods, then branch on the first non-singleton cell, keeping the
lexicographically smallest relabelled matrix over all leaves.  Vertices in
a cell that are twins (same neighbourhood, same multiplicities) are swapped
by an automorphism, so only one per twin class is branched on.  This is
plenty for the orders the enumerator reaches (n <= 11).
"""

from __future__ import annotations

import numpy as np

from .graph import MultiGraph


def _refine(mat: np.ndarray, colour: list[int]) -> list[int]:
    n = len(colour)
    nbrs = [[(w, int(mat[v, w])) for w in range(n) if mat[v, w]] for v in range(n)]
    while True:
        sig = [
            (colour[v], tuple(sorted((colour[w], c) for w, c in nbrs[v])))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(ranks) == len(set(colour)):
            return new
        colour = new


def _twin_reps(mat: np.ndarray, cell: list[int]) -> list[int]:
    """One vertex per twin class of cell.

    v and w are twins when their rows agree off {v, w}; then swapping them is
    an automorphism fixing every other vertex, so their branches coincide.
    The relation is an equivalence (conjugating two such transpositions
    gives a third).
    """
    reps: list[int] = []
    for v in cell:
        for r in reps:
            keep = np.ones(mat.shape[0], dtype=bool)
            keep[[v, r]] = False
            if np.array_equal(mat[v, keep], mat[r, keep]):
                break
        else:
            reps.append(v)
    return reps


def _certificate(mat: np.ndarray, colour: list[int]) -> tuple[int, ...]:
    order = sorted(range(len(colour)), key=colour.__getitem__)
    sub = mat[np.ix_(order, order)]
    iu = np.triu_indices(len(order), 1)
    return tuple(sub[iu].tolist())


def canonical_form(g: MultiGraph) -> tuple[int, tuple[int, ...]]:
    """Isomorphism-invariant key ``(n, upper triangle of relabelled matrix)``."""
    mat = np.asarray(g.matrix)
    n = g.n
    if n == 0:
        return (0, ())
    start = _refine(mat, [0] * n)
    best: list = [None]

    def search(colour: list[int]) -> None:
        k = len(set(colour))
        if k == n:
            cert = _certificate(mat, colour)
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        sizes: dict[int, list[int]] = {}
        for v, c in enumerate(colour):
            sizes.setdefault(c, []).append(v)
        target = min(c for c, vs in sizes.items() if len(vs) > 1)
        cell = sizes[target]
        for v in _twin_reps(mat, cell):
            # individualize v ahead of the rest of its cell
            nc = [2 * c + (1 if (c == target and w != v) else 0) for w, c in enumerate(colour)]
            search(_refine(mat, nc))

    search(start)
    return (n, best[0])


def canonical_graph(g: MultiGraph) -> MultiGraph:
    n, cert = canonical_form(g)
    mat = np.zeros((n, n), dtype=np.int64)
    iu = np.triu_indices(n, 1)
    mat[iu] = cert
    return MultiGraph.from_matrix(mat + mat.T)
