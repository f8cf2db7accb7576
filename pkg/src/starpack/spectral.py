"""Exact test for -1 in the adjacency spectrum of a regular graph.

-1 is an eigenvalue of A iff det(A + I) = 0. The determinant is computed by
fraction-free (Bareiss) elimination over Python integers, so the zero test
is exact.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .errors import NotRegular
from .graph_core import GraphLike, Fullerene, RotationSystem, _rotation_of

NeighborLists = Sequence[Iterable[int]]


def neighbor_lists(g: Union[GraphLike, NeighborLists]) -> list[list[int]]:
    if isinstance(g, (RotationSystem, Fullerene)):
        return [list(r) for r in _rotation_of(g).rot]
    return [list(r) for r in g]


def adjacency_matrix(g: Union[GraphLike, NeighborLists]) -> list[list[int]]:
    """Dense 0/1 adjacency matrix of a simple regular graph."""
    nbrs = neighbor_lists(g)
    n = len(nbrs)
    a = [[0] * n for _ in range(n)]
    for v, row in enumerate(nbrs):
        if len(set(row)) != len(row) or v in row:
            raise NotRegular(f"vertex {v}: not a simple graph")
        for w in row:
            a[v][w] = 1
    for v in range(n):
        for w in range(n):
            if a[v][w] != a[w][v]:
                raise NotRegular(f"adjacency not symmetric at ({v}, {w})")
    degrees = {sum(r) for r in a}
    if len(degrees) > 1:
        raise NotRegular(f"degrees {sorted(degrees)}")
    return a


def bareiss_determinant(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Pivot: first nonzero entry in the current column; each row swap flips
    the sign. Every intermediate division is exact.
    """
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1] if n else 1


def det_shifted_adjacency(g: Union[GraphLike, NeighborLists], shift: int) -> int:
    """Exact det(A + shift * I)."""
    a = adjacency_matrix(g)
    for v in range(len(a)):
        a[v][v] += shift
    return bareiss_determinant(a)


def has_minus_one_eigenvalue(g: Union[GraphLike, NeighborLists]) -> bool:
    return det_shifted_adjacency(g, 1) == 0
