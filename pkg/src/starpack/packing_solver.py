"""Perfect star packings as exact cover by closed neighbourhoods.

A set D of vertices of a cubic graph is the centre set of a perfect star
packing iff the closed neighbourhoods N[v], v in D, cover every vertex
exactly once. The main solver is Algorithm X over those rows; the oracle
``brute_force_packings`` is an independent array-based search used only to
cross-check it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional

from .errors import TheoremViolation, TooLargeForOracle
from .graph_core import Fullerene, GraphLike, RotationSystem, _rotation_of

ORACLE_MAX_N = 100


@dataclass(frozen=True)
class StarPacking:
    """Centre set C(S) plus the star of each centre. Identity is the sorted centre list."""

    centers: tuple[int, ...]
    stars: Mapping[int, tuple[int, int, int]]

    @classmethod
    def from_centers(cls, g: GraphLike, centers: Iterable[int]) -> StarPacking:
        rs = _rotation_of(g)
        cs = tuple(sorted(set(centers)))
        return cls(cs, {c: rs.rot[c] for c in cs})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, StarPacking) and self.centers == other.centers

    def __hash__(self) -> int:
        return hash(self.centers)

    @property
    def center_set(self) -> frozenset[int]:
        return frozenset(self.centers)

    def owner(self) -> dict[int, int]:
        """Map every vertex to the centre of the star containing it."""
        out = {}
        for c, leaves in self.stars.items():
            out[c] = c
            for v in leaves:
                out[v] = c
        return out


@dataclass(frozen=True)
class PackingCheck:
    ok: bool
    violation: Optional[str] = None  # "vertex" | "independence" | "domination" | "cardinality"
    vertex: Optional[int] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_packing(f: GraphLike, centers: Iterable[int]) -> PackingCheck:
    g = _rotation_of(f)
    cs = set(centers)
    for v in sorted(cs):
        if not 0 <= v < g.n:
            return PackingCheck(False, "vertex", v)
    for v in range(g.n):
        if v in cs and any(w in cs for w in g.rot[v]):
            return PackingCheck(False, "independence", v)
    for v in range(g.n):
        hits = (v in cs) + sum(w in cs for w in g.rot[v])
        if hits != 1:
            return PackingCheck(False, "domination", v)
    if 4 * len(cs) != g.n:
        return PackingCheck(False, "cardinality", None)
    return PackingCheck(True)


class _ExactCover:
    """Algorithm X on closed-neighbourhood rows.

    Column choice: fewest remaining candidate rows, ties to the smallest
    vertex; candidate rows are tried in increasing order.
    """

    def __init__(self, g: RotationSystem, forbidden_centers: Iterable[int] = ()):
        banned = set(forbidden_centers)
        self.rows = {v: (v,) + g.rot[v] for v in range(g.n) if v not in banned}
        self.cols: dict[int, set[int]] = {u: set() for u in range(g.n)}
        for v, row in self.rows.items():
            for u in row:
                self.cols[u].add(v)

    def _select(self, r: int) -> list[set[int]]:
        removed = []
        for j in self.rows[r]:
            for i in self.cols[j]:
                for k in self.rows[i]:
                    if k != j:
                        self.cols[k].discard(i)
            removed.append(self.cols.pop(j))
        return removed

    def _deselect(self, r: int, removed: list[set[int]]) -> None:
        for j in reversed(self.rows[r]):
            self.cols[j] = removed.pop()
            for i in self.cols[j]:
                for k in self.rows[i]:
                    if k != j:
                        self.cols[k].add(i)

    def solve(self) -> Iterator[tuple[int, ...]]:
        chosen: list[int] = []

        def search() -> Iterator[tuple[int, ...]]:
            if not self.cols:
                yield tuple(sorted(chosen))
                return
            col = min(self.cols, key=lambda c: (len(self.cols[c]), c))
            for r in sorted(self.cols[col]):
                chosen.append(r)
                removed = self._select(r)
                yield from search()
                self._deselect(r, removed)
                chosen.pop()

        yield from search()


def _checked(f: GraphLike, centers: tuple[int, ...]) -> StarPacking:
    g = _rotation_of(f)
    check = verify_packing(g, centers)
    if not check:
        raise TheoremViolation("solver soundness", f"{check.violation} at {check.vertex}")
    if g.n % 8:
        raise TheoremViolation("order divisible by 8", f"packing found on n = {g.n}")
    if isinstance(f, Fullerene):
        cs = set(centers)
        for p in f.pentagon_ids:
            if sum(v in cs for v in f.faces[p].boundary) > 1:
                raise TheoremViolation("at most one centre per pentagon", f"face {p}")
    return StarPacking.from_centers(g, centers)


def iter_packings(f: GraphLike, forbidden_centers: Iterable[int] = ()) -> Iterator[StarPacking]:
    """Lazily yield every packing (optionally with some vertices barred as centres)."""
    g = _rotation_of(f)
    for centers in _ExactCover(g, forbidden_centers).solve():
        yield _checked(f, centers)


def find_packing(f: GraphLike) -> Optional[StarPacking]:
    return next(iter_packings(f), None)


def find_p0_packing(f: Fullerene) -> Optional[StarPacking]:
    """A packing with no centre on a pentagon, if one exists."""
    return next(iter_packings(f, f.pentagon_vertices), None)


def enumerate_packings(f: GraphLike, limit: Optional[int] = None) -> list[StarPacking]:
    if limit is not None and limit <= 0:
        return []
    out = []
    for p in iter_packings(f):
        out.append(p)
        if limit is not None and len(out) >= limit:
            break
    return out


def count_packings(f: GraphLike, limit: Optional[int] = None) -> int:
    return len(enumerate_packings(f, limit))


def brute_force_packings(f: GraphLike) -> list[StarPacking]:
    """Independent oracle: branch on who dominates each vertex, in BFS order.

    The first vertex (in BFS order from 0) with no owner is assigned to a
    member w of its closed neighbourhood, which becomes a centre and owns
    all of N[w]; this requires N[w] to be entirely unowned.
    """
    g = _rotation_of(f)
    if g.n > ORACLE_MAX_N:
        raise TooLargeForOracle(f"oracle limited to n <= {ORACLE_MAX_N}, got {g.n}")
    order = []
    seen = [False] * g.n
    queue = deque([0])
    seen[0] = True
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in sorted(g.rot[v]):
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    closed = [(v,) + g.rot[v] for v in range(g.n)]
    owner = [-1] * g.n
    centers: list[int] = []
    results: list[tuple[int, ...]] = []

    def branch(pos: int) -> None:
        while pos < g.n and owner[order[pos]] != -1:
            pos += 1
        if pos == g.n:
            results.append(tuple(sorted(centers)))
            return
        v = order[pos]
        for w in closed[v]:
            if all(owner[u] == -1 for u in closed[w]):
                for u in closed[w]:
                    owner[u] = w
                centers.append(w)
                branch(pos + 1)
                centers.pop()
                for u in closed[w]:
                    owner[u] = -1

    branch(0)
    return [StarPacking.from_centers(g, c) for c in sorted(results)]
