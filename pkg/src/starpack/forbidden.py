"""Local configurations that rule out a type-P0 packing.

In a type-P0 packing every pentagon vertex is a leaf, so the neighbour of a
pentagon vertex off that pentagon must be a centre. The templates below are
two distinct pentagons P, Q joined by a short path that leaves P and enters
Q along off-pentagon edges:

* PP1: v1 - v2                      (v2 would have to be a centre)
* PP3: v1 - x1 - x2 - v2            (adjacent forced centres x1, x2)
* PP4: v1 - x1 - x2 - x3 - v2       (forced centres x1, x3 both dominate x2)

A path of length 2 forces a single shared centre and is harmless, which is
why there is no PP2. Two pentagons sharing an edge are reported separately.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .graph_core import Fullerene


class ForbiddenKind(enum.Enum):
    EDGE_SHARING_PENTAGONS = "EdgeSharingPentagons"
    PP1 = "PP1"
    PP3 = "PP3"
    PP4 = "PP4"


_PATH_KINDS = {1: ForbiddenKind.PP1, 3: ForbiddenKind.PP3, 4: ForbiddenKind.PP4}
_ORDER = list(ForbiddenKind)


@dataclass(frozen=True)
class ForbiddenMatch:
    kind: ForbiddenKind
    vertices: tuple[int, ...]  # path order for PPk, sorted union for edge sharing
    pentagons: tuple[int, int]

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "vertices": list(self.vertices), "pentagons": list(self.pentagons)}


def _edge_sharing(f: Fullerene) -> list[ForbiddenMatch]:
    out = []
    pents = f.pentagon_ids
    for i, p in enumerate(pents):
        for q in pents[i + 1:]:
            shared = set(f.faces[p].boundary) & set(f.faces[q].boundary)
            # faces of a 3-connected plane graph meet in an edge or not at all
            if len(shared) >= 2:
                union = set(f.faces[p].boundary) | set(f.faces[q].boundary)
                out.append(ForbiddenMatch(ForbiddenKind.EDGE_SHARING_PENTAGONS, tuple(sorted(union)), (p, q)))
    return out


def _pentagon_paths(f: Fullerene) -> list[ForbiddenMatch]:
    pent_of: dict[int, list[int]] = {}
    for p in f.pentagon_ids:
        for v in f.faces[p].boundary:
            pent_of.setdefault(v, []).append(p)

    found: dict[tuple, ForbiddenMatch] = {}

    def record(length: int, path: list[int], p: int, q: int) -> None:
        key = (length, frozenset((p, q)), frozenset(path))
        if key not in found:
            if (p, q) != tuple(sorted((p, q))):
                path = path[::-1]
                p, q = q, p
            found[key] = ForbiddenMatch(_PATH_KINDS[length], tuple(path), (p, q))

    for p in f.pentagon_ids:
        pset = set(f.faces[p].boundary)
        for v1 in f.faces[p].boundary:
            (x1,) = [w for w in f.neighbors(v1) if w not in pset]
            stack = [[v1, x1]]
            while stack:
                path = stack.pop()
                end = path[-1]
                length = len(path) - 1
                if length in _PATH_KINDS:
                    for q in pent_of.get(end, ()):
                        qset = set(f.faces[q].boundary)
                        if q == p or v1 in qset or path[-2] in qset:
                            continue
                        if any(x in pset or x in qset for x in path[1:-1]):
                            continue
                        if end in pset:
                            continue
                        record(length, path, p, q)
                if length < 4:
                    for w in f.neighbors(end):
                        if w not in path and w not in pset:
                            stack.append(path + [w])
    return list(found.values())


def scan_forbidden(f: Fullerene) -> list[ForbiddenMatch]:
    """All matches, ordered by kind, pentagon pair, then witness."""
    matches = _edge_sharing(f) + _pentagon_paths(f)
    return sorted(matches, key=lambda m: (_ORDER.index(m.kind), m.pentagons, m.vertices))


def precludes_p0(f: Fullerene) -> tuple[bool, Optional[ForbiddenMatch]]:
    matches = scan_forbidden(f)
    return bool(matches), (matches[0] if matches else None)
