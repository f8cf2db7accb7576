"""Machine checks of the structural theorems on a concrete (fullerene, packing) pair.

Every check that a proven theorem guarantees raises TheoremViolation when it
fails; the report is therefore a regression harness as much as a summary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    FacialInput,
    InvalidPacking,
    NonCycleComponent,
    NotACenter,
    TheoremViolation,
    UnclassifiableCenter,
)
from .graph_core import Fullerene, cycle_sides, is_induced_cycle
from .packing_solver import StarPacking, verify_packing
from .spectral import has_minus_one_eigenvalue


class CenterLocalType(enum.Enum):
    TYPE1 = "Type1"  # three hexagons, all three antipodes are centres
    TYPE2 = "Type2"  # three hexagons, exactly two antipodes are centres
    TYPE3 = "Type3"  # one pentagon; both hexagon antipodes are centres


@dataclass(frozen=True)
class ComplementCycle:
    vertices: tuple[int, ...]
    facial: bool
    length: int
    n2: Optional[int] = None
    n3: Optional[int] = None
    side_components: Optional[tuple[tuple[int, ...], ...]] = None
    pentagons_sharing_edge: Optional[int] = None

    @property
    def odd(self) -> bool:
        return self.length % 2 == 1

    def edges(self) -> set[frozenset[int]]:
        vs = self.vertices
        return {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}

    def to_dict(self) -> dict:
        d = {"vertices": list(self.vertices), "facial": self.facial, "length": self.length}
        if not self.facial:
            d.update(
                n2=self.n2,
                n3=self.n3,
                side_components=[list(c) for c in self.side_components or ()],
                pentagons_sharing_edge=self.pentagons_sharing_edge,
            )
        return d


@dataclass(frozen=True)
class PackingReport:
    n: int
    centers: tuple[int, ...]
    p0: bool
    center_types: Mapping[int, CenterLocalType]
    complement_cycles: tuple[ComplementCycle, ...]
    odd_cycle_count: int
    pentagon_center_counts: Mapping[int, int]
    hexagon_center_counts: Mapping[int, int]
    divisible_by_8: bool
    eigenvalue_minus_one: Optional[bool]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "centers": list(self.centers),
            "p0": self.p0,
            "center_types": {str(v): t.value for v, t in sorted(self.center_types.items())},
            "complement_cycles": [c.to_dict() for c in self.complement_cycles],
            "odd_cycle_count": self.odd_cycle_count,
            "pentagon_center_counts": {str(k): v for k, v in sorted(self.pentagon_center_counts.items())},
            "hexagon_center_counts": {str(k): v for k, v in sorted(self.hexagon_center_counts.items())},
            "divisible_by_8": self.divisible_by_8,
            "eigenvalue_minus_one": self.eigenvalue_minus_one,
        }


def _facial(f: Fullerene, vertices: Sequence[int]) -> bool:
    vs = frozenset(vertices)
    return any(face.size == len(vs) and frozenset(face.boundary) == vs for face in f.faces)


def complement_cycles(f: Fullerene, s: StarPacking) -> list[ComplementCycle]:
    """Components of G - C(S), each certified to be an induced cycle."""
    centers = s.center_set
    rest = [v for v in range(f.n) if v not in centers]
    nbrs = {v: sorted(w for w in f.neighbors(v) if w not in centers) for v in rest}
    for v in rest:
        if len(nbrs[v]) != 2:
            raise NonCycleComponent(f"vertex {v} has degree {len(nbrs[v])} in G - C(S)")
    seen: set[int] = set()
    out = []
    for start in rest:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, nbrs[start][0]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        if not is_induced_cycle(f, cyc):
            raise TheoremViolation("complement cycles are chordless", f"cycle {cyc}")
        out.append(ComplementCycle(tuple(cyc), _facial(f, cyc), len(cyc)))
    return out


def packing_from_decomposition(f: Fullerene, independent_set: Iterable[int]) -> StarPacking:
    """Rebuild the packing from an independent set whose complement is a union of induced cycles."""
    centers = set(independent_set)
    for v in centers:
        if any(w in centers for w in f.neighbors(v)):
            raise InvalidPacking(f"{v} and a neighbour are both in the set")
    s = StarPacking.from_centers(f, centers)
    try:
        complement_cycles(f, s)
    except NonCycleComponent as exc:
        raise InvalidPacking(str(exc)) from exc
    check = verify_packing(f, s.centers)
    if not check:
        raise TheoremViolation("independent set plus induced cycles gives a packing", str(check))
    return s


def _antipode(f: Fullerene, face_id: int, v: int) -> int:
    b = f.faces[face_id].boundary
    return b[(b.index(v) + 3) % 6]


def classify_center(f: Fullerene, s: StarPacking, v: int) -> CenterLocalType:
    if v not in s.center_set:
        raise NotACenter(f"vertex {v} is not a centre")
    faces = f.vertex_faces[v]
    pentagons = [fid for fid in faces if f.faces[fid].size == 5]
    hexagons = [fid for fid in faces if f.faces[fid].size == 6]
    hits = sum(_antipode(f, h, v) in s.center_set for h in hexagons)
    if not pentagons:
        if hits == 3:
            return CenterLocalType.TYPE1
        if hits == 2:
            return CenterLocalType.TYPE2
    elif len(pentagons) == 1 and hits == 2:
        return CenterLocalType.TYPE3
    raise UnclassifiableCenter(
        f"centre {v}: {len(pentagons)} pentagon(s), {hits} antipodal centre(s)"
    )


def _side_runs(labels: Sequence[int]) -> list[tuple[int, int]]:
    """Maximal cyclic runs of equal labels as (start index, length)."""
    k = len(labels)
    start = next((i for i in range(k) if labels[i] != labels[i - 1]), None)
    if start is None:
        return [(0, k)]
    runs = []
    i = start
    while True:
        j = i
        length = 0
        while labels[j % k] == labels[i % k] and length < k:
            j += 1
            length += 1
        runs.append((i % k, length))
        i = j
        if i % k == start:
            return runs


def analyze_nonfacial_cycle(f: Fullerene, cycle: ComplementCycle) -> ComplementCycle:
    """Side decomposition of a non-facial complement cycle, with its counting identities."""
    if cycle.facial or _facial(f, cycle.vertices):
        raise FacialInput(f"cycle {cycle.vertices} is facial")
    vs = cycle.vertices
    k = len(vs)
    sides = cycle_sides(f, vs)
    on_cycle = set(vs)
    labels = []
    for v in vs:
        (other,) = [w for w in f.neighbors(v) if w not in on_cycle]
        labels.append(1 if other in sides.inside else 2)

    runs = _side_runs(labels)
    if len(runs) == 1:
        raise TheoremViolation("side components are paths", f"cycle {vs} has a single side")
    components = tuple(tuple(vs[(i + t) % k] for t in range(length)) for i, length in runs)
    bad = [c for c in components if len(c) not in (2, 3)]
    if bad:
        raise TheoremViolation("side components have 2 or 3 vertices", f"components {bad}")
    n2 = sum(len(c) == 2 for c in components)
    n3 = sum(len(c) == 3 for c in components)

    edges = cycle.edges()
    sharing = 0
    for p in f.pentagon_ids:
        if any(frozenset(e) in edges for e in f.faces[p].edges()):
            sharing += 1

    if k != 3 * n3 + 2 * n2:
        raise TheoremViolation("length = 3 n3 + 2 n2", f"{k} vs n2={n2}, n3={n3}")
    if (n2 + n3) % 2:
        raise TheoremViolation("n2 + n3 is even", f"n2={n2}, n3={n3}")
    if not (k % 2 == n2 % 2 == n3 % 2):
        raise TheoremViolation("length, n2, n3 share parity", f"{k}, {n2}, {n3}")
    if sharing != n2:
        raise TheoremViolation("pentagons sharing an edge = n2", f"{sharing} vs {n2}")
    return replace(
        cycle,
        facial=False,
        n2=n2,
        n3=n3,
        side_components=components,
        pentagons_sharing_edge=sharing,
    )


def three_neighbors_on_one_cycle(
    neighbors: Sequence[Sequence[int]],
    centers: Sequence[int],
    cycles: Sequence[Sequence[int]],
) -> list[int]:
    """Centres whose three neighbours all lie on a single cycle (raw checker)."""
    cycle_of = {}
    for i, cyc in enumerate(cycles):
        for v in cyc:
            cycle_of[v] = i
    bad = []
    for c in centers:
        ids = {cycle_of.get(w) for w in neighbors[c]}
        if len(ids) == 1 and None not in ids:
            bad.append(c)
    return bad


def three_neighbor_check(f: Fullerene, s: StarPacking) -> bool:
    cycles = [c.vertices for c in complement_cycles(f, s)]
    return not three_neighbors_on_one_cycle(f.graph.rot, s.centers, cycles)


def packing_report(f: Fullerene, s: StarPacking, spectral: bool = True) -> PackingReport:
    """Run every structural check on one packing and aggregate the results."""
    check = verify_packing(f, s.centers)
    if not check:
        raise InvalidPacking(f"{check.violation} at vertex {check.vertex}")
    centers = s.center_set

    pent_counts = {p: sum(v in centers for v in f.faces[p].boundary) for p in f.pentagon_ids}
    for p, c in pent_counts.items():
        if c > 1:
            raise TheoremViolation("at most one centre per pentagon", f"face {p} has {c}")
    for v in centers:
        if sum(f.faces[fid].size == 5 for fid in f.vertex_faces[v]) >= 2:
            raise TheoremViolation("a vertex on two pentagons is not a centre", f"vertex {v}")

    hex_counts = {}
    for h in f.hexagon_ids:
        b = f.faces[h].boundary
        on = [i for i, v in enumerate(b) if v in centers]
        if len(on) > 2 or (len(on) == 2 and on[1] - on[0] != 3):
            raise TheoremViolation("hexagon centres are at most two and antipodal", f"face {h}: {on}")
        hex_counts[h] = len(on)

    center_types = {}
    for v in s.centers:
        try:
            center_types[v] = classify_center(f, s, v)
        except UnclassifiableCenter as exc:
            raise TheoremViolation("local structure at a centre", str(exc)) from exc

    cycles = []
    for cyc in complement_cycles(f, s):
        cycles.append(cyc if cyc.facial else analyze_nonfacial_cycle(f, cyc))

    if three_neighbors_on_one_cycle(f.graph.rot, s.centers, [c.vertices for c in cycles]):
        raise TheoremViolation("no centre has three neighbours on one complement cycle")

    covered = [v for c in cycles for v in c.vertices]
    if len(covered) != len(set(covered)) or set(covered) | centers != set(range(f.n)):
        raise TheoremViolation("complement cycles partition V - C(S)")
    if f.n != len(centers) + sum(c.length for c in cycles):
        raise TheoremViolation("vertex count decomposition")

    nonfacial = [c for c in cycles if not c.facial]
    for p in f.pentagon_ids:
        pedges = {frozenset(e) for e in f.faces[p].edges()}
        touching = [c for c in nonfacial if pedges & c.edges()]
        if len(touching) > 1:
            raise TheoremViolation("a pentagon shares edges with at most one non-facial cycle", f"face {p}")
        if pent_counts[p] == 1:
            (x,) = [v for v in f.faces[p].boundary if v in centers]
            path_edges = {e for e in pedges if x not in e}
            if len(touching) != 1 or not path_edges <= touching[0].edges():
                raise TheoremViolation("pentagon minus its centre lies on a non-facial cycle", f"face {p}")

    odd = [c for c in cycles if c.odd]
    free_pentagons = sum(1 for c in pent_counts.values() if c == 0)
    if len(odd) != free_pentagons + sum(1 for c in nonfacial if c.odd):
        raise TheoremViolation("odd cycles are free pentagons plus odd non-facial cycles")
    if len(odd) % 2:
        raise TheoremViolation("even number of odd cycles", f"{len(odd)} odd cycles")
    if f.n % 8:
        raise TheoremViolation("order divisible by 8", f"n = {f.n}")

    p0 = all(c == 0 for c in pent_counts.values())
    if p0 and any(c.odd for c in nonfacial):
        raise TheoremViolation("type P0 has no odd non-facial cycle")

    eig = None
    if spectral:
        eig = has_minus_one_eigenvalue(f)
        if not eig:
            raise TheoremViolation("-1 is an eigenvalue", f"det(A + I) != 0 on n = {f.n}")

    return PackingReport(
        n=f.n,
        centers=s.centers,
        p0=p0,
        center_types=center_types,
        complement_cycles=tuple(cycles),
        odd_cycle_count=len(odd),
        pentagon_center_counts=pent_counts,
        hexagon_center_counts=hex_counts,
        divisible_by_8=f.n % 8 == 0,
        eigenvalue_minus_one=eig,
    )
