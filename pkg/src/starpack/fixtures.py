"""Built-in fullerene fixtures, given as face spirals (1-based pentagon positions)."""

from __future__ import annotations

from functools import lru_cache

from .fullerene_io import spiral_to_graph
from .graph_core import Fullerene, validate_fullerene
from .packing_solver import StarPacking, enumerate_packings
from .transforms import ChamferResult, chamfer

# name -> (n, pentagon positions in the spiral)
SPIRALS: dict[str, tuple[int, tuple[int, ...]]] = {
    "C20": (20, tuple(range(1, 13))),
    "C24": (24, (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13)),
    "C26": (26, (1, 2, 3, 4, 5, 7, 9, 11, 12, 13, 14, 15)),
    "C28-a": (28, (1, 2, 3, 4, 5, 7, 10, 12, 13, 14, 15, 16)),
    "C28-b": (28, (1, 2, 3, 4, 5, 8, 11, 12, 13, 14, 15, 16)),
    "C28-c": (28, (1, 2, 3, 4, 6, 7, 10, 11, 13, 14, 15, 16)),
    "C30-tube": (30, (1, 2, 3, 4, 5, 6, 12, 13, 14, 15, 16, 17)),
    "C32-a": (32, (1, 2, 3, 4, 5, 7, 12, 14, 15, 16, 17, 18)),
    "C32-b": (32, (1, 2, 3, 4, 6, 7, 11, 14, 15, 16, 17, 18)),
    "C36-a": (36, (1, 2, 3, 4, 5, 7, 14, 16, 17, 18, 19, 20)),
    "C36-b": (36, (1, 2, 3, 4, 5, 10, 13, 14, 17, 18, 19, 20)),
    "C36-c": (36, (1, 2, 3, 4, 5, 12, 13, 15, 16, 18, 19, 20)),
    "C40-tube": (40, (1, 2, 3, 4, 5, 6, 17, 18, 19, 20, 21, 22)),
    "C40-b": (40, (1, 2, 3, 4, 5, 10, 13, 18, 19, 20, 21, 22)),
    "C44-a": (44, (3, 5, 6, 7, 9, 11, 13, 16, 18, 20, 22, 24)),
    "C44-b": (44, (1, 6, 8, 10, 11, 12, 13, 15, 16, 18, 23, 24)),
    "C44-c": (44, (7, 8, 11, 12, 13, 14, 16, 17, 18, 19, 22, 23)),
    "C48-a": (48, (2, 3, 4, 6, 8, 12, 13, 19, 22, 23, 24, 26)),
    "C48-b": (48, (1, 7, 9, 10, 11, 12, 13, 16, 18, 22, 23, 24)),
    "C52-a": (52, (2, 3, 8, 10, 12, 13, 14, 17, 20, 23, 24, 28)),
    "C52-b": (52, (1, 6, 10, 11, 12, 14, 17, 19, 20, 24, 25, 26)),
    "C52-c": (52, (6, 10, 11, 12, 13, 15, 16, 18, 19, 20, 22, 26)),
    "C56": (56, (1, 2, 5, 12, 16, 18, 19, 21, 23, 24, 26, 28)),
    "C60-Ih": (60, (1, 7, 9, 11, 13, 15, 18, 20, 22, 24, 26, 32)),
    "C60-a": (60, (1, 8, 13, 14, 15, 19, 20, 21, 25, 27, 31, 32)),
    "C60-b": (60, (4, 5, 6, 9, 10, 18, 19, 25, 28, 29, 30, 31)),
    "C64": (64, (1, 2, 6, 10, 12, 18, 24, 26, 27, 30, 31, 32)),
    "C70-D5h": (70, (1, 7, 9, 11, 13, 15, 27, 29, 31, 33, 35, 37)),
    "C72": (72, (4, 6, 8, 11, 17, 21, 22, 25, 27, 30, 35, 38)),
    "C88": (88, (2, 6, 9, 14, 18, 26, 28, 32, 34, 36, 43, 44)),
}

# chamfer images used as positive instances
CHAMFERED = ("C20", "C24", "C26", "C28-a", "C30-tube", "C32-a", "C40-tube", "C44-a")


def spiral_code(n: int, pentagons: tuple[int, ...]) -> list[int]:
    return [5 if i + 1 in pentagons else 6 for i in range(n // 2 + 2)]


@lru_cache(maxsize=None)
def fixture(name: str) -> Fullerene:
    """A named fullerene; ``chamfer(NAME)`` names the chamfer image of NAME."""
    if name.startswith("chamfer(") and name.endswith(")"):
        return chamfered(name[len("chamfer("):-1]).graph
    n, pentagons = SPIRALS[name]
    return validate_fullerene(spiral_to_graph(spiral_code(n, pentagons)))


@lru_cache(maxsize=None)
def chamfered(name: str) -> ChamferResult:
    return chamfer(fixture(name))


def names(max_n: int | None = None, include_chamfered: bool = True) -> list[str]:
    out = [k for k, (n, _) in SPIRALS.items() if max_n is None or n <= max_n]
    if include_chamfered:
        out += [f"chamfer({k})" for k in CHAMFERED if max_n is None or 4 * SPIRALS[k][0] <= max_n]
    return out


def corpus_packings() -> list[tuple[str, Fullerene, StarPacking]]:
    """Every packing of every fixture that has one (the chamfer images)."""
    out = []
    for name in names():
        f = fixture(name)
        for p in enumerate_packings(f):
            out.append((name, f, p))
    return out
