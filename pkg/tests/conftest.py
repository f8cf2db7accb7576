import pytest

from starpack import fixtures
from starpack.fullerene_io import dodecahedron


@pytest.fixture(scope="session")
def c20():
    return dodecahedron()


@pytest.fixture(scope="session")
def c80_result():
    return fixtures.chamfered("C20")


@pytest.fixture(scope="session")
def c80(c80_result):
    return c80_result.graph


@pytest.fixture(scope="session")
def c60():
    return fixtures.fixture("C60-Ih")


@pytest.fixture(scope="session")
def corpus():
    """(name, fullerene, packing) for every packing of every fixture."""
    return fixtures.corpus_packings()


def cube_rotation():
    # 3-cube drawn as two nested squares, counterclockwise rotations
    return [
        (1, 3, 4), (2, 0, 5), (3, 1, 6), (0, 2, 7),
        (7, 5, 0), (4, 6, 1), (5, 7, 2), (6, 4, 3),
    ]


# acceptance summary: one PASS/FAIL line per criterion, printed at the end
_ACCEPTANCE: dict[int, tuple[str, str, str]] = {}


class _Criterion:
    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        detail = self.detail if exc_type is None else f"{exc_type.__name__}: {exc}"
        _ACCEPTANCE[self.number] = (status, self.title, detail)
        line = f"[criterion {self.number:2d}] {status}  {self.title}" + (f"  ({detail})" if detail else "")
        print(line)
        return False


@pytest.fixture
def criterion():
    return _Criterion


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, title, detail = _ACCEPTANCE[number]
        terminalreporter.write_line(f"{number:2d}. {status}  {title}" + (f"  ({detail})" if detail else ""))
