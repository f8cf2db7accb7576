import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starpack import fixtures
from starpack.errors import NotRegular
from starpack.spectral import (
    adjacency_matrix,
    bareiss_determinant,
    det_shifted_adjacency,
    has_minus_one_eigenvalue,
)

from .conftest import cube_rotation


def fraction_det(m):
    """Oracle: plain Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            factor = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= factor * a[k][j]
    assert det.denominator == 1
    return int(det)


def complete(m):
    return [[w for w in range(m) if w != v] for v in range(m)]


def cycle(k):
    return [[(v - 1) % k, (v + 1) % k] for v in range(k)]


PETERSEN = [
    [1, 4, 5], [0, 2, 6], [1, 3, 7], [2, 4, 8], [3, 0, 9],
    [0, 7, 8], [1, 8, 9], [2, 9, 5], [3, 5, 6], [4, 6, 7],
]


def test_dodecahedron_determinant(c20):
    # spectrum 3, sqrt5 (x3), 1 (x5), 0 (x4), -2 (x4), -sqrt5 (x3)
    # product of (lambda + 1): 4 * (1 + sqrt5)^3 (1 - sqrt5)^3 * 2^5 * 1 * (-1)^4 = 4 * (-64) * 32
    assert det_shifted_adjacency(c20, 1) == -8192
    assert not has_minus_one_eigenvalue(c20)


def test_chamfer_dodecahedron_singular(c80):
    assert det_shifted_adjacency(c80, 1) == 0
    assert has_minus_one_eigenvalue(c80)


def test_against_fraction_oracle(c20, c80):
    for g in (c20, c80, fixtures.fixture("C24"), fixtures.fixture("C28-a")):
        a = adjacency_matrix(g)
        for shift in (-3, -1, 0, 1, 2):
            m = [row[:] for row in a]
            for v in range(len(m)):
                m[v][v] += shift
            assert bareiss_determinant(m) == fraction_det(m)


@pytest.mark.parametrize("m", range(2, 9))
@pytest.mark.parametrize("shift", [-2, 0, 1, 3])
def test_complete_graphs(m, shift):
    # eigenvalues m - 1 (once) and -1 (m - 1 times)
    assert det_shifted_adjacency(complete(m), shift) == (m - 1 + shift) * (shift - 1) ** (m - 1)
    assert has_minus_one_eigenvalue(complete(m))


@pytest.mark.parametrize("k", range(3, 16))
def test_cycles(k):
    # eigenvalues 2 cos(2 pi j / k); -1 occurs iff 3 divides k
    assert has_minus_one_eigenvalue(cycle(k)) == (k % 3 == 0)


def test_petersen_and_cube():
    # Petersen: 3, 1 (x5), -2 (x4)
    assert det_shifted_adjacency(PETERSEN, 1) == 4 * 2**5
    # cube: 3, 1 (x3), -1 (x3), -3
    assert has_minus_one_eigenvalue(cube_rotation())


@pytest.mark.parametrize("name", ["C20", "C24", "C60-Ih", "chamfer(C20)"])
def test_shift_minus_degree_is_singular(name):
    assert det_shifted_adjacency(fixtures.fixture(name), -3) == 0


def test_non_regular_rejected():
    with pytest.raises(NotRegular):
        adjacency_matrix([[1], [0, 2], [1]])
    with pytest.raises(NotRegular):
        adjacency_matrix([[1], []])
    with pytest.raises(NotRegular):
        adjacency_matrix([[0, 1], [0, 1]])


def test_bareiss_edge_cases():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[7]]) == 7
    assert bareiss_determinant([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        bareiss_determinant([[1, 2]])


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=5, max_size=5), min_size=5, max_size=5))
def test_bareiss_matches_oracle_on_random_matrices(m):
    assert bareiss_determinant(m) == fraction_det(m)


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_relabelling_invariance(seed):
    f = fixtures.fixture("C28-b")
    perm = list(range(f.n))
    random.Random(seed).shuffle(perm)
    assert det_shifted_adjacency(f.graph.relabel(perm), 1) == det_shifted_adjacency(f, 1)
