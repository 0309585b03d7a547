"""Exact linear algebra helpers: solving, determinants, Hermite and
Smith forms.  Random cases use fixed seeds so failures reproduce."""

import random
from fractions import Fraction as Q
from itertools import combinations
from math import gcd

import pytest

from weyl_ising.linalg import (
    det_bareiss,
    det_rational,
    dot,
    gram_matrix,
    hnf,
    hnf_with_transform,
    int_kernel,
    ldl_is_positive_definite,
    mat_mul,
    mat_vec,
    matrix_inverse,
    smith_invariants,
    solve,
    transpose,
    vec_add,
    vec_scale,
    vec_sub,
)


def unimodular_shuffle(rows, rng, steps=25):
    """Apply random invertible integer row operations."""
    rows = [list(r) for r in rows]
    n = len(rows)
    for _ in range(steps):
        op = rng.randrange(3)
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        if op == 0:
            rows[i], rows[j] = rows[j], rows[i]
        elif op == 1:
            rows[i] = [-x for x in rows[i]]
        else:
            c = rng.randrange(-3, 4)
            rows[i] = [a + c * b for a, b in zip(rows[i], rows[j])]
    return rows


def test_vector_helpers():
    assert dot([1, 2, 3], [4, 5, 6]) == 32
    assert vec_add((1, 2), (3, 4)) == (4, 6)
    assert vec_sub((1, 2), (3, 4)) == (-2, -2)
    assert vec_scale(Q(1, 2), (4, 6)) == (2, 3)
    assert gram_matrix([(1, 0), (1, 1)]) == [[1, 1], [1, 2]]


def test_matrix_helpers():
    a = [[1, 2], [3, 4]]
    b = [[0, 1], [1, 0]]
    assert mat_mul(a, b) == [[2, 1], [4, 3]]
    assert mat_vec(a, [1, 1]) == [3, 7]
    assert transpose(a) == [[1, 3], [2, 4]]


def test_solve_square():
    x = solve([[Q(2), Q(1)], [Q(1), Q(3)]], [Q(5), Q(10)])
    assert x == [Q(1), Q(3)]


def test_solve_inconsistent_returns_none():
    assert solve([[1, 1], [2, 2]], [1, 3]) is None


def test_solve_underdetermined():
    a = [[1, 2, 3]]
    x = solve(a, [6])
    assert x is not None
    assert dot(a[0], x) == 6


def test_solve_overdetermined_consistent():
    a = [[1, 0], [0, 1], [1, 1]]
    assert solve(a, [2, 3, 5]) == [Q(2), Q(3)]
    assert solve(a, [2, 3, 6]) is None


def test_matrix_inverse_round_trip():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(1, 5)
        m = [[Q(rng.randrange(-4, 5)) for _ in range(n)] for _ in range(n)]
        if det_rational(m) == 0:
            with pytest.raises(ZeroDivisionError):
                matrix_inverse(m)
            continue
        inv = matrix_inverse(m)
        eye = [[Q(int(i == j)) for j in range(n)] for i in range(n)]
        assert mat_mul(m, inv) == eye
        assert mat_mul(inv, m) == eye


def test_det_known_values():
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, -1], [-1, 2]]) == 3
    assert det_bareiss([[0, 1], [1, 0]]) == -1
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    assert det_bareiss([]) == 1
    assert det_rational([[Q(1, 2), 0], [0, Q(1, 3)]]) == Q(1, 6)


def test_det_matches_cofactor_expansion():
    def cofactor(m):
        n = len(m)
        if n == 0:
            return 1
        return sum(
            (-1) ** j * m[0][j] * cofactor(
                [row[:j] + row[j + 1:] for row in m[1:]])
            for j in range(n))

    rng = random.Random(11)
    for _ in range(30):
        n = rng.randrange(1, 5)
        m = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(m) == cofactor(m)
        assert det_rational(m) == cofactor(m)


def test_hnf_known_values():
    assert hnf([[2, 0], [0, 2]]) == [[2, 0], [0, 2]]
    assert hnf([[2, 4], [4, 2]]) == [[2, 4], [0, 6]]
    assert hnf([[0, 0], [0, 0]]) == []
    assert hnf([[-3]]) == [[3]]
    # regression: the entry above the last pivot must stay reduced even
    # though an earlier pivot column is cleared afterwards
    assert hnf([[4, -4, 3], [-1, -4, -2], [-3, 1, 3]]) == [
        [1, 0, 70],
        [0, 1, 98],
        [0, 0, 115],
    ]


def test_hnf_entries_above_pivots_reduced():
    rng = random.Random(23)
    for _ in range(150):
        n = rng.randrange(1, 5)
        m = rng.randrange(n, n + 3)
        rows = [[rng.randrange(-6, 7) for _ in range(m)] for _ in range(n)]
        h = hnf(rows)
        for k, row in enumerate(h):
            p = next(j for j in range(m) if row[j] != 0)
            assert row[p] > 0
            for above in h[:k]:
                assert 0 <= above[p] < row[p]


def test_hnf_is_invariant_under_row_operations():
    """Equal row spans must produce identical Hermite forms."""
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(1, 5)
        m = rng.randrange(n, n + 3)
        rows = [[rng.randrange(-5, 6) for _ in range(m)] for _ in range(n)]
        assert hnf(rows) == hnf(unimodular_shuffle(rows, rng))


def test_hnf_with_transform_recovers_form():
    rng = random.Random(41)
    for _ in range(120):
        n = rng.randrange(1, 5)
        m = rng.randrange(n, n + 3)
        rows = [[rng.randrange(-5, 6) for _ in range(m)] for _ in range(n)]
        h, u = hnf_with_transform(rows)
        assert abs(det_bareiss(u)) == 1
        prod = [
            [sum(u[i][k] * rows[k][j] for k in range(n)) for j in range(m)]
            for i in range(n)
        ]
        assert prod == h + [[0] * m for _ in range(n - len(h))]


def test_int_kernel_annihilates():
    rng = random.Random(17)
    for _ in range(80):
        n = rng.randrange(1, 5)
        m = rng.randrange(1, 4)
        mat = [[rng.randrange(-4, 5) for _ in range(m)] for _ in range(n)]
        ker = int_kernel(mat)
        for x in ker:
            assert all(
                sum(x[k] * mat[k][j] for k in range(n)) == 0 for j in range(m))
        rank = len(hnf(mat))
        assert len(ker) == n - rank


def test_int_kernel_known():
    assert int_kernel([[1, 2], [2, 4], [3, 6]]) == [[1, 1, -1], [0, 3, -2]]
    assert int_kernel([[1, 0], [0, 1]]) == []


def test_smith_invariants_known():
    assert smith_invariants([[1, 0], [0, 1]]) == []
    assert smith_invariants([[2, 0], [0, 2]]) == [2, 2]
    assert smith_invariants([[2, -1], [-1, 2]]) == [3]
    assert smith_invariants([[4, 0], [0, 6]]) == [2, 12]
    assert smith_invariants([[0, 0], [0, 0]]) == []
    assert smith_invariants([[2, 4, 4]]) == [2]


def test_smith_invariants_match_minor_gcds():
    """Independent check: the product d1*...*dk equals the gcd of all
    k by k minors."""

    def minor_gcd(m, k):
        n = len(m)
        g = 0
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                sub = [[m[i][j] for j in cols] for i in rows]
                g = gcd(g, det_bareiss(sub))
        return g

    rng = random.Random(29)
    for _ in range(40):
        n = rng.randrange(1, 4)
        m = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(n)]
        inv = smith_invariants(m)
        rank = len(hnf([row for row in m if any(row)]))
        full = [1] * (rank - len(inv)) + inv
        prod = 1
        for k in range(1, rank + 1):
            prod *= full[k - 1]
            assert prod == minor_gcd(m, k)
        for a, b in zip(full, full[1:]):
            assert b % a == 0


def test_ldl_positive_definite():
    assert ldl_is_positive_definite([[2, -1], [-1, 2]])
    assert ldl_is_positive_definite([[Q(1, 4)]])
    assert not ldl_is_positive_definite([[1, 2], [2, 1]])
    assert not ldl_is_positive_definite([[1, 1], [1, 1]])
    assert not ldl_is_positive_definite([[0]])
    assert not ldl_is_positive_definite([[-2, 0], [0, 3]])


def test_ldl_matches_gram_of_independent_vectors():
    rng = random.Random(31)
    for _ in range(40):
        n = rng.randrange(1, 5)
        vecs = [tuple(rng.randrange(-3, 4) for _ in range(n + 1))
                for _ in range(n)]
        g = gram_matrix(vecs)
        independent = det_rational(g) != 0
        assert ldl_is_positive_definite(g) == independent
