"""Exact elimination: kernels, ranks, canonical bases, solving."""

import random

from weyl1 import RatMatrix, canonical_basis, nullspace, rank, rat, rref, solve
from weyl1.linalg import _to_sparse, solve_many


def test_nullspace_trivial_cases():
    assert nullspace(RatMatrix.identity(3)) == []
    basis = nullspace(RatMatrix.zeros(2, 3))
    assert basis == [
        [1, 0, 0],
        [0, 1, 0],
        [0, 0, 1],
    ]


def test_nullspace_rank_one():
    basis = nullspace(RatMatrix([[1, 2], [2, 4]]))
    assert len(basis) == 1
    v = basis[0]
    assert v[0] == 1 and v[1] == rat(-1, 2)  # proportional to (-2, 1)
    assert rank(RatMatrix([[1, 2], [2, 4]])) == 1


def test_nullspace_resubstitutes_to_zero():
    rng = random.Random(67)
    for _ in range(30):
        nrows, ncols = rng.randint(1, 6), rng.randint(1, 6)
        m = RatMatrix(
            [[rat(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(ncols)] for _ in range(nrows)]
        )
        for v in nullspace(m):
            assert all(s == 0 for s in m.mul_vector(v))
        assert len(nullspace(m)) + rank(m) == ncols


def test_rref_is_canonical():
    rows, pivots = rref(RatMatrix([[0, 2, 4], [0, 1, 2], [3, 0, 0]]))
    assert pivots == [0, 1]
    assert rows == [[1, 0, 0], [0, 1, 2]]
    # leading entries are 1 and pivot columns are cleared
    again, _ = rref(RatMatrix(rows))
    assert again == rows


def test_canonical_basis_is_span_invariant():
    b1 = canonical_basis([[1, 1, 0], [0, 1, 1]], 3)
    b2 = canonical_basis([[1, 2, 1], [2, 3, 1], [1, 1, 0]], 3)
    assert b1 == b2


def test_solve_particular_and_inconsistent():
    a = RatMatrix([[1, 1], [0, 1]])
    assert solve(a, [3, 1]) == [2, 1]
    assert solve(RatMatrix([[1], [0]]), [2, 1]) is None


def test_solve_many_is_per_column_consistent():
    rng = random.Random(71)
    for _ in range(25):
        nrows, ncols = rng.randint(1, 5), rng.randint(1, 5)
        rows = [
            [rat(rng.randint(-3, 3)) for _ in range(ncols)] for _ in range(nrows)
        ]
        m = RatMatrix(rows)
        rhs = [[rat(rng.randint(-3, 3)) for _ in range(nrows)] for _ in range(3)]
        sols = solve_many(_to_sparse(rows), ncols, rhs)
        for b, s in zip(rhs, sols):
            single = solve(m, b)
            if s is None:
                assert single is None
            else:
                dense = [s.get(j, rat(0)) for j in range(ncols)]
                assert single == dense
                assert m.mul_vector(dense) == [rat(v) for v in b]


def test_solution_stable_under_extra_columns():
    # appending columns on the right keeps the particular solution
    rows = [[1, 0], [0, 1]]
    wide = [[1, 0, 5], [0, 1, 7]]
    s1 = solve_many(_to_sparse(rows), 2, [[2, 3]])[0]
    s2 = solve_many(_to_sparse(wide), 3, [[2, 3]])[0]
    assert s1 == {0: 2, 1: 3}
    assert s2 == {0: 2, 1: 3}


def test_matrix_validation():
    import pytest

    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [3]])
    m = RatMatrix.from_columns([[1, 0], [0, 1]], 2)
    assert m.column(0) == [1, 0]
