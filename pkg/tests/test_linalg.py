import random
from fractions import Fraction

import pytest
import sympy

from csforge.linalg import (
    NoNormalizedRow,
    RatMatrix,
    integer_content_normalize,
    left_null_space,
    rank,
    reduce_modulo,
    rref,
    solve_left,
    solve_ones_normalization,
)


def as_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m.entries])


def random_matrix(rng, rows, cols, rank_cap=None):
    if rank_cap is None:
        return RatMatrix([[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(cols)] for _ in range(rows)])
    a = [[rng.randint(-3, 3) for _ in range(rank_cap)] for _ in range(rows)]
    b = [[Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(cols)] for _ in range(rank_cap)]
    return RatMatrix([[sum(a[i][k] * b[k][j] for k in range(rank_cap)) for j in range(cols)] for i in range(rows)])


def test_null_space_of_single_column():
    basis = left_null_space(RatMatrix([[1], [-2]]))
    assert basis.rows == 1
    assert integer_content_normalize(basis.row(0))[0] == [2, 1]


def test_null_space_of_zero_matrix_is_identity():
    assert left_null_space(RatMatrix.zeros(3, 2)) == RatMatrix.identity(3)


def test_rank_examples():
    assert rank(RatMatrix.identity(3)) == 3
    assert rank(RatMatrix([[2, 1], [1, -2]])) == 2
    assert rank(RatMatrix([[1, 2, 3], [2, 4, 6]])) == 1


def test_ones_normalization_examples():
    kappa, k = solve_ones_normalization(RatMatrix([[2, 1]]), RatMatrix([[2], [1]]))
    assert (kappa, k) == ([2, 1], 5)
    kappa, k = solve_ones_normalization(RatMatrix([[1]]), RatMatrix([[2, 2]]))
    assert (kappa, k) == ([1], 2)


def test_ones_normalization_failure():
    with pytest.raises(NoNormalizedRow):
        solve_ones_normalization(RatMatrix([[1, 0]]), RatMatrix([[1, 0], [0, 1]]))


@pytest.mark.parametrize("seed", range(40))
def test_against_sympy(seed):
    rng = random.Random(seed)
    m = random_matrix(rng, 6, 4, rank_cap=rng.choice([None, 1, 2, 3]))
    ref = as_sympy(m)
    assert rank(m) == ref.rank()
    assert as_sympy(rref(m)) == ref.rref()[0][: ref.rank(), :]
    null = left_null_space(m)
    assert null.rows == 6 - ref.rank()
    assert (null @ m).is_zero()
    if null.rows:
        assert as_sympy(null).rank() == null.rows


@pytest.mark.parametrize("seed", range(20))
def test_solve_left(seed):
    rng = random.Random(100 + seed)
    m = random_matrix(rng, 5, 3)
    x_true = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(5)]
    target = m.vecmul(x_true)
    x = solve_left(m, target)
    assert m.vecmul(x) == target


def test_solve_left_inconsistent():
    assert solve_left(RatMatrix([[1, 1]]), [1, 2]) is None


def test_reduce_modulo_is_canonical():
    basis = RatMatrix([[1, 0, -1], [0, 1, 1]])
    v = [Fraction(3), Fraction(5), Fraction(7)]
    w = [a + 2 * b - 3 * c for a, b, c in zip(v, basis.row(0), basis.row(1))]
    assert reduce_modulo(v, basis) == reduce_modulo(w, basis)
    assert reduce_modulo(v, basis)[2] == 0


def test_content_normalize():
    assert integer_content_normalize([Fraction(1, 2), Fraction(1, 3)]) == ([3, 2], 6)
    with pytest.raises(ValueError):
        integer_content_normalize([0, 0])
