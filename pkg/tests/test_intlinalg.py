import random

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from quandlehom import IntMatrix, det, snf, solve_in_image
from quandlehom.intlinalg import is_unimodular


def random_matrix(rng, max_dim=8, bound=9):
    m = rng.randint(1, max_dim)
    n = rng.randint(1, max_dim)
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(m)])


def assert_smith_invariants(a, dec):
    assert (dec.U @ a @ dec.V) == dec.D
    assert is_unimodular(dec.U)
    assert is_unimodular(dec.V)
    diag = dec.diagonal
    for i in range(dec.D.rows):
        for j in range(dec.D.cols):
            if i != j:
                assert dec.D[i, j] == 0
    assert all(d >= 0 for d in diag)
    # zeros trail and the divisibility chain holds
    seen_zero = False
    for d in diag:
        if d == 0:
            seen_zero = True
        else:
            assert not seen_zero
    nonzero = [d for d in diag if d]
    for a_, b_ in zip(nonzero, nonzero[1:]):
        assert b_ % a_ == 0


class TestIntMatrix:
    def test_shapes_and_multiplication(self):
        a = IntMatrix([[1, 2], [3, 4], [5, 6]])
        assert a.shape == (3, 2)
        assert (a @ IntMatrix.identity(2)) == a
        assert (IntMatrix.identity(3) @ a) == a
        assert a.apply([1, -1]) == [-1, -1, -1]

    def test_empty_matrix_needs_explicit_cols(self):
        with pytest.raises(ValueError):
            IntMatrix([])
        m = IntMatrix([], cols=4)
        assert m.shape == (0, 4)

    def test_rejects_ragged_and_nonint(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])
        with pytest.raises(ValueError):
            IntMatrix([[1.5]])
        with pytest.raises(ValueError):
            IntMatrix([[True]])

    def test_immutability(self):
        a = IntMatrix([[1]])
        with pytest.raises(AttributeError):
            a.rows = 2
        rows = a.to_rows()
        rows[0][0] = 99
        assert a[0, 0] == 1


class TestDeterminant:
    def test_known_values(self):
        assert det(IntMatrix([[1]])) == 1
        assert det(IntMatrix([[2, 0], [0, 3]])) == 6
        assert det(IntMatrix([[0, 1], [1, 0]])) == -1
        assert det(IntMatrix([[1, 2], [2, 4]])) == 0

    def test_requires_square(self):
        with pytest.raises(ValueError):
            det(IntMatrix([[1, 2]]))

    def test_against_sympy_on_randoms(self):
        rng = random.Random(11)
        for _ in range(50):
            n = rng.randint(1, 6)
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert det(IntMatrix(rows)) == int(Matrix(rows).det())


class TestSmithNormalForm:
    def test_diag_2_3_gives_1_6(self):
        dec = snf(IntMatrix([[2, 0], [0, 3]]))
        assert dec.diagonal == (1, 6)
        assert_smith_invariants(IntMatrix([[2, 0], [0, 3]]), dec)

    def test_zero_matrix(self):
        a = IntMatrix.zeros(3, 2)
        dec = snf(a)
        assert dec.D == a
        assert_smith_invariants(a, dec)

    def test_one_by_one(self):
        dec = snf(IntMatrix([[1]]))
        assert dec.D == IntMatrix([[1]])
        dec = snf(IntMatrix([[-7]]))
        assert dec.diagonal == (7,)

    def test_invariants_on_200_random_matrices(self):
        rng = random.Random(2024)
        for _ in range(200):
            a = random_matrix(rng)
            assert_smith_invariants(a, snf(a))

    def test_invariant_factors_match_sympy(self):
        rng = random.Random(99)
        for _ in range(60):
            a = random_matrix(rng, max_dim=6)
            mine = [d for d in snf(a).diagonal if d]
            s = smith_normal_form(Matrix(a.to_rows()))
            theirs = [
                abs(int(s[i, i]))
                for i in range(min(s.rows, s.cols))
                if s[i, i] != 0
            ]
            assert mine == theirs

    def test_entries_can_exceed_fixed_width(self):
        # large entries force intermediate values past 64 bits
        big = 2**70
        a = IntMatrix([[big, big - 1], [big + 1, big]])
        dec = snf(a)
        assert_smith_invariants(a, dec)
        assert dec.diagonal == (1, abs(det(a)))


class TestSolveInImage:
    def test_simple_solvable(self):
        assert solve_in_image(IntMatrix([[2]]), [4]) == [2]

    def test_parity_obstruction(self):
        assert solve_in_image(IntMatrix([[2]]), [3]) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_in_image(IntMatrix([[1, 2]]), [1, 2])

    def test_completeness_on_constructed_systems(self):
        rng = random.Random(5)
        for _ in range(120):
            a = random_matrix(rng, max_dim=5)
            x0 = [rng.randint(-5, 5) for _ in range(a.cols)]
            b = a.apply(x0)
            x = solve_in_image(a, b)
            assert x is not None
            assert a.apply(x) == b

    def test_soundness_and_hnf_agreement_on_randoms(self):
        # independent oracle: b is in the integer column span of A iff
        # appending b as a column leaves the Hermite normal form unchanged
        rng = random.Random(17)
        for _ in range(120):
            a = random_matrix(rng, max_dim=5)
            b = [rng.randint(-9, 9) for _ in range(a.rows)]
            x = solve_in_image(a, b)
            if x is not None:
                assert a.apply(x) == b
            sym = Matrix(a.to_rows())
            augmented = sym.row_join(Matrix(a.rows, 1, b))
            oracle = hermite_normal_form(sym) == hermite_normal_form(augmented)
            assert (x is not None) == oracle

    def test_agreement_with_divisibility_criterion(self):
        rng = random.Random(23)
        for _ in range(120):
            a = random_matrix(rng, max_dim=5)
            b = [rng.randint(-9, 9) for _ in range(a.rows)]
            dec = snf(a)
            c = dec.U.apply(b)
            solvable = True
            for i in range(a.rows):
                d = dec.D[i, i] if i < min(a.rows, a.cols) else 0
                if d == 0:
                    solvable = solvable and c[i] == 0
                else:
                    solvable = solvable and c[i] % d == 0
            assert (solve_in_image(a, b) is not None) == solvable
