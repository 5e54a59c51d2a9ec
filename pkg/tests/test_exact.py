import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidforge.errors import SingularMatrixError
from braidforge.exact import (
    OMEGA,
    ONE,
    ZERO,
    Cyclotomic,
    Matrix,
    cyc_inv,
    cyc_mul,
    decode_matrix,
    decode_scalar,
    encode_matrix,
    encode_scalar,
    kernel_basis,
    mat_inverse,
    mat_rank,
)

from oracles import poly_mul_mod

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
cyclotomics = st.builds(Cyclotomic, rationals, rationals)


def random_cyc(rng, span=6):
    return Cyclotomic(Fraction(rng.randint(-span, span), rng.randint(1, 4)), rng.randint(-span, span))


def random_matrix(rng, rows, cols, density=1.0):
    return Matrix(rows, cols, [random_cyc(rng) if rng.random() < density else ZERO for _ in range(rows * cols)])


class TestScalars:
    def test_omega_squared(self):
        assert cyc_mul(OMEGA, OMEGA) == Cyclotomic(-1, -1)

    def test_one_plus_omega_squared(self):
        x = ONE + OMEGA
        expected = poly_mul_mod((1, 1), (1, 1))
        assert cyc_mul(x, x) == Cyclotomic(*expected) == OMEGA

    def test_rational_inverse_product(self):
        assert cyc_mul(Cyclotomic(3), Cyclotomic(Fraction(1, 3))) == ONE

    def test_inverses(self):
        assert cyc_inv(OMEGA) == Cyclotomic(-1, -1)
        assert cyc_inv(Cyclotomic(2)) == Cyclotomic(Fraction(1, 2))
        inv = cyc_inv(ONE + OMEGA)
        assert inv == -OMEGA
        assert (ONE + OMEGA) * inv == ONE

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            cyc_inv(ZERO)

    def test_omega_cubed(self):
        assert cyc_mul(OMEGA, cyc_mul(OMEGA, OMEGA)) == ONE
        assert ONE + OMEGA + OMEGA * OMEGA == ZERO

    def test_rationals_embed(self):
        assert Cyclotomic(Fraction(2, 3)) == Fraction(2, 3)
        assert Cyclotomic(5) + 1 == 6
        assert 2 * Cyclotomic(0, 1) == Cyclotomic(0, 2)

    @settings(max_examples=500)
    @given(cyclotomics, cyclotomics, cyclotomics)
    def test_field_axioms(self, x, y, z):
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x * y == y * x
        assert Cyclotomic(*poly_mul_mod((x.re, x.om), (y.re, y.om))) == x * y
        if x:
            assert x * cyc_inv(x) == ONE

    @given(cyclotomics)
    def test_norm_is_product_with_conjugate(self, x):
        assert x * x.conjugate() == x.norm()

    @given(cyclotomics)
    def test_scalar_roundtrip(self, x):
        assert decode_scalar(encode_scalar(x)) == x

    def test_scalar_encoding(self):
        assert encode_scalar(Cyclotomic(Fraction(-1, 2), Fraction(3, 4))) == [-1, 2, 3, 4]
        with pytest.raises(ValueError):
            decode_scalar([2, 4, 0, 1])
        with pytest.raises(ValueError):
            decode_scalar([1, -1, 0, 1])
        with pytest.raises(ValueError):
            decode_scalar([1, 1, 0])


class TestMatrices:
    def test_rank_identity(self):
        assert mat_rank(Matrix.identity(3)) == 3
        assert kernel_basis(Matrix.identity(3)) == []

    def test_rank_equal_rows(self):
        assert mat_rank(Matrix.from_rows([[1, 1], [1, 1]])) == 1

    @pytest.mark.parametrize("lam,rank", [(1, 1), (2, 2), (0, 2), (-1, 2)])
    def test_rank_vanishing_determinant(self, lam, rank):
        # det [[lam, 1], [1, 1]] = lam - 1
        assert mat_rank(Matrix.from_rows([[lam, 1], [1, 1]])) == rank

    def test_inverse_diagonal(self):
        m = Matrix.diag([Cyclotomic(2), Cyclotomic(Fraction(1, 2))])
        assert mat_inverse(m) == Matrix.diag([Cyclotomic(Fraction(1, 2)), Cyclotomic(2)])

    def test_inverse_adjugate(self):
        assert mat_inverse(Matrix.from_rows([[2, 1], [1, 1]])) == Matrix.from_rows([[1, -1], [-1, 2]])

    def test_inverse_singular(self):
        with pytest.raises(SingularMatrixError):
            mat_inverse(Matrix.from_rows([[1, 1], [1, 1]]))

    def test_random_inverses(self):
        rng = random.Random(11)
        done = 0
        while done < 60:
            n = rng.randint(1, 6)
            m = random_matrix(rng, n, n, density=0.7)
            if mat_rank(m) < n:
                continue
            inv = mat_inverse(m)
            assert inv @ m == Matrix.identity(n)
            assert m @ inv == Matrix.identity(n)
            done += 1

    def test_rank_nullity(self):
        rng = random.Random(5)
        for _ in range(200):
            rows, cols = rng.randint(1, 5), rng.randint(1, 5)
            m = random_matrix(rng, rows, cols, density=rng.choice([0.3, 0.6, 1.0]))
            if rng.random() < 0.3 and rows > 1:
                # force a dependent row
                r = [a + b for a, b in zip(m.row(0), m.row(1 % rows))]
                m = Matrix.from_rows([r] + [list(m.row(i)) for i in range(1, rows)])
            kernel = kernel_basis(m)
            assert mat_rank(m) + len(kernel) == cols
            for v in kernel:
                assert all(x == 0 for x in m.apply(v))

    def test_complex_rank_agrees(self):
        import numpy as np

        from oracles import matrix_to_complex

        rng = random.Random(8)
        for _ in range(50):
            m = random_matrix(rng, 4, 4, density=0.5)
            assert mat_rank(m) == np.linalg.matrix_rank(matrix_to_complex(m), tol=1e-9)

    def test_matrix_roundtrip(self):
        rng = random.Random(2)
        m = random_matrix(rng, 3, 2)
        assert decode_matrix(encode_matrix(m)) == m

    def test_immutable(self):
        m = Matrix.identity(2)
        with pytest.raises(AttributeError):
            m.rows = 3

    def test_trace_and_power(self):
        m = Matrix.from_rows([[0, 1], [-1, -1]])  # order 3
        assert m**3 == Matrix.identity(2)
        assert m.trace() == -1
        assert m**-1 == m @ m


def test_str():
    assert [str(x) for x in (OMEGA, -OMEGA, Cyclotomic(6, 3), Cyclotomic(2, -1), ONE)] == ["w", "-w", "6+3w", "2-w", "1"]
