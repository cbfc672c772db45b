import random

import pytest
from hypothesis import given, settings, strategies as st

from schurminor.jacobi_trudi import (
    DeterminantCapError,
    build_P,
    det_bareiss,
    det_cofactor,
    det_hessenberg,
    hessenberg_rows,
    minor_rows,
    row_zero_pattern_check,
)
from schurminor.matrix import PolyMatrix, det_int
from schurminor.poly import MultiPoly
from schurminor.symmetric import elementary, signed_elementary
from schurminor.vandermonde import all_selections, build_extended, vandermonde_det

from conftest import P, leibniz_det, polys


def e(n, k):
    return signed_elementary(n, k)


def minus_one(n):
    return MultiPoly.const(n, -1)


def zero(n):
    return MultiPoly.zero(n)


class TestBuildP:
    def test_n2_r2(self):
        assert build_P(2, 2) == PolyMatrix.from_rows(
            [[e(2, 2), zero(2)], [e(2, 1), e(2, 2)], [minus_one(2), e(2, 1)]]
        )

    def test_r1(self):
        assert build_P(2, 1) == PolyMatrix.from_rows([[e(2, 2)], [e(2, 1)]])
        assert build_P(3, 1) == PolyMatrix.from_rows([[e(3, 3)], [e(3, 2)], [e(3, 1)]])

    @pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 5)])
    def test_shape_and_shift(self, n, r):
        Pm = build_P(n, r)
        assert (Pm.rows, Pm.cols) == (n + r - 1, r)
        first = [e(n, n - k + 1) for k in range(1, n + 1)] + [minus_one(n)]
        first += [zero(n)] * (n + r - 1 - len(first))
        assert list(Pm.column(1)) == first[: n + r - 1]
        for l in range(2, r + 1):
            assert list(Pm.column(l))[1:] == list(Pm.column(l - 1))[:-1]
            assert Pm[1, l].is_zero()

    def test_errors(self):
        with pytest.raises(ValueError):
            build_P(0, 1)
        with pytest.raises(ValueError):
            build_P(2, 0)


class TestMinorRows:
    def test_examples(self):
        P22 = build_P(2, 2)
        assert minor_rows(P22, (1, 2)) == PolyMatrix.from_rows([[e(2, 2), zero(2)], [e(2, 1), e(2, 2)]])
        assert minor_rows(P22, (2, 3)) == PolyMatrix.from_rows([[e(2, 1), e(2, 2)], [minus_one(2), e(2, 1)]])

    @pytest.mark.parametrize("n,r", [(2, 3), (3, 2), (4, 4)])
    def test_top_rows_triangular(self, n, r):
        Q = minor_rows(build_P(n, r), range(1, r + 1))
        for a in range(1, r + 1):
            assert Q[a, a] == e(n, n)
            for b in range(a + 1, r + 1):
                assert Q[a, b].is_zero()

    def test_errors(self):
        P22 = build_P(2, 2)
        with pytest.raises(ValueError):
            minor_rows(P22, (1,))
        with pytest.raises(ValueError):
            minor_rows(P22, (2, 1))
        with pytest.raises(IndexError):
            minor_rows(P22, (3, 4))


class TestCofactor:
    def test_examples(self):
        assert det_cofactor(PolyMatrix.from_ints([[1]])) == MultiPoly.const(1, 1)
        Q = PolyMatrix.from_rows([[e(2, 1), e(2, 2)], [minus_one(2), e(2, 1)]])
        assert det_cofactor(Q) == P("x1^2 + x1*x2 + x2^2", 2)
        assert det_cofactor(build_extended(3, 0)) == vandermonde_det(3)

    def test_cap(self):
        big = PolyMatrix.from_ints([[int(i == j) for j in range(9)] for i in range(9)])
        with pytest.raises(DeterminantCapError):
            det_cofactor(big)
        assert det_cofactor(big, cap=9) == MultiPoly.const(1, 1)

    def test_non_square(self):
        with pytest.raises(ValueError):
            det_cofactor(build_P(2, 2))
        with pytest.raises(ValueError):
            det_bareiss(build_P(2, 2))

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda k: st.lists(polys(num_vars=2, max_terms=3, max_deg=2), min_size=k * k, max_size=k * k)))
    def test_matches_leibniz(self, flat):
        k = int(len(flat) ** 0.5)
        grid = [flat[i * k:(i + 1) * k] for i in range(k)]
        A = PolyMatrix.from_rows(grid)
        assert det_cofactor(A) == leibniz_det(grid, MultiPoly.zero(2), MultiPoly.const(2, 1))


class TestBareiss:
    def test_one_by_one(self):
        entry = P("3*x1 - x2", 2)
        assert det_bareiss(PolyMatrix.from_rows([[entry]])) == entry

    def test_random_integer_matrices(self):
        rng = random.Random(2024)
        for _ in range(100):
            k = rng.randint(1, 5)
            rows = [[rng.randint(-9, 9) for _ in range(k)] for _ in range(k)]
            A = PolyMatrix.from_ints(rows)
            assert det_bareiss(A) == det_cofactor(A)
            assert det_int(rows) == leibniz_det(rows, 0, 1)

    def test_zero_pivot_needs_swap(self):
        rows = [[0, 1, 2], [3, 0, 1], [4, 5, 0]]
        assert det_int(rows) == leibniz_det(rows, 0, 1)

    def test_singular(self):
        assert det_bareiss(PolyMatrix.from_ints([[0, 1], [0, 2]])).is_zero()
        assert det_int([[1, 2], [2, 4]]) == 0

    def test_q_minors_n3_r3(self):
        Pm = build_P(3, 3)
        for sel in all_selections(3, 3):
            Q = minor_rows(Pm, sel.j_set)
            assert det_bareiss(Q) == det_cofactor(Q)

    @pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 5)])
    def test_agrees_on_all_q_minors(self, n, r):
        Pm = build_P(n, r)
        for sel in all_selections(n, r):
            Q = minor_rows(Pm, sel.j_set)
            assert det_bareiss(Q) == det_cofactor(Q)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(1, 4).flatmap(lambda k: st.lists(polys(num_vars=2, max_terms=3, max_deg=2), min_size=k * k, max_size=k * k)))
    def test_polynomial_matrices(self, flat):
        k = int(len(flat) ** 0.5)
        A = PolyMatrix.from_rows([flat[i * k:(i + 1) * k] for i in range(k)])
        assert det_bareiss(A) == det_cofactor(A)


class TestHessenberg:
    def test_examples(self):
        assert det_hessenberg(3, 0) == MultiPoly.const(3, 1)
        assert det_hessenberg(2, 2) == e(2, 1) ** 2 + e(2, 2)
        h3 = det_hessenberg(2, 3)
        assert h3 == e(2, 1) ** 3 + 2 * e(2, 1) * e(2, 2)
        assert h3 == P("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2)

    def test_negative(self):
        with pytest.raises(ValueError):
            det_hessenberg(2, -1)

    @pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 7)])
    def test_matches_direct_determinant(self, n, r):
        Q = minor_rows(build_P(n, r), hessenberg_rows(n, r))
        assert det_hessenberg(n, r) == det_cofactor(Q)


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 5)])
def test_triangular_minor(n, r):
    Q = minor_rows(build_P(n, r), range(1, r + 1))
    d = det_bareiss(Q)
    assert d == e(n, n) ** r
    signed = d if (n - 1) * r % 2 == 0 else -d
    assert signed == elementary(n, n) ** r
    assert signed == MultiPoly.monomial((r,) * n)


class TestZeroPattern:
    def test_examples(self):
        Q = minor_rows(build_P(2, 2), (1, 3))
        assert Q[1, 2].is_zero() and Q[2, 1] == minus_one(2)
        assert row_zero_pattern_check(2, 2, (1, 3))
        assert row_zero_pattern_check(4, 3, (1, 2, 3))
        assert row_zero_pattern_check(1, 3, (1, 2, 3))

    def test_all_minors(self):
        for n in range(1, 5):
            for r in range(1, 5):
                assert all(row_zero_pattern_check(n, r, s.j_set) for s in all_selections(n, r))
