from itertools import combinations

import pytest

from schurminor.jacobi_trudi import det_bareiss, det_cofactor
from schurminor.matrix import PolyMatrix
from schurminor.poly import MultiPoly, poly_exact_div
from schurminor.vandermonde import (
    ColumnSelection,
    SelectionError,
    all_selections,
    build_extended,
    minor_matrix,
    sgn_from_i,
    sgn_from_j,
    vandermonde_det,
    verify_column_relation,
)

from conftest import P, leibniz_det


def test_build_extended_examples():
    assert build_extended(2, 1) == PolyMatrix.from_rows(
        [[MultiPoly.const(2, 1), P("x1", 2), P("x1^2", 2)], [MultiPoly.const(2, 1), P("x2", 2), P("x2^2", 2)]]
    )
    assert build_extended(1, 0) == PolyMatrix.from_rows([[MultiPoly.const(1, 1)]])
    V3 = build_extended(3, 0)
    assert (V3.rows, V3.cols) == (3, 3)
    assert V3[2, 3] == P("x2^2", 3)


def test_build_extended_errors():
    with pytest.raises(ValueError):
        build_extended(0, 1)
    with pytest.raises(ValueError):
        build_extended(2, -1)


def test_selection_complement():
    sel = ColumnSelection(3, 2, (1, 3))
    assert sel.j_set == (2, 4)
    assert set(sel.i_set) | set(sel.j_set) == set(range(1, 5))


@pytest.mark.parametrize(
    "n,r,i_set",
    [(2, 1, ()), (2, 1, (3,)), (3, 1, (2, 1)), (3, 1, (1, 1)), (2, 0, (1,)), (0, 1, ())],
)
def test_selection_validation(n, r, i_set):
    with pytest.raises(SelectionError):
        ColumnSelection(n, r, i_set)


def test_from_j_set():
    assert ColumnSelection.from_j_set(3, 1, (2,)).i_set == (1, 3)
    with pytest.raises(SelectionError):
        ColumnSelection.from_j_set(3, 1, (4,))


def test_minor_matrix_examples():
    one = MultiPoly.const(2, 1)
    assert minor_matrix(ColumnSelection(2, 1, (2,))) == PolyMatrix.from_rows(
        [[P("x1", 2), P("x1^2", 2)], [P("x2", 2), P("x2^2", 2)]]
    )
    assert minor_matrix(ColumnSelection(2, 1, (1,))) == PolyMatrix.from_rows(
        [[one, P("x1^2", 2)], [one, P("x2^2", 2)]]
    )
    V = build_extended(3, 1)
    assert minor_matrix(ColumnSelection(3, 1, (1, 2))) == V.select_columns((1, 2, 4))


def test_sgn_examples():
    assert sgn_from_i(ColumnSelection(2, 1, (2,))) == -1
    assert sgn_from_i(ColumnSelection(3, 1, (1, 2))) == 1
    assert sgn_from_i(ColumnSelection(1, 3, ())) == 1
    assert sgn_from_j(ColumnSelection.from_j_set(2, 1, (1,))) == -1
    assert sgn_from_j(ColumnSelection.from_j_set(3, 1, (3,))) == 1
    assert sgn_from_j(ColumnSelection.from_j_set(2, 2, (1, 2))) == 1


def test_sgn_forms_agree_exhaustively():
    count = 0
    for n in range(1, 6):
        for r in range(1, 5):
            for sel in all_selections(n, r):
                assert sgn_from_i(sel) == sgn_from_j(sel), sel
                count += 1
    assert count > 0


def test_selection_count():
    from math import comb

    for n in range(1, 5):
        for r in range(1, 4):
            assert len(list(all_selections(n, r))) == comb(n + r - 1, n - 1)


def test_vandermonde_examples():
    assert vandermonde_det(1) == MultiPoly.const(1, 1)
    assert vandermonde_det(2) == P("x2 - x1", 2)
    expected = leibniz_det(build_extended(3, 0).entries, MultiPoly.zero(3), MultiPoly.const(3, 1))
    assert vandermonde_det(3) == expected


@pytest.mark.parametrize("n", range(1, 6))
def test_vandermonde_matches_cofactor(n):
    assert vandermonde_det(n) == det_cofactor(build_extended(n, 0))


def test_column_relation_examples():
    assert verify_column_relation(2, 1, 1)
    assert verify_column_relation(3, 2, 2)
    assert verify_column_relation(1, 1, 1)


def test_column_relation_exhaustive():
    for n in range(1, 6):
        for r in range(1, 5):
            for p in range(1, r + 1):
                assert verify_column_relation(n, r, p), (n, r, p)


def test_column_relation_range():
    with pytest.raises(ValueError):
        verify_column_relation(2, 1, 2)


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 4)])
def test_minors_divisible_by_vandermonde(n, r):
    V = vandermonde_det(n)
    for sel in all_selections(n, r):
        d = det_bareiss(minor_matrix(sel))
        assert poly_exact_div(d, V) * V == d
