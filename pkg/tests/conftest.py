from itertools import permutations

import pytest
from hypothesis import strategies as st

from schurminor.poly import MultiPoly


def perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(grid, zero, one):
    """Determinant as a signed sum over permutations; test-side oracle only."""
    size = len(grid)
    total = zero
    for perm in permutations(range(size)):
        term = one
        for i, j in enumerate(perm):
            term = term * grid[i][j]
        total = total + term if perm_sign(perm) > 0 else total - term
    return total


def P(text: str, n: int) -> MultiPoly:
    from schurminor.poly import parse_text

    return parse_text(text, n)


@st.composite
def polys(draw, num_vars=None, max_terms=6, max_deg=4, coeff=9):
    nv = num_vars if num_vars is not None else draw(st.integers(1, 4))
    exps = st.lists(st.integers(0, max_deg), min_size=nv, max_size=nv).filter(lambda e: sum(e) <= max_deg)
    items = draw(st.lists(st.tuples(exps, st.integers(-coeff, coeff)), max_size=max_terms))
    terms = {}
    for e, c in items:
        terms[tuple(e)] = terms.get(tuple(e), 0) + c
    return MultiPoly(nv, terms)


@pytest.fixture
def x():
    """x(n) -> [x1, ..., xn]."""
    from schurminor.poly import variables

    return variables


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
