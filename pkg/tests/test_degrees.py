from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from artin_growth.coxeter import CoxeterMatrix, IrreducibleType, classify, decompose, make_named, mask_of
from artin_growth.degrees import count_positive_roots, deg_delta, fundamental_degree
from artin_growth.errors import ClosureExceededCap, NotFiniteType

from oracles import TAGS, degree_via_roots


@pytest.mark.parametrize(
    "tag,expected",
    [("A3", 6), ("B3", 9), ("D4", 12), ("E6", 36), ("E7", 63), ("E8", 120),
     ("F4", 24), ("H3", 15), ("H4", 60), ("I2(7)", 7)],
)
def test_fundamental_degree(tag, expected):
    assert fundamental_degree(IrreducibleType.parse(tag)) == expected


def test_count_positive_roots_examples():
    assert count_positive_roots(make_named("A", 2)) == 3
    assert count_positive_roots(make_named("H", 3)) == 15
    assert count_positive_roots(make_named("E", 8)) == 120


def test_count_positive_roots_affine_triangle_hits_cap():
    tri = CoxeterMatrix.from_edges(3, [(1, 2, 3), (2, 3, 3), (1, 3, 3)])
    with pytest.raises(ClosureExceededCap):
        count_positive_roots(tri, cap=5000)


@pytest.mark.parametrize("tag", [t for t in TAGS if t.rank <= 8], ids=str)
def test_table_matches_root_closure(tag):
    assert fundamental_degree(tag) == count_positive_roots(tag.matrix())


def test_deg_delta_examples():
    assert deg_delta(make_named("A", 5), mask_of([1, 2, 4])) == 4
    assert deg_delta(make_named("B", 4), mask_of([1, 2, 4])) == 5
    assert deg_delta(make_named("E", 7), 0) == 0
    assert deg_delta(make_named("D", 6), mask_of([4, 5, 6])) == 6


def test_deg_delta_propagates_not_finite():
    tri = CoxeterMatrix.from_edges(3, [(1, 2, 3), (2, 3, 3), (1, 3, 3)])
    assert deg_delta(tri, 0b011) == 3
    with pytest.raises(NotFiniteType):
        deg_delta(tri, 0b111)


@st.composite
def matrix_and_mask(draw):
    M = draw(st.sampled_from(TAGS)).matrix()
    return M, draw(st.integers(0, M.full_mask))


@given(matrix_and_mask())
def test_additivity(data):
    M, mask = data
    assert deg_delta(M, mask) == sum(deg_delta(M, c) for c in decompose(M, mask).components)


@given(matrix_and_mask())
def test_deg_delta_agrees_with_root_count_of_parabolic(data):
    M, mask = data
    assert deg_delta(M, mask) == degree_via_roots(M, mask)


@pytest.mark.parametrize("tag", [t for t in TAGS if t.rank >= 3], ids=str)
def test_monotone_under_adding_a_vertex(tag):
    M = tag.matrix()
    degs = [deg_delta(M, mask) for mask in range(1 << M.rank)]
    for mask in range(1 << M.rank):
        for v in range(M.rank):
            assert degs[mask] <= degs[mask | (1 << v)]


@pytest.mark.parametrize("family", ["A", "B", "D"])
def test_connected_type_a_subsets_have_triangular_degree(family):
    M = make_named(family, 9)
    for mask in range(1, 1 << 9):
        comps = decompose(M, mask).components
        if len(comps) == 1 and classify(M, mask).family == "A":
            j = mask.bit_count()
            assert deg_delta(M, mask) == comb(j + 1, 2)


def test_b_dichotomy_matches_positional_rule():
    # connected subsets containing {1, 2} have degree #J^2, others binom(#J+1, 2)
    l = 8
    M = make_named("B", l)
    for mask in range(1, 1 << l):
        if decompose(M, mask).k != 1:
            continue
        j = mask.bit_count()
        want = j * j if mask & 0b11 == 0b11 else comb(j + 1, 2)
        assert deg_delta(M, mask) == want


def test_d_trichotomy_matches_positional_rule():
    l = 8
    M = make_named("D", l)
    tail = mask_of([l - 1, l])
    for mask in range(1, 1 << l):
        if decompose(M, mask).k != 1:
            continue
        j = mask.bit_count()
        if mask & tail != tail:
            want = comb(j + 1, 2)
        elif mask == mask_of([l - 2, l - 1, l]):
            want = 6
        else:
            assert mask & mask_of([l - 3, l - 2, l - 1, l]) == mask_of([l - 3, l - 2, l - 1, l])
            want = j * (j - 1)
        assert deg_delta(M, mask) == want
