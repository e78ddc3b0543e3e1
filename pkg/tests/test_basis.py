import itertools
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nliesuper.basis import (
    GradedDimension,
    InvalidIndexError,
    enumerate_monomials,
    is_canonical,
    normalize_tuple,
)
from nliesuper.bounds import abelian_multiplier_dim

D21 = GradedDimension(2, 1)


def test_normalize_examples():
    assert normalize_tuple((1, 0), GradedDimension(2, 0)) == (-1, (0, 1))
    assert normalize_tuple((0, 0), GradedDimension(0, 1)) == (1, (0, 0))
    assert normalize_tuple((0, 0, 2), GradedDimension(3, 0)) == (0, None)


def test_enumerate_examples():
    assert len(enumerate_monomials(2, GradedDimension(3, 0))) == 3
    assert enumerate_monomials(2, GradedDimension(0, 1)) == [(0, 0)]
    assert enumerate_monomials(2, D21) == [(0, 1), (0, 2), (1, 2), (2, 2)]


def test_invalid_index():
    with pytest.raises(InvalidIndexError):
        D21.parity(3)
    with pytest.raises(InvalidIndexError):
        normalize_tuple((0, 5), D21)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m,k", [(0, 0), (3, 0), (0, 3), (2, 2), (3, 1), (1, 3)])
def test_monomial_count_matches_closed_form(n, m, k):
    assert len(enumerate_monomials(n, GradedDimension(m, k))) == abelian_multiplier_dim(n, m, k)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("m,k", [(3, 0), (0, 3), (2, 2)])
def test_monomials_are_canonical_and_sorted(n, m, k):
    dims = GradedDimension(m, k)
    monos = enumerate_monomials(n, dims)
    assert monos == sorted(set(monos))
    assert all(is_canonical(x, dims) for x in monos)
    raw = {normalize_tuple(t, dims)[1] for t in itertools.product(range(m + k), repeat=n)}
    assert raw - {None} == set(monos)


def _koszul_sign(t, m):
    """Product over inverted pairs; equals the sign of any sorting sequence."""
    s = 1
    for i, j in itertools.combinations(range(len(t)), 2):
        if t[i] > t[j]:
            s *= -((-1) ** ((t[i] >= m) * (t[j] >= m)))
    return s


@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_sign_matches_inversion_product(m, k, data):
    d = m + k
    if d == 0:
        return
    n = data.draw(st.integers(1, 4))
    t = tuple(data.draw(st.lists(st.integers(0, d - 1), min_size=n, max_size=n)))
    sign, mono = normalize_tuple(t, GradedDimension(m, k))
    evens = [i for i in t if i < m]
    if len(set(evens)) < len(evens):
        assert (sign, mono) == (0, None)
    else:
        assert mono == tuple(sorted(t))
        assert sign == _koszul_sign(t, m)


def test_even_element_past_two_odd_elements():
    dims = GradedDimension(1, 2)
    # each even/odd swap contributes -1
    assert normalize_tuple((1, 1, 0), dims) == (1, (0, 1, 1))
    assert normalize_tuple((1, 0, 1), dims) == (-1, (0, 1, 1))
    assert normalize_tuple((2, 1), dims) == (1, (1, 2))


def test_count_formula_examples():
    assert len(enumerate_monomials(2, GradedDimension(4, 0))) == comb(4, 2)
    assert len(enumerate_monomials(3, GradedDimension(0, 2))) == comb(4, 3)
