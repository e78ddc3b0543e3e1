import pytest

from nliesuper.algebra import (
    AlgebraError,
    direct_sum,
    make_abelian,
    make_filiform,
    make_heisenberg_nlie,
)
from nliesuper.invariants import (
    NotApplicableError,
    ad_map,
    center,
    derived_subalgebra,
    graded_dims,
    is_central,
    is_filiform,
    is_graded_ideal,
    lower_central_series,
    minimal_generators,
    nilpotency_class,
    project,
    quotient,
)
from nliesuper.linalg import full_space, span, unit_vector, zero_space
from nliesuper.verify import build_corpus, mixed_3lie, odd_square_lie

CORPUS = build_corpus()


def hplus(j, l, n=2):
    return direct_sum(make_heisenberg_nlie(n), make_abelian(n, (j, l)))


def test_derived_examples():
    assert derived_subalgebra(make_abelian(2, (2, 2))).dim == 0
    for n in (2, 3, 4):
        h = make_heisenberg_nlie(n)
        d = derived_subalgebra(h)
        assert graded_dims(h, d) == (1, 0) and d.basis == (unit_vector(n + 1, n),)
    for n, m in ((2, 4), (2, 6), (3, 5), (3, 6)):
        assert derived_subalgebra(make_filiform(n, m)).dim == m - n


def test_series_and_class():
    assert nilpotency_class(make_abelian(2, (3, 1))) == 1
    assert nilpotency_class(make_abelian(2, (0, 0))) == 0
    assert nilpotency_class(make_heisenberg_nlie(3)) == 2
    s = lower_central_series(make_filiform(3, 5))
    assert s.nilpotency_class == 3 and s.dims == [5, 2, 1, 0]
    # [y, y] = e with [e, .] = 0 is nilpotent; the odd square alone is not enough to break it
    assert nilpotency_class(odd_square_lie()) == 2


def test_non_nilpotent_series_stabilizes():
    from nliesuper.algebra import NLieSuperalgebra

    # [e1, e2] = e2 is solvable but not nilpotent
    alg = NLieSuperalgebra.from_brackets(2, (2, 0), {(0, 1): [0, 1]})
    s = lower_central_series(alg)
    assert s.nilpotency_class is None and s.dims == [2, 1, 1]
    assert minimal_generators(alg) == (2, 0)
    assert s.term(10).dim == 1


def test_center_examples():
    assert center(make_abelian(2, (2, 1))) == full_space(3)
    for n, m in ((2, 4), (2, 5), (3, 5), (3, 6)):
        f = make_filiform(n, m)
        assert center(f) == span([unit_vector(m, m - 1)], m)
    for m in (3, 4, 5):
        for k in (0, 1, 2):
            alg = hplus(m - 3, k)
            assert graded_dims(alg, center(alg)) == (m - 2, k)


def test_ad_map():
    assert not any(any(r) for r in ad_map(make_abelian(2, (2, 0)), (1, 1)).rows)
    h = make_heisenberg_nlie(2)
    ad = ad_map(h, unit_vector(3, 0))
    assert ad @ unit_vector(3, 1) == unit_vector(3, 2)
    assert not any(ad @ unit_vector(3, 0)) and not any(ad @ unit_vector(3, 2))
    with pytest.raises(AlgebraError):
        ad_map(h, unit_vector(3, 0), unit_vector(3, 1))


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_ad_rank_bounded_by_derived(name):
    alg = CORPUS[name]
    if alg.dim == 0:
        return
    l2 = derived_subalgebra(alg).dim
    xs = [unit_vector(alg.dim, i % alg.dim) for i in range(alg.arity - 1)]
    assert ad_map(alg, *xs).rank() <= l2


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_derived_and_center_are_graded_ideals(name):
    alg = CORPUS[name]
    assert is_graded_ideal(alg, derived_subalgebra(alg))
    assert is_graded_ideal(alg, center(alg))
    assert is_central(alg, center(alg))


def test_non_ideal():
    h = make_heisenberg_nlie(2)
    assert not is_graded_ideal(h, span([unit_vector(3, 0)], 3))


def test_quotients():
    h = make_heisenberg_nlie(2)
    assert quotient(h, full_space(3)).dim == 0
    assert quotient(h, center(h)) == make_abelian(2, (2, 0))
    f = make_filiform(2, 5)
    assert quotient(f, center(f)) == make_filiform(2, 4)
    assert quotient(f, zero_space(5)) == f
    with pytest.raises(AlgebraError):
        quotient(h, span([unit_vector(3, 0)], 3))
    assert project(h, center(h), (1, 2, 3)) == (1, 2)


def test_minimal_generators():
    assert minimal_generators(make_abelian(2, (2, 3))) == (2, 3)
    for n in (2, 3, 4):
        assert minimal_generators(make_heisenberg_nlie(n)) == (n, 0)
    for n, m in ((2, 5), (3, 5), (3, 6)):
        assert minimal_generators(make_filiform(n, m)) == (n, 0)
    assert minimal_generators(mixed_3lie()) == (1, 1)


def test_filiform_flag():
    for n, m in ((2, 3), (2, 4), (2, 6), (3, 4), (3, 6)):
        assert is_filiform(make_filiform(n, m))
    assert not is_filiform(make_abelian(2, (4, 0)))
    assert not is_filiform(hplus(1, 0))
    assert not is_filiform(hplus(2, 0, n=3))
    with pytest.raises(NotApplicableError):
        is_filiform(make_abelian(2, (1, 1)))


def test_invariants_report_examples():
    from nliesuper.cli import invariants_payload

    p = invariants_payload(make_filiform(3, 5))
    assert p["nilpotency_class"] == 3 and p["center"] == [1, 0] and p["minimal_generators"] == [3, 0]
    p = invariants_payload(make_abelian(2, (2, 2)))
    assert p["nilpotency_class"] == 1 and p["center"] == [2, 2]
    p = invariants_payload(hplus(0, 1))
    assert p["center"] == [1, 1] and p["derived"] == [1, 0]
