import pytest

from nliesuper.algebra import NLieSuperalgebra, direct_sum, make_abelian, make_filiform, make_heisenberg_nlie
from nliesuper.bounds import abelian_multiplier_dim, binom
from nliesuper.invariants import center
from nliesuper.linalg import span, unit_vector, zero_space
from nliesuper.multiplier import (
    CapacityError,
    NotCentralError,
    cocycle_system,
    multiplier_dim,
    multiplier_of_quotient,
)
from nliesuper.verify import mixed_3lie, odd_cube_3lie, odd_square_lie
from oracles import brute_multiplier


def hplus(j, l, n=2):
    return direct_sum(make_heisenberg_nlie(n), make_abelian(n, (j, l)))


ORACLE_CASES = {
    "H(2,1)": make_heisenberg_nlie(2),
    "H(3,1)": make_heisenberg_nlie(3),
    "F(2,4)": make_filiform(2, 4),
    "F(2,5)": make_filiform(2, 5),
    "H(2,1)+A(0|1)": hplus(0, 1),
    "H(2,1)+A(0|2)": hplus(0, 2),
    "A2(1|2)": make_abelian(2, (1, 2)),
    "A3(1|2)": make_abelian(3, (1, 2)),
    "S2(1|1)": odd_square_lie(),
    "S3(0|2)": odd_cube_3lie(),
    "M3(2|1)": mixed_3lie(),
    "solvable": NLieSuperalgebra.from_brackets(2, (2, 1), {(0, 1): [0, 1, 0], (0, 2): [0, 0, 1]}),
}


@pytest.mark.parametrize("name", sorted(ORACLE_CASES))
def test_matches_brute_force_oracle(name):
    alg = ORACLE_CASES[name]
    rep = multiplier_dim(alg)
    total, per = brute_multiplier(alg)
    assert rep.total == total
    assert (rep.even_Z2, rep.even_B2) == per[0]
    assert (rep.odd_Z2, rep.odd_B2) == per[1]


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("m,k", [(0, 0), (1, 0), (0, 1), (2, 1), (1, 2), (0, 3)])
def test_abelian(n, m, k):
    assert multiplier_dim(make_abelian(n, (m, k))).total == abelian_multiplier_dim(n, m, k)


def test_heisenberg_equalities():
    for m in range(3, 7):
        assert multiplier_dim(hplus(m - 3, 0)).total == (m - 1) * (m - 2) // 2 + 1
    for n in (2, 3):
        for m in range(n + 1, n + 4):
            alg = hplus(m - n - 1, 0, n)
            assert multiplier_dim(alg).total == binom(m - 1, n) + n - 1


def test_report_examples():
    rep = multiplier_dim(make_abelian(2, (3, 0)))
    assert (rep.total, rep.even_B2) == (3, 0)
    rep = multiplier_dim(make_heisenberg_nlie(2))
    assert rep.as_dict() == {"even_Z2": 3, "odd_Z2": 0, "even_B2": 1, "odd_B2": 0,
                             "even_M": 2, "odd_M": 0, "total": 2}
    assert multiplier_dim(make_heisenberg_nlie(3)).total == 3


def test_cocycle_system_examples():
    sys0 = cocycle_system(make_abelian(2, (2, 1)), 0)
    assert not sys0.rows.any() and sys0.nullity() == len(sys0.unknowns)
    h = cocycle_system(make_heisenberg_nlie(2), 0)
    assert h.nullity() == 3
    odd = cocycle_system(make_filiform(2, 4), 1)
    assert odd.unknowns == () and odd.nullity() == 0
    assert len(h.pairs) == h.rows.shape[0]
    assert h.constraint_matrix.ncols == 3


def test_quotient_multiplier():
    h = make_heisenberg_nlie(2)
    assert multiplier_of_quotient(h, zero_space(3)) == multiplier_dim(h)
    assert multiplier_of_quotient(h, center(h)).total == 1
    f = make_filiform(2, 4)
    assert multiplier_of_quotient(f, center(f)).total == 2
    with pytest.raises(NotCentralError):
        multiplier_of_quotient(h, span([unit_vector(3, 0)], 3))
    with pytest.raises(NotCentralError):
        multiplier_of_quotient(hplus(0, 1), span([(0, 0, 1, 1)], 4))


def test_capacity_limits():
    alg = make_filiform(2, 6)
    with pytest.raises(CapacityError, match="unknowns"):
        multiplier_dim(alg, max_unknowns=5)
    with pytest.raises(CapacityError, match="rows"):
        multiplier_dim(make_filiform(2, 5), max_rows=3)


def test_fractional_constants_do_not_change_dimension():
    from fractions import Fraction

    scaled = NLieSuperalgebra.from_brackets(2, (3, 0), {(0, 1): [0, 0, Fraction(2, 3)]})
    assert multiplier_dim(scaled).total == 2


def test_large_coefficients_use_exact_integers():
    big = 10**12
    alg = NLieSuperalgebra.from_brackets(2, (4, 0), {(0, 1): [0, 0, big, 0], (0, 2): [0, 0, 0, big + 1]})
    assert alg.dense().C.dtype == object
    assert multiplier_dim(alg).total == multiplier_dim(make_filiform(2, 4)).total
