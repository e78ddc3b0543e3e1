"""Closed-form combinatorial counts and dimension bounds.

Conventions: ``0**0 == 1`` and ``binom(a, b) == 0`` unless ``0 <= b <= a``.
All values are exact Python integers.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .algebra import NLieSuperalgebra
from .invariants import (
    center,
    derived_subalgebra,
    dim_quotient,
    graded_dims,
    lower_central_series,
    minimal_generators,
    quotient,
)


class BoundPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    bound_name: str
    inputs: dict = field(default_factory=dict)
    value: int = 0


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def L_function(t: int, k: int) -> int:
    """Number of weakly increasing length-t tuples over k odd indices."""
    if t < 0 or k < 0:
        raise ValueError(f"L_function needs t, k >= 0, got t={t}, k={k}")
    if t == 0:
        return 1
    return sum(binom(t - 1, j - 1) * binom(k, j) for j in range(1, t + 1))


def abelian_multiplier_dim(n: int, m: int, k: int) -> int:
    return sum(binom(m, i) * L_function(n - i, k) for i in range(n + 1))


def generator_tuple_count(n: int, s: int, t: int) -> int:
    """sum_{i=0}^{n-1} C(s, i) t^(n-1-i)."""
    return sum(binom(s, i) * t ** (n - 1 - i) for i in range(n))


def cross_term(s0: int, s1: int, t0: int, t1: int, n: int) -> int:
    total = 0
    for i in range(1, n):
        left = sum(binom(s0, j) * s1 ** (i - j) for j in range(i + 1))
        right = sum(binom(t0, j) * t1 ** (n - i - j) for j in range(n - i + 1))
        total += left * right
    return total


def nilpotent_dim1_bound(n: int, m: int, k: int, p: int, q: int) -> int:
    """Bound for nilpotent algebras with (1|0)-dimensional derived algebra.

    ``(m|k)`` is the dimension of the algebra and ``(p|q)`` that of its center.
    """
    if not (1 <= p <= m and 0 <= q <= k):
        raise BoundPreconditionError(f"need 1 <= p <= m and 0 <= q <= k, got m={m} k={k} p={p} q={q}")
    main = sum(
        binom(p - 1, i) * L_function(n - i, q) + binom(m - p + 1, i) * L_function(n - i, k - q)
        for i in range(n + 1)
    )
    return main + cross_term(p - 1, q, m - p, k - q, n) - 1


def commutator_bound(alg: NLieSuperalgebra) -> int:
    m, k = dim_quotient(alg, center(alg))
    return abelian_multiplier_dim(alg.arity, m, k)


def multiplier_upper_bound(alg: NLieSuperalgebra) -> int:
    return abelian_multiplier_dim(alg.arity, *alg.dims) - derived_subalgebra(alg).dim


def t_invariant(alg: NLieSuperalgebra, multiplier_dim: int) -> int:
    return abelian_multiplier_dim(alg.arity, *alg.dims) - multiplier_dim


def _nilpotent_class(alg: NLieSuperalgebra) -> int:
    c = lower_central_series(alg).nilpotency_class
    if c is None:
        raise BoundPreconditionError("algebra is not nilpotent")
    return c


def class_reduction_rhs(alg: NLieSuperalgebra, i: int, multiplier_of_quotient: int) -> int:
    """dim M(L/L^i) + dim L^c * (sum_j C(s,j) t^(n-1-j) - 1).

    For class 1 (abelian) L/L^i = L and the correction term is taken as 0, so
    the right-hand side is just ``multiplier_of_quotient``.
    """
    if i < 2:
        raise BoundPreconditionError(f"index must be at least 2, got {i}")
    c = _nilpotent_class(alg)
    if c <= 1:
        return multiplier_of_quotient
    s, t = graded_dims_of_abelianization(alg)
    lam = generator_tuple_count(alg.arity, s, t) - 1
    return multiplier_of_quotient + lower_central_series(alg).term(c).dim * lam


def class_sum_rhs(alg: NLieSuperalgebra) -> int:
    c = _nilpotent_class(alg)
    if c < 2:
        raise BoundPreconditionError(f"nilpotency class must be at least 2, got {c}")
    s, t = graded_dims_of_abelianization(alg)
    return (alg.dim - 1) * generator_tuple_count(alg.arity, s, t)


def converse_schur_rhs(alg: NLieSuperalgebra) -> int:
    z = center(alg)
    s, t = minimal_generators(quotient(alg, z))
    return generator_tuple_count(alg.arity, s, t) * derived_subalgebra(alg).dim


def graded_dims_of_abelianization(alg: NLieSuperalgebra) -> tuple[int, int]:
    """(s|t) = dim L/L^2."""
    e, o = graded_dims(alg, derived_subalgebra(alg))
    return alg.dims.even - e, alg.dims.odd - o


def all_bounds(alg: NLieSuperalgebra) -> list[BoundReport]:
    """Every bound that applies to ``alg`` without a multiplier computation."""
    n, (m, k) = alg.arity, alg.dims
    out = [
        BoundReport("abelian_multiplier_dim", {"n": n, "m": m, "k": k},
                    abelian_multiplier_dim(n, m, k)),
        BoundReport("commutator_bound", {"center_quotient": list(dim_quotient(alg, center(alg)))},
                    commutator_bound(alg)),
        BoundReport("multiplier_upper_bound", {"dim_L2": derived_subalgebra(alg).dim},
                    multiplier_upper_bound(alg)),
        BoundReport("converse_schur_rhs",
                    {"generators": list(minimal_generators(quotient(alg, center(alg))))},
                    converse_schur_rhs(alg)),
    ]
    c = lower_central_series(alg).nilpotency_class
    l2 = graded_dims(alg, derived_subalgebra(alg))
    if c is not None and l2 == (1, 0):
        p, q = graded_dims(alg, center(alg))
        out.append(BoundReport("nilpotent_dim1_bound", {"n": n, "m": m, "k": k, "p": p, "q": q},
                               nilpotent_dim1_bound(n, m, k, p, q)))
    if c is not None and c >= 2:
        s, t = graded_dims_of_abelianization(alg)
        out.append(BoundReport("class_sum_rhs", {"s": s, "t": t}, class_sum_rhs(alg)))
    return out
