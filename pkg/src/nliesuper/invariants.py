"""Structural invariants: derived algebra, lower central series, center, quotients."""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraError, NLieSuperalgebra, bracket
from .basis import GradedDimension, enumerate_monomials
from .linalg import (
    ZERO,
    Matrix,
    Subspace,
    full_space,
    nullspace,
    span,
)


class NotGradedError(ValueError):
    pass


class NotApplicableError(ValueError):
    pass


@dataclass(frozen=True)
class SeriesReport:
    terms: tuple  # L^1, L^2, ... ending at the zero or stabilized term
    nilpotency_class: int | None

    @property
    def dims(self) -> list[int]:
        return [t.dim for t in self.terms]

    @property
    def is_nilpotent(self) -> bool:
        return self.nilpotency_class is not None

    def term(self, i: int) -> Subspace:
        """L^i for any i >= 1; past the computed terms the last term repeats."""
        if i < 1:
            raise ValueError("series terms are indexed from 1")
        return self.terms[min(i, len(self.terms)) - 1]


def graded_dims(alg: NLieSuperalgebra, sub: Subspace) -> tuple[int, int]:
    gd = sub.graded_dims(alg.dims.even)
    if gd is None:
        raise NotGradedError("subspace is not graded")
    return gd


def adjoint_tables(alg: NLieSuperalgebra) -> list[list[tuple]]:
    """``tables[ix][b]`` is ``[x..., e_b]`` for the ix-th canonical (n-1)-monomial x."""
    cache = alg._dense_cache
    if "ad" not in cache:
        xs = enumerate_monomials(alg.arity - 1, alg.dims)
        cache["ad"] = [[alg.basis_bracket(x + (b,)) for b in range(alg.dim)] for x in xs]
    return cache["ad"]


def _apply(table: list[tuple], v) -> tuple:
    out = [ZERO] * len(v)
    for a, c in enumerate(v):
        if c:
            for j, w in enumerate(table[a]):
                if w:
                    out[j] += c * w
    return tuple(out)


def _images(alg: NLieSuperalgebra, vectors) -> list[tuple]:
    tabs = adjoint_tables(alg)
    return [_apply(t, v) for v in vectors for t in tabs]


def derived_subalgebra(alg: NLieSuperalgebra) -> Subspace:
    return span((val for _, val in alg.constants), alg.dim)


def lower_central_series(alg: NLieSuperalgebra) -> SeriesReport:
    cache = alg._dense_cache
    if "lcs" in cache:
        return cache["lcs"]
    cur = full_space(alg.dim)
    terms = [cur]
    cls = None
    while True:
        if cur.dim == 0:
            cls = len(terms) - 1
            break
        nxt = span(_images(alg, cur.basis), alg.dim)
        terms.append(nxt)
        if nxt.dim == cur.dim:
            break
        cur = nxt
    rep = SeriesReport(tuple(terms), cls)
    cache["lcs"] = rep
    return rep


def nilpotency_class(alg: NLieSuperalgebra) -> int | None:
    return lower_central_series(alg).nilpotency_class


def center(alg: NLieSuperalgebra) -> Subspace:
    """Elements z with [x1..x_{n-1}, z] = 0 for every canonical x-tuple."""
    cache = alg._dense_cache
    if "center" in cache:
        return cache["center"]
    d = alg.dim
    rows = []
    for tab in adjoint_tables(alg):
        for c in range(d):
            row = tuple(tab[a][c] for a in range(d))
            if any(row):
                rows.append(row)
    z = nullspace(Matrix.from_rows(rows, d)) if rows else full_space(d)
    cache["center"] = z
    return z


def ad_map(alg: NLieSuperalgebra, *xs) -> Matrix:
    """Matrix of v -> [x1, .., x_{n-1}, v] acting on coordinate columns."""
    if len(xs) != alg.arity - 1:
        raise AlgebraError(f"ad takes {alg.arity - 1} elements, got {len(xs)}")
    d = alg.dim
    cols = [bracket(alg, *xs, alg.basis_vector(j)) for j in range(d)]
    return Matrix(d, d, tuple(tuple(cols[j][i] for j in range(d)) for i in range(d)))


def is_graded_ideal(alg: NLieSuperalgebra, sub: Subspace) -> bool:
    graded_dims(alg, sub)
    return all(sub.contains(v) for v in _images(alg, sub.basis))


def is_central(alg: NLieSuperalgebra, sub: Subspace) -> bool:
    return center(alg).contains_subspace(sub)


def quotient(alg: NLieSuperalgebra, ideal: Subspace) -> NLieSuperalgebra:
    """L/N on the coordinates outside the pivot set of N's echelon basis."""
    if ideal.ambient_dim != alg.dim:
        raise AlgebraError("ideal lives in a different ambient space")
    if not is_graded_ideal(alg, ideal):
        raise AlgebraError("quotient requires a graded ideal")
    piv = set(ideal.pivots)
    keep = [j for j in range(alg.dim) if j not in piv]
    m = sum(1 for j in keep if j < alg.dims.even)
    dims = GradedDimension(m, len(keep) - m)
    brackets = {}
    for mono in enumerate_monomials(alg.arity, dims):
        orig = tuple(keep[i] for i in mono)
        val = alg.bracket_map.get(orig)
        if val is None:
            continue
        red = ideal.reduce(val)
        vec = [red[j] for j in keep]
        if any(vec):
            brackets[mono] = vec
    names = None
    if alg.basis_names:
        names = [alg.basis_names[j] for j in keep]
    return NLieSuperalgebra.from_brackets(alg.arity, dims, brackets, names)


def project(alg: NLieSuperalgebra, ideal: Subspace, v) -> tuple:
    """Coordinates of v + N in the basis used by :func:`quotient`."""
    red = ideal.reduce(v)
    piv = set(ideal.pivots)
    return tuple(red[j] for j in range(alg.dim) if j not in piv)


def minimal_generators(alg: NLieSuperalgebra) -> tuple[int, int]:
    """Graded size of a homogeneous generating set.

    For nilpotent algebras this is dim L/L^2 (minimal); otherwise the whole
    basis is returned.
    """
    if nilpotency_class(alg) is None:
        return alg.dims.even, alg.dims.odd
    e, o = graded_dims(alg, derived_subalgebra(alg))
    return alg.dims.even - e, alg.dims.odd - o


def is_filiform(alg: NLieSuperalgebra) -> bool:
    if alg.dims.odd:
        raise NotApplicableError("filiform is only defined for n-Lie algebras (no odd part)")
    n, m = alg.arity, alg.dims.even
    if m < n:
        return False
    series = lower_central_series(alg)
    return all(series.term(i).dim == m - n - i + 2 for i in range(2, m - n + 3))


def dim_quotient(alg: NLieSuperalgebra, sub: Subspace) -> tuple[int, int]:
    e, o = graded_dims(alg, sub)
    return alg.dims.even - e, alg.dims.odd - o

