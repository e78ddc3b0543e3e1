"""Exact linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`.  Every subspace is kept in
reduced row-echelon form so equality and containment are exact comparisons.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatchError(ValueError):
    pass


def as_vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form; pivots are taken at the first nonzero column.

    Returns the nonzero rows and their pivot columns.
    """
    mat = []
    for r in rows:
        if len(r) != ncols:
            raise DimensionMismatchError(f"row of length {len(r)}, expected {ncols}")
        mat.append([Fraction(x) for x in r])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        sel = None
        for i in range(top, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[top], mat[sel] = mat[sel], mat[top]
        prow = mat[top]
        inv = 1 / prow[col]
        if inv != 1:
            prow[:] = [x * inv for x in prow]
        for i in range(len(mat)):
            if i != top:
                f = mat[i][col]
                if f:
                    mat[i] = [a - f * b for a, b in zip(mat[i], prow)]
        pivots.append(col)
        top += 1
        if top == len(mat):
            break
    return mat[:top], pivots


class IntegerEchelon:
    """Incremental exact row echelon form for integer rows.

    Fraction-free: an incoming row is reduced against the stored pivot rows
    and kept only if something survives.  Rows are sparse dicts divided by
    their content so entries stay small.
    """

    def __init__(self):
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Sequence[int]) -> bool:
        """Insert a row; returns True if it increased the rank."""
        vec = {j: int(v) for j, v in enumerate(row) if v}
        pivots = self.pivots
        while vec:
            col = min(vec)
            prow = pivots.get(col)
            if prow is None:
                g = 0
                for v in vec.values():
                    g = gcd(g, v)
                if vec[col] < 0:
                    g = -g
                pivots[col] = {j: v // g for j, v in vec.items()}
                return True
            a, b = prow[col], vec[col]
            new = {j: a * v for j, v in vec.items()}
            for j, v in prow.items():
                w = new.get(j, 0) - b * v
                if w:
                    new[j] = w
                else:
                    new.pop(j, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            vec = {j: v // g for j, v in new.items()} if g > 1 else new
        return False


def rank_integer_rows(rows: Iterable[Sequence[int]]) -> int:
    """Exact rank of an integer matrix given row by row."""
    ech = IntegerEchelon()
    for row in rows:
        ech.add(row)
    return ech.rank


@dataclass(frozen=True)
class Matrix:
    nrows: int
    ncols: int
    rows: tuple  # tuple[Vector, ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        rs = tuple(as_vector(r) for r in rows)
        if ncols is None:
            if not rs:
                raise ValueError("ncols required for an empty matrix")
            ncols = len(rs[0])
        for r in rs:
            if len(r) != ncols:
                raise DimensionMismatchError(f"row of length {len(r)}, expected {ncols}")
        return cls(len(rs), ncols, rs)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, tuple(zero_vector(ncols) for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    def __matmul__(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionMismatchError(f"vector of length {len(v)}, expected {self.ncols}")
        return tuple(sum((a * b for a, b in zip(r, v)), ZERO) for r in self.rows)

    def transpose(self) -> "Matrix":
        cols = tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols))
        return Matrix(self.ncols, self.nrows, cols)

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim stored as its reduced echelon basis."""

    ambient_dim: int
    basis: tuple  # tuple[Vector, ...] in RREF
    pivots: tuple  # tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def reduce(self, v: Sequence) -> Vector:
        """Remainder of ``v`` after clearing every pivot coordinate."""
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(f"vector of length {len(v)}, expected {self.ambient_dim}")
        w = [Fraction(x) for x in v]
        for row, p in zip(self.basis, self.pivots):
            f = w[p]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def graded_dims(self, even_dim: int) -> tuple[int, int] | None:
        """(even, odd) dimensions if the subspace is graded, else None.

        With even coordinates first, a graded subspace has an RREF basis of
        homogeneous rows, so homogeneity of each row decides the question.
        """
        e = o = 0
        for row in self.basis:
            has_even = any(row[:even_dim])
            has_odd = any(row[even_dim:])
            if has_even and has_odd:
                return None
            if has_even:
                e += 1
            else:
                o += 1
        return e, o

    def is_graded(self, even_dim: int) -> bool:
        return self.graded_dims(even_dim) is not None


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    rows, piv = rref(vectors, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in rows), tuple(piv))


def full_space(n: int) -> Subspace:
    return span((unit_vector(n, i) for i in range(n)), n)


def zero_space(n: int) -> Subspace:
    return Subspace(n, (), ())


def nullspace(m: Matrix) -> Subspace:
    """Kernel of ``m`` as a subspace of Q^cols."""
    rows, piv = rref(m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in set(piv)]
    vecs = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for r, p in zip(rows, piv):
            v[p] = -r[f]
        vecs.append(v)
    return span(vecs, m.ncols)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dims {a.ambient_dim} and {b.ambient_dim}")
    return span(a.basis + b.basis, a.ambient_dim)


def intersect(a: Subspace, b: Subspace) -> Subspace:
    """A ∩ B via the kernel of [A; -B] (Zassenhaus-free, plain nullspace)."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(f"ambient dims {a.ambient_dim} and {b.ambient_dim}")
    n = a.ambient_dim
    if not a.basis or not b.basis:
        return zero_space(n)
    # columns: coefficients on a's basis, then on b's basis
    cols = list(a.basis) + [tuple(-x for x in v) for v in b.basis]
    sys = Matrix.from_rows(
        (tuple(c[i] for c in cols) for i in range(n)), ncols=len(cols)
    )
    ker = nullspace(sys)
    da = a.dim
    vecs = []
    for coeffs in ker.basis:
        v = [ZERO] * n
        for c, row in zip(coeffs[:da], a.basis):
            if c:
                v = [x + c * y for x, y in zip(v, row)]
        vecs.append(v)
    return span(vecs, n)
