"""n-Lie superalgebras given by structure constants on canonical monomials."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Mapping, Sequence

import numpy as np

from . import _kernels
from .basis import (
    GradedDimension,
    enumerate_monomials,
    is_canonical,
    monomial_index,
    normalize_tuple,
    tuple_parity,
)
from .linalg import ZERO, DimensionMismatchError, Vector, as_vector, unit_vector, zero_vector


class AlgebraError(ValueError):
    pass


def element_parity(vec: Sequence, dims: GradedDimension) -> int | None:
    """0 or 1 for a homogeneous element, None when both blocks are nonzero.

    The zero element is reported as even.
    """
    has_even = any(vec[: dims.even])
    has_odd = any(vec[dims.even:])
    if has_even and has_odd:
        return None
    return 1 if has_odd else 0


@dataclass(frozen=True)
class JacobiViolation:
    x: tuple
    y: tuple
    residual: Vector


@dataclass(frozen=True, eq=False)
class NLieSuperalgebra:
    """Structure constants keyed by canonical monomials.

    ``constants`` is a sorted tuple of ``(monomial, value)`` pairs holding the
    nonzero brackets only; use :attr:`bracket_map` for dict access.
    """

    arity: int
    dims: GradedDimension
    constants: tuple = ()
    basis_names: tuple | None = None
    _dense_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.arity < 2:
            raise AlgebraError(f"arity must be at least 2, got {self.arity}")
        d = self.dims.total
        if self.basis_names is not None and len(self.basis_names) != d:
            raise AlgebraError(f"{len(self.basis_names)} basis names for dimension {d}")
        for mono, val in self.constants:
            if len(mono) != self.arity or not is_canonical(mono, self.dims):
                raise AlgebraError(f"non-canonical bracket key {list(mono)}")
            if len(val) != d:
                raise DimensionMismatchError(f"bracket value of length {len(val)}, expected {d}")

    @classmethod
    def from_brackets(
        cls,
        arity: int,
        dims: GradedDimension | tuple,
        brackets: Mapping[tuple, Sequence] | None = None,
        basis_names: Sequence[str] | None = None,
    ) -> "NLieSuperalgebra":
        if not isinstance(dims, GradedDimension):
            dims = GradedDimension(*dims)
        consts = {}
        for mono, val in (brackets or {}).items():
            mono = tuple(int(i) for i in mono)
            vec = as_vector(val)
            if any(vec):
                consts[mono] = vec
        items = tuple(sorted(consts.items()))
        names = tuple(basis_names) if basis_names is not None else None
        return cls(arity, dims, items, names)

    # identity ignores the cache field
    def _key(self):
        return (self.arity, self.dims, self.constants, self.basis_names)

    def __eq__(self, other):
        if not isinstance(other, NLieSuperalgebra):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @property
    def dim(self) -> int:
        return self.dims.total

    @cached_property
    def bracket_map(self) -> dict:
        return dict(self.constants)

    def structure_constant(self, mono: tuple) -> Vector:
        return self.bracket_map.get(mono, zero_vector(self.dim))

    def is_abelian(self) -> bool:
        return not self.constants

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def name(self, i: int) -> str:
        if self.basis_names:
            return self.basis_names[i]
        m = self.dims.even
        return f"e{i + 1}" if i < m else f"y{i - m + 1}"

    def basis_bracket(self, indices: Sequence[int]) -> Vector:
        """Bracket of basis vectors given in any order."""
        sign, mono = normalize_tuple(tuple(indices), self.dims)
        if sign == 0:
            return zero_vector(self.dim)
        val = self.bracket_map.get(mono)
        if val is None:
            return zero_vector(self.dim)
        return val if sign == 1 else tuple(-x for x in val)

    def dense(self) -> "DenseStructure":
        ds = self._dense_cache.get("dense")
        if ds is None:
            ds = DenseStructure.build(self)
            self._dense_cache["dense"] = ds
        return ds


def bracket(alg: NLieSuperalgebra, *args: Sequence) -> Vector:
    """Evaluate the bracket on arbitrary elements by multilinear expansion."""
    if len(args) == 1 and len(args[0]) and isinstance(args[0][0], (tuple, list)):
        args = tuple(args[0])
    if len(args) != alg.arity:
        raise AlgebraError(f"bracket takes {alg.arity} arguments, got {len(args)}")
    d = alg.dim
    supports = []
    for a in args:
        if len(a) != d:
            raise DimensionMismatchError(f"argument of length {len(a)}, expected {d}")
        supports.append([(i, Fraction(c)) for i, c in enumerate(a) if c])
    out = [ZERO] * d
    for choice in itertools.product(*supports):
        idx = tuple(i for i, _ in choice)
        sign, mono = normalize_tuple(idx, alg.dims)
        if sign == 0:
            continue
        val = alg.bracket_map.get(mono)
        if val is None:
            continue
        coef = Fraction(sign)
        for _, c in choice:
            coef *= c
        for j, v in enumerate(val):
            if v:
                out[j] += coef * v
    return tuple(out)


# --- dense integer form used by the kernels ------------------------------

_INT64_SAFE = 2**62


@dataclass
class DenseStructure:
    """Integer arrays describing an algebra, consumed by :mod:`._kernels`.

    ``C`` holds the structure constants multiplied by ``scale`` (the lcm of
    all denominators); it is ``int64`` unless the products formed by the
    Jacobi kernel could overflow, in which case it is an object array.
    """

    n: int
    m: int
    k: int
    X: np.ndarray
    Y: np.ndarray
    C: np.ndarray
    scale: int
    adS: np.ndarray
    adR: np.ndarray
    sS: np.ndarray
    sR: np.ndarray
    xpar: np.ndarray
    ypre: np.ndarray
    ypar: np.ndarray

    @classmethod
    def build(cls, alg: NLieSuperalgebra, backend: str | None = None) -> "DenseStructure":
        n, (m, k) = alg.arity, alg.dims
        d = m + k
        xs = enumerate_monomials(n - 1, alg.dims)
        ys = enumerate_monomials(n, alg.dims)
        X = np.array(xs, dtype=np.int64).reshape(len(xs), n - 1)
        Y = np.array(ys, dtype=np.int64).reshape(len(ys), n)
        par = (np.arange(d) >= m).astype(np.int64)

        scale = 1
        for _, val in alg.constants:
            for v in val:
                scale = lcm(scale, v.denominator)
        ints = np.zeros((len(ys), d), dtype=object)
        idx = monomial_index(n, m, k)
        big = 0
        for mono, val in alg.constants:
            row = [int(v * scale) for v in val]
            ints[idx[mono]] = row
            big = max(big, max(abs(v) for v in row))
        if (n + 2) * max(d, 1) * big * big < _INT64_SAFE:
            C = ints.astype(np.int64)
        else:
            C = ints

        canon = _kernels.encode(Y, d)
        nx, ny = len(xs), len(ys)
        if nx and d:
            tup = np.concatenate(
                [np.repeat(X, d, axis=0), np.tile(np.arange(d), nx)[:, None]], axis=1
            )
            adS, adR = _kernels.lookup(tup, m, d, canon, backend)
            adS, adR = adS.reshape(nx, d), adR.reshape(nx, d)
        else:
            adS = np.zeros((nx, d), dtype=np.int64)
            adR = np.zeros((nx, d), dtype=np.int64)
        if ny and d:
            rep = np.broadcast_to(Y[:, None, None, :], (ny, n, d, n)).copy()
            for i in range(n):
                rep[:, i, :, i] = np.arange(d)[None, :]
            sS, sR = _kernels.lookup(rep.reshape(-1, n), m, d, canon, backend)
            sS, sR = sS.reshape(ny, n, d), sR.reshape(ny, n, d)
        else:
            sS = np.zeros((ny, n, d), dtype=np.int64)
            sR = np.zeros((ny, n, d), dtype=np.int64)
        xpar = par[X].sum(axis=1) % 2 if nx else np.zeros(0, dtype=np.int64)
        ypar_each = par[Y] if ny else np.zeros((0, n), dtype=np.int64)
        ypre = np.zeros((ny, n), dtype=np.int64)
        if ny:
            ypre[:, 1:] = np.cumsum(ypar_each, axis=1)[:, :-1] % 2
        ypar = ypar_each.sum(axis=1) % 2 if ny else np.zeros(0, dtype=np.int64)
        return cls(n, m, k, X, Y, C, scale, adS, adR, sS, sR,
                   xpar.astype(np.int64), ypre, ypar.astype(np.int64))

    def kernel_args(self):
        return (self.C, self.Y, self.adS, self.adR, self.sS, self.sR, self.xpar, self.ypre)


# --- validators ----------------------------------------------------------

def validate_grading(alg: NLieSuperalgebra) -> list[tuple]:
    """(monomial, expected parity) for every constant of the wrong parity."""
    bad = []
    for mono, val in alg.constants:
        want = tuple_parity(mono, alg.dims)
        got = element_parity(val, alg.dims)
        if got != want:
            bad.append((mono, want))
    return bad


def validate_jacobi(alg: NLieSuperalgebra, backend: str | None = None) -> list[JacobiViolation]:
    """Basis pairs (canonical x-tuple, canonical y-tuple) where the identity fails.

    Basis tuples suffice: the residual is multilinear and graded
    antisymmetric in both the x and y arguments.
    """
    ds = alg.dense()
    if not len(ds.X) or not len(ds.Y) or not alg.constants:
        return []
    res = _kernels.jacobi_residual(*ds.kernel_args(), backend=backend)
    bad = np.argwhere((res != 0).any(axis=2))
    sq = Fraction(ds.scale) ** 2
    out = []
    for ix, iy in bad:
        vec = tuple(Fraction(int(v)) / sq for v in res[ix, iy])
        out.append(JacobiViolation(tuple(int(i) for i in ds.X[ix]),
                                   tuple(int(i) for i in ds.Y[iy]), vec))
    return out


def is_valid(alg: NLieSuperalgebra) -> bool:
    return not validate_grading(alg) and not validate_jacobi(alg)


# --- constructors --------------------------------------------------------

def make_abelian(n: int, dims: GradedDimension | tuple) -> NLieSuperalgebra:
    return NLieSuperalgebra.from_brackets(n, dims, {})


def make_heisenberg_nlie(n: int) -> NLieSuperalgebra:
    """H(n,1): dimension n+1 with the single relation [e1..en] = e_{n+1}."""
    if n < 2:
        raise AlgebraError(f"arity must be at least 2, got {n}")
    d = n + 1
    return NLieSuperalgebra.from_brackets(n, (d, 0), {tuple(range(n)): unit_vector(d, n)})


def make_filiform(n: int, m: int) -> NLieSuperalgebra:
    """[x1, .., x_{n-1}, x_i] = x_{i+1} for n <= i <= m-1."""
    if n < 2:
        raise AlgebraError(f"arity must be at least 2, got {n}")
    if m <= n:
        raise AlgebraError(f"filiform family needs m > n, got n={n}, m={m}")
    head = tuple(range(n - 1))
    brackets = {head + (i - 1,): unit_vector(m, i) for i in range(n, m)}
    return NLieSuperalgebra.from_brackets(n, (m, 0), brackets)


def direct_sum(a: NLieSuperalgebra, b: NLieSuperalgebra) -> NLieSuperalgebra:
    """A ⊕ B re-indexed as evens(A), evens(B), odds(A), odds(B)."""
    if a.arity != b.arity:
        raise AlgebraError(f"arity mismatch: {a.arity} vs {b.arity}")
    ma, ka = a.dims
    mb, kb = b.dims
    m, k = ma + mb, ka + kb
    d = m + k
    amap = [i if i < ma else i + mb for i in range(ma + ka)]
    bmap = [ma + i if i < mb else ma + ka + i for i in range(mb + kb)]
    dims = GradedDimension(m, k)
    brackets = {}
    for alg, mp in ((a, amap), (b, bmap)):
        for mono, val in alg.constants:
            sign, new = normalize_tuple(tuple(mp[i] for i in mono), dims)
            vec = [ZERO] * d
            for j, v in enumerate(val):
                vec[mp[j]] = sign * v
            brackets[new] = vec
    names = None
    if a.basis_names or b.basis_names:
        an = [a.name(i) for i in range(a.dim)]
        bn = [b.name(i) for i in range(b.dim)]
        names = an[:ma] + bn[:mb] + an[ma:] + bn[mb:]
    return NLieSuperalgebra.from_brackets(a.arity, dims, brackets, names)
