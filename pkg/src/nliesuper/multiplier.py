"""Schur multiplier dimension via graded central extensions.

A one-dimensional central extension by an even or odd element ``z`` is a
cochain ``lambda`` on canonical n-monomials of the matching parity that keeps
the graded Filippov-Jacobi identity.  The multiplier dimension is

    sum over parities e of  dim Z^2_e - dim (L^2)_e

where ``dim (L^2)_e`` counts the coboundaries ``g o [ , ... , ]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .algebra import NLieSuperalgebra
from .invariants import center, derived_subalgebra, graded_dims, quotient
from .linalg import IntegerEchelon, Matrix, Subspace

DEFAULT_MAX_UNKNOWNS = 20_000
DEFAULT_MAX_ROWS = 2_000_000
# cap on entries of one dense block of constraint rows
_CHUNK_ENTRIES = 4_000_000


class CapacityError(RuntimeError):
    pass


class NotCentralError(ValueError):
    pass


@dataclass(frozen=True)
class CocycleSystem:
    parity: int
    unknowns: tuple          # canonical monomials of total parity `parity`
    rows: np.ndarray         # integer constraint rows over `unknowns`
    pairs: tuple             # (x-tuple, y-tuple) that produced each row

    @property
    def constraint_matrix(self) -> Matrix:
        return Matrix.from_rows(([int(v) for v in r] for r in self.rows), ncols=len(self.unknowns))

    def nullity(self) -> int:
        return len(self.unknowns) - _rank(self.rows)


@dataclass(frozen=True)
class MultiplierReport:
    even_Z2: int
    odd_Z2: int
    even_B2: int
    odd_B2: int

    @property
    def even_M(self) -> int:
        return self.even_Z2 - self.even_B2

    @property
    def odd_M(self) -> int:
        return self.odd_Z2 - self.odd_B2

    @property
    def total(self) -> int:
        return self.even_M + self.odd_M

    def as_dict(self) -> dict:
        return {
            "even_Z2": self.even_Z2, "odd_Z2": self.odd_Z2,
            "even_B2": self.even_B2, "odd_B2": self.odd_B2,
            "even_M": self.even_M, "odd_M": self.odd_M,
            "total": self.total,
        }


def _check_capacity(alg: NLieSuperalgebra, max_unknowns: int, max_rows: int):
    ds = alg.dense()
    nx, ny = len(ds.X), len(ds.Y)
    if ny > max_unknowns:
        raise CapacityError(f"{ny} cochain unknowns exceed the limit of {max_unknowns}")
    if nx * ny > max_rows:
        raise CapacityError(f"{nx * ny} constraint rows exceed the limit of {max_rows}")
    return ds


def _row_blocks(alg: NLieSuperalgebra, backend: str | None):
    """Yield (x-index offset, rows of shape (chunk, ny, ny)) blocks."""
    ds = alg.dense()
    nx, ny = len(ds.X), len(ds.Y)
    if not nx or not ny or not alg.constants:
        return
    step = max(1, _CHUNK_ENTRIES // max(ny * ny, 1))
    for lo in range(0, nx, step):
        hi = min(nx, lo + step)
        block = _kernels.cocycle_rows(
            ds.C, ds.Y, ds.adS[lo:hi], ds.adR[lo:hi], ds.sS, ds.sR,
            ds.xpar[lo:hi], ds.ypre, backend=backend,
        )
        yield lo, block


def _distinct_rows(rows: np.ndarray) -> np.ndarray:
    """Nonzero rows normalized by content and sign, deduplicated."""
    rows = rows[(rows != 0).any(axis=1)]
    if not len(rows):
        return rows
    if rows.dtype != object:
        g = np.gcd.reduce(np.abs(rows), axis=1)
        rows = rows // g[:, None]
        lead = rows[np.arange(len(rows)), (rows != 0).argmax(axis=1)]
        rows = rows * np.sign(lead)[:, None]
        return np.unique(rows, axis=0)
    return rows


def _rank(rows: np.ndarray) -> int:
    ech = IntegerEchelon()
    for r in _distinct_rows(np.asarray(rows)):
        ech.add(r.tolist())
    return ech.rank


def cocycle_system(alg: NLieSuperalgebra, parity: int, backend: str | None = None,
                   max_unknowns: int = DEFAULT_MAX_UNKNOWNS,
                   max_rows: int = DEFAULT_MAX_ROWS) -> CocycleSystem:
    """All constraint rows restricted to cochains of the given parity."""
    ds = _check_capacity(alg, max_unknowns, max_rows)
    cols = np.nonzero(ds.ypar == parity)[0]
    unknowns = tuple(tuple(int(i) for i in ds.Y[c]) for c in cols)
    nx, ny = len(ds.X), len(ds.Y)
    pairs = tuple(
        (tuple(int(i) for i in ds.X[ix]), tuple(int(i) for i in ds.Y[iy]))
        for ix in range(nx) for iy in range(ny)
    )
    rows = np.zeros((nx * ny, len(cols)), dtype=ds.C.dtype)
    for lo, block in _row_blocks(alg, backend):
        flat = block.reshape(-1, ny)[:, cols]
        rows[lo * ny: lo * ny + len(flat)] = flat
    return CocycleSystem(parity, unknowns, rows, pairs)


def coboundary_dims(alg: NLieSuperalgebra) -> tuple[int, int]:
    return graded_dims(alg, derived_subalgebra(alg))


def multiplier_dim(alg: NLieSuperalgebra, backend: str | None = None,
                   max_unknowns: int = DEFAULT_MAX_UNKNOWNS,
                   max_rows: int = DEFAULT_MAX_ROWS) -> MultiplierReport:
    cache = alg._dense_cache
    if "multiplier" in cache:
        return cache["multiplier"]
    ds = _check_capacity(alg, max_unknowns, max_rows)
    ny = len(ds.Y)
    ech = (IntegerEchelon(), IntegerEchelon())
    cols = [np.nonzero(ds.ypar == e)[0] for e in (0, 1)]
    seen = set()
    for _, block in _row_blocks(alg, backend):
        flat = _distinct_rows(block.reshape(-1, ny))
        for row in flat:
            key = row.tobytes() if row.dtype != object else tuple(row)
            if key in seen:
                continue
            seen.add(key)
            # every row involves cochain values of a single parity
            nz = np.nonzero(row)[0]
            e = int(ds.ypar[nz[0]])
            ech[e].add(row[cols[e]].tolist())
    b0, b1 = coboundary_dims(alg)
    rep = MultiplierReport(
        even_Z2=len(cols[0]) - ech[0].rank,
        odd_Z2=len(cols[1]) - ech[1].rank,
        even_B2=b0,
        odd_B2=b1,
    )
    cache["multiplier"] = rep
    return rep


def multiplier_of_quotient(alg: NLieSuperalgebra, ideal: Subspace, **kwargs) -> MultiplierReport:
    """Multiplier of L/N for a graded central ideal N."""
    if ideal.graded_dims(alg.dims.even) is None:
        raise NotCentralError("ideal is not graded")
    if not center(alg).contains_subspace(ideal):
        raise NotCentralError("ideal is not contained in the center")
    return multiplier_dim(quotient(alg, ideal), **kwargs)
