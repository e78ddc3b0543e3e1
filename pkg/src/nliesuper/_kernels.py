"""Integer kernels for tuple normalization, Jacobi residuals and cocycle rows.

Two interchangeable backends produce identical integer arrays:

* ``numba``: explicit ``@njit`` loops.
* ``numpy``: vectorized fancy indexing and ``einsum``; also the only path
  that accepts ``dtype=object`` (arbitrary-precision) inputs.

The backend is chosen by the ``NLIESUPER_BACKEND`` environment variable
(``numba`` or ``numpy``).  Default is numba when it imports.
"""
from __future__ import annotations

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

_BACKENDS = ("numba", "numpy")


def default_backend() -> str:
    env = os.environ.get("NLIESUPER_BACKEND", "").strip().lower()
    if env:
        if env not in _BACKENDS:
            raise ValueError(f"NLIESUPER_BACKEND must be one of {_BACKENDS}, got {env!r}")
        if env == "numba" and not HAVE_NUMBA:
            raise RuntimeError("NLIESUPER_BACKEND=numba but numba is not installed")
        return env
    return "numba" if HAVE_NUMBA else "numpy"


def resolve_backend(backend: str | None, dtype=np.int64) -> str:
    b = backend or default_backend()
    if b not in _BACKENDS:
        raise ValueError(f"unknown backend {b!r}")
    # numba cannot hold Python ints
    if dtype == object:
        return "numpy"
    return b


# --- tuple normalization -------------------------------------------------

def _normalize_numpy(tuples: np.ndarray, m: int):
    t = np.array(tuples, dtype=np.int64, copy=True)
    rows, n = t.shape
    sign = np.ones(rows, dtype=np.int64)
    for end in range(n - 1, 0, -1):
        for j in range(end):
            a = t[:, j].copy()
            b = t[:, j + 1].copy()
            swap = a > b
            t[swap, j] = b[swap]
            t[swap, j + 1] = a[swap]
            flip = swap & ~((a >= m) & (b >= m))
            sign[flip] = -sign[flip]
    if n > 1:
        rep = ((t[:, :-1] == t[:, 1:]) & (t[:, :-1] < m)).any(axis=1)
        sign[rep] = 0
    return sign, t


if HAVE_NUMBA:

    @njit(cache=True)
    def _normalize_numba(tuples, m):
        rows, n = tuples.shape
        t = tuples.copy()
        sign = np.ones(rows, dtype=np.int64)
        for r in range(rows):
            s = 1
            for end in range(n - 1, 0, -1):
                for j in range(end):
                    a = t[r, j]
                    b = t[r, j + 1]
                    if a > b:
                        t[r, j] = b
                        t[r, j + 1] = a
                        if not (a >= m and b >= m):
                            s = -s
            for j in range(n - 1):
                if t[r, j] == t[r, j + 1] and t[r, j] < m:
                    s = 0
                    break
            sign[r] = s
        return sign, t


def normalize_batch(tuples: np.ndarray, m: int, backend: str | None = None):
    """Sort each row to canonical order; returns (signs, sorted rows)."""
    tuples = np.ascontiguousarray(tuples, dtype=np.int64)
    if tuples.ndim != 2:
        raise ValueError("tuples must be a 2-d array")
    if tuples.shape[0] == 0:
        return np.zeros(0, dtype=np.int64), tuples.copy()
    if resolve_backend(backend) == "numba":
        return _normalize_numba(tuples, m)
    return _normalize_numpy(tuples, m)


def encode(rows: np.ndarray, d: int) -> np.ndarray:
    """Base-``d`` integer key of each row (lexicographic order preserved)."""
    rows = np.asarray(rows, dtype=np.int64)
    key = np.zeros(rows.shape[0], dtype=np.int64)
    for j in range(rows.shape[1]):
        key = key * max(d, 1) + rows[:, j]
    return key


def lookup(tuples: np.ndarray, m: int, d: int, canon_keys: np.ndarray, backend: str | None = None):
    """Sign and canonical-monomial rank of every row of ``tuples``.

    Rows that vanish get sign 0 and rank 0 (the rank is then irrelevant).
    """
    sign, srt = normalize_batch(tuples, m, backend)
    keys = encode(srt, d)
    rank = np.searchsorted(canon_keys, keys)
    rank = np.minimum(rank, max(len(canon_keys) - 1, 0))
    if len(canon_keys):
        hit = canon_keys[rank] == keys
        sign = np.where(hit, sign, 0)
    else:
        sign = np.zeros_like(sign)
    rank = np.where(sign != 0, rank, 0)
    return sign.astype(np.int64), rank.astype(np.int64)


# --- Jacobi residual -----------------------------------------------------

def _jacobi_numpy(C, Y, adS, adR, sS, sR, xpar, ypre):
    nx = adS.shape[0]
    ny, n = Y.shape
    d = C.shape[1]
    if nx == 0 or ny == 0:
        return np.zeros((nx, ny, d), dtype=C.dtype)
    ad = adS[:, :, None] * C[adR]                       # (nx, d, d): [x..., e_b] -> c
    res = np.einsum("yb,xbc->xyc", C, ad)
    for i in range(n):
        coef = ad[:, Y[:, i], :]                         # (nx, ny, d): [x..., y_i]
        inner = sS[:, i, :, None] * C[sR[:, i, :]]       # (ny, d, d): [y.. e_b ..y]
        term = np.einsum("xyb,ybc->xyc", coef, inner)
        odd = (np.outer(xpar, ypre[:, i]) % 2).astype(bool)
        term[odd] = -term[odd]
        res = res - term
    return res


if HAVE_NUMBA:

    @njit(cache=True)
    def _jacobi_numba(C, Y, adS, adR, sS, sR, xpar, ypre):
        nx, d = adS.shape
        ny, n = Y.shape
        res = np.zeros((nx, ny, d), dtype=np.int64)
        for ix in range(nx):
            for iy in range(ny):
                for b in range(d):
                    cb = C[iy, b]
                    s = adS[ix, b]
                    if cb == 0 or s == 0:
                        continue
                    r = adR[ix, b]
                    for c in range(d):
                        res[ix, iy, c] += cb * s * C[r, c]
                for i in range(n):
                    yi = Y[iy, i]
                    s1 = adS[ix, yi]
                    if s1 == 0:
                        continue
                    r1 = adR[ix, yi]
                    sg = 1
                    if (xpar[ix] * ypre[iy, i]) % 2 == 1:
                        sg = -1
                    for b in range(d):
                        coef = s1 * C[r1, b]
                        s2 = sS[iy, i, b]
                        if coef == 0 or s2 == 0:
                            continue
                        r2 = sR[iy, i, b]
                        f = sg * coef * s2
                        for c in range(d):
                            res[ix, iy, c] -= f * C[r2, c]
        return res


def jacobi_residual(C, Y, adS, adR, sS, sR, xpar, ypre, backend: str | None = None):
    """Residual LHS - RHS of the graded Filippov-Jacobi identity.

    Shapes: ``C`` (ny, d) structure constants on canonical n-monomials;
    ``Y`` (ny, n) those monomials; ``adS/adR`` (nx, d) sign/rank of
    ``(x..., e_b)``; ``sS/sR`` (ny, n, d) sign/rank of ``y`` with slot ``i``
    replaced by ``e_b``; ``xpar`` (nx,) parity of each x-tuple; ``ypre``
    (ny, n) parity of ``y_0 .. y_{i-1}``.  Returns (nx, ny, d).
    """
    if resolve_backend(backend, C.dtype) == "numba":
        return _jacobi_numba(C, Y, adS, adR, sS, sR, xpar, ypre)
    return _jacobi_numpy(C, Y, adS, adR, sS, sR, xpar, ypre)


# --- cocycle constraint rows --------------------------------------------

def _onehot(sign, rank, width, dtype):
    out = np.zeros(sign.shape + (width,), dtype=dtype)
    idx = np.nonzero(sign)
    out[idx + (rank[idx],)] = sign[idx]
    return out


def _cocycle_numpy(C, Y, adS, adR, sS, sR, xpar, ypre):
    nx = adS.shape[0]
    ny, n = Y.shape
    if nx == 0 or ny == 0:
        return np.zeros((nx, ny, ny), dtype=C.dtype)
    ad = adS[:, :, None] * C[adR]                        # (nx, d, d)
    P = _onehot(adS, adR, ny, C.dtype)                   # (nx, d, ny): lambda(x..., e_b)
    rows = np.einsum("yb,xbr->xyr", C, P)
    for i in range(n):
        coef = ad[:, Y[:, i], :]                          # (nx, ny, d)
        Q = _onehot(sS[:, i, :], sR[:, i, :], ny, C.dtype)  # (ny, d, ny)
        term = np.einsum("xyb,ybr->xyr", coef, Q)
        odd = (np.outer(xpar, ypre[:, i]) % 2).astype(bool)
        term[odd] = -term[odd]
        rows = rows - term
    return rows


if HAVE_NUMBA:

    @njit(cache=True)
    def _cocycle_numba(C, Y, adS, adR, sS, sR, xpar, ypre):
        nx, d = adS.shape
        ny, n = Y.shape
        rows = np.zeros((nx, ny, ny), dtype=np.int64)
        for ix in range(nx):
            for iy in range(ny):
                for b in range(d):
                    cb = C[iy, b]
                    s = adS[ix, b]
                    if cb != 0 and s != 0:
                        rows[ix, iy, adR[ix, b]] += cb * s
                for i in range(n):
                    yi = Y[iy, i]
                    s1 = adS[ix, yi]
                    if s1 == 0:
                        continue
                    r1 = adR[ix, yi]
                    sg = 1
                    if (xpar[ix] * ypre[iy, i]) % 2 == 1:
                        sg = -1
                    for b in range(d):
                        coef = s1 * C[r1, b]
                        s2 = sS[iy, i, b]
                        if coef == 0 or s2 == 0:
                            continue
                        rows[ix, iy, sR[iy, i, b]] -= sg * coef * s2
        return rows


def cocycle_rows(C, Y, adS, adR, sS, sR, xpar, ypre, backend: str | None = None):
    """Linear constraints on a cochain ``lambda`` indexed by canonical n-monomials.

    Same inputs as :func:`jacobi_residual`; returns (nx, ny, ny) where entry
    ``[x, y, r]`` is the coefficient of ``lambda(monomial r)`` in the cocycle
    condition for the pair ``(x, y)``.
    """
    if resolve_backend(backend, C.dtype) == "numba":
        return _cocycle_numba(C, Y, adS, adR, sS, sR, xpar, ypre)
    return _cocycle_numpy(C, Y, adS, adR, sS, sR, xpar, ypre)
