"""Graded basis indices and canonical bracket monomials.

Basis vectors ``0 .. m-1`` are even and ``m .. m+k-1`` are odd.  A canonical
monomial of degree ``n`` is a sorted index tuple whose even part is strictly
increasing; odd indices may repeat.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement


class InvalidIndexError(ValueError):
    pass


@dataclass(frozen=True)
class GradedDimension:
    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError(f"negative graded dimension ({self.even}|{self.odd})")

    @property
    def total(self) -> int:
        return self.even + self.odd

    def parity(self, index: int) -> int:
        if not 0 <= index < self.total:
            raise InvalidIndexError(f"basis index {index} out of range for ({self.even}|{self.odd})")
        return 0 if index < self.even else 1

    def __iter__(self):
        yield self.even
        yield self.odd

    def __str__(self) -> str:
        return f"({self.even}|{self.odd})"


def tuple_parity(indices, dims: GradedDimension) -> int:
    return sum(dims.parity(i) for i in indices) % 2


def normalize_tuple(raw, dims: GradedDimension) -> tuple[int, tuple | None]:
    """Bring an index tuple to canonical order, tracking the graded sign.

    Each adjacent swap of ``a`` and ``b`` contributes ``-(-1)^(|a||b|)``.
    Returns ``(0, None)`` when an even index repeats.
    """
    t = list(raw)
    for i in t:
        dims.parity(i)
    m = dims.even
    sign = 1
    n = len(t)
    for end in range(n - 1, 0, -1):
        for j in range(end):
            a, b = t[j], t[j + 1]
            if a > b:
                t[j], t[j + 1] = b, a
                if not (a >= m and b >= m):
                    sign = -sign
    for j in range(n - 1):
        if t[j] == t[j + 1] and t[j] < m:
            return 0, None
    return sign, tuple(t)


def is_canonical(indices, dims: GradedDimension) -> bool:
    for i in indices:
        if not 0 <= i < dims.total:
            return False
    for a, b in zip(indices, indices[1:]):
        if a > b or (a == b and a < dims.even):
            return False
    return True


@lru_cache(maxsize=None)
def _monomials(n: int, m: int, k: int) -> tuple:
    out = []
    for s in range(0, min(n, m) + 1):
        for ev in combinations(range(m), s):
            for od in combinations_with_replacement(range(m, m + k), n - s):
                out.append(ev + od)
    out.sort()
    return tuple(out)


def enumerate_monomials(n: int, dims: GradedDimension) -> list[tuple]:
    """All canonical degree-``n`` monomials in lexicographic order."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    return list(_monomials(n, dims.even, dims.odd))


@lru_cache(maxsize=None)
def monomial_index(n: int, m: int, k: int) -> dict:
    return {mono: i for i, mono in enumerate(_monomials(n, m, k))}
