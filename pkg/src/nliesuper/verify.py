"""Inequality checks over single algebras, algebra pairs and the built-in corpus."""
from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable

from .algebra import (
    NLieSuperalgebra,
    direct_sum,
    make_abelian,
    make_filiform,
    make_heisenberg_nlie,
)
from .bounds import (
    abelian_multiplier_dim,
    class_reduction_rhs,
    class_sum_rhs,
    commutator_bound,
    converse_schur_rhs,
    cross_term,
    graded_dims_of_abelianization,
    multiplier_upper_bound,
    nilpotent_dim1_bound,
    t_invariant,
)
from .invariants import (
    center,
    derived_subalgebra,
    dim_quotient,
    graded_dims,
    is_filiform,
    lower_central_series,
    quotient,
)
from .linalg import intersect, span
from .multiplier import CapacityError, multiplier_dim

RELATIONS = ("<=", "=", "in")
FULL_ENUMERATION_LIMIT = 6
SAMPLED_IDEALS = 50


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rhs: object  # int, or [lo, hi] for "in"
    relation: str
    passed: bool
    asserted: bool = True
    detail: str = ""


def check(name: str, lhs: int, rhs, relation: str, asserted: bool = True, detail: str = "") -> Check:
    if relation == "<=":
        ok = lhs <= rhs
    elif relation == "=":
        ok = lhs == rhs
    elif relation == "in":
        ok = rhs[0] <= lhs <= rhs[1]
        rhs = list(rhs)
    else:
        raise ValueError(f"unknown relation {relation!r}")
    return Check(name, int(lhs), rhs, relation, bool(ok), asserted, detail)


@dataclass
class VerificationReport:
    algebra_id: str
    checks: list = field(default_factory=list)
    skipped: str | None = None
    info: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.asserted and not c.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        asserted = [c for c in self.checks if c.asserted]
        return {
            "checks": len(asserted),
            "passed": sum(c.passed for c in asserted),
            "failed": len(self.failures),
            "reported": len(self.checks) - len(asserted),
        }

    def as_dict(self) -> dict:
        return {
            "algebra_id": self.algebra_id,
            "skipped": self.skipped,
            "info": self.info,
            "checks": [asdict(c) for c in self.checks],
            "summary": self.summary(),
        }


def central_ideals(alg: NLieSuperalgebra, seed: int = 0):
    """Graded central ideals spanned by subsets of the echelon basis of Z(L).

    Echelon rows of a graded subspace are homogeneous, so every subset spans
    a graded subspace; central subspaces are automatically ideals.  All
    subsets are listed when dim Z(L) <= 6, otherwise a seeded random sample.
    """
    z = center(alg)
    rows = z.basis
    d = len(rows)
    if d <= FULL_ENUMERATION_LIMIT:
        subsets = [c for r in range(d + 1) for c in combinations(range(d), r)]
    else:
        rng = random.Random(seed)
        chosen = {(), tuple(range(d))}
        while len(chosen) < SAMPLED_IDEALS:
            chosen.add(tuple(sorted(rng.sample(range(d), rng.randint(1, d - 1)))))
        subsets = sorted(chosen, key=lambda s: (len(s), s))
    for sub in subsets:
        yield sub, span([rows[i] for i in sub], alg.dim)


def verify_algebra(alg: NLieSuperalgebra, algebra_id: str = "algebra", seed: int = 0,
                   **solver) -> VerificationReport:
    rep = VerificationReport(algebra_id)
    n, (m, k) = alg.arity, alg.dims
    try:
        mult = multiplier_dim(alg, **solver).total
    except CapacityError as exc:
        rep.skipped = str(exc)
        return rep
    add = rep.checks.append
    l2 = derived_subalgebra(alg)
    z = center(alg)
    series = lower_central_series(alg)
    c = series.nilpotency_class
    abelian_bound = abelian_multiplier_dim(n, m, k)
    rep.info = {
        "dims": [m, k],
        "arity": n,
        "multiplier": mult,
        "t_invariant": t_invariant(alg, mult),
        "derived_dims": list(graded_dims(alg, l2)),
        "center_dims": list(graded_dims(alg, z)),
        "nilpotency_class": c,
    }

    add(check("derived-dim-bound", l2.dim, commutator_bound(alg), "<="))
    if alg.is_abelian():
        add(check("abelian-maximum", mult, abelian_bound, "=", detail="abelian: equality"))
    else:
        add(check("abelian-maximum", mult, abelian_bound - 1, "<=", detail="non-abelian: strict"))
    add(check("multiplier-upper-bound", mult, multiplier_upper_bound(alg), "<="))

    if c is not None and graded_dims(alg, l2) == (1, 0):
        p, q = graded_dims(alg, z)
        add(check("dim1-derived-bound", mult, nilpotent_dim1_bound(n, m, k, p, q), "<=",
                  detail=f"p={p} q={q}"))

    s, t = graded_dims_of_abelianization(alg)
    ab_dim = s + t
    for sub, ideal in central_ideals(alg, seed):
        try:
            mq = multiplier_dim(quotient(alg, ideal), **solver).total
        except CapacityError:
            continue
        cap = intersect(ideal, l2).dim
        tag = f"N=rows{list(sub)}"
        add(check("central-quotient-upper", mq, mult + cap, "<=", detail=tag))
        if mult == 0:
            add(check("central-quotient-trivial", mq, cap, "=", detail=tag))
        add(check("central-quotient-lower", mult + cap, mq + ideal.dim * ab_dim ** (n - 1), "<=",
                  detail=tag))

    if c is not None and c >= 1:
        for i in range(2, c + 2):
            quo = quotient(alg, series.term(i))
            mq = multiplier_dim(quo, **solver).total
            add(check("class-reduction", mult, class_reduction_rhs(alg, i, mq), "<=",
                      detail=f"i={i}"))
            if c >= 2 and i <= c:
                add(check("class-sum", mult + mq, class_sum_rhs(alg), "<=",
                          detail=f"i={i}"))

    if k == 0 and m >= n and is_filiform(alg):
        mz = multiplier_dim(quotient(alg, z), **solver).total
        add(check("filiform-center-drop", mult - mz, [-1, n - 1], "in"))

    lz = sum(dim_quotient(alg, z))
    add(check("center-quotient-bound", lz, converse_schur_rhs(alg), "<="))
    return rep


def verify_pair(a: NLieSuperalgebra, b: NLieSuperalgebra, pair_id: str = "pair",
                **solver) -> VerificationReport:
    """Direct-sum bound: asserted as an upper bound, equality only reported."""
    rep = VerificationReport(pair_id)
    try:
        ma = multiplier_dim(a, **solver).total
        mb = multiplier_dim(b, **solver).total
        mab = multiplier_dim(direct_sum(a, b), **solver).total
    except CapacityError as exc:
        rep.skipped = str(exc)
        return rep
    s0, s1 = graded_dims_of_abelianization(a)
    t0, t1 = graded_dims_of_abelianization(b)
    rhs = ma + mb + cross_term(s0, s1, t0, t1, a.arity)
    rep.info = {"M(A)": ma, "M(B)": mb, "M(A+B)": mab, "s": [s0, s1], "t": [t0, t1]}
    rep.checks.append(check("direct-sum-upper", mab, rhs, "<="))
    rep.checks.append(check("direct-sum-equality", mab, rhs, "=", asserted=False))
    return rep


# --- corpus --------------------------------------------------------------

@dataclass(frozen=True)
class CorpusEntry:
    name: str
    build: Callable[[], NLieSuperalgebra]
    expected: dict = field(default_factory=dict)


def odd_square_lie() -> NLieSuperalgebra:
    """(1|1) Lie superalgebra with [y, y] = e."""
    return NLieSuperalgebra.from_brackets(2, (1, 1), {(1, 1): [1, 0]})


def odd_cube_3lie() -> NLieSuperalgebra:
    """(0|2) 3-Lie superalgebra with [y1, y1, y1] = y2."""
    return NLieSuperalgebra.from_brackets(3, (0, 2), {(0, 0, 0): [0, 1]})


def mixed_3lie() -> NLieSuperalgebra:
    """(2|1) 3-Lie superalgebra with [e1, y, y] = e2."""
    return NLieSuperalgebra.from_brackets(3, (2, 1), {(0, 2, 2): [0, 1, 0]})


def _heis_plus(n, j, l):
    return lambda: direct_sum(make_heisenberg_nlie(n), make_abelian(n, (j, l)))


def corpus() -> list[CorpusEntry]:
    out = []
    for n in (2, 3):
        for tot in range(6):
            for mm in range(tot, -1, -1):
                kk = tot - mm
                out.append(CorpusEntry(f"A{n}({mm}|{kk})", lambda n=n, mm=mm, kk=kk: make_abelian(n, (mm, kk))))
    for mm, kk in ((1, 0), (0, 1)):
        out.append(CorpusEntry(f"A4({mm}|{kk})", lambda mm=mm, kk=kk: make_abelian(4, (mm, kk))))
    for n in (2, 3, 4):
        out.append(CorpusEntry(f"H({n},1)", lambda n=n: make_heisenberg_nlie(n)))
    sums = {2: [(1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (0, 2), (2, 1), (1, 2), (0, 3)],
            3: [(1, 0), (2, 0), (0, 1), (1, 1), (0, 2)],
            4: [(1, 0), (0, 1)]}
    for n, pairs in sums.items():
        for j, l in pairs:
            out.append(CorpusEntry(f"H({n},1)+A({j}|{l})", _heis_plus(n, j, l)))
    for n, ms in ((2, range(3, 7)), (3, range(4, 7))):
        for mm in ms:
            out.append(CorpusEntry(f"F({n},{mm})", lambda n=n, mm=mm: make_filiform(n, mm)))
    out.append(CorpusEntry("S2(1|1)", odd_square_lie))
    out.append(CorpusEntry("S3(0|2)", odd_cube_3lie))
    out.append(CorpusEntry("M3(2|1)", mixed_3lie))
    return out


def corpus_pairs() -> list[tuple[str, str]]:
    return [
        ("H(2,1)", "A2(1|0)"), ("H(2,1)", "A2(0|1)"), ("H(2,1)", "H(2,1)"),
        ("A2(1|1)", "A2(0|1)"), ("F(2,4)", "A2(0|1)"), ("S2(1|1)", "A2(1|0)"),
        ("S2(1|1)", "H(2,1)"), ("F(2,4)", "H(2,1)"),
        ("H(3,1)", "A3(1|0)"), ("H(3,1)", "A3(0|1)"), ("A3(1|0)", "A3(0|1)"),
        ("A3(2|1)", "A3(1|1)"), ("S3(0|2)", "A3(1|0)"), ("M3(2|1)", "A3(0|1)"),
        ("H(4,1)", "A4(0|1)"),
    ]


def build_corpus() -> dict[str, NLieSuperalgebra]:
    return {e.name: e.build() for e in corpus()}


def verify_corpus(seed: int = 0, **solver) -> dict:
    algs = build_corpus()
    entries = [verify_algebra(alg, name, seed, **solver) for name, alg in algs.items()]
    pairs = [verify_pair(algs[a], algs[b], f"{a} (+) {b}", **solver) for a, b in corpus_pairs()]
    reports = entries + pairs
    return {
        "seed": seed,
        "entries": [r.as_dict() for r in entries],
        "pairs": [r.as_dict() for r in pairs],
        "summary": {
            "algebras": len(entries),
            "pairs": len(pairs),
            "skipped": sum(r.skipped is not None for r in reports),
            "checks": sum(r.summary()["checks"] for r in reports),
            "failed": sum(r.summary()["failed"] for r in reports),
        },
        "passed": all(r.passed for r in reports),
    }
