"""JSON algebra files.

Schema::

    {"arity": n, "even_dim": m, "odd_dim": k, "basis_names": [...],
     "brackets": [{"args": [i1, ..., in],
                   "value": [{"num": "p", "den": "q", "basis": j}, ...]}]}

``args`` must already be canonical; omitted monomials are zero.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra import AlgebraError, NLieSuperalgebra, validate_grading
from .basis import GradedDimension, is_canonical


class AlgebraFormatError(ValueError):
    pass


def to_dict(alg: NLieSuperalgebra) -> dict:
    out = {
        "arity": alg.arity,
        "even_dim": alg.dims.even,
        "odd_dim": alg.dims.odd,
    }
    if alg.basis_names is not None:
        out["basis_names"] = list(alg.basis_names)
    out["brackets"] = []
    for mono, val in alg.constants:
        terms = [
            {"num": str(v.numerator), "den": str(v.denominator), "basis": j}
            for j, v in enumerate(val)
            if v
        ]
        out["brackets"].append({"args": list(mono), "value": terms})
    return out


def dumps(alg: NLieSuperalgebra) -> str:
    return json.dumps(to_dict(alg), indent=2) + "\n"


def _int_field(obj, key, minimum=0):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise AlgebraFormatError(f"field {key!r} must be an integer >= {minimum}, got {v!r}")
    return v


def _scalar(term, where):
    num, den = term.get("num"), term.get("den")
    if not isinstance(num, str) or not isinstance(den, str):
        raise AlgebraFormatError(f"{where}: num and den must be decimal strings")
    try:
        p, q = int(num), int(den)
    except ValueError:
        raise AlgebraFormatError(f"{where}: non-integer num/den {num!r}/{den!r}") from None
    if q == 0:
        raise AlgebraFormatError(f"{where}: zero denominator")
    return Fraction(p, q)


def from_dict(data, check_grading: bool = True) -> NLieSuperalgebra:
    if not isinstance(data, dict):
        raise AlgebraFormatError("top-level JSON value must be an object")
    n = _int_field(data, "arity", 2)
    m = _int_field(data, "even_dim")
    k = _int_field(data, "odd_dim")
    dims = GradedDimension(m, k)
    d = m + k
    names = data.get("basis_names")
    if names is not None:
        if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
            raise AlgebraFormatError("basis_names must be a list of strings")
        if len(names) != d:
            raise AlgebraFormatError(f"{len(names)} basis names for dimension {d}")
    raw = data.get("brackets", [])
    if not isinstance(raw, list):
        raise AlgebraFormatError("brackets must be a list")
    brackets = {}
    for pos, entry in enumerate(raw):
        where = f"brackets[{pos}]"
        if not isinstance(entry, dict):
            raise AlgebraFormatError(f"{where}: expected an object")
        args = entry.get("args")
        if (not isinstance(args, list) or len(args) != n
                or not all(isinstance(i, int) and not isinstance(i, bool) for i in args)):
            raise AlgebraFormatError(f"{where}: args must be a list of {n} integers")
        if any(not 0 <= i < d for i in args):
            raise AlgebraFormatError(f"{where}: basis index out of range in {args}")
        mono = tuple(args)
        if not is_canonical(mono, dims):
            raise AlgebraFormatError(f"{where}: non-canonical bracket key {args}")
        if mono in brackets:
            raise AlgebraFormatError(f"{where}: duplicate bracket key {args}")
        vec = [Fraction(0)] * d
        value = entry.get("value", [])
        if not isinstance(value, list):
            raise AlgebraFormatError(f"{where}: value must be a list")
        for t, term in enumerate(value):
            if not isinstance(term, dict):
                raise AlgebraFormatError(f"{where}.value[{t}]: expected an object")
            j = term.get("basis")
            if not isinstance(j, int) or isinstance(j, bool) or not 0 <= j < d:
                raise AlgebraFormatError(f"{where}.value[{t}]: basis index out of range: {j!r}")
            vec[j] += _scalar(term, f"{where}.value[{t}]")
        brackets[mono] = vec
    try:
        alg = NLieSuperalgebra.from_brackets(n, dims, brackets, names)
    except AlgebraError as exc:
        raise AlgebraFormatError(str(exc)) from None
    bad = validate_grading(alg) if check_grading else []
    if bad:
        mono, want = bad[0]
        raise AlgebraFormatError(
            f"bracket {list(mono)} must have parity {want} ({len(bad)} parity violation(s))"
        )
    return alg


def loads(text: str, check_grading: bool = True) -> NLieSuperalgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFormatError(f"malformed JSON: {exc}") from None
    return from_dict(data, check_grading)


def load(path, check_grading: bool = True) -> NLieSuperalgebra:
    """Read an algebra file; parity violations are rejected unless disabled."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise AlgebraFormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, check_grading)


def save(alg: NLieSuperalgebra, path) -> None:
    Path(path).write_text(dumps(alg))
