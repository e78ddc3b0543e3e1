import json

import pytest

from nliesuper.algebra import NLieSuperalgebra, make_heisenberg_nlie
from nliesuper.serialize import AlgebraFormatError, dumps, from_dict, load, loads, save, to_dict
from nliesuper.verify import build_corpus


def test_round_trip_heisenberg(tmp_path):
    h = make_heisenberg_nlie(2)
    p = tmp_path / "h.json"
    save(h, p)
    assert load(p) == h


def test_round_trip_fractions_and_names():
    alg = NLieSuperalgebra.from_brackets(2, (2, 1), {(0, 1): ["-3/7", "5/2", 0]}, ["a", "b", "c"])
    assert loads(dumps(alg)) == alg


@pytest.mark.parametrize("name,alg", sorted(build_corpus().items()))
def test_corpus_round_trip(name, alg):
    assert loads(dumps(alg)) == alg


def _h_dict():
    return to_dict(make_heisenberg_nlie(2))


@pytest.mark.parametrize("mutate,msg", [
    (lambda d: d["brackets"][0].update(args=[1, 0]), "non-canonical"),
    (lambda d: d["brackets"][0]["value"][0].update(den="0"), "zero denominator"),
    (lambda d: d["brackets"][0]["value"][0].update(num="x"), "non-integer"),
    (lambda d: d["brackets"][0]["value"][0].update(num=1), "decimal strings"),
    (lambda d: d["brackets"][0].update(args=[0, 9]), "out of range"),
    (lambda d: d["brackets"].append(dict(d["brackets"][0])), "duplicate"),
    (lambda d: d.update(arity=1), "arity"),
    (lambda d: d.update(even_dim="3"), "even_dim"),
    (lambda d: d.update(basis_names=["a"]), "basis names"),
    (lambda d: d["brackets"][0]["value"][0].update(basis=7), "out of range"),
    (lambda d: d["brackets"][0].update(args=[0, 1, 2]), "args"),
])
def test_rejects_malformed(mutate, msg):
    d = _h_dict()
    mutate(d)
    with pytest.raises(AlgebraFormatError, match=msg):
        from_dict(d)


def test_rejects_parity_violation_unless_disabled():
    d = {"arity": 2, "even_dim": 1, "odd_dim": 1,
         "brackets": [{"args": [0, 1], "value": [{"num": "1", "den": "1", "basis": 0}]}]}
    with pytest.raises(AlgebraFormatError, match="parity"):
        from_dict(d)
    assert from_dict(d, check_grading=False).dim == 2


def test_rejects_bad_json(tmp_path):
    with pytest.raises(AlgebraFormatError, match="malformed"):
        loads("{")
    with pytest.raises(AlgebraFormatError):
        loads(json.dumps([1, 2]))
    with pytest.raises(AlgebraFormatError, match="cannot read"):
        load(tmp_path / "missing.json")


def test_values_are_summed_and_zeros_dropped():
    d = {"arity": 2, "even_dim": 3, "odd_dim": 0, "brackets": [
        {"args": [0, 1], "value": [{"num": "1", "den": "2", "basis": 2},
                                   {"num": "1", "den": "2", "basis": 2}]},
        {"args": [0, 2], "value": [{"num": "0", "den": "1", "basis": 1}]},
    ]}
    alg = from_dict(d)
    assert alg == make_heisenberg_nlie(2)
