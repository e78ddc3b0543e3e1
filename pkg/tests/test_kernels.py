import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from nliesuper import _kernels
from nliesuper.algebra import NLieSuperalgebra, direct_sum, make_abelian, make_filiform, make_heisenberg_nlie
from nliesuper.basis import GradedDimension, normalize_tuple
from nliesuper.verify import build_corpus

needs_numba = pytest.mark.skipif(not _kernels.HAVE_NUMBA, reason="numba not installed")


@given(st.integers(0, 3), st.integers(1, 3), st.integers(1, 4), st.data())
def test_normalize_batch_matches_scalar(m, k, n, data):
    d = m + k
    rows = data.draw(st.lists(st.lists(st.integers(0, d - 1), min_size=n, max_size=n), min_size=1, max_size=8))
    arr = np.array(rows, dtype=np.int64)
    dims = GradedDimension(m, k)
    for backend in ("numpy",) + (("numba",) if _kernels.HAVE_NUMBA else ()):
        sign, srt = _kernels.normalize_batch(arr, m, backend)
        for r, s, t in zip(rows, sign, srt):
            want_s, want_t = normalize_tuple(tuple(r), dims)
            assert int(s) == want_s
            if want_s:
                assert tuple(int(i) for i in t) == want_t


CASES = [
    make_filiform(3, 6),
    direct_sum(make_heisenberg_nlie(2), make_abelian(2, (1, 2))),
    NLieSuperalgebra.from_brackets(3, (0, 1), {(0, 0, 0): [1]}),
    NLieSuperalgebra.from_brackets(2, (2, 2), {(0, 2): [0, 0, 1, 1], (2, 3): [1, -1, 0, 0], (0, 1): [3, 0, 0, 0]}),
]


@needs_numba
@pytest.mark.parametrize("alg", CASES)
def test_backends_agree(alg):
    args = alg.dense().kernel_args()
    for kern in (_kernels.jacobi_residual, _kernels.cocycle_rows):
        a = kern(*args, backend="numpy")
        b = kern(*args, backend="numba")
        assert a.dtype == b.dtype and np.array_equal(a, b)


@pytest.mark.parametrize("alg", CASES)
def test_object_dtype_path_agrees(alg):
    ds = alg.dense()
    args = list(ds.kernel_args())
    obj = [args[0].astype(object)] + args[1:]
    for kern in (_kernels.jacobi_residual, _kernels.cocycle_rows):
        a = kern(*args, backend="numpy")
        b = kern(*obj, backend="numba")  # object dtype falls back to numpy
        assert b.dtype == object
        assert np.array_equal(a, b.astype(np.int64))


def test_backend_env_flag(monkeypatch):
    monkeypatch.setenv("NLIESUPER_BACKEND", "numpy")
    assert _kernels.default_backend() == "numpy"
    monkeypatch.setenv("NLIESUPER_BACKEND", "fortran")
    with pytest.raises(ValueError):
        _kernels.default_backend()
    monkeypatch.delenv("NLIESUPER_BACKEND")
    assert _kernels.default_backend() == ("numba" if _kernels.HAVE_NUMBA else "numpy")
    assert _kernels.resolve_backend("numba", object) == "numpy"
    with pytest.raises(ValueError):
        _kernels.resolve_backend("cuda")


def test_encode_preserves_order():
    rows = np.array(list(itertools.product(range(3), repeat=3)))
    keys = _kernels.encode(rows, 3)
    assert list(keys) == sorted(keys) and len(set(keys.tolist())) == 27


@pytest.mark.parametrize("backend", ["numpy"] + (["numba"] if _kernels.HAVE_NUMBA else []))
def test_solver_independent_of_backend(backend):
    from nliesuper.multiplier import multiplier_dim

    for name, alg in sorted(build_corpus().items()):
        fresh = NLieSuperalgebra.from_brackets(alg.arity, alg.dims, dict(alg.constants))
        assert multiplier_dim(fresh, backend=backend) == multiplier_dim(alg), name
