import os
import subprocess
import sys
from itertools import product

import pytest

from wittaut import kernels
from wittaut.autos import lemma23_bruteforce

backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])


def test_active_backend_is_known():
    assert kernels.BACKEND in ("cython", "python")
    assert kernels.backend() is kernels.backend(kernels.BACKEND)
    with pytest.raises(ValueError):
        kernels.backend("fortran")


@pytest.mark.parametrize("name", backends)
def test_det_small(name):
    mod = kernels.backend(name)
    assert mod.det_small((1, 2, 3, 4), 2) == -2
    assert mod.det_small((2, 0, 0, 0, 3, 0, 0, 0, 5), 3) == 30
    assert mod.det_small((0, 1, 1, 0), 2) == -1


def test_det_agrees_on_all_small_matrices():
    if len(backends) < 2:
        pytest.skip("compiled kernels not built")
    c, p = kernels.backend("cython"), kernels.backend("python")
    for m in product(range(-1, 2), repeat=9):
        assert c.det_small(m, 3) == p.det_small(m, 3)


@pytest.mark.parametrize("n,S,Sp,bound", [
    (1, [(2, 1)], [(2, 1), (3, 1)], 3),
    (1, [(2, 1)], [(2, 1), (-2, 1)], 2),
    (2, [(2, 1), (5, 2)], [(2, 1), (3, 1), (5, 2), (7, 2)], 1),
    (2, [(2, 1), (3, 2)], [(2, 1), (2, 2), (3, 1), (3, 2), (-2, 1)], 2),
])
def test_scan_backends_agree(n, S, Sp, bound):
    results = {b: lemma23_bruteforce(n, S, Sp, bound, backend=b, chunks=5) for b in backends}
    assert len(set(results.values())) == 1


def test_chunking_does_not_change_result():
    S = [(2, 1), (3, 1), (5, 2), (7, 2)]
    ref = lemma23_bruteforce(2, S, S, 1, chunks=1)
    for chunks in (2, 7, 81, 500):
        assert lemma23_bruteforce(2, S, S, 1, chunks=chunks) == ref


def test_env_var_forces_fallback():
    env = dict(os.environ, WITTAUT_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "from wittaut import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
