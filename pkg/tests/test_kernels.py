"""The compiled loop kernels and the numpy fallbacks must agree exactly."""
import os
import subprocess
import sys

import numpy as np
import pytest

from firlab import _kernels as K
from firlab import ore_poly as O


@pytest.mark.parametrize("desc", ["gf(2,2)", "gf(2,3)", "gf(3,2)"])
def test_batch_right_remainders_agree(desc):
    from firlab import parse_field

    F = parse_field(desc)
    rng = np.random.default_rng(0)
    f = O.random_poly(F, rng, 5, monic=True)
    G = O.monic_array(F, 2)
    Fm = np.ascontiguousarray(np.broadcast_to(f.arr(), (G.shape[0], f.degree + 1)))
    args = (Fm, G, F.add_table, F.mul_table, F.neg_table, F.tpow)
    a = K.NUMPY_KERNELS["batch_rrem"](*args)
    b = K.LOOP_KERNELS["batch_rrem"](*args)
    assert np.array_equal(a, b)
    # and against one-at-a-time division
    for k in range(0, G.shape[0], 5):
        g = O.monic_from_index(F, 2, k)
        r = O.right_divmod(f, g)[1]
        assert list(a[k][: len(r.coeffs)]) == list(r.coeffs)
        assert not a[k][len(r.coeffs):].any()


@pytest.mark.parametrize("desc", ["gf(2,2)", "gf(2,3)"])
def test_batch_left_remainders_agree(desc):
    from firlab import parse_field

    F = parse_field(desc)
    rng = np.random.default_rng(1)
    f = O.random_poly(F, rng, 5, monic=True)
    G = O.monic_array(F, 2)
    Fm = np.ascontiguousarray(np.broadcast_to(f.arr(), (G.shape[0], f.degree + 1)))
    args = (Fm, G, F.add_table, F.mul_table, F.neg_table, F.tpow, F.sinv)
    assert np.array_equal(K.NUMPY_KERNELS["batch_lrem"](*args), K.LOOP_KERNELS["batch_lrem"](*args))


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rref_agree(p):
    rng = np.random.default_rng(p)
    for _ in range(20):
        M = rng.integers(0, p, size=(6, 9)).astype(np.int64)
        r1, piv1 = K.NUMPY_KERNELS["rref"](M.copy(), p)
        r2, piv2 = K.LOOP_KERNELS["rref"](M.copy(), p)
        assert np.array_equal(r1, r2)
        assert list(piv1) == list(piv2)


def test_disable_flag_selects_numpy():
    code = "from firlab import _kernels as K; print(K.backend_name())"
    env = dict(os.environ, FIRLAB_DISABLE_NUMBA="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "numpy"


def test_results_identical_under_both_backends():
    code = (
        "from firlab import parse_field, ore_poly as O;"
        "F = parse_field('gf(2,2)');"
        "print([len(O.enumerate_atoms(F, d)) for d in range(1, 5)])"
    )
    outs = []
    for flag in ("0", "1"):
        env = dict(os.environ, FIRLAB_DISABLE_NUMBA=flag)
        r = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        outs.append(r.stdout.strip())
    assert outs[0] == outs[1] == "[4, 5, 18, 51]"


def test_scalar_kernels_agree():
    from firlab import parse_field

    F = parse_field("gf(2,3)")
    rng = np.random.default_rng(4)
    for _ in range(20):
        f = O.random_poly(F, rng, 6)
        g = O.random_poly(F, rng, 3)
        a, b = f.arr(), g.arr()
        m = (a, b, F.add_table, F.mul_table, F.tpow)
        assert np.array_equal(K.NUMPY_KERNELS["mul"](*m), K.LOOP_KERNELS["mul"](*m))
        d = (a, b, F.add_table, F.mul_table, F.neg_table, F.inv_table, F.tpow)
        for x, y in zip(K.NUMPY_KERNELS["rdivmod"](*d), K.LOOP_KERNELS["rdivmod"](*d)):
            assert np.array_equal(x, y)
        for x, y in zip(K.NUMPY_KERNELS["ldivmod"](*d, F.sinv), K.LOOP_KERNELS["ldivmod"](*d, F.sinv)):
            assert np.array_equal(x, y)


def test_loop_table_is_compiled_when_numba_present():
    if not K.HAVE_NUMBA:
        pytest.skip("numba not installed")
    assert type(K.LOOP_KERNELS["rref"]).__name__ == "CPUDispatcher"
    assert K.rref_kernel is K.LOOP_KERNELS["rref"]
