"""Compare the numba loop kernels with the numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat N]

Both paths are timed in the same process through the NUMPY_KERNELS and
LOOP_KERNELS tables; outputs are checked to be identical before timing.
The first loop call is excluded (it includes JIT compilation).
"""
import argparse
import time

import numpy as np

from firlab import _kernels as K
from firlab import ore_poly as O
from firlab import parse_field


def _best(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def cases():
    for desc, deg_f, deg_g in (("gf(2,2)", 8, 4), ("gf(2,3)", 8, 4), ("gf(3,2)", 6, 3)):
        F = parse_field(desc)
        rng = np.random.default_rng(0)
        f = O.random_poly(F, rng, deg_f, monic=True)
        G = O.monic_array(F, deg_g)
        Fm = np.ascontiguousarray(np.broadcast_to(f.arr(), (G.shape[0], deg_f + 1)))
        base = (Fm, G, F.add_table, F.mul_table, F.neg_table, F.tpow)
        yield f"batch_rrem {desc} {G.shape[0]}x", "batch_rrem", base
        yield f"batch_lrem {desc} {G.shape[0]}x", "batch_lrem", base + (F.sinv,)
    for p, shape in ((2, (64, 96)), (3, (48, 64)), (5, (40, 40))):
        M = np.random.default_rng(p).integers(0, p, size=shape).astype(np.int64)
        yield f"rref p={p} {shape[0]}x{shape[1]}", "rref", (M, p)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"loop backend: {K.backend_name()}")
    print(f"{'case':<30} {'numpy ms':>10} {'loops ms':>10} {'speedup':>8}")
    for label, key, a in cases():
        np_fn, loop_fn = K.NUMPY_KERNELS[key], K.LOOP_KERNELS[key]
        copy = (lambda x: tuple(y.copy() if isinstance(y, np.ndarray) else y for y in x))
        r1, r2 = np_fn(*copy(a)), loop_fn(*copy(a))  # warm-up, includes compilation
        same = all(np.array_equal(np.asarray(x), np.asarray(y)) for x, y in zip(r1, r2)) if key == "rref" else np.array_equal(r1, r2)
        if not same:
            raise SystemExit(f"{label}: backends disagree")
        tn = _best(np_fn, copy(a), args.repeat)
        tl = _best(loop_fn, copy(a), args.repeat)
        print(f"{label:<30} {tn * 1e3:>10.2f} {tl * 1e3:>10.2f} {tn / tl:>7.1f}x")


if __name__ == "__main__":
    main()
