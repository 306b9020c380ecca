#!/usr/bin/env python3
"""Benchmark the structured braiding-operator kernels: numba vs numpy.

Times the single-pass gather kernel (the hot loop of apply_structured) with
identical inputs on both backends, plus the end-to-end structured apply for
context.  The numba timings exclude JIT compilation (one warmup call).

    python3 benchmarks/bench_structured.py --n-min 10 --n-max 24
"""

import argparse
import time

import numpy as np

from tlbraid import RepShape, apply_structured, structured_braid_op
from tlbraid import _kernels


def median_time(fn, repeats):
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return sorted(times)[len(times) // 2]


def kernel_inputs(n, rng):
    """The gather-pass inputs for the default (ghz-convention) B(n,1)."""
    op = structured_braid_op(RepShape(n, 1), validate_dense=False)
    v = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    v /= np.linalg.norm(v)
    d0 = complex(op.diag_block[0, 0])
    d1 = complex(op.diag_block[1, 1])
    pairs = [(complex(op.offdiag_block[1, 0]), complex(op.offdiag_block[0, 1]))]
    # sigma1 dressing on slots 2..n: coefficient 1 either way, bit flipped
    pairs += [(1 + 0j, 1 + 0j)] * (n - 1)
    phases = _kernels.phase_vector(pairs)
    mask = (1 << n) - 1
    kbit = 1 << (n - 1)
    return op, v, phases, mask, kbit, d0, d1


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=10)
    ap.add_argument("--n-max", type=int, default=22)
    ap.add_argument("--repeats", type=int, default=7)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    have_numba = _kernels.gather_pass_numba is not None
    print(f"kernel backend in use: {_kernels.backend()}"
          + ("" if have_numba else "  (numba unavailable, numpy only)"))
    header = f"{'n':>3} {'amps':>10} {'numpy ms':>10}"
    if have_numba:
        header += f" {'numba ms':>10} {'speedup':>8}"
    header += f" {'apply ms':>10}"
    print(header)

    for n in range(args.n_min, args.n_max + 1):
        op, v, phases, mask, kbit, d0, d1 = kernel_inputs(n, rng)
        t_np = median_time(
            lambda: _kernels.gather_pass_numpy(v, phases, mask, kbit, d0, d1),
            args.repeats)
        row = f"{n:>3} {1 << n:>10} {t_np * 1e3:>10.3f}"
        if have_numba:
            _kernels.gather_pass_numba(v, phases, mask, kbit, d0, d1)  # warmup
            t_nb = median_time(
                lambda: _kernels.gather_pass_numba(v, phases, mask, kbit,
                                                   d0, d1),
                args.repeats)
            row += f" {t_nb * 1e3:>10.3f} {t_np / t_nb:>8.2f}x"
        t_apply = median_time(lambda: apply_structured(op, v), args.repeats)
        row += f" {t_apply * 1e3:>10.3f}"
        print(row)

        out_np = _kernels.gather_pass_numpy(v, phases, mask, kbit, d0, d1)
        if have_numba:
            out_nb = _kernels.gather_pass_numba(v, phases, mask, kbit, d0, d1)
            assert np.max(np.abs(out_np - out_nb)) < 1e-14, "backends disagree"


if __name__ == "__main__":
    main()
