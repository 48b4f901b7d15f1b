"""Timing comparison of the numba and numpy kernel backends.

Times each fused kernel on layer-sized arrays and one full training step
per method, printing a table with the speedup of numba over numpy.

    python3 benchmarks/bench_kernels.py [--dims 500x784] [--batch 100] [--repeat 30]
"""

import argparse
import time

import numpy as np

from semibp import kernels
from semibp.losses import LossKind
from semibp.network import Batch, NetworkSpec, init_params
from semibp.semi_implicit import HyperParams, semi_implicit_step


def _time(fn, repeat):
    fn()  # warm up (first numba call compiles)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def kernel_cases(d_out, d_in, batch, rng):
    z = rng.standard_normal((d_out, batch))
    s = rng.standard_normal((d_out, batch))
    t = rng.standard_normal((d_out, batch))
    logits = rng.standard_normal((10, batch))
    labels = rng.integers(0, 10, size=batch)
    return [
        ("relu", lambda: kernels.relu(z)),
        ("relu_derivative", lambda: kernels.relu_derivative(z)),
        ("gate_backward", lambda: kernels.gate_backward(z, s)),
        ("relu_fit_value", lambda: kernels.relu_fit_value(z, t)),
        ("relu_fit_value_shifted", lambda: kernels.relu_fit_value_shifted(z, s, 0.3, t)),
        ("relu_fit_residual", lambda: kernels.relu_fit_residual(z, t)),
        ("sq_diff", lambda: kernels.sq_diff(z, t)),
        ("softmax_xent_value", lambda: kernels.softmax_xent_value(logits, labels)),
        ("softmax_xent_grad", lambda: kernels.softmax_xent_grad(logits, labels)),
    ]


def step_case(d_out, d_in, batch, rng):
    spec = NetworkSpec(layer_dims=(d_in, d_out, 10), init_std=0.01, seed=0)
    params = init_params(spec)
    data = Batch(
        inputs=rng.random((d_in, batch)),
        labels=rng.integers(0, 10, size=batch),
    )
    hyper = HyperParams(eta=1.0, lam=1.0, cg_iters=5)

    def run():
        semi_implicit_step(spec, params, data, hyper, LossKind.SOFTMAX_CROSS_ENTROPY)

    return [("semi_implicit_step", run)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", default="500x784", help="layer shape d_out x d_in")
    ap.add_argument("--batch", type=int, default=100)
    ap.add_argument("--repeat", type=int, default=30)
    args = ap.parse_args()
    d_out, d_in = (int(p) for p in args.dims.split("x"))

    backends = kernels.available_backends()
    if "numba" not in backends:
        print("numba backend unavailable; nothing to compare")
        return

    rng = np.random.default_rng(0)
    cases = kernel_cases(d_out, d_in, args.batch, rng) + step_case(
        d_out, d_in, args.batch, rng
    )
    print(f"arrays {d_out}x{args.batch}, layer {d_out}x{d_in}, best of {args.repeat}")
    print(f"{'kernel':24s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s}")
    for name, fn in cases:
        times = {}
        for backend in ("numpy", "numba"):
            kernels.set_backend(backend)
            times[backend] = _time(fn, args.repeat)
        ratio = times["numpy"] / times["numba"]
        print(
            f"{name:24s} {times['numpy'] * 1e6:9.1f}u {times['numba'] * 1e6:9.1f}u "
            f"{ratio:7.2f}x"
        )
    kernels.set_backend("auto")


if __name__ == "__main__":
    main()
