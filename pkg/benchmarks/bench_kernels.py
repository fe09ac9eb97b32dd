"""Time the compiled and pure-Python kernel backends on the same workloads.

    python3 benchmarks/bench_kernels.py [--points N] [--repeat K]
"""
import argparse
import time

import numpy as np

from quasiatom import kernels

ALPHA = 7.2973525693e-3


def workloads(points):
    betas = np.geomspace(ALPHA * (1 + 1e-9), 1.0, points)
    gammas = np.geomspace(1e-6, 1e6, points)
    energies = np.geomspace(1e-6, 100.0, max(points // 100, 10))
    return {
        "sign-change scan": lambda k: k.sign_change_indices(betas, ALPHA),
        "zeta_array": lambda k: k.zeta_array(gammas),
        "recoil_beta_array": lambda k: k.recoil_beta_array(energies, 1e-12, 1e-12, 200),
        "brent (relativistic root)": lambda k: k.brent_residual(ALPHA, 0.0077, 0.0078, 1e-12, 1e-12, 200),
    }


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=10**6, help="grid size for array workloads")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = [kernels.python_backend]
    compiled = kernels.compiled_backend()
    if compiled is None:
        print("compiled extension not built; timing the Python backend only")
    else:
        backends.append(compiled)

    print(f"{'workload':<28}" + "".join(f"{b.BACKEND:>12}" for b in backends) + "     speedup")
    for name, fn in workloads(args.points).items():
        times = [best_of(lambda: fn(b), args.repeat) for b in backends]
        row = f"{name:<28}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2:
            row += f"{times[0] / times[1]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
