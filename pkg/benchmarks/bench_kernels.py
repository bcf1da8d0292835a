"""Time the compiled kernels against the numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from gsp4sieve import _kernels, grouplab
from gsp4sieve.algebra import kronecker

# sextic x^6 + x^5 + x^4 + 1, coefficients low-first
COEFFS = [1, 0, 0, 0, 1, 1, 1]


def _nonres(p):
    return next(n for n in range(2, p) if kronecker(n, p) == -1)


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.compiled is None:
        print("compiled kernels not built; only the fallback is available")
    backends = [("python", _kernels.pure)]
    if _kernels.compiled is not None:
        backends.insert(0, ("cython", _kernels.compiled))

    cases = []
    for p, k in [(1009, 1), (10007, 1), (101, 2), (401, 2)]:
        n = _nonres(p)
        cases.append((f"char_sum p={p} k={k}", lambda m, p=p, k=k, n=n: m.char_sum(COEFFS, p, k, n)))
    gens = [[int(x) for x in g.ravel()] for g in grouplab.standard_generators(3)]
    cases.append(("closure Sp(4,3)", lambda m: m.closure_size(gens, 3)))

    print(f"{'kernel':<24}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, fn in cases:
        times, results = [], []
        for _, mod in backends:
            t, r = _time(lambda: fn(mod), args.repeat)
            times.append(t)
            results.append(r)
        if len(set(results)) != 1:
            raise SystemExit(f"{label}: backends disagree {results}")
        speed = f"{times[-1] / times[0]:9.1f}x" if len(times) > 1 else "        -"
        print(f"{label:<24}" + "".join(f"{t * 1e3:10.1f}ms" for t in times) + speed)


if __name__ == "__main__":
    main()
