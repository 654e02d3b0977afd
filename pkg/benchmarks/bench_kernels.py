"""Compare the pure-Python and compiled membership kernels.

Times membership_bits and apery_minima on a few generator sets of
increasing table size, best of three runs each.

    python3 benchmarks/bench_kernels.py
"""

import time

from fibsemi import SequenceSpec, minimal_generators, validate
from fibsemi import _kernel_py

try:
    from fibsemi import _kernel_cy
except ImportError:
    _kernel_cy = None

CASES = [
    ("fib n=8 d=2", (1, 1), 8, 2),
    ("fib n=12 d=2", (1, 1), 12, 2),
    ("lucas n=10 d=2", (1, 3), 10, 2),
    ("(2,5) n=12 d=2", (2, 5), 12, 2),
    ("(2,5) n=10 d=4", (2, 5), 10, 4),
]


def best_of(fn, runs=3):
    times = []
    for _ in range(runs):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    backends = [("pure", _kernel_py)]
    if _kernel_cy is not None:
        backends.append(("compiled", _kernel_cy))
    else:
        print("compiled kernel not built; timing pure backend only\n")

    header = f"{'case':<16} {'bound':>12}" + "".join(
        f" {name + ' (s)':>14}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f" {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for label, seed, n, d in CASES:
        params = validate(SequenceSpec(*seed), n, d)
        gens = minimal_generators(params)
        bound = gens[0] * gens[-1]
        row = f"{label:<16} {bound:>12}"
        timings = []
        bits_seen = None
        for _, mod in backends:
            bits = None

            def run(mod=mod):
                nonlocal bits
                bits = mod.membership_bits(gens, bound)
                mod.apery_minima(bits, bound, gens[0])

            t = best_of(run)
            timings.append(t)
            row += f" {t:>14.4f}"
            if bits_seen is None:
                bits_seen = bits
            else:
                assert bits == bits_seen, "backends disagree"
        if len(timings) == 2:
            row += f" {timings[0] / timings[1]:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
