#!/usr/bin/env python3
"""Compare the compiled and pure-Python term-dict kernel backends.

The micro-benchmarks call the kernel functions directly on random term dicts;
the determinant and division drivers are built only on those kernels, so both
backends execute identical algorithms.  With ``--e2e`` the built-in family
pipeline is also timed end to end in a subprocess per backend (selection
happens at import time via FOXTORSION_PURE).

Usage:  python benchmarks/bench_backends.py [--repeat N] [--e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from foxtorsion import _poly_python

try:
    from foxtorsion import _poly_core
except ImportError:
    _poly_core = None


def rand_terms(rng, nterms, rank=2, span=8, coeff=9):
    while (2 * span + 1) ** rank < 4 * nterms:  # keep the grid comfortably bigger
        span += 1
    out = {}
    while len(out) < nterms:
        key = tuple(rng.randint(-span, span) for _ in range(rank))
        out[key] = rng.randint(1, coeff) * rng.choice((1, -1))
    return out


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best


def grlex(e):
    return (sum(e), e)


def kernel_exact_div(kern, num, den):
    """Division that is exact by construction (num was built as quot * den)."""
    dlead = max(den, key=grlex)
    dcoeff = den[dlead]
    rem = dict(num)
    quot = {}
    while rem:
        lead = max(rem, key=grlex)
        qexp = tuple(a - b for a, b in zip(lead, dlead))
        qc = rem[lead] // dcoeff
        quot[qexp] = qc
        kern.iadd_scaled(rem, den, qexp, -qc)
    return quot


def kernel_cofactor_det(kern, matrix):
    """Cofactor determinant on raw term dicts (mul + accumulate kernels only)."""

    def go(m):
        if len(m) == 1:
            return m[0][0]
        total = {}
        for i, row in enumerate(m):
            if not row[0]:
                continue
            minor = [r[1:] for j, r in enumerate(m) if j != i]
            product = kern.mul_terms(row[0], go(minor))
            kern.iadd_scaled(total, product, (0, 0), 1 if i % 2 == 0 else -1)
        return total

    return go(matrix)


def run_micro(repeat):
    backends = [("python", _poly_python)]
    if _poly_core is not None:
        backends.append(("compiled", _poly_core))

    rng = random.Random(99)
    cases = []
    for size in (30, 100, 300):
        a = rand_terms(rng, size)
        b = rand_terms(rng, size)
        cases.append((f"mul {size}x{size} terms", lambda k, a=a, b=b: k.mul_terms(a, b)))

    quot = rand_terms(rng, 250)
    den = rand_terms(rng, 20)
    num = _poly_python.mul_terms(quot, den)
    cases.append(
        ("exact division 250/20", lambda k: kernel_exact_div(k, num, den))
    )

    det_input = [[rand_terms(rng, 3, span=2, coeff=3) for _ in range(5)] for _ in range(5)]
    cases.append(("cofactor det 5x5", lambda k: kernel_cofactor_det(k, det_input)))

    width = max(len(name) for name, _ in cases)
    header = f"{'benchmark'.ljust(width)}  " + "  ".join(
        f"{name:>12}" for name, _ in backends
    )
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, fn in cases:
        times = [best_of(lambda m=mod: fn(m), repeat) for _, mod in backends]
        row = f"{name.ljust(width)}  " + "  ".join(f"{t * 1e3:>10.2f}ms" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>7.2f}x"
        print(row)
        sys.stdout.flush()
    if _poly_core is None:
        print("\n(compiled backend not built; showing pure Python only)")


def run_end_to_end(repeat):
    print("\nend to end: family --n 8 --surface S (one subprocess per backend)")
    for label, extra_env in (("python", {"FOXTORSION_PURE": "1"}), ("compiled", {})):
        if label == "compiled" and _poly_core is None:
            continue
        env = {k: v for k, v in os.environ.items() if k != "FOXTORSION_PURE"}
        env.update(extra_env)
        best = None
        for _ in range(repeat):
            start = time.perf_counter()
            subprocess.run(
                [sys.executable, "-m", "foxtorsion", "family", "--n", "8",
                 "--surface", "S"],
                check=True,
                env=env,
                stdout=subprocess.DEVNULL,
            )
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        print(f"  {label:>9}: {best * 1e3:.1f}ms (includes interpreter startup)")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--e2e", action="store_true")
    args = parser.parse_args()
    run_micro(args.repeat)
    if args.e2e:
        run_end_to_end(args.repeat)


if __name__ == "__main__":
    main()
