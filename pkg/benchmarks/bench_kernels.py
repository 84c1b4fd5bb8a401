"""Time the compiled kernels against the pure-Python ones on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import timeit

from colorbraid import _kernels_py
from colorbraid.action import codec

try:
    from colorbraid import _kernels as _compiled
except ImportError:
    _compiled = None


def _cases(rng: random.Random):
    cd = codec(5)
    n = 10
    word = [(rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(60)]
    codes = tuple(rng.randrange(len(cd.trans)) for _ in range(n))
    words = [[(rng.randrange(n - 1), rng.choice((1, -1))) for _ in range(40)] for _ in range(2000)]
    return {
        "artin_images (60 letters, n=10) x200": (lambda k: [k.artin_images(n, word) for _ in range(200)]),
        "apply_codes (2000 words, d=5)": (lambda k: [k.apply_codes(codes, w, cd.conj_table) for w in words]),
        "census_labels (n=5, d=5)": (lambda k: k.census_labels(5, 5, cd.pairs, cd.conj_table)),
        "census_labels (n=6, d=4)": (lambda k: k.census_labels(6, 4, codec(4).pairs, codec(4).conj_table)),
    }


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _compiled is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'case':<40} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fn in _cases(random.Random(7)).items():
        py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=args.repeat))
        if _compiled is None:
            print(f"{name:<40} {py:>10.4f} {'-':>10} {'-':>8}")
            continue
        if fn(_compiled) != fn(_kernels_py):
            raise SystemExit(f"{name}: backends disagree")
        cy = min(timeit.repeat(lambda: fn(_compiled), number=1, repeat=args.repeat))
        print(f"{name:<40} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
