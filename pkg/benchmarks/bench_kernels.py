"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each kernel gets the same inputs under both backends and the outputs are
compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit
from itertools import permutations

import numpy as np

from glindex import _pykernels
from glindex.clutter import Clutter, all_masks, catalog
from glindex.monomial import power_generators

try:
    from glindex import _kernels
except ImportError:
    _kernels = None


def _rank_case(rng: random.Random):
    nrows, ncols = 120, 160
    cols = []
    for _ in range(ncols):
        rows = sorted(rng.sample(range(nrows), 6))
        cols.append({r: rng.choice((-1, 1)) for r in rows})
    return (cols, nrows, 32003)


def _relabel_case(rng: random.Random):
    masks = sorted(rng.sample(all_masks(7, 3), 14))
    perms = np.array(list(permutations(range(7))), dtype=np.int32)
    return (masks, perms)


def _square_rows():
    I = power_generators(catalog()["D48_7"].edge_ideal(), 2)
    return I.exponent_rows()


def _window_case(rng: random.Random):
    from glindex.clutter import family_C_matcher

    m = family_C_matcher()
    C = Clutter(8, 3, tuple(rng.sample(all_masks(8, 3), 20)))
    subsets, rows = m._windows(8, 6)
    return (m.member_vector(C), rows, m.lookup_tables()[6])


def cases(seed: int) -> dict:
    rng = random.Random(seed)
    rows = _square_rows()
    return {
        "rank_mod_p": _rank_case(rng),
        "min_relabel": _relabel_case(rng),
        "lp_sweep": (rows, 6),
        "beta1_sweep": (rows,),
        "window_hit": _window_case(rng),
    }


def _norm(x):
    if isinstance(x, tuple):
        return tuple(_norm(y) for y in x)
    if isinstance(x, list):
        return [_norm(y) for y in x]
    if isinstance(x, np.ndarray):
        return x.tolist()
    return x


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'kernel':<12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, inputs in cases(args.seed).items():
        py_fn, cy_fn = getattr(_pykernels, name), getattr(_kernels, name)
        if _norm(py_fn(*inputs)) != _norm(cy_fn(*inputs)):
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        tp = min(timeit.repeat(lambda: py_fn(*inputs), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: cy_fn(*inputs), number=1, repeat=args.repeat))
        print(f"{name:<12} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
