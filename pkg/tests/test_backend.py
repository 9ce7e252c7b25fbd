import random
import subprocess
import sys
from itertools import permutations

import numpy as np
import pytest

from glindex import _backend, _pykernels

try:
    from glindex import _kernels
except ImportError:  # pragma: no cover
    _kernels = None

needs_ext = pytest.mark.skipif(_kernels is None, reason="compiled extension not built")


def test_env_var_forces_python():
    code = "import glindex._backend as b; print(b.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env={"GLINDEX_PURE_PYTHON": "1", "PATH": ""}).stdout.strip()
    assert out == "python"


@needs_ext
def test_rank_kernels_agree():
    rng = random.Random(3)
    for _ in range(60):
        nrows, ncols = rng.randint(1, 20), rng.randint(1, 20)
        cols = [{r: rng.randint(-3, 3) or 1 for r in rng.sample(range(nrows), rng.randint(0, nrows))}
                for _ in range(ncols)]
        for p in (2, 3, 7):
            assert _kernels.rank_mod_p(cols, nrows, p) == _pykernels.rank_mod_p(cols, nrows, p)


@needs_ext
def test_relabel_kernels_agree():
    rng = random.Random(4)
    perms = np.array(list(permutations(range(5))), dtype=np.int32)
    for _ in range(60):
        masks = sorted(rng.sample([m for m in range(32) if bin(m).count("1") == 3], rng.randint(0, 10)))
        a = _kernels.min_relabel(masks, perms)
        b = _pykernels.min_relabel(masks, perms)
        assert list(a[0]) == list(b[0])


@needs_ext
def test_sweep_kernels_agree():
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(3, 7)
        rows = sorted({tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(rng.randint(2, 9))})
        d = sum(rows[0])
        rows = [r for r in rows if sum(r) == d]
        if len(rows) < 2 or d == 0:
            continue
        assert _kernels.lp_sweep(rows, d) == _pykernels.lp_sweep(rows, d)
        assert _kernels.beta1_sweep(rows) == _pykernels.beta1_sweep(rows)


def test_rows_fall_back_beyond_packing_range():
    rows = [tuple([16] + [0] * 2), tuple([0, 16, 0])]
    assert _backend.beta1_sweep_rows(rows) == _pykernels.beta1_sweep(rows)


@pytest.mark.parametrize("argv", [["betti", "D1_6"], ["classify", "D1_6"], ["linpres", "D48_7", "--power", "2"]])
def test_fallback_gives_identical_cli_output(argv):
    import os
    base = [sys.executable, "-m", "glindex.cli", *argv]
    env = dict(os.environ)
    fast = subprocess.run(base, capture_output=True, check=True, env=env).stdout
    env["GLINDEX_PURE_PYTHON"] = "1"
    slow = subprocess.run(base, capture_output=True, check=True, env=env).stdout
    assert fast == slow
