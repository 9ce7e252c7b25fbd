"""Select the compiled kernels when the extension is built, else pure Python.

Set ``GLINDEX_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("GLINDEX_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

rank_mod_p = _impl.rank_mod_p
min_relabel = _impl.min_relabel
lp_sweep = _impl.lp_sweep
beta1_sweep = _impl.beta1_sweep
window_hit = _impl.window_hit

# exponent packing in the compiled sweeps uses 4 bits per variable
_PACK_VARS = 16
_PACK_EXP = 15


def _packable(rows) -> bool:
    if not rows:
        return True
    return len(rows[0]) <= _PACK_VARS and max(max(r) for r in rows) <= _PACK_EXP


def lp_sweep_rows(rows, d):
    if BACKEND != "python" and _packable(rows):
        return lp_sweep(rows, d)
    return _pykernels.lp_sweep(rows, d)


def beta1_sweep_rows(rows):
    if BACKEND != "python" and _packable(rows):
        return beta1_sweep(rows)
    return _pykernels.beta1_sweep(rows)
