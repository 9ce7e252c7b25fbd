"""Betti numbers from lcm-lattice homology, Hochster's formula, and the
Green-Lazarsfeld index.

The multigraded Betti number at u is the reduced homology of the order
complex of the open interval (1, u), shifted by one.  First syzygies only
need interval connectivity, which the sweep kernels compute directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from . import _backend
from .clutter import Clutter
from .complex import Q, Field, SimplicialComplex, reduced_homology_dims, stanley_reisner_complex
from .lattice import build_lcm_lattice, interval_order_complex, longest_chain
from .monomial import Monomial, MonomialIdeal

INFINITY = math.inf


class UnsupportedInputError(ValueError):
    """Input outside what an operation is defined for."""


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers; the graded view is derived."""

    n: int
    multigraded: dict = field(default_factory=dict)  # (i, exponents) -> rank

    def graded(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for (i, e), r in self.multigraded.items():
            out[(i, sum(e))] = out.get((i, sum(e)), 0) + r
        return out

    def get(self, i: int, j: int) -> int:
        return self.graded().get((i, j), 0)

    def projective_dimension(self) -> int:
        return max((i for i, _ in self.multigraded), default=-1)

    def regularity(self) -> int:
        return max((sum(e) - i for i, e in self.multigraded), default=0)

    def to_json(self) -> dict:
        return {
            "graded": [[i, j, r] for (i, j), r in sorted(self.graded().items())],
            "multigraded": [[i, list(e), r] for (i, e), r in sorted(self.multigraded.items())],
        }


def _require_equigenerated(I: MonomialIdeal) -> int:
    if I.is_zero():
        raise UnsupportedInputError("the zero ideal has no index")
    if not I.is_equigenerated():
        raise UnsupportedInputError(
            f"index is defined here only for equigenerated ideals (degrees {sorted(I.degrees())})"
        )
    return I.generating_degree


# -- lattice (GPW) route ----------------------------------------------------

def beta_multi(I: MonomialIdeal, i: int, u: Monomial, f: Field = Q, method: str = "auto") -> int:
    """beta_{i,u}(I); zero when u is not in the lcm-lattice.

    ``method="lattice"`` forces interval homology even for i = 1.
    """
    if i < 0 or I.is_zero():
        return 0
    L = build_lcm_lattice(I)
    if u not in L or u.is_one():
        return 0
    if i == 1 and method == "auto":
        return first_syzygy_betti(I).get(u.exponents, 0)
    dims = reduced_homology_dims(interval_order_complex(L, u), f)
    k = i  # H~_{i-1} sits at index i of the dims list
    return dims[k] if k < len(dims) else 0


def betti_table(I: MonomialIdeal, f: Field = Q) -> BettiTable:
    """Full multigraded table by lattice homology."""
    table = BettiTable(I.n)
    if I.is_zero():
        return table
    L = build_lcm_lattice(I)
    for u in L.monomials():
        if u.is_one():
            continue
        dims = reduced_homology_dims(interval_order_complex(L, u), f)
        for k, r in enumerate(dims):
            if r:
                table.multigraded[(k, u.exponents)] = r
    # chains in (1, u) have at most longest_chain - 1 elements, so homology
    # and hence Betti numbers vanish from that homological degree on
    bound = longest_chain(L)
    assert all(i < bound for i, _ in table.multigraded)
    return table


def beta_graded(I: MonomialIdeal, i: int, j: int, f: Field = Q, method: str = "auto") -> int:
    if I.is_zero() or i < 0:
        return 0
    if i == 0:
        return sum(1 for g in I.generators if g.degree == j)
    if i == 1 and method == "auto":
        return sum(r for w, r in first_syzygy_betti(I).items() if sum(w) == j)
    L = build_lcm_lattice(I)
    total = 0
    for u in L.monomials():
        if u.degree == j and not u.is_one():
            total += beta_multi(I, i, u, f, method)
    return total


def first_syzygy_betti(I: MonomialIdeal) -> dict[tuple, int]:
    """{w: beta_{1,w}} for the nonzero first syzygy multidegrees (field-free)."""
    if len(I) < 2:
        return {}
    return _backend.beta1_sweep_rows(I.exponent_rows())


# -- Hochster route ---------------------------------------------------------

def _as_complex(X) -> tuple[SimplicialComplex, list]:
    if isinstance(X, SimplicialComplex):
        return X, list(X.vertices)
    if isinstance(X, Clutter):
        # I(C) is the Stanley-Reisner ideal of the clique complex of the complement
        return X.complement().clique_complex(), list(range(1, X.n + 1))
    if isinstance(X, MonomialIdeal):
        if not X.is_squarefree():
            raise UnsupportedInputError("Hochster's formula needs a square-free ideal")
        return stanley_reisner_complex(X), list(range(1, X.n + 1))
    raise TypeError(f"cannot read a simplicial complex from {type(X).__name__}")


def hochster_table(X, f: Field = Q) -> dict[tuple[int, int], int]:
    """Graded Betti numbers of the Stanley-Reisner ideal by Hochster's formula."""
    delta, ground = _as_complex(X)
    faces_by_mask = {}
    index = {v: b for b, v in enumerate(ground)}
    for face in delta.faces:
        faces_by_mask[sum(1 << index[v] for v in face)] = face
    out: dict[tuple[int, int], int] = {}
    for j in range(1, len(ground) + 1):
        for W in combinations(range(len(ground)), j):
            wm = sum(1 << b for b in W)
            sub = SimplicialComplex._trusted(F for m, F in faces_by_mask.items() if m & wm == m)
            for k, r in enumerate(reduced_homology_dims(sub, f)):
                # H~_{k-1}(Delta[W]) feeds beta_{i,j} with j - i - 2 = k - 1
                i = j - k - 1
                if r and i >= 0:
                    out[(i, j)] = out.get((i, j), 0) + r
    return out


def hochster_beta(X, i: int, j: int, f: Field = Q) -> int:
    return hochster_table(X, f).get((i, j), 0)


# -- index ------------------------------------------------------------------

def _index_from_graded(graded: dict, d: int) -> float:
    bad = [i for (i, j), r in graded.items() if r and i >= 1 and j - i > d]
    return min(bad) if bad else INFINITY


def gl_index(I: MonomialIdeal, f: Field = Q) -> float:
    """Least i >= 1 with a nonlinear beta_{i,j} (j - i > d), else INFINITY."""
    d = _require_equigenerated(I)
    if not is_linearly_presented(I, f):
        return 1
    if I.is_squarefree():
        return _index_from_graded(hochster_table(I, f), d)
    return _index_from_graded(betti_table(I, f).graded(), d)


def is_linearly_presented(I: MonomialIdeal, f: Field = Q) -> bool:
    """beta_{1,j} = 0 for d+2 <= j <= 2d."""
    d = _require_equigenerated(I)
    return all(sum(w) <= d + 1 for w in first_syzygy_betti(I))


def has_linear_resolution(I: MonomialIdeal, f: Field = Q) -> bool:
    return gl_index(I, f) == INFINITY
