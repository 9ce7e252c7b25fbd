"""Simplicial complexes, order complexes and exact reduced homology.

Homology is computed from the augmented chain complex, so the empty face
sits in degree -1.  Ranks over Q use fraction-free sparse elimination on
integer columns; ranks over GF(p) use modular elimination (dense compiled
kernel when available).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Callable, Hashable, Iterable, Sequence

from . import _backend
from .monomial import MonomialIdeal

Q = 0
"""Field code for the rationals; any other field is given by its prime p."""

Field = int


def parse_field(spec: str | int | None) -> Field:
    """``"q"``/``"Q"``/``0``/``None`` for the rationals, else a prime."""
    if spec is None:
        return Q
    if isinstance(spec, str):
        if spec.strip().lower() in ("q", "qq", "0"):
            return Q
        spec = int(spec)
    if spec == Q:
        return Q
    if spec < 2 or any(spec % q == 0 for q in range(2, int(spec**0.5) + 1)):
        raise ValueError(f"field characteristic {spec} is not prime")
    return spec


Face = tuple


@dataclass(frozen=True)
class SimplicialComplex:
    """A finite simplicial complex given by its full face set.

    Faces are sorted tuples of vertex labels.  ``faces`` empty is the void
    complex; ``{()}`` is the complex whose only face is the empty set.
    """

    faces: frozenset

    def __post_init__(self):
        for f in self.faces:
            for i in range(len(f)):
                if f[:i] + f[i + 1:] not in self.faces:
                    raise ValueError(f"face {f} is missing its boundary face {f[:i] + f[i + 1:]}")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        faces = set()
        for facet in facets:
            facet = tuple(sorted(set(facet)))
            if facet in faces:
                continue
            for k in range(len(facet) + 1):
                faces.update(combinations(facet, k))
        return cls._trusted(faces)

    @classmethod
    def _trusted(cls, faces: Iterable[Face]) -> "SimplicialComplex":
        obj = object.__new__(cls)
        object.__setattr__(obj, "faces", frozenset(faces))
        return obj

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls._trusted(())

    @classmethod
    def empty_face_only(cls) -> "SimplicialComplex":
        return cls._trusted([()])

    def is_void(self) -> bool:
        return not self.faces

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(f[0] for f in self.faces if len(f) == 1))

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def dimension(self) -> int:
        if not self.faces:
            return -2
        return max(len(f) for f in self.faces) - 1

    def faces_of_dim(self, k: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == k + 1)

    def f_vector(self) -> list[int]:
        """Face counts for dimensions -1 .. dim."""
        counts = [0] * (self.dimension + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return counts

    def facets(self) -> list[Face]:
        out = []
        for f in self.faces:
            fs = set(f)
            if not any(len(g) > len(f) and fs.issubset(g) for g in self.faces):
                out.append(f)
        return sorted(out)

    def induced(self, vertices: Iterable[Hashable]) -> "SimplicialComplex":
        w = set(vertices)
        return SimplicialComplex._trusted(f for f in self.faces if w.issuperset(f))

    def to_json(self) -> list[list]:
        return [list(f) for f in sorted(self.faces, key=lambda f: (len(f), f))]


def order_complex(
    elements: Iterable[Hashable],
    less: Callable[[Hashable, Hashable], bool] | None = None,
) -> SimplicialComplex:
    """Order complex of a finite poset: its faces are the chains.

    ``less(a, b)`` is the strict order; by default divisibility of monomials.
    An empty poset gives the complex ``{()}``.
    """
    elems = sorted(set(elements))
    if less is None:
        def less(a, b):
            return a != b and a.divides(b)
    up = {a: [b for b in elems if less(a, b)] for a in elems}
    faces: list[Face] = [()]

    def grow(chain: tuple, top):
        for b in up[top]:
            c = chain + (b,)
            faces.append(tuple(sorted(c)))
            grow(c, b)

    for a in elems:
        faces.append((a,))
        grow((a,), a)
    return SimplicialComplex._trusted(faces)


def stanley_reisner_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    """Faces are the vertex sets F (1-based) with x_F outside the square-free ideal."""
    if not ideal.is_squarefree():
        raise ValueError("Stanley-Reisner complex needs a square-free ideal")
    n = ideal.n
    non_faces = [sum(1 << (i - 1) for i in g.support) for g in ideal.generators]
    faces = []
    frontier = [0]
    seen = {0}
    while frontier:
        nxt = []
        for mask in frontier:
            faces.append(tuple(i + 1 for i in range(n) if mask >> i & 1))
            top = mask.bit_length()
            for i in range(top, n):
                m = mask | (1 << i)
                if m not in seen and not any(g & m == g for g in non_faces):
                    seen.add(m)
                    nxt.append(m)
        frontier = nxt
    return SimplicialComplex._trusted(faces)


# -- linear algebra -----------------------------------------------------------

Column = dict  # row index -> nonzero integer coefficient


def _content(col: Column) -> int:
    return reduce(gcd, col.values(), 0)


def rank_rational(columns: Sequence[Column]) -> int:
    """Rank over Q of an integer matrix given as sparse columns.

    Fraction-free elimination: each new column is combined with the stored
    pivot columns by integer cross-multiplication and divided by its content,
    so all arithmetic stays in exact integers.
    """
    pivots: dict[int, Column] = {}
    for col in columns:
        c = {r: v for r, v in col.items() if v}
        while c:
            r = min(c)
            p = pivots.get(r)
            if p is None:
                g = _content(c)
                if g > 1:
                    c = {k: v // g for k, v in c.items()}
                pivots[r] = c
                break
            a, b = c[r], p[r]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: b * v for k, v in c.items()}
            for k, v in p.items():
                new[k] = new.get(k, 0) - a * v
            c = {k: v for k, v in new.items() if v}
            g = _content(c)
            if g > 1:
                c = {k: v // g for k, v in c.items()}
    return len(pivots)


def rank_mod_p_sparse(columns: Sequence[Column], p: int) -> int:
    pivots: dict[int, Column] = {}
    for col in columns:
        c = {r: v % p for r, v in col.items() if v % p}
        while c:
            r = min(c)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(c[r], -1, p)
                pivots[r] = {k: v * inv % p for k, v in c.items()}
                break
            a = c[r]
            for k, v in piv.items():
                c[k] = (c.get(k, 0) - a * v) % p
            c = {k: v for k, v in c.items() if v}
    return len(pivots)


DENSE_LIMIT = 4_000_000


def matrix_rank(columns: Sequence[Column], nrows: int, field: Field = Q) -> int:
    if not columns or nrows == 0:
        return 0
    if field == Q:
        return rank_rational(columns)
    if nrows * len(columns) <= DENSE_LIMIT:
        return _backend.rank_mod_p(columns, nrows, field)
    return rank_mod_p_sparse(columns, field)


def boundary_columns(X: SimplicialComplex, k: int) -> tuple[list[Column], int]:
    """Sparse columns of the augmented boundary map from k-faces to (k-1)-faces."""
    rows = {f: i for i, f in enumerate(X.faces_of_dim(k - 1))}
    cols = []
    for f in X.faces_of_dim(k):
        col = {}
        for i in range(len(f)):
            col[rows[f[:i] + f[i + 1:]]] = -1 if i % 2 else 1
        cols.append(col)
    return cols, len(rows)


def boundary_ranks(X: SimplicialComplex, field: Field = Q) -> list[int]:
    """ranks[k+1] = rank of the boundary map on k-faces, k = -1 .. dim."""
    dim = X.dimension
    ranks = [0]
    for k in range(0, dim + 1):
        cols, nrows = boundary_columns(X, k)
        ranks.append(matrix_rank(cols, nrows, field))
    return ranks


def reduced_homology_dims(X: SimplicialComplex, field: Field = Q) -> list[int]:
    """dim H~_i(X) for i = -1 .. dim X over Q (``field=0``) or GF(p).

    The void complex gives ``[0]``.
    """
    if X.is_void():
        return [0]
    f = X.f_vector()
    ranks = boundary_ranks(X, field) + [0]
    return [f[k + 1] - ranks[k + 1] - ranks[k + 2] for k in range(-1, X.dimension + 1)]


def reduced_homology(X: SimplicialComplex, i: int, field: Field = Q) -> int:
    dims = reduced_homology_dims(X, field)
    idx = i + 1
    return dims[idx] if 0 <= idx < len(dims) else 0


def connected_components(vertices: Iterable[Hashable], edges: Iterable[tuple]) -> list[set]:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict = {}
    for v in parent:
        groups.setdefault(find(v), set()).add(v)
    return list(groups.values())


def component_count(X: SimplicialComplex) -> int:
    return len(connected_components(X.vertices, (f for f in X.faces if len(f) == 2)))


def is_connected(X: SimplicialComplex) -> bool:
    """True iff H~_0 vanishes; decided on the 1-skeleton."""
    if X.is_void():
        raise ValueError("connectivity of the void complex is undefined")
    return component_count(X) <= 1
