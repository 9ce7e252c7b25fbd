"""Linear presentation through the generator graph.

Two generators are adjacent when their lcm has degree d + 1.  An
equigenerated ideal is linearly presented iff every pair u, v is joined by
a path using only generators that divide lcm(u, v).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import _backend
from .betti import UnsupportedInputError
from .monomial import Monomial, MonomialIdeal, power_generators


@dataclass(frozen=True)
class GeneratorGraph:
    """Vertices are generators in lexicographic order; edges are index pairs."""

    vertices: tuple[Monomial, ...]
    edges: frozenset

    def neighbors(self, i: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i})

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.vertices]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return [sorted(x) for x in adj]

    def index(self, u: Monomial) -> int:
        try:
            return self.vertices.index(u)
        except ValueError:
            raise ValueError(f"{u} is not a vertex of the graph") from None

    def edge_list(self) -> list[tuple[Monomial, Monomial]]:
        return [(self.vertices[a], self.vertices[b]) for a, b in sorted(self.edges)]


def _graph_on(vertices: Sequence[Monomial], d: int) -> GeneratorGraph:
    vs = tuple(sorted(vertices))
    edges = set()
    for a in range(len(vs)):
        for b in range(a + 1, len(vs)):
            if vs[a].lcm(vs[b]).degree == d + 1:
                edges.add((a, b))
    return GeneratorGraph(vs, frozenset(edges))


def _degree(I: MonomialIdeal) -> int:
    if not I.is_equigenerated():
        raise UnsupportedInputError("the generator graph needs an equigenerated ideal")
    return I.generating_degree


def generator_graph(I: MonomialIdeal) -> GeneratorGraph:
    if I.is_zero():
        return GeneratorGraph((), frozenset())
    return _graph_on(I.generators, _degree(I))


def _check_generators(I: MonomialIdeal, *ms: Monomial) -> None:
    gens = set(I.generators)
    for m in ms:
        if m not in gens:
            raise ValueError(f"{m} is not a minimal generator")


def restricted_graph(I: MonomialIdeal, u: Monomial, v: Monomial) -> GeneratorGraph:
    """Induced subgraph on the generators dividing lcm(u, v)."""
    _check_generators(I, u, v)
    w = u.lcm(v)
    return _graph_on([g for g in I.generators if g.divides(w)], _degree(I))


@dataclass(frozen=True)
class PathResult:
    connected: bool
    u: Monomial
    v: Monomial
    path: tuple[Monomial, ...] | None = None

    def __bool__(self) -> bool:
        return self.connected

    def to_json(self) -> dict:
        return {
            "u": list(self.u.exponents),
            "v": list(self.v.exponents),
            "path": None if self.path is None else [list(m.exponents) for m in self.path],
        }


def pair_connected(I: MonomialIdeal, u: Monomial, v: Monomial) -> PathResult:
    """Shortest u-v path in the restricted graph, neighbours taken in lex order."""
    G = restricted_graph(I, u, v)
    adj = G.adjacency()
    s, t = G.index(u), G.index(v)
    prev = {s: None}
    queue = deque([s])
    while queue:
        x = queue.popleft()
        if x == t:
            break
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    if t not in prev:
        return PathResult(False, u, v)
    path = []
    x = t
    while x is not None:
        path.append(G.vertices[x])
        x = prev[x]
    return PathResult(True, u, v, tuple(reversed(path)))


@dataclass(frozen=True)
class LinPresResult:
    """Truthy when linearly presented; otherwise carries a disconnected pair."""

    linearly_presented: bool
    witness: PathResult | None = None

    def __bool__(self) -> bool:
        return self.linearly_presented

    def to_json(self) -> dict:
        return {
            "linearly_presented": self.linearly_presented,
            "witness": None if self.witness is None else self.witness.to_json(),
        }


def linearly_presented_graph(I: MonomialIdeal) -> LinPresResult:
    """Path criterion over all generator pairs.

    Generators are scanned in lex term order with x1 > x2 > ... (largest
    first) and the witness is the first disconnected pair in that scan,
    reported with the lex-smaller generator as u.
    """
    if I.is_zero() or len(I) == 1:
        return LinPresResult(True)
    d = _degree(I)
    gens = I.generators[::-1]
    hit = _backend.lp_sweep_rows([g.exponents for g in gens], d)
    if hit is None:
        return LinPresResult(True)
    u, v = sorted((gens[hit[0]], gens[hit[1]]))
    return LinPresResult(False, PathResult(False, u, v))


def linearly_presented_pairwise(I: MonomialIdeal) -> LinPresResult:
    """Reference version calling :func:`pair_connected` on every pair."""
    gens = I.generators[::-1]
    for a in range(len(gens)):
        for b in range(a + 1, len(gens)):
            u, v = sorted((gens[a], gens[b]))
            r = pair_connected(I, u, v)
            if not r:
                return LinPresResult(False, r)
    return LinPresResult(True)


def power_check(I: MonomialIdeal, k: int) -> LinPresResult:
    """Linear presentation of I^k by the path criterion."""
    if k < 1:
        raise ValueError("power must be positive")
    return linearly_presented_graph(power_generators(I, k))


def _prod(ms: Sequence[Monomial], n: int) -> Monomial:
    out = Monomial.one(n)
    for m in ms:
        out = out * m
    return out


def split_divides(u_factors: Sequence[Monomial], v_factors: Sequence[Monomial],
                  A: Sequence[int], B: Sequence[int]) -> bool:
    """Whether prod_{i in A} u_i * prod_{j in B} v_j divides lcm(u, v), where
    u and v are the full products.  A and B are 0-based index sets."""
    k = len(u_factors)
    if len(v_factors) != k:
        raise ValueError("factor lists differ in length")
    if not A or not B or len(A) + len(B) != k:
        raise ValueError("A and B must be non-empty with |A| + |B| = k")
    n = u_factors[0].n
    u, v = _prod(u_factors, n), _prod(v_factors, n)
    mixed = _prod([u_factors[i] for i in A] + [v_factors[j] for j in B], n)
    return mixed.divides(u.lcm(v))
