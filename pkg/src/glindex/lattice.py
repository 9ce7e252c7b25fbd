"""The lcm-lattice of a monomial ideal and its open lower intervals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complex import SimplicialComplex, order_complex
from .monomial import Monomial, MonomialIdeal


@dataclass(frozen=True)
class LcmLattice:
    """All lcms of non-empty subsets of G(I), plus the bottom element 1."""

    ideal: MonomialIdeal
    elements: frozenset  # of exponent tuples, bottom included

    @property
    def bottom(self) -> Monomial:
        return Monomial.one(self.ideal.n)

    @property
    def top(self) -> Monomial:
        top = self.ideal.generators[0]
        for g in self.ideal.generators[1:]:
            top = top.lcm(g)
        return top

    @property
    def atoms(self) -> tuple[Monomial, ...]:
        return self.ideal.generators

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, u) -> bool:
        e = u.exponents if isinstance(u, Monomial) else tuple(u)
        return e in self.elements

    def monomials(self) -> list[Monomial]:
        return [Monomial(e) for e in sorted(self.elements, key=lambda e: (sum(e), e))]

    def below(self, u: Monomial) -> list[tuple]:
        """Exponent tuples of lattice elements dividing u (bottom included)."""
        ue = u.exponents
        return [e for e in self.elements if all(a <= b for a, b in zip(e, ue))]


def _saturate(rows: list[tuple]) -> frozenset:
    elements = set(rows)
    frontier = set(rows)
    while frontier:
        new = set()
        for a in frontier:
            for g in rows:
                m = tuple(x if x >= y else y for x, y in zip(a, g))
                if m not in elements:
                    new.add(m)
        elements |= new
        frontier = new
    return frozenset(elements)


@lru_cache(maxsize=256)
def _build(ideal: MonomialIdeal) -> LcmLattice:
    rows = ideal.exponent_rows()
    elements = set(_saturate(rows))
    elements.add((0,) * ideal.n)
    return LcmLattice(ideal, frozenset(elements))


def build_lcm_lattice(ideal: MonomialIdeal) -> LcmLattice:
    """Saturate G(I) under lcm with a generator at a time; cached per ideal."""
    if ideal.is_zero():
        raise ValueError("the zero ideal has no lcm-lattice")
    return _build(ideal)


def open_interval(L: LcmLattice, u: Monomial) -> list[Monomial]:
    """Elements strictly between 1 and u."""
    if u not in L:
        raise ValueError(f"{u} is not in the lcm-lattice")
    ue = u.exponents
    out = []
    for e in L.below(u):
        if e != ue and any(e):
            out.append(Monomial(e))
    return sorted(out)


def interval_order_complex(L: LcmLattice, u: Monomial) -> SimplicialComplex:
    return order_complex(open_interval(L, u))


def longest_chain(L: LcmLattice) -> int:
    """Number of elements in a longest chain strictly above the bottom."""
    elems = sorted((e for e in L.elements if any(e)), key=sum)
    best: dict[tuple, int] = {}
    for e in elems:
        below = [best[f] for f in best if f != e and all(a <= b for a, b in zip(f, e))]
        best[e] = 1 + max(below, default=0)
    return max(best.values(), default=0)
