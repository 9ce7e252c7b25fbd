"""Monomials as exponent vectors and minimal generating sets of monomial ideals."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when monomials over different variable counts are combined."""


class GeneratorError(ValueError):
    """Raised for invalid ideal generators (e.g. the monomial 1)."""


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial x^a stored as its exponent vector ``a``.

    Ordering is lexicographic on the exponent vector.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.exponents, tuple):
            object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.exponents) < 1:
            raise DimensionError("a monomial needs at least one variable")
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def from_support(cls, n: int, variables: Iterable[int]) -> "Monomial":
        """Square-free monomial x_F for a set F of 1-based variable indices."""
        e = [0] * n
        for i in variables:
            if not 1 <= i <= n:
                raise DimensionError(f"variable {i} outside 1..{n}")
            e[i - 1] += 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def is_one(self) -> bool:
        return not any(self.exponents)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    def _check(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise DimensionError(
                f"monomials over {len(self.exponents)} and {len(other.exponents)} variables"
            )

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(max, self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(map(min, self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        if self.is_one():
            return "1"
        parts = []
        for i, e in enumerate(self.exponents, 1):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def degree(a: Monomial) -> int:
    return a.degree


def support(a: Monomial) -> frozenset[int]:
    return a.support


def minimalize(monomials: Iterable[Monomial]) -> frozenset[Monomial]:
    """Divisibility-minimal elements of a set of monomials."""
    ms = sorted(set(monomials), key=lambda m: (m.degree, m.exponents))
    if len({m.n for m in ms}) > 1:
        raise DimensionError("monomials over different variable counts")
    if len({m.degree for m in ms}) <= 1:
        # distinct monomials of equal degree never divide each other
        return frozenset(ms)
    kept: list[tuple[int, ...]] = []
    for m in ms:
        e = m.exponents
        # anything dividing e has degree <= deg e and was seen earlier
        if not any(all(x <= y for x, y in zip(k, e)) for k in kept):
            kept.append(e)
    return frozenset(Monomial(e) for e in kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generating set G(I).

    ``generators`` is kept sorted lexicographically; an empty tuple is the
    zero ideal.
    """

    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        for g in gens:
            if g.n != self.n:
                raise DimensionError(f"generator {g} is not over {self.n} variables")
            if g.is_one():
                raise GeneratorError("the monomial 1 is not allowed as a generator")
        if len(minimalize(gens)) != len(gens):
            raise GeneratorError("generators are not pairwise incomparable")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def _trusted(cls, n: int, generators: Iterable[Monomial]) -> "MonomialIdeal":
        # caller guarantees a minimal, deduplicated generating set
        ideal = object.__new__(cls)
        object.__setattr__(ideal, "n", n)
        object.__setattr__(ideal, "generators", tuple(sorted(generators)))
        return ideal

    @classmethod
    def from_monomials(cls, n: int, monomials: Iterable[Monomial]) -> "MonomialIdeal":
        monomials = list(monomials)
        for m in monomials:
            if m.n != n:
                raise DimensionError(f"generator {m} is not over {n} variables")
            if m.is_one():
                raise GeneratorError("the monomial 1 is not allowed as a generator")
        return cls._trusted(n, minimalize(monomials))

    @classmethod
    def from_exponents(cls, n: int, vectors: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls.from_monomials(n, (Monomial(tuple(v)) for v in vectors))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    def is_zero(self) -> bool:
        return not self.generators

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def degrees(self) -> set[int]:
        return {g.degree for g in self.generators}

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    @property
    def generating_degree(self) -> int:
        """The common degree d of the generators; raises if not equigenerated."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"ideal is not equigenerated (degrees {sorted(degs)})")
        return next(iter(degs))

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def power(self, k: int) -> "MonomialIdeal":
        return power_generators(self, k)

    def exponent_rows(self) -> list[tuple[int, ...]]:
        return [g.exponents for g in self.generators]

    def to_json(self) -> dict:
        return {"vars": self.n, "generators": [list(g.exponents) for g in self.generators]}

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def power_generators(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """Minimal generating set of I^k from all k-fold products of G(I)."""
    if k < 1:
        raise ValueError("power must be positive")
    if k == 1 or ideal.is_zero():
        return ideal
    rows = ideal.exponent_rows()
    products = set()
    for combo in combinations_with_replacement(rows, k):
        products.add(tuple(map(sum, zip(*combo))))
    return MonomialIdeal.from_exponents(ideal.n, products)


def ideal_from_json(data: dict | str) -> MonomialIdeal:
    """Parse ``{"vars": n, "generators": [[e1, ..., en], ...]}``.

    Non-minimal input is minimalized with a warning.
    """
    if isinstance(data, str):
        data = json.loads(data)
    try:
        n = int(data["vars"])
        vectors = [tuple(int(e) for e in v) for v in data["generators"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed ideal JSON: {exc}") from exc
    for v in vectors:
        if len(v) != n:
            raise DimensionError(f"exponent vector {list(v)} does not have length {n}")
    monomials = [Monomial(v) for v in vectors]
    if any(m.is_one() for m in monomials):
        raise GeneratorError("the monomial 1 is not allowed as a generator")
    minimal = minimalize(monomials)
    if len(minimal) != len(set(monomials)) or len(set(monomials)) != len(monomials):
        warnings.warn("input generators were not minimal; minimalized on load", stacklevel=2)
    return MonomialIdeal._trusted(n, minimal)
