"""Uniform clutters stored as sorted bitmask tuples, plus the named catalog.

Vertex ``i`` (1-based) is bit ``i - 1`` of a circuit mask.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations, product
from math import comb
from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .complex import SimplicialComplex
from .monomial import Monomial, MonomialIdeal


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@lru_cache(maxsize=None)
def all_masks(n: int, d: int) -> tuple[int, ...]:
    """All d-subsets of [n] as masks, in combinations order."""
    return tuple(sum(1 << i for i in c) for c in combinations(range(n), d))


@dataclass(frozen=True)
class Clutter:
    """A d-uniform clutter on the vertex set [n].

    ``circuits`` is a sorted tuple of bitmasks.  Isolated vertices are
    allowed; see :meth:`is_spanning`.
    """

    n: int
    d: int
    circuits: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.d < 1:
            raise ValueError(f"invalid clutter parameters n={self.n}, d={self.d}")
        circ = tuple(sorted(set(self.circuits)))
        full = (1 << self.n) - 1
        for m in circ:
            if m & ~full or bin(m).count("1") != self.d:
                raise ValueError(f"circuit {vertices_of(m)} is not a {self.d}-subset of [{self.n}]")
        object.__setattr__(self, "circuits", circ)

    # construction ----------------------------------------------------------
    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]], d: int | None = None) -> "Clutter":
        masks = [mask_of(s) for s in sets]
        if d is None:
            if not masks:
                raise ValueError("uniformity d is needed for an empty clutter")
            d = bin(masks[0]).count("1")
        return cls(n, d, tuple(masks))

    @classmethod
    def from_string(cls, n: int, text: str) -> "Clutter":
        """Compact notation ``"123 124 134"`` (single-digit vertices)."""
        return cls.from_sets(n, ([int(c) for c in tok] for tok in text.split()))

    @classmethod
    def complete(cls, n: int, d: int) -> "Clutter":
        return cls(n, d, all_masks(n, d))

    @classmethod
    def from_json(cls, data: dict | str) -> "Clutter":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n, d = int(data["n"]), int(data["d"])
            sets = [[int(v) for v in c] for c in data["circuits"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed clutter JSON: {exc}") from exc
        for s in sets:
            if len(set(s)) != len(s) or any(not 1 <= v <= n for v in s):
                raise ValueError(f"bad circuit {s} for n={n}")
        return cls.from_sets(n, sets, d)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "circuits": [list(s) for s in self.sets()]}

    # views -----------------------------------------------------------------
    def sets(self) -> list[tuple[int, ...]]:
        return sorted(vertices_of(m) for m in self.circuits)

    def __len__(self) -> int:
        return len(self.circuits)

    def __iter__(self):
        return iter(self.sets())

    def __contains__(self, item) -> bool:
        m = item if isinstance(item, int) else mask_of(item)
        return m in self._circuit_set

    @property
    def _circuit_set(self) -> frozenset:
        cached = self.__dict__.get("_cset")
        if cached is None:
            cached = frozenset(self.circuits)
            object.__setattr__(self, "_cset", cached)
        return cached

    def __str__(self) -> str:
        if self.n <= 9:
            return "{" + ", ".join("".join(map(str, s)) for s in self.sets()) + "}"
        return str(self.sets())

    def used_vertices(self) -> tuple[int, ...]:
        m = 0
        for c in self.circuits:
            m |= c
        return vertices_of(m)

    def is_spanning(self) -> bool:
        return len(self.used_vertices()) == self.n

    def degrees(self) -> list[int]:
        return [sum(1 for c in self.circuits if c >> v & 1) for v in range(self.n)]

    # operations ------------------------------------------------------------
    def complement(self) -> "Clutter":
        mine = self._circuit_set
        return Clutter(self.n, self.d, tuple(m for m in all_masks(self.n, self.d) if m not in mine))

    def induced(self, W: Iterable[int]) -> "Clutter":
        """Circuits inside W, relabelled 1..|W| by increasing original label."""
        W = sorted(set(W))
        if any(not 1 <= v <= self.n for v in W):
            raise ValueError(f"vertex set {W} not inside [{self.n}]")
        wm = mask_of(W)
        pos = {v - 1: i for i, v in enumerate(W)}
        out = []
        for c in self.circuits:
            if c & wm == c:
                out.append(_remap(c, pos))
        return Clutter(len(W), self.d, tuple(out))

    def relabel(self, perm: Sequence[int]) -> "Clutter":
        """Apply ``perm`` given as a 0-based map old vertex -> new vertex."""
        pos = dict(enumerate(perm))
        return Clutter(self.n, self.d, tuple(_remap(c, pos) for c in self.circuits))

    def add(self, *sets: Iterable[int]) -> "Clutter":
        return Clutter(self.n, self.d, self.circuits + tuple(mask_of(s) for s in sets))

    def edge_ideal(self) -> MonomialIdeal:
        gens = [Monomial.from_support(self.n, vertices_of(m)) for m in self.circuits]
        return MonomialIdeal._trusted(self.n, gens)

    def clique_complex(self) -> SimplicialComplex:
        """Faces are vertex sets all of whose d-subsets are circuits."""
        cs = self._circuit_set
        d = self.d
        faces: list[tuple] = []

        def grow(face: tuple, mask: int, start: int):
            faces.append(face)
            for v in range(start, self.n):
                new = mask | (1 << v)
                if len(face) + 1 >= d:
                    ok = all(
                        (sum(1 << (u - 1) for u in sub) | (1 << v)) in cs
                        for sub in combinations(face, d - 1)
                    )
                    if not ok:
                        continue
                grow(face + (v + 1,), new, v + 1)

        grow((), 0, 0)
        return SimplicialComplex._trusted(faces)

    # isomorphism -----------------------------------------------------------
    def canonical_form(self) -> tuple:
        return canonical_form(self)

    def is_isomorphic(self, other: "Clutter") -> bool:
        if (self.n, self.d, len(self)) != (other.n, other.d, len(other)):
            return False
        if sorted(self.degrees()) != sorted(other.degrees()):
            return False
        return canonical_form(self) == canonical_form(other)


def _remap(mask: int, pos: dict) -> int:
    out = 0
    b = 0
    while mask:
        if mask & 1:
            out |= 1 << pos[b]
        mask >>= 1
        b += 1
    return out


# -- canonical forms --------------------------------------------------------

def vertex_classes(C: Clutter) -> list[list[int]]:
    """Ordered partition of the 0-based vertices by an iterated,
    relabelling-invariant colour refinement."""
    n = C.n
    inc = [[c for c in C.circuits if c >> v & 1] for v in range(n)]
    colour = [len(inc[v]) for v in range(n)]
    n_classes = len(set(colour))
    while True:
        sig = []
        for v in range(n):
            around = sorted(
                tuple(sorted(colour[u] for u in range(n) if c >> u & 1 and u != v)) for c in inc[v]
            )
            sig.append((colour[v], tuple(around)))
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        colour = [ranks[s] for s in sig]
        if len(ranks) == n_classes:
            break
        n_classes = len(ranks)
    classes: dict[int, list[int]] = {}
    for v in range(n):
        classes.setdefault(colour[v], []).append(v)
    return [classes[k] for k in sorted(classes)]


def _class_perms(classes: list[list[int]], n: int) -> np.ndarray:
    """All maps old -> new sending the r-th class onto the r-th block of labels."""
    blocks = []
    start = 0
    for cls in classes:
        blocks.append((cls, list(range(start, start + len(cls)))))
        start += len(cls)
    choices = [list(permutations(targets)) for _, targets in blocks]
    total = 1
    for c in choices:
        total *= len(c)
    out = np.empty((total, n), dtype=np.int32)
    for row, combo in enumerate(product(*choices)):
        for (cls, _), tgt in zip(blocks, combo):
            for v, t in zip(cls, tgt):
                out[row, v] = t
    return out


@lru_cache(maxsize=200_000)
def _canonical(n: int, d: int, circuits: tuple) -> tuple:
    C = Clutter.__new__(Clutter)
    object.__setattr__(C, "n", n)
    object.__setattr__(C, "d", d)
    object.__setattr__(C, "circuits", circuits)
    if not circuits or len(circuits) == comb(n, d):
        return (n, d, circuits)
    perms = _class_perms(vertex_classes(C), n)
    key, _ = _backend.min_relabel(list(circuits), perms)
    return (n, d, tuple(key))


def canonical_form(C: Clutter) -> tuple:
    """``(n, d, masks)``: the least sorted mask tuple over all relabellings
    compatible with the refined vertex partition.  Equal iff isomorphic."""
    return _canonical(C.n, C.d, C.circuits)


def canonical_clutter(C: Clutter) -> Clutter:
    n, d, masks = canonical_form(C)
    return Clutter(n, d, masks)


def canonical_form_bruteforce(C: Clutter) -> tuple:
    """Minimum over all n! relabellings; the reference oracle."""
    perms = np.array(list(permutations(range(C.n))), dtype=np.int32)
    key, _ = _backend.min_relabel(list(C.circuits), perms)
    return (C.n, C.d, tuple(key))


# -- induced embeddings -----------------------------------------------------

def find_induced_embedding(host: Clutter, pattern: Clutter) -> dict[int, int] | None:
    """An injection phi (1-based pattern vertex -> host vertex) such that
    phi(F) is a host circuit iff F is a pattern circuit, for every d-subset F
    of the pattern vertices.  None if no such map exists."""
    if host.d != pattern.d:
        raise ValueError("uniformities differ")
    k, d = pattern.n, pattern.d
    if k > host.n:
        return None
    hset = host._circuit_set
    pset = pattern._circuit_set
    hdeg = host.degrees()
    pdeg = pattern.degrees()
    order = sorted(range(k), key=lambda v: -pdeg[v])
    # pattern d-subsets to check when vertex order[i] is placed
    checks = []
    placed = []
    for v in order:
        subs = [tuple(s) + (v,) for s in combinations(placed, d - 1)]
        checks.append([(sub, sum(1 << x for x in sub) in pset) for sub in subs])
        placed.append(v)
    phi = [-1] * k
    used = [False] * host.n

    def place(i: int) -> bool:
        if i == k:
            return True
        v = order[i]
        for h in range(host.n):
            if used[h] or hdeg[h] < pdeg[v]:
                continue
            phi[v] = h
            ok = True
            for sub, inside in checks[i]:
                m = 0
                for x in sub:
                    m |= 1 << phi[x]
                if (m in hset) != inside:
                    ok = False
                    break
            if ok:
                used[h] = True
                if place(i + 1):
                    return True
                used[h] = False
        phi[v] = -1
        return False

    if place(0):
        return {v + 1: phi[v] + 1 for v in range(k)}
    return None


def find_induced_embedding_bruteforce(host: Clutter, pattern: Clutter) -> dict[int, int] | None:
    """Exhaustive oracle over all injections, in lexicographic order."""
    k = pattern.n
    hset = host._circuit_set
    targets = all_masks(k, pattern.d)
    pset = pattern._circuit_set
    for img in permutations(range(host.n), k):
        pos = dict(enumerate(img))
        if all((_remap(t, pos) in hset) == (t in pset) for t in targets):
            return {v + 1: img[v] + 1 for v in range(k)}
    return None


@dataclass(frozen=True)
class FreeResult:
    """Outcome of a family-freeness test; truthy when the clutter is free."""

    free: bool
    pattern: str | None = None
    embedding: dict | None = None

    def __bool__(self) -> bool:
        return self.free

    def to_json(self) -> dict:
        emb = None if self.embedding is None else {str(k): v for k, v in sorted(self.embedding.items())}
        return {"free": self.free, "pattern": self.pattern, "embedding": emb}


class FamilyMatcher:
    """Fast induced-containment test against a fixed family of patterns.

    Small patterns (at most 20 d-subsets) use a lookup table of all labelled
    copies, scanned by the window kernel; larger ones compare canonical
    forms of induced subclutters.
    """

    TABLE_LIMIT = 20

    def __init__(self, patterns: Sequence[Clutter], names: Sequence[str] | None = None):
        if not patterns:
            raise ValueError("empty family")
        self.d = patterns[0].d
        if any(p.d != self.d for p in patterns):
            raise ValueError("mixed uniformities in family")
        self.patterns = list(patterns)
        self.names = list(names) if names is not None else [f"#{i}" for i in range(len(patterns))]
        self._tables: dict[int, np.ndarray] = {}
        self._owner: dict[int, dict[int, int]] = {}
        self._canon: dict[int, dict[tuple, int]] = {}
        self._counts: dict[int, set[int]] = {}
        for idx, p in enumerate(self.patterns):
            k = p.n
            if comb(k, self.d) <= self.TABLE_LIMIT:
                table = self._tables.setdefault(k, np.zeros(1 << comb(k, self.d), dtype=np.uint8))
                owner = self._owner.setdefault(k, {})
                local = {m: b for b, m in enumerate(all_masks(k, self.d))}
                for perm in permutations(range(k)):
                    pos = dict(enumerate(perm))
                    key = 0
                    for c in p.circuits:
                        key |= 1 << local[_remap(c, pos)]
                    table[key] = 1
                    owner.setdefault(key, idx)
            else:
                self._canon.setdefault(k, {}).setdefault(canonical_form(p), idx)
                self._counts.setdefault(k, set()).add(len(p))
        self._windows_cache: dict[tuple[int, int], tuple] = {}

    def _windows(self, n: int, k: int):
        key = (n, k)
        if key not in self._windows_cache:
            gindex = {m: i for i, m in enumerate(all_masks(n, self.d))}
            subsets = list(combinations(range(n), k))
            rows = []
            for W in subsets:
                pos = dict(enumerate(W))
                rows.append([gindex[_remap(m, pos)] for m in all_masks(k, self.d)])
            self._windows_cache[key] = (subsets, np.array(rows, dtype=np.int32).reshape(len(rows), -1))
        return self._windows_cache[key]

    def member_vector(self, C: Clutter) -> np.ndarray:
        gindex = {m: i for i, m in enumerate(all_masks(C.n, self.d))}
        mem = np.zeros(len(gindex), dtype=np.uint8)
        for c in C.circuits:
            mem[gindex[c]] = 1
        return mem

    def first_hit(self, C: Clutter) -> tuple[int, tuple[int, ...]] | None:
        """(pattern index, 1-based vertex window) of the first induced copy."""
        if C.d != self.d:
            raise ValueError("uniformities differ")
        mem = None
        for k in sorted(set(self._tables) | set(self._canon)):
            if k > C.n:
                continue
            if k in self._tables:
                if mem is None:
                    mem = self.member_vector(C)
                subsets, rows = self._windows(C.n, k)
                w = _backend.window_hit(mem, rows, self._tables[k])
                if w >= 0:
                    window = subsets[w]
                    key = 0
                    for b, t in enumerate(rows[w]):
                        if mem[t]:
                            key |= 1 << b
                    return self._owner[k][key], tuple(v + 1 for v in window)
            else:
                counts = self._counts[k]
                canon = self._canon[k]
                for W in combinations(range(1, C.n + 1), k):
                    sub = C.induced(W)
                    if len(sub) in counts:
                        idx = canon.get(canonical_form(sub))
                        if idx is not None:
                            return idx, W
        return None

    def contains(self, C: Clutter) -> bool:
        return self.first_hit(C) is not None

    def table_only(self) -> bool:
        return not self._canon

    def lookup_tables(self) -> dict[int, np.ndarray]:
        """Window size -> flag table over local membership patterns."""
        return dict(self._tables)

    def check(self, C: Clutter) -> FreeResult:
        hit = self.first_hit(C)
        if hit is None:
            return FreeResult(True)
        idx, W = hit
        emb = find_induced_embedding(C.induced(W), self.patterns[idx])
        assert emb is not None
        return FreeResult(False, self.names[idx], {v: W[h - 1] for v, h in emb.items()})


def is_family_free(C: Clutter, family: Sequence[Clutter] | FamilyMatcher,
                   names: Sequence[str] | None = None) -> FreeResult:
    """True unless some family member is an induced subclutter of C (with witness)."""
    if isinstance(family, FamilyMatcher):
        return family.check(C)
    if not family:
        return FreeResult(True)
    for i, p in enumerate(family):
        if p.d != C.d:
            raise ValueError("uniformities differ")
        for W in combinations(range(1, C.n + 1), p.n):
            sub = C.induced(W)
            if len(sub) != len(p):
                continue
            emb = find_induced_embedding(sub, p)
            if emb is not None:
                name = names[i] if names else f"#{i}"
                return FreeResult(False, name, {v: W[h - 1] for v, h in emb.items()})
    return FreeResult(True)


# -- catalog ----------------------------------------------------------------

def _bipyramid() -> Clutter:
    return Clutter.from_string(5, "123 124 134 235 345 245")


def _catalog() -> dict[str, Clutter | MonomialIdeal]:
    B = _bipyramid()
    return {
        "B": B,
        "B1": B.add((1, 2, 5)),
        "B2": B.add((1, 2, 5), (1, 3, 5)),
        "Bprime": Clutter(6, 3, tuple(m for m in all_masks(6, 3) if m not in (0b000111, 0b111000))),
        "D1_6": Clutter.from_string(6, "123 246 145 356 134 136 146 346"),
        "D6_7": Clutter.from_string(7, "123 124 127 145 147 247 267 347"),
        "D48_7": Clutter.from_string(7, "123 124 136 145 146 147 167 246 267 346 347"),
        "D1_8": Clutter.from_string(8, "123 124 125 145 147 246 248 258 456"),
        "conca": MonomialIdeal.from_exponents(
            4, [(2, 1, 0, 0), (2, 0, 1, 0), (1, 0, 2, 0), (0, 1, 2, 0), (1, 0, 1, 1)]
        ),
    }


CATALOG_NAMES = ("B", "B1", "B2", "Bprime", "D1_6", "D6_7", "D48_7", "D1_8", "conca")


def catalog() -> dict[str, Clutter | MonomialIdeal]:
    """Named clutters, plus one non-square-free ideal, under stable string keys."""
    return _catalog()


def family_C() -> list[Clutter]:
    cat = _catalog()
    return [cat["B"], cat["B1"], cat["B2"], cat["Bprime"]]


FAMILY_C_NAMES = ("B", "B1", "B2", "Bprime")


@lru_cache(maxsize=1)
def family_C_matcher() -> FamilyMatcher:
    return FamilyMatcher(family_C(), FAMILY_C_NAMES)


def construct_Cd(d: int) -> Clutter:
    """All d-subsets of {1..d+1} and of {2..d+2}, except {2..d+1}."""
    if d < 1:
        raise ValueError("d must be positive")
    A = [set(s) for s in combinations(range(1, d + 2), d)]
    B = [set(s) for s in combinations(range(2, d + 3), d)]
    drop = set(range(2, d + 2))
    sets = {frozenset(s) for s in A + B if s != drop}
    return Clutter.from_sets(d + 2, sets, d)
