"""Permutation groups, the quadruple and clutter searches behind the
obstruction family for squares, kappa, Omega counts and the 105-case census.
"""

from __future__ import annotations

import hashlib
import inspect
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import comb
from pathlib import Path
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import _backend
from .betti import has_linear_resolution
from .clutter import (
    Clutter,
    FamilyMatcher,
    all_masks,
    canonical_form,
    construct_Cd,
    family_C_matcher,
    mask_of,
    vertices_of,
)
from .linpres import linearly_presented_graph, power_check


class UnsupportedRangeError(ValueError):
    """Parameters outside the range an exhaustive routine supports."""


# -- permutation groups ------------------------------------------------------

Perm = tuple  # 1-based images: perm[i - 1] is the image of i


def perm_from_cycles(n: int, cycles: Iterable[Sequence[int]]) -> Perm:
    img = list(range(1, n + 1))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            img[a - 1] = b
    return tuple(img)


def _compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[x - 1] for x in p)


def _symmetric_generators(n: int, points: Sequence[int]) -> list[Perm]:
    pts = list(points)
    if len(pts) < 2:
        return []
    gens = [perm_from_cycles(n, [pts[:2]])]
    if len(pts) > 2:
        gens.append(perm_from_cycles(n, [pts]))
    return gens


@dataclass(frozen=True)
class PermGroup:
    """A permutation group on {1..n} given by generators; elements are
    materialised on demand (orders stay in the hundreds here)."""

    degree: int
    generators: tuple[Perm, ...]

    def __post_init__(self):
        for g in self.generators:
            if sorted(g) != list(range(1, self.degree + 1)):
                raise ValueError(f"{g} is not a permutation of 1..{self.degree}")

    @classmethod
    def generated(cls, n: int, generators: Iterable[Perm]) -> "PermGroup":
        return cls(n, tuple(generators))

    def elements(self) -> list[Perm]:
        return list(_closure(self.degree, self.generators))

    def order(self) -> int:
        return len(_closure(self.degree, self.generators))

    def __contains__(self, p: Perm) -> bool:
        return tuple(p) in _closure(self.degree, self.generators)

    def as_arrays(self) -> np.ndarray:
        """Elements as 0-based old -> new maps, one row each."""
        return np.array([[x - 1 for x in p] for p in self.elements()], dtype=np.int32).reshape(
            -1, self.degree
        )


@lru_cache(maxsize=128)
def _closure(n: int, gens: tuple) -> frozenset:
    ident = tuple(range(1, n + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def symmetric_group(n: int, points: Sequence[int] | None = None) -> PermGroup:
    return PermGroup(n, tuple(_symmetric_generators(n, points or range(1, n + 1))))


def act_on_set(p: Perm, s: Iterable[int]) -> frozenset:
    return frozenset(p[x - 1] for x in s)


def act_on_sets(p: Perm, sets: Iterable[Iterable[int]]) -> frozenset:
    return frozenset(act_on_set(p, s) for s in sets)


def orbits(G: PermGroup, domain: Iterable[Hashable],
           action: Callable[[Perm, Hashable], Hashable]) -> list[list]:
    """Orbits of G on a G-invariant domain, each sorted, listed by least element."""
    elems = G.elements()
    remaining = set(domain)
    out = []
    for x in sorted(remaining, key=_sort_key):
        if x not in remaining:
            continue
        orb = {action(g, x) for g in elems}
        if not orb <= remaining:
            raise ValueError("domain is not invariant under the group")
        remaining -= orb
        out.append(sorted(orb, key=_sort_key))
    return out


def orbit_reps(G: PermGroup, domain: Iterable[Hashable],
               action: Callable[[Perm, Hashable], Hashable]) -> list:
    return [orb[0] for orb in orbits(G, domain, action)]


def _sort_key(x):
    if isinstance(x, (frozenset, set)):
        return tuple(sorted((_sort_key(y) for y in x)))
    if isinstance(x, tuple):
        return tuple(_sort_key(y) for y in x)
    return x


# -- stabilisers and the quadruple search ------------------------------------

_U1 = (1, 2, 3)
_PARTNERS = {(1, 2, 4), (1, 4, 5)}


def stabilizer(n: int, F: Iterable[int]) -> PermGroup:
    """Stabiliser of the pair {{1,2,3}, F} for F = {1,2,4} or {1,4,5}.

    For F = {1,2,4} this is <(1 2), Sym{5..n}>; the group must fix 3 and 4.
    For F = {1,4,5} it is <(2 3), (4 5), Sym{6..n}>.
    """
    F = tuple(sorted(F))
    if F not in _PARTNERS:
        raise UnsupportedRangeError(f"stabiliser only defined for F in {sorted(_PARTNERS)}")
    if n not in (6, 7, 8):
        raise UnsupportedRangeError("n must be 6, 7 or 8")
    if F == (1, 2, 4):
        gens = [perm_from_cycles(n, [[1, 2]])] + _symmetric_generators(n, range(5, n + 1))
    else:
        gens = [perm_from_cycles(n, [[2, 3]]), perm_from_cycles(n, [[4, 5]])]
        gens += _symmetric_generators(n, range(6, n + 1))
    return PermGroup(n, tuple(gens))


def printed_stabilizer(n: int, F: Iterable[int]) -> PermGroup:
    """The generating sets exactly as printed: <(1 2), Sym{4..n}> and
    <(2 3), (4 5), Sym{6..n}>.  The first does not fix {1,2,4}."""
    F = tuple(sorted(F))
    if F == (1, 2, 4):
        gens = [perm_from_cycles(n, [[1, 2]])] + _symmetric_generators(n, range(4, n + 1))
    elif F == (1, 4, 5):
        gens = [perm_from_cycles(n, [[2, 3]]), perm_from_cycles(n, [[4, 5]])]
        gens += _symmetric_generators(n, range(6, n + 1))
    else:
        raise UnsupportedRangeError(f"no printed stabiliser for {F}")
    return PermGroup(n, tuple(gens))


def _sqfree(n: int, *sets) -> tuple:
    e = [0] * n
    for s in sets:
        for x in s:
            e[x - 1] += 1
    return tuple(e)


def _lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _div(a, b):
    return all(x <= y for x, y in zip(a, b))


@dataclass(frozen=True)
class Quad:
    """Circuits U1, U2, V1, V2 as sorted 1-based tuples; u = x_U1 x_U2, v = x_V1 x_V2."""

    n: int
    u1: tuple
    u2: tuple
    v1: tuple
    v2: tuple

    def sets(self) -> tuple:
        return (self.u1, self.u2, self.v1, self.v2)

    @property
    def u(self) -> tuple:
        return _sqfree(self.n, self.u1, self.u2)

    @property
    def v(self) -> tuple:
        return _sqfree(self.n, self.v1, self.v2)

    def config(self) -> frozenset:
        return frozenset([frozenset([frozenset(self.u1), frozenset(self.u2)]),
                          frozenset([frozenset(self.v1), frozenset(self.v2)])])

    def label(self) -> str:
        return " ".join("".join(map(str, s)) for s in self.sets())

    def to_json(self) -> dict:
        return {"n": self.n, "u": [list(self.u1), list(self.u2)], "v": [list(self.v1), list(self.v2)]}


def _quad_ok(n: int, U1, U2, V1, V2) -> bool:
    u, v = _sqfree(n, U1, U2), _sqfree(n, V1, V2)
    w = _lcm(u, v)
    return all(not _div(_sqfree(n, A, B), w) for A in (U1, U2) for B in (V1, V2))


def algorithm1(n: int, *, dedupe: bool = True) -> list[Quad]:
    """Quadruples (u1, u2, v1, v2) of cubic square-free monomials with
    u_i v_j not dividing lcm(u, v) for all i, j, modulo relabelling.

    U1 = {1,2,3}; V1 runs over {1,2,4} and {1,4,5}; orbit representatives are
    taken under the stabiliser of {U1, V1}; configurations with a 5-element
    overlap are dropped.  Kept quadruples have deg lcm(u, v) = 8 and support
    exactly [n].  With ``dedupe`` the result is further reduced modulo all
    relabellings (including swapping u and v).
    """
    if n not in (6, 7, 8):
        raise UnsupportedRangeError("algorithm1 is defined for n = 6, 7, 8")
    S = list(combinations(range(1, n + 1), 3))
    out: list[Quad] = []
    for V1 in sorted(_PARTNERS):
        T = set()
        for U2 in S:
            for V2 in S:
                if _quad_ok(n, _U1, U2, V1, V2):
                    T.add((frozenset([frozenset(_U1), frozenset(U2)]),
                           frozenset([frozenset(V1), frozenset(V2)])))
        G = stabilizer(n, V1)

        def act(p, item):
            return (act_on_sets(p, item[0]), act_on_sets(p, item[1]))

        for Upair, Vpair in orbit_reps(G, T, act):
            Us = set().union(*Upair)
            Vs = set().union(*Vpair)
            if len(Us & Vs) == 5:
                continue
            u2 = next(iter(s for s in Upair if s != frozenset(_U1)), frozenset(_U1))
            v2 = next(iter(s for s in Vpair if s != frozenset(V1)), frozenset(V1))
            q = Quad(n, _U1, tuple(sorted(u2)), V1, tuple(sorted(v2)))
            if len(Us | Vs) != n:
                continue
            if sum(_lcm(q.u, q.v)) < 8:
                continue
            out.append(q)
    if dedupe:
        seen = set()
        uniq = []
        Sn = symmetric_group(n).elements()
        for q in out:
            if q.config() in seen:
                continue
            uniq.append(q)
            for p in Sn:
                seen.add(frozenset(act_on_sets(p, pair) for pair in q.config()))
        out = uniq
    return out


def quad_stabilizer(q: Quad) -> np.ndarray:
    """0-based maps of all permutations of [n] preserving the configuration."""
    cfg = q.config()
    rows = []
    for p in permutations(range(1, q.n + 1)):
        if frozenset(act_on_sets(p, pair) for pair in cfg) == cfg:
            rows.append([x - 1 for x in p])
    return np.array(rows, dtype=np.int32)


# -- the clutter search --------------------------------------------------------

@dataclass
class _Alg2Setup:
    n: int
    S: list            # triples as 1-based tuples, index = global triple id
    c1: list           # ids
    c2: set
    c3: set            # frozensets of two ids
    forced_out: set
    pool: list
    nbrs: dict


def _alg2_setup(q: Quad) -> _Alg2Setup:
    n = q.n
    S = list(combinations(range(1, n + 1), 3))
    idx = {s: i for i, s in enumerate(S)}
    U1, U2, V1, V2 = q.sets()
    u, v = q.u, q.v
    w = _lcm(u, v)
    mono = lambda *fs: _sqfree(n, *fs)  # noqa: E731
    adj = lambda a, b: sum(_lcm(a, b)) == 7  # noqa: E731
    c1 = [idx[s] for s in (U1, U2, V1, V2)]

    c2 = set()
    for F in S:
        for side, other, own, others in ((u, v, (U1, U2), (V1, V2)), (v, u, (V1, V2), (U1, U2))):
            for W2 in own:
                p = mono(F, W2)
                if _div(p, w) and adj(side, p):
                    l = _lcm(other, p)
                    if any(_div(mono(a, b), l) for a in others for b in (F, W2)):
                        c2.add(idx[F])

    quad = (U1, U2, V1, V2)
    c3 = set()
    for F1, F2 in combinations(S, 2):
        p = mono(F1, F2)
        pair = frozenset((idx[F1], idx[F2]))
        if _div(p, w) and adj(u, p) and adj(p, v):  # A
            c3.add(pair)
            continue
        found = False
        for a, b in ((F1, F2), (F2, F1)):  # B
            for w1 in quad:
                for w2 in quad:
                    p1, p2 = mono(a, w1), mono(b, w2)
                    if _div(p1, w) and _div(p2, w) and adj(u, p1) and adj(p1, p2) and adj(p2, v):
                        found = True
        if found:
            c3.add(pair)
            continue
        if p == u and any(_div(mono(a, b), w) for a in (F1, F2) for b in (V1, V2)):  # C
            c3.add(pair)
        if p == v and any(_div(mono(a, b), w) for a in (F1, F2) for b in (U1, U2)):
            c3.add(pair)

    c1set = set(c1)
    forced = set(c2) - c1set
    for e in c3:
        a, b = tuple(e)
        if a in c1set and b not in c1set:
            forced.add(b)
        if b in c1set and a not in c1set:
            forced.add(a)
    pool = [i for i in range(len(S)) if i not in c1set and i not in forced]
    nbrs = {i: set() for i in pool}
    for e in c3:
        a, b = tuple(e)
        if a in nbrs and b in nbrs:
            nbrs[a].add(b)
            nbrs[b].add(a)
    return _Alg2Setup(n, S, c1, c2, c3, forced, pool, nbrs)


class _Connectivity:
    """Incremental u-v connectivity in the graph on products x_F x_G dividing
    lcm(u, v), bitset-based."""

    def __init__(self, q: Quad, S: list):
        n = q.n
        w = _lcm(q.u, q.v)
        monos: dict[tuple, int] = {}
        self.pair_bits: dict[int, dict[int, int]] = {i: {} for i in range(len(S))}
        for i in range(len(S)):
            for j in range(i, len(S)):
                p = _sqfree(n, S[i], S[j])
                if not _div(p, w):
                    continue
                b = monos.setdefault(p, len(monos))
                self.pair_bits[i][j] = self.pair_bits[i].get(j, 0) | (1 << b)
                self.pair_bits[j][i] = self.pair_bits[j].get(i, 0) | (1 << b)
        keys = list(monos)
        self.adj = [0] * len(keys)
        for a in range(len(keys)):
            for b in range(len(keys)):
                if a != b and sum(_lcm(keys[a], keys[b])) == 7:
                    self.adj[a] |= 1 << b
        self.ubit = 1 << monos[q.u]
        self.vbit = 1 << monos[q.v]

    def add(self, active: int, chosen: Iterable[int], t: int) -> int:
        bits = self.pair_bits[t]
        out = active | bits.get(t, 0)
        for s in chosen:
            out |= bits.get(s, 0)
        return out

    def connected(self, active: int) -> bool:
        reach = self.ubit
        frontier = self.ubit
        while frontier:
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= self.adj[low.bit_length() - 1]
                f ^= low
            nxt &= active & ~reach
            reach |= nxt
            if reach & self.vbit:
                return True
            frontier = nxt
        return False


def _complement_windows(n: int, matcher: FamilyMatcher, ids: dict[int, int]):
    """(triple ids in local bit order, bad-pattern table on C itself) for
    every vertex window the matcher's tables cover.  The complement on a
    window is the bitwise negation of the clutter's own pattern there."""
    out = []
    for k, table in sorted(matcher.lookup_tables().items()):
        local = all_masks(k, 3)
        full = (1 << len(local)) - 1
        flipped = table[full ^ np.arange(full + 1)]
        for W in combinations(range(n), k):
            items = []
            for m in local:
                g = 0
                for b in range(k):
                    if m >> b & 1:
                        g |= 1 << W[b]
                items.append(ids[g])
            out.append((items, flipped))
    return out


def algorithm2_labelled(q: Quad) -> list[Clutter]:
    """Every clutter C1 | X | Y (X independent in G_n, Y in C4) whose complement
    is free of the bi-pyramid family and in which u, v stay disconnected in
    the restricted graph of the square, as labelled clutters on [n].

    The freeness test is applied per vertex window as soon as every triple
    in the window has been decided, which prunes exactly the branches the
    final test would reject.
    """
    st = _alg2_setup(q)
    n = st.n
    conn = _Connectivity(q, st.S)
    matcher = family_C_matcher()
    if not matcher.table_only():
        raise RuntimeError("window pruning needs table-backed patterns")
    masks = [mask_of(s) for s in st.S]
    ids = {m: i for i, m in enumerate(masks)}
    pool = st.pool
    where = {t: k for k, t in enumerate(pool)}
    # windows grouped by the pool position that completes them
    closing: list[list] = [[] for _ in range(len(pool) + 1)]
    for items, table in _complement_windows(n, matcher, ids):
        last = max((where[t] for t in items if t in where), default=-1)
        closing[last + 1].append((items, table))

    def clean(member: int, lo: int, hi: int) -> bool:
        # windows closed by pool positions lo-1 .. hi-1
        for slot in range(lo, hi + 1):
            for items, table in closing[slot]:
                key = 0
                for b, t in enumerate(items):
                    if member >> t & 1:
                        key |= 1 << b
                if table[key]:
                    return False
        return True

    active = 0
    chosen: list[int] = []
    member = 0
    for t in st.c1:
        active = conn.add(active, chosen, t)
        chosen.append(t)
        member |= 1 << t
    # lcm(u, v) has degree 8, so edges of the square's graph need degree 7
    if conn.connected(active) or not clean(member, 0, 0):
        return []
    found: list[Clutter] = []

    def dfs(start: int, active: int, member: int, banned: frozenset):
        # the leaf that skips every remaining pool triple
        if clean(member, start + 1, len(pool)):
            found.append(Clutter(n, 3, tuple(masks[i] for i in sorted(chosen))))
        for k in range(start, len(pool)):
            t = pool[k]
            if t in banned:
                continue
            new_active = conn.add(active, chosen, t)
            if conn.connected(new_active):
                continue  # adding circuits never disconnects u and v again
            new_member = member | 1 << t
            if not clean(new_member, start + 1, k + 1):
                continue
            chosen.append(t)
            dfs(k + 1, new_active, new_member, banned | st.nbrs[t])
            chosen.pop()

    dfs(0, active, member, frozenset())
    return found


def algorithm2(n: int, quad: Quad | None = None) -> list[Clutter]:
    """Clutter-search results for a quadruple, one per orbit of the
    configuration's stabiliser, each the least image in its orbit."""
    if quad is None:
        quads = algorithm1(n)
        if len(quads) != 1:
            raise ValueError("pass a quadruple explicitly")
        quad = quads[0]
    if quad.n != n:
        raise ValueError("quadruple lives on a different vertex count")
    labelled = algorithm2_labelled(quad)
    perms = quad_stabilizer(quad)
    reps = {}
    for C in labelled:
        key, _ = _backend.min_relabel(list(C.circuits), perms)
        reps.setdefault(tuple(key), None)
    return [Clutter(n, 3, key) for key in sorted(reps, key=lambda k: (len(k), k))]


# -- the family for squares ----------------------------------------------------

def _code_hash() -> str:
    src = "".join(inspect.getsource(f) for f in (algorithm1, _alg2_setup, algorithm2_labelled, algorithm2))
    return hashlib.sha256(src.encode()).hexdigest()[:16]


def cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Environment variable GLINDEX_CACHE_DIR wins over the argument."""
    env = os.environ.get("GLINDEX_CACHE_DIR")
    if env:
        return Path(env)
    if explicit:
        return Path(explicit)
    return Path.home() / ".cache" / "glindex"


def _alg2_for_n(n: int) -> list[list[int]]:
    return [list(C.circuits) for q in algorithm1(n) for C in algorithm2(n, q)]


def family_D(*, jobs: int = 1, cache: str | os.PathLike | None = None,
             use_cache: bool = True) -> list[Clutter]:
    """Clutter-search results for n = 6, 7, 8 up to isomorphism, as canonical
    clutters sorted by (n, size, circuits).

    Cached as JSON keyed by a hash of the generating code.
    """
    path = cache_dir(cache) / "family_D.json"
    h = _code_hash()
    if use_cache and path.exists():
        try:
            data = json.loads(path.read_text())
            if data.get("hash") == h:
                return [Clutter.from_json(c) for c in data["members"]]
        except (OSError, ValueError, KeyError):
            pass
    ns = (6, 7, 8)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(ns))) as ex:
            parts = list(ex.map(_alg2_for_n, ns))
    else:
        parts = [_alg2_for_n(n) for n in ns]
    members = family_D_classes([Clutter(n, 3, tuple(m)) for n, part in zip(ns, parts) for m in part])
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            payload = {"hash": h, "members": [C.to_json() for C in members]}
            path.write_text(json.dumps(payload, sort_keys=True))
        except OSError:
            pass
    return members


def family_D_classes(members: Sequence[Clutter]) -> list[Clutter]:
    """One canonical clutter per isomorphism class, sorted by (n, size, circuits)."""
    keys = {canonical_form(C) for C in members}
    return [Clutter(*k) for k in sorted(keys, key=lambda k: (k[0], len(k[2]), k[2]))]


@lru_cache(maxsize=4)
def _family_D_matcher_cached(key: tuple) -> FamilyMatcher:
    members = [Clutter(n, 3, c) for n, c in key]
    return FamilyMatcher(members, [f"D{i + 1}_{C.n}" for i, C in enumerate(members)])


def family_D_matcher(members: Sequence[Clutter] | None = None, **kw) -> FamilyMatcher:
    members = family_D(**kw) if members is None else members
    idx: dict[int, int] = {}
    names = []
    for C in members:
        idx[C.n] = idx.get(C.n, 0) + 1
        names.append(f"D{idx[C.n]}_{C.n}")
    m = _family_D_matcher_cached(tuple((C.n, C.circuits) for C in members))
    m.names = names
    return m


# -- isomorph-free generation -------------------------------------------------

def iso_classes(n: int, d: int, max_size: int | None = None) -> dict[int, list[Clutter]]:
    """Canonical representatives of all d-uniform clutters on [n], by size,
    grown one circuit at a time and deduplicated by canonical form."""
    total = comb(n, d)
    top = total if max_size is None else min(max_size, total)
    layers = {0: [Clutter(n, d, ())]}
    universe = all_masks(n, d)
    for s in range(1, top + 1):
        seen = {}
        for C in layers[s - 1]:
            have = set(C.circuits)
            for m in universe:
                if m in have:
                    continue
                key = canonical_form(Clutter(n, d, C.circuits + (m,)))
                if key not in seen:
                    seen[key] = Clutter(*key)
        layers[s] = [seen[k] for k in sorted(seen)]
    return layers


# -- kappa ------------------------------------------------------------------------

@dataclass
class KappaResult:
    d: int
    kappa: int
    witness: Clutter
    checked: dict = field(default_factory=dict)  # size -> number of classes, all with LR

    def to_json(self) -> dict:
        return {"d": self.d, "kappa": self.kappa, "witness": self.witness.to_json(),
                "checked": {str(k): v for k, v in sorted(self.checked.items())}}


def _complement_has_lr(circuits_n_d: tuple) -> bool:
    n, d, circuits = circuits_n_d
    comp = Clutter(n, d, circuits).complement()
    if not comp.circuits:
        return True
    return has_linear_resolution(comp.edge_ideal())


def _pmap(fn, items, jobs: int):
    if jobs > 1 and len(items) > 64:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (8 * jobs))))
    return [fn(x) for x in items]


def kappa(d: int, *, jobs: int = 1, max_vertices: int | None = None) -> KappaResult:
    """Least |C| such that I(complement of C) lacks a linear resolution,
    over all d-uniform clutters on at most 2d + 2 vertices."""
    if d < 2 or d > 3:
        raise UnsupportedRangeError("kappa is exhaustively computed for d = 2, 3 only")
    nmax = max_vertices or 2 * d + 2
    layers = {n: iso_classes(n, d, max_size=2 * d) for n in range(d, nmax + 1)}
    checked: dict[int, int] = {}
    for s in range(1, 2 * d + 1):
        batch = [C for n in layers for C in layers[n].get(s, [])]
        flags = _pmap(_complement_has_lr, [(C.n, C.d, C.circuits) for C in batch], jobs)
        bad = [C for C, ok in zip(batch, flags) if not ok]
        if bad:
            return KappaResult(d, s, bad[0], checked)
        checked[s] = len(batch)
    raise RuntimeError("no clutter without linear resolution found in range")


# -- Omega ---------------------------------------------------------------------

@dataclass
class OmegaResult:
    d: int
    k: int
    n: int
    count: int
    reps: list
    note: str = ""

    def to_json(self, with_reps: bool = False) -> dict:
        out = {"d": self.d, "k": self.k, "n": self.n, "count": self.count}
        if self.note:
            out["note"] = self.note
        if with_reps:
            out["reps"] = [C.to_json() for C in self.reps]
        return out


def _fails_first_at(C: Clutter, k: int) -> bool:
    """index(I^j) > 1 for j < k and index(I^k) = 1."""
    if not C.circuits:
        return False
    I = C.edge_ideal()
    for j in range(1, k):
        if not power_check(I, j):
            return False
    return not power_check(I, k)


def is_minimal_obstruction(C: Clutter, k: int) -> bool:
    """No induced subclutter on a proper vertex subset fails first at k."""
    for size in range(C.d, C.n):
        for W in combinations(range(1, C.n + 1), size):
            if _fails_first_at(C.induced(W), k):
                return False
    return True


def _omega_check(args) -> bool:
    n, d, circuits, k = args
    C = Clutter(n, d, circuits)
    return _fails_first_at(C, k) and is_minimal_obstruction(C, k)


def enumerate_omega(d: int, k: int, n: int, *, jobs: int = 1, **kw) -> OmegaResult:
    """Isomorphism classes of minimal clutters on n vertices whose edge ideal
    first fails linear presentation at the k-th power."""
    if k == 1 and d in (2, 3) and 1 <= n <= 6:
        classes = [C for layer in iso_classes(n, d).values() for C in layer]
        flags = _pmap(_omega_check, [(C.n, C.d, C.circuits, 1) for C in classes], jobs)
        reps = [C for C, ok in zip(classes, flags) if ok]
        return OmegaResult(d, k, n, len(reps), reps)
    if (d, k) == (3, 2) and n in (6, 7, 8):
        classes = [C for C in family_D(jobs=jobs, **kw) if C.n == n]
        for C in classes:
            if not _fails_first_at(C, 2):
                raise AssertionError(f"family member {C} does not fail first at the square")
        flags = _pmap(_omega_check, [(C.n, C.d, C.circuits, 2) for C in classes], jobs)
        reps = [C for C, ok in zip(classes, flags) if ok]
        note = (f"{len(classes)} isomorphism classes from algorithm2, "
                f"{len(classes) - len(reps)} contain a smaller obstruction")
        return OmegaResult(d, k, n, len(reps), reps, note)
    raise UnsupportedRangeError(
        f"Omega_{{{d},{k}}}({n}) is outside the supported range: "
        "(2,1,n<=6), (3,1,n<=6), (3,2,n in 6..8)"
    )


# -- the 105-case census -------------------------------------------------------

@dataclass
class CensusResult:
    cases: int
    orbit_counts: list
    all_contain_member: bool
    empty_x_completions: int

    def to_json(self) -> dict:
        return {"cases": self.cases, "orbit_counts": self.orbit_counts,
                "all_contain_member": self.all_contain_member,
                "empty_x_completions_checked": self.empty_x_completions}


def census_group() -> PermGroup:
    return PermGroup(6, (perm_from_cycles(6, [[1, 2, 3]]), perm_from_cycles(6, [[1, 2]]),
                         perm_from_cycles(6, [[4, 5, 6]]), perm_from_cycles(6, [[4, 5]])))


def census_omega() -> list[frozenset]:
    return [frozenset((i, j, a)) for i, j in combinations((1, 2, 3), 2) for a in (4, 5, 6)]


def case_census_deg6() -> CensusResult:
    """Re-run the case analysis for u = x1x2x3, v = x4x5x6.

    X = the triples ija (i, j <= 3 < a) in C.  Each ija in X forces kab out
    of C for k in {i, j} and b != a; triples of Omega outside X are out of C.
    The remaining triples iab are free; every completion is checked for an
    induced bi-pyramid-family member in the complement.  X empty counts as one
    case whose 512 completions are all checked.
    """
    H = census_group()
    Om = census_omega()
    Omp = [frozenset((i, a, b)) for i in (1, 2, 3) for a, b in combinations((4, 5, 6), 2)]
    matcher = family_C_matcher()
    counts = []
    reps = []
    for k in range(len(Om) + 1):
        rs = orbit_reps(H, (frozenset(X) for X in combinations(Om, k)), act_on_sets)
        counts.append(len(rs))
        reps.extend(rs)
    cases = 0
    ok = True
    empty_done = 0
    for X in reps:
        forced = set()
        for F in X:
            a = max(F)
            for kk in sorted(F - {a}):
                for b in (4, 5, 6):
                    if b != a:
                        forced.add(frozenset((kk, a, b)))
        free = [T for T in Omp if T not in forced]
        base = [frozenset((1, 2, 3)), frozenset((4, 5, 6))] + list(X)
        n_done = 0
        for bits in range(1 << len(free)):
            chosen = [T for b, T in enumerate(free) if bits >> b & 1]
            C = Clutter.from_sets(6, base + chosen, 3)
            if not matcher.contains(C.complement()):
                ok = False
            n_done += 1
        if X:
            cases += n_done
        else:
            cases += 1
            empty_done = n_done
    return CensusResult(cases, counts, ok, empty_done)


__all__ = [
    "PermGroup", "Quad", "UnsupportedRangeError", "algorithm1", "algorithm2", "algorithm2_labelled",
    "case_census_deg6", "construct_Cd", "enumerate_omega", "family_D", "family_D_classes",
    "family_D_matcher", "iso_classes", "kappa", "orbit_reps", "orbits", "printed_stabilizer",
    "stabilizer", "vertices_of",
]
