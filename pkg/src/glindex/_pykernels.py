"""Pure-Python reference versions of the hot kernels.

Every function here has a twin with the same signature and semantics in the
compiled ``_kernels`` extension; ``_backend`` picks one at import time.
"""

from __future__ import annotations

from collections import deque


def rank_mod_p(columns, nrows, p):
    """Rank over GF(p) of the matrix with the given sparse integer columns."""
    rows = []
    for col in columns:
        row = [0] * nrows
        for r, v in col.items():
            row[r] = v % p
        rows.append(row)
    rank = 0
    ncols = len(rows)
    for c in range(nrows):
        piv = None
        for r in range(rank, ncols):
            if rows[r][c]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], -1, p)
        for k in range(c, nrows):
            prow[k] = prow[k] * inv % p
        for r in range(rank + 1, ncols):
            a = rows[r][c]
            if a:
                row = rows[r]
                for k in range(c, nrows):
                    if prow[k]:
                        row[k] = (row[k] - a * prow[k]) % p
        rank += 1
        if rank == ncols:
            break
    return rank


def min_relabel(masks, perms):
    """Lexicographically least sorted mask tuple over the given relabelings.

    ``perms`` are sequences mapping old 0-based vertex to new 0-based vertex.
    Returns ``(key, index_of_perm)``.
    """
    best = None
    best_i = -1
    for idx, perm in enumerate(perms):
        mapped = []
        for m in masks:
            out = 0
            while m:
                low = m & -m
                out |= 1 << perm[low.bit_length() - 1]
                m ^= low
            mapped.append(out)
        mapped.sort()
        key = tuple(mapped)
        if best is None or key < best:
            best, best_i = key, idx
    return (best if best is not None else tuple(sorted(masks))), best_i


def _lcm(a, b):
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _group_pairs(rows):
    groups = {}
    m = len(rows)
    for i in range(m):
        ri = rows[i]
        for j in range(i + 1, m):
            groups.setdefault(_lcm(ri, rows[j]), []).append((i, j))
    return groups


def lp_sweep(rows, d):
    """First generator pair (i, j) in lexicographic order that is NOT joined by a
    path in the generator graph restricted to divisors of lcm(i, j), or None.

    ``rows`` are the exponent vectors of the minimal generators, all of degree d.
    """
    m = len(rows)
    nbrs = [[] for _ in range(m)]
    groups = _group_pairs(rows)
    for w, pairs in groups.items():
        if sum(w) == d + 1:
            for i, j in pairs:
                nbrs[i].append(j)
                nbrs[j].append(i)
    best = None
    for w, pairs in groups.items():
        if sum(w) == d + 1:
            continue
        inside = {k for k in range(m) if _divides(rows[k], w)}
        comp = {}
        label = 0
        for s in sorted(inside):
            if s in comp:
                continue
            comp[s] = label
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for y in nbrs[x]:
                    if y in inside and y not in comp:
                        comp[y] = label
                        queue.append(y)
            label += 1
        for i, j in pairs:
            if comp[i] != comp[j]:
                if best is None or (i, j) < best:
                    best = (i, j)
                break
    return best


def beta1_sweep(rows):
    """Multidegrees w = lcm of a generator pair whose open lcm-lattice interval
    (1, w) is disconnected, as ``{w: components - 1}``.

    Two atoms below w lie in one component iff they are linked by atoms whose
    pairwise lcm is strictly below w; pairs with lcm exactly w are the only
    non-links.
    """
    m = len(rows)
    out = {}
    for w, pairs in _group_pairs(rows).items():
        inside = [k for k in range(m) if _divides(rows[k], w)]
        blocked = {}
        for i, j in pairs:
            blocked.setdefault(i, set()).add(j)
            blocked.setdefault(j, set()).add(i)
        unvisited = set(inside)
        comps = 0
        while unvisited:
            start = unvisited.pop()
            comps += 1
            queue = [start]
            while queue:
                x = queue.pop()
                bx = blocked.get(x, ())
                reach = [y for y in unvisited if y not in bx]
                for y in reach:
                    unvisited.discard(y)
                queue.extend(reach)
        if comps > 1:
            out[w] = comps - 1
    return out


def window_hit(member, windows, table):
    """Index of the first window whose membership pattern is flagged in ``table``.

    ``member[t]`` is 0/1 for global item t; each window lists global items in
    local bit order.  Returns -1 when no window hits.
    """
    for w, items in enumerate(windows):
        key = 0
        for b, t in enumerate(items):
            if member[t]:
                key |= 1 << b
        if table[key]:
            return w
    return -1
