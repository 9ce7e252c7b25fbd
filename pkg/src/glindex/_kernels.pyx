# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int64_t, uint8_t, int32_t
from libc.string cimport memset

cnp.import_array()


def rank_mod_p(columns, Py_ssize_t nrows, long long p):
    cdef Py_ssize_t ncols = len(columns)
    if ncols == 0 or nrows == 0:
        return 0
    cdef cnp.ndarray[cnp.int64_t, ndim=2] arr = np.zeros((ncols, nrows), dtype=np.int64)
    cdef int64_t[:, ::1] M = arr
    cdef Py_ssize_t r, c, k, piv, rank = 0
    cdef long long a, inv, tmp
    for r, col in enumerate(columns):
        for k, v in col.items():
            M[r, k] = v % p
    for c in range(nrows):
        piv = -1
        for r in range(rank, ncols):
            if M[r, c] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            for k in range(c, nrows):
                tmp = M[rank, k]
                M[rank, k] = M[piv, k]
                M[piv, k] = tmp
        inv = pow(int(M[rank, c]), -1, p)
        for k in range(c, nrows):
            M[rank, k] = (M[rank, k] * inv) % p
        for r in range(rank + 1, ncols):
            a = M[r, c]
            if a != 0:
                for k in range(c, nrows):
                    if M[rank, k] != 0:
                        M[r, k] = ((M[r, k] - a * M[rank, k]) % p + p) % p
        rank += 1
        if rank == ncols:
            break
    return rank


def min_relabel(masks, perms):
    cdef Py_ssize_t L = len(masks)
    cdef Py_ssize_t P = len(perms)
    if P == 0 or L == 0:
        return tuple(sorted(masks)), -1
    cdef cnp.ndarray[cnp.int64_t, ndim=1] marr = np.asarray(masks, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=2] parr = np.ascontiguousarray(perms, dtype=np.int32)
    cdef int64_t[::1] ms = marr
    cdef int32_t[:, ::1] pm = parr
    cdef cnp.ndarray[cnp.int64_t, ndim=1] cur_a = np.zeros(L, dtype=np.int64)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] best_a = np.zeros(L, dtype=np.int64)
    cdef int64_t[::1] cur = cur_a
    cdef int64_t[::1] best = best_a
    cdef Py_ssize_t t, i, j, b, best_idx = -1
    cdef int64_t m, out, key
    cdef int cmp
    for t in range(P):
        for i in range(L):
            m = ms[i]
            out = 0
            b = 0
            while m:
                if m & 1:
                    out |= (<int64_t>1) << pm[t, b]
                m >>= 1
                b += 1
            # insertion sort
            j = i
            while j > 0 and cur[j - 1] > out:
                cur[j] = cur[j - 1]
                j -= 1
            cur[j] = out
        if best_idx < 0:
            cmp = -1
        else:
            cmp = 0
            for i in range(L):
                if cur[i] != best[i]:
                    cmp = -1 if cur[i] < best[i] else 1
                    break
        if cmp < 0:
            for i in range(L):
                best[i] = cur[i]
            best_idx = t
    return tuple(best_a.tolist()), int(best_idx)


cdef inline uint64_t _pack(uint8_t[:, ::1] E, Py_ssize_t i, Py_ssize_t n):
    cdef uint64_t key = 0
    cdef Py_ssize_t v
    for v in range(n):
        key |= (<uint64_t>E[i, v]) << (4 * v)
    return key


cdef inline int _divides_key(uint8_t[:, ::1] E, Py_ssize_t k, uint8_t* w, Py_ssize_t n):
    cdef Py_ssize_t v
    for v in range(n):
        if E[k, v] > w[v]:
            return 0
    return 1


def _pair_groups(uint8_t[:, ::1] E):
    """Pair lcm keys, pair indices and a stable sort order grouping equal lcms."""
    cdef Py_ssize_t m = E.shape[0], n = E.shape[1]
    cdef Py_ssize_t P = m * (m - 1) // 2
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] keys_a = np.empty(P, dtype=np.uint64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] pi_a = np.empty(P, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] pj_a = np.empty(P, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] deg_a = np.empty(P, dtype=np.int32)
    cdef uint64_t[::1] keys = keys_a
    cdef int32_t[::1] pi = pi_a
    cdef int32_t[::1] pj = pj_a
    cdef int32_t[::1] dg = deg_a
    cdef Py_ssize_t i, j, v, t = 0
    cdef uint64_t key
    cdef int deg
    cdef uint8_t a, b
    for i in range(m):
        for j in range(i + 1, m):
            key = 0
            deg = 0
            for v in range(n):
                a = E[i, v]
                b = E[j, v]
                if b > a:
                    a = b
                key |= (<uint64_t>a) << (4 * v)
                deg += a
            keys[t] = key
            pi[t] = <int32_t>i
            pj[t] = <int32_t>j
            dg[t] = deg
            t += 1
    order = np.argsort(keys_a, kind="stable").astype(np.int64)
    return keys_a, pi_a, pj_a, deg_a, order


def lp_sweep(rows, int d):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] E_a = np.ascontiguousarray(rows, dtype=np.uint8)
    cdef uint8_t[:, ::1] E = E_a
    cdef Py_ssize_t m = E.shape[0], n = E.shape[1]
    if m < 2:
        return None
    keys_a, pi_a, pj_a, deg_a, order_a = _pair_groups(E)
    cdef uint64_t[::1] keys = keys_a
    cdef int32_t[::1] pi = pi_a
    cdef int32_t[::1] pj = pj_a
    cdef int32_t[::1] dg = deg_a
    cdef int64_t[::1] order = order_a
    cdef Py_ssize_t P = keys.shape[0]
    cdef Py_ssize_t s, e, t, k, v, x, y, head, tail, nd

    # adjacency (CSR) of the generator graph: lcm degree d + 1
    cdef cnp.ndarray[cnp.int32_t, ndim=1] cnt_a = np.zeros(m + 1, dtype=np.int32)
    cdef int32_t[::1] cnt = cnt_a
    for t in range(P):
        if dg[t] == d + 1:
            cnt[pi[t] + 1] += 1
            cnt[pj[t] + 1] += 1
    for k in range(m):
        cnt[k + 1] += cnt[k]
    cdef cnp.ndarray[cnp.int32_t, ndim=1] adj_a = np.empty(max(1, cnt[m]), dtype=np.int32)
    cdef int32_t[::1] adj = adj_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] fill_a = cnt_a[:m].copy()
    cdef int32_t[::1] fill = fill_a
    for t in range(P):
        if dg[t] == d + 1:
            adj[fill[pi[t]]] = pj[t]
            fill[pi[t]] += 1
            adj[fill[pj[t]]] = pi[t]
            fill[pj[t]] += 1

    cdef cnp.ndarray[cnp.int64_t, ndim=1] stamp_a = np.zeros(m, dtype=np.int64)
    cdef int64_t[::1] stamp = stamp_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] comp_a = np.zeros(m, dtype=np.int32)
    cdef int32_t[::1] comp = comp_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] queue_a = np.zeros(m, dtype=np.int32)
    cdef int32_t[::1] queue = queue_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] dl_a = np.zeros(m, dtype=np.int32)
    cdef int32_t[::1] dlist = dl_a
    cdef uint8_t w[16]
    cdef int64_t cur_stamp = 0
    cdef int label
    cdef long long best = -1, code
    cdef uint64_t key

    s = 0
    while s < P:
        key = keys[order[s]]
        e = s
        while e < P and keys[order[e]] == key:
            e += 1
        if dg[order[s]] != d + 1:
            for v in range(n):
                w[v] = (key >> (4 * v)) & 15
            cur_stamp += 1
            nd = 0
            for k in range(m):
                if _divides_key(E, k, w, n):
                    stamp[k] = cur_stamp
                    comp[k] = -1
                    dlist[nd] = <int32_t>k
                    nd += 1
            label = 0
            for x in range(nd):
                k = dlist[x]
                if comp[k] >= 0:
                    continue
                comp[k] = label
                head = 0
                tail = 0
                queue[tail] = <int32_t>k
                tail += 1
                while head < tail:
                    y = queue[head]
                    head += 1
                    for t in range(cnt[y], cnt[y + 1]):
                        v = adj[t]
                        if stamp[v] == cur_stamp and comp[v] < 0:
                            comp[v] = label
                            queue[tail] = <int32_t>v
                            tail += 1
                label += 1
            if label > 1:
                for t in range(s, e):
                    if comp[pi[order[t]]] != comp[pj[order[t]]]:
                        code = <long long>pi[order[t]] * m + pj[order[t]]
                        if best < 0 or code < best:
                            best = code
                        break
        s = e
    if best < 0:
        return None
    return (int(best // m), int(best % m))


def beta1_sweep(rows):
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] E_a = np.ascontiguousarray(rows, dtype=np.uint8)
    cdef uint8_t[:, ::1] E = E_a
    cdef Py_ssize_t m = E.shape[0], n = E.shape[1]
    out = {}
    if m < 2:
        return out
    keys_a, pi_a, pj_a, deg_a, order_a = _pair_groups(E)
    cdef uint64_t[::1] keys = keys_a
    cdef int32_t[::1] pi = pi_a
    cdef int32_t[::1] pj = pj_a
    cdef int64_t[::1] order = order_a
    cdef Py_ssize_t P = keys.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] blk_a = np.zeros(m * m, dtype=np.uint8)
    cdef uint8_t[::1] blk = blk_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] un_a = np.zeros(m, dtype=np.int32)
    cdef int32_t[::1] unv = un_a
    cdef cnp.ndarray[cnp.int32_t, ndim=1] st_a = np.zeros(m, dtype=np.int32)
    cdef int32_t[::1] stack = st_a
    cdef uint8_t w[16]
    cdef Py_ssize_t s, e, t, k, v, nu, sp, x, y, idx, comps
    cdef uint64_t key
    s = 0
    while s < P:
        key = keys[order[s]]
        e = s
        while e < P and keys[order[e]] == key:
            e += 1
        for v in range(n):
            w[v] = (key >> (4 * v)) & 15
        for t in range(s, e):
            blk[pi[order[t]] * m + pj[order[t]]] = 1
            blk[pj[order[t]] * m + pi[order[t]]] = 1
        nu = 0
        for k in range(m):
            if _divides_key(E, k, w, n):
                unv[nu] = <int32_t>k
                nu += 1
        comps = 0
        while nu > 0:
            comps += 1
            nu -= 1
            sp = 0
            stack[sp] = unv[nu]
            sp += 1
            while sp > 0:
                sp -= 1
                x = stack[sp]
                idx = 0
                while idx < nu:
                    y = unv[idx]
                    if blk[x * m + y] == 0:
                        stack[sp] = <int32_t>y
                        sp += 1
                        nu -= 1
                        unv[idx] = unv[nu]
                    else:
                        idx += 1
        for t in range(s, e):
            blk[pi[order[t]] * m + pj[order[t]]] = 0
            blk[pj[order[t]] * m + pi[order[t]]] = 0
        if comps > 1:
            wl = []
            for v in range(n):
                wl.append(int(w[v]))
            out[tuple(wl)] = int(comps - 1)
        s = e
    return out


def window_hit(member, windows, table):
    cdef const uint8_t[::1] mem = np.ascontiguousarray(member, dtype=np.uint8)
    cdef const int32_t[:, ::1] win = np.ascontiguousarray(windows, dtype=np.int32)
    cdef const uint8_t[::1] tab = np.ascontiguousarray(table, dtype=np.uint8)
    cdef Py_ssize_t w, b, W = win.shape[0], T = win.shape[1]
    cdef Py_ssize_t key
    for w in range(W):
        key = 0
        for b in range(T):
            if mem[win[w, b]]:
                key |= (<Py_ssize_t>1) << b
        if tab[key]:
            return w
    return -1
