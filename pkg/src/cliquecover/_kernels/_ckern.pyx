# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: cdivision=True
"""Compiled kernels: blossom matching over CSR adjacency plus bitset-based
reduction and forbidden-subgraph scans.

Scan orders mirror ``_kernels.pure`` exactly; the two backends must return
identical values, not merely equivalent ones.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_ctzll(unsigned long long)


# ---------------------------------------------------------------------------
# bitset helpers

cdef inline bint _test_bit(u64* row, int u) noexcept:
    return (row[u >> 6] >> (u & 63)) & 1

cdef u64* _build_rows(int n, int[:] iptr, int[:] iidx, Py_ssize_t words) except NULL:
    cdef u64* rows = <u64*>malloc(<size_t>n * words * sizeof(u64))
    if rows == NULL:
        raise MemoryError()
    memset(rows, 0, <size_t>n * words * sizeof(u64))
    cdef int v, j, u
    for v in range(n):
        for j in range(iptr[v], iptr[v + 1]):
            u = iidx[j]
            rows[v * words + (u >> 6)] |= (<u64>1) << (u & 63)
    return rows

cdef inline int _first_bit_above(u64* row, Py_ssize_t words, int floor) noexcept:
    """Smallest set bit strictly greater than floor, or -1."""
    cdef Py_ssize_t i = (floor + 1) >> 6
    cdef int off = (floor + 1) & 63
    cdef u64 w
    if i >= words:
        return -1
    w = row[i]
    if off:
        w &= (<u64>0xFFFFFFFFFFFFFFFF) << off
    while True:
        if w:
            return <int>(i << 6) + __builtin_ctzll(w)
        i += 1
        if i >= words:
            return -1
        w = row[i]


# ---------------------------------------------------------------------------
# maximum matching (Edmonds blossom)

cdef int _lca(int* match_, int* p, int* base, unsigned char* seen, int n,
              int a, int b) noexcept:
    memset(seen, 0, n)
    cdef int x = a, y = b
    while True:
        x = base[x]
        seen[x] = 1
        if match_[x] == -1:
            break
        x = p[match_[x]]
    while True:
        y = base[y]
        if seen[y]:
            return y
        y = p[match_[y]]

cdef void _mark_path(int* match_, int* p, int* base, unsigned char* blossom,
                     int v, int b, int child) noexcept:
    while base[v] != b:
        blossom[base[v]] = 1
        blossom[base[match_[v]]] = 1
        p[v] = child
        child = match_[v]
        v = p[match_[v]]

cdef int _find_path(int n, int[:] iptr, int[:] iidx, int* match_, int* p,
                    int* base, unsigned char* used, unsigned char* blossom,
                    unsigned char* seen, int* queue, int root) noexcept:
    cdef int i, j, v, to, curbase, qh, qt
    for i in range(n):
        used[i] = 0
        p[i] = -1
        base[i] = i
    used[root] = 1
    qh = 0
    qt = 0
    queue[qt] = root
    qt += 1
    while qh < qt:
        v = queue[qh]
        qh += 1
        for j in range(iptr[v], iptr[v + 1]):
            to = iidx[j]
            if base[v] == base[to] or match_[v] == to:
                continue
            if to == root or (match_[to] != -1 and p[match_[to]] != -1):
                curbase = _lca(match_, p, base, seen, n, v, to)
                memset(blossom, 0, n)
                _mark_path(match_, p, base, blossom, v, curbase, to)
                _mark_path(match_, p, base, blossom, to, curbase, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = curbase
                        if not used[i]:
                            used[i] = 1
                            queue[qt] = i
                            qt += 1
            elif p[to] == -1:
                p[to] = v
                if match_[to] == -1:
                    return to
                used[match_[to]] = 1
                queue[qt] = match_[to]
                qt += 1
    return -1


def max_matching(int n, int[:] indptr, int[:] indices):
    """Match array (-1 for exposed), identical to the pure kernel's."""
    cdef list out = []
    cdef int* match_
    cdef int* p
    cdef int* base
    cdef int* queue
    cdef unsigned char* used
    cdef unsigned char* blossom
    cdef unsigned char* seen
    cdef int v, j, u, root, pv, ppv
    if n == 0:
        return out
    match_ = <int*>malloc(4 * n * sizeof(int))
    used = <unsigned char*>malloc(3 * <size_t>n)
    if match_ == NULL or used == NULL:
        free(match_); free(used)
        raise MemoryError()
    p = match_ + n
    base = match_ + 2 * n
    queue = match_ + 3 * n
    blossom = used + n
    seen = used + 2 * n
    for v in range(n):
        match_[v] = -1
    for v in range(n):
        if match_[v] == -1:
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                if match_[u] == -1:
                    match_[v] = u
                    match_[u] = v
                    break
    for root in range(n):
        if match_[root] == -1:
            v = _find_path(n, indptr, indices, match_, p, base, used,
                           blossom, seen, queue, root)
            while v != -1:
                pv = p[v]
                ppv = match_[pv]
                match_[v] = pv
                match_[pv] = v
                v = ppv
    for v in range(n):
        out.append(match_[v])
    free(match_)
    free(used)
    return out


# ---------------------------------------------------------------------------
# reduction sweep

def reduce_trace(int n, int[:] indptr, int[:] indices):
    """(dominators, witnesses) in removal order; scan restarts at vertex 0
    after each removal."""
    cdef list doms = []
    cdef list wits = []
    if n == 0:
        return doms, wits
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef u64* rows = _build_rows(n, indptr, indices, words)
    cdef unsigned char* alive = <unsigned char*>malloc(n)
    if alive == NULL:
        free(rows)
        raise MemoryError()
    memset(alive, 1, n)
    cdef int x, y, w, xw, found_x, found_y
    cdef Py_ssize_t i
    cdef u64 t
    cdef u64* rx
    cdef u64* ry
    cdef bint dominated
    try:
        while True:
            found_x = -1
            found_y = -1
            for x in range(n):
                if not alive[x]:
                    continue
                rx = rows + x * words
                y = _first_bit_above(rx, words, -1)
                while y != -1:
                    ry = rows + y * words
                    dominated = True
                    xw = x >> 6
                    for i in range(words):
                        t = ry[i] & ~rx[i]
                        if i == xw:
                            t &= ~((<u64>1) << (x & 63))
                        if t:
                            dominated = False
                            break
                    if dominated:
                        found_x = x
                        found_y = y
                        break
                    y = _first_bit_above(rx, words, y)
                if found_x != -1:
                    break
            if found_x == -1:
                break
            doms.append(found_x)
            wits.append(found_y)
            x = found_x
            rx = rows + x * words
            w = _first_bit_above(rx, words, -1)
            while w != -1:
                rows[w * words + (x >> 6)] &= ~((<u64>1) << (x & 63))
                w = _first_bit_above(rx, words, w)
            memset(rx, 0, words * sizeof(u64))
            alive[x] = 0
    finally:
        free(rows)
        free(alive)
    return doms, wits


# ---------------------------------------------------------------------------
# forbidden-subgraph scans

def find_triangle(int n, int[:] indptr, int[:] indices):
    """Lexicographically first triangle (u < v < w), or None."""
    if n == 0:
        return None
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef u64* rows = _build_rows(n, indptr, indices, words)
    cdef u64* tmp = <u64*>malloc(words * sizeof(u64))
    if tmp == NULL:
        free(rows)
        raise MemoryError()
    cdef int u, v, w, j
    cdef Py_ssize_t i
    try:
        for u in range(n):
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if v <= u:
                    continue
                for i in range(words):
                    tmp[i] = rows[u * words + i] & rows[v * words + i]
                w = _first_bit_above(tmp, words, v)
                if w != -1:
                    return (u, v, w)
        return None
    finally:
        free(rows)
        free(tmp)


def find_c4(int n, int[:] indptr, int[:] indices):
    """First induced 4-cycle in scan order, as (u, a, w, b) cycle order."""
    if n == 0:
        return None
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef u64* rows = _build_rows(n, indptr, indices, words)
    cdef u64* common = <u64*>malloc(2 * words * sizeof(u64))
    if common == NULL:
        free(rows)
        raise MemoryError()
    cdef u64* left = common + words
    cdef int u, w, a, b
    cdef Py_ssize_t i
    cdef u64* ru
    cdef u64* ra
    cdef bint any_common
    try:
        for u in range(n):
            ru = rows + u * words
            for w in range(u + 1, n):
                if _test_bit(ru, w):
                    continue
                any_common = False
                for i in range(words):
                    common[i] = ru[i] & rows[w * words + i]
                    if common[i]:
                        any_common = True
                if not any_common:
                    continue
                a = _first_bit_above(common, words, -1)
                while a != -1:
                    common[a >> 6] &= ~((<u64>1) << (a & 63))
                    ra = rows + a * words
                    for i in range(words):
                        left[i] = common[i] & ~ra[i]
                    b = _first_bit_above(left, words, -1)
                    if b != -1:
                        return (u, a, w, b)
                    a = _first_bit_above(common, words, a)
        return None
    finally:
        free(rows)
        free(common)


def find_bull(int n, int[:] indptr, int[:] indices):
    """First induced bull (a, b, c, p, q) in triangle/attachment scan order."""
    if n == 0:
        return None
    cdef Py_ssize_t words = (n + 63) >> 6
    cdef u64* rows = _build_rows(n, indptr, indices, words)
    cdef u64* buf = <u64*>malloc(4 * words * sizeof(u64))
    if buf == NULL:
        free(rows)
        raise MemoryError()
    cdef u64* tri_common = buf
    cdef u64* cand_a = buf + words
    cdef u64* cand_b = buf + 2 * words
    cdef u64* scratch = buf + 3 * words
    cdef int u, v, w, j, w2, a, b, c, pv, q, t0, t1, t2
    cdef Py_ssize_t i
    cdef u64 excl
    cdef bint nonempty
    try:
        for u in range(n):
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if v <= u:
                    continue
                for i in range(words):
                    tri_common[i] = rows[u * words + i] & rows[v * words + i]
                w2 = _first_bit_above(tri_common, words, v)
                while w2 != -1:
                    w = w2
                    for t0 in range(3):
                        if t0 == 0:
                            a = u; b = v; c = w
                        elif t0 == 1:
                            a = u; b = w; c = v
                        else:
                            a = v; b = w; c = u
                        nonempty = False
                        for i in range(words):
                            cand_a[i] = (rows[a * words + i]
                                         & ~rows[b * words + i]
                                         & ~rows[c * words + i])
                        cand_a[a >> 6] &= ~((<u64>1) << (a & 63))
                        cand_a[b >> 6] &= ~((<u64>1) << (b & 63))
                        cand_a[c >> 6] &= ~((<u64>1) << (c & 63))
                        for i in range(words):
                            if cand_a[i]:
                                nonempty = True
                                break
                        if not nonempty:
                            continue
                        for i in range(words):
                            cand_b[i] = (rows[b * words + i]
                                         & ~rows[a * words + i]
                                         & ~rows[c * words + i])
                        cand_b[a >> 6] &= ~((<u64>1) << (a & 63))
                        cand_b[b >> 6] &= ~((<u64>1) << (b & 63))
                        cand_b[c >> 6] &= ~((<u64>1) << (c & 63))
                        pv = _first_bit_above(cand_a, words, -1)
                        while pv != -1:
                            for i in range(words):
                                scratch[i] = cand_b[i] & ~rows[pv * words + i]
                            q = _first_bit_above(scratch, words, -1)
                            if q != -1:
                                return (a, b, c, pv, q)
                            pv = _first_bit_above(cand_a, words, pv)
                    w2 = _first_bit_above(tri_common, words, w2)
        return None
    finally:
        free(rows)
        free(buf)
