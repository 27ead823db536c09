# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels over uint64 masks; contract-identical to the pure twin.

Carriers are capped at 64 elements.  The dispatcher routes wider carriers
to the pure backend, so no function here needs arbitrary-width masks.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc
from libc.stdint cimport int8_t, uint64_t


cdef extern from *:
    """
    #if defined(_MSC_VER)
    #include <intrin.h>
    static __inline int ordalg_ctz64(unsigned long long x) {
        unsigned long i;
        _BitScanForward64(&i, x);
        return (int)i;
    }
    #else
    static __inline int ordalg_ctz64(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    #endif
    """
    int ordalg_ctz64(unsigned long long x) nogil


cdef inline int _least(uint64_t mask, uint64_t *up) nogil:
    cdef uint64_t m = mask
    cdef uint64_t low
    cdef int x
    while m:
        low = m & (~m + 1)
        x = ordalg_ctz64(low)
        if mask & ~up[x] == 0:
            return x
        m ^= low
    return -1


cdef inline int _greatest(uint64_t mask, uint64_t *down) nogil:
    cdef uint64_t m = mask
    cdef uint64_t low
    cdef int x
    while m:
        low = m & (~m + 1)
        x = ordalg_ctz64(low)
        if mask & ~down[x] == 0:
            return x
        m ^= low
    return -1


cdef int _fill_masks(int n, object seq, uint64_t *out) except -1:
    cdef int i
    for i in range(n):
        out[i] = <uint64_t> seq[i]
    return 0


cdef int _fill_table(int n, object seq, int *out) except -1:
    cdef int i
    for i in range(n * n):
        out[i] = <int> seq[i]
    return 0


def closure(int n, up):
    """Reflexive-transitive closure of an up-mask adjacency."""
    cdef uint64_t buf[64]
    cdef int i, k
    cdef uint64_t bk, row
    _fill_masks(n, up, buf)
    for i in range(n):
        buf[i] |= (<uint64_t> 1) << i
    for k in range(n):
        bk = (<uint64_t> 1) << k
        row = buf[k]
        for i in range(n):
            if buf[i] & bk:
                buf[i] |= row
    return [buf[i] for i in range(n)]


def lattice_tables(int n, up, down):
    """Flat (join, meet) tables, or None if some pair lacks a lub or glb."""
    cdef uint64_t ub[64]
    cdef uint64_t db[64]
    cdef int i, j, m
    _fill_masks(n, up, ub)
    _fill_masks(n, down, db)
    join = [0] * (n * n)
    meet = [0] * (n * n)
    for i in range(n):
        for j in range(i, n):
            m = _least(ub[i] & ub[j], ub)
            if m < 0:
                return None
            join[i * n + j] = m
            join[j * n + i] = m
            m = _greatest(db[i] & db[j], db)
            if m < 0:
                return None
            meet[i * n + j] = m
            meet[j * n + i] = m
    return join, meet


def poset_star_table(int n, up, down):
    """Sectional pseudocomplement table for a poset; -1 marks undefined cells.

    Same construction as the pure twin: the candidate is the minimum of
    the intersection of the U(c, b) over qualifying c, then verified.
    """
    cdef uint64_t ub[64]
    cdef uint64_t db[64]
    cdef int a, b, c, d, x, y
    cdef uint64_t full, s, acc, m, low, lu_ab, lb, t
    cdef uint64_t *lu
    _fill_masks(n, up, ub)
    _fill_masks(n, down, db)
    full = (<uint64_t> 0xFFFFFFFFFFFFFFFF) >> (64 - n)
    lu = <uint64_t *> PyMem_Malloc(n * n * sizeof(uint64_t))
    if lu == NULL:
        raise MemoryError()
    try:
        for x in range(n):
            for y in range(x, n):
                s = ub[x] & ub[y]
                acc = full
                m = s
                while m:
                    low = m & (~m + 1)
                    acc &= db[ordalg_ctz64(low)]
                    m ^= low
                lu[x * n + y] = acc
                lu[y * n + x] = acc
        star = [-1] * (n * n)
        for a in range(n):
            for b in range(n):
                lu_ab = lu[a * n + b]
                lb = db[b]
                t = full
                for c in range(n):
                    if lu_ab & lu[c * n + b] == lb:
                        t &= ub[c] & ub[b]
                d = _least(t, ub)
                if d >= 0 and (db[d] >> b) & 1 and lu_ab & db[d] == lb:
                    star[a * n + b] = d
        return star
    finally:
        PyMem_Free(lu)


def rrl_scan(int n, up, int top, join, mult, imp):
    """Axiom scan for a residuation candidate; returns a bitmask of failures.

    bit 0: commutative groupoid with unit, bit 1: monotone multiplication,
    bit 2: adjointness forward, bit 3: adjointness backward.
    """
    cdef uint64_t ub[64]
    cdef int jt[4096]
    cdef int mt[4096]
    cdef int it[4096]
    cdef int bits = 0
    cdef int a, b, c, ab, cb, iab
    cdef bint lhs, rhs
    cdef uint64_t ua
    _fill_masks(n, up, ub)
    _fill_table(n, join, jt)
    _fill_table(n, mult, mt)
    _fill_table(n, imp, it)
    for a in range(n):
        if mt[top * n + a] != a:
            bits |= 1
        for b in range(n):
            if mt[a * n + b] != mt[b * n + a]:
                bits |= 1
    for a in range(n):
        ua = ub[a]
        for b in range(n):
            if (ua >> b) & 1 and a != b:
                for c in range(n):
                    if not (ub[mt[a * n + c]] >> mt[b * n + c]) & 1:
                        bits |= 2
                    if not (ub[mt[c * n + a]] >> mt[c * n + b]) & 1:
                        bits |= 2
    for a in range(n):
        for b in range(n):
            ab = jt[a * n + b]
            iab = it[a * n + b]
            for c in range(n):
                cb = jt[c * n + b]
                lhs = (ub[mt[ab * n + cb]] >> b) & 1
                rhs = (ub[cb] >> iab) & 1
                if lhs and not rhs:
                    bits |= 4
                elif rhs and not lhs:
                    bits |= 8
    return bits


def divisibility_scan(int n, join, mult, imp):
    """True when (x v y) * (x -> y) = y for every pair."""
    cdef int jt[4096]
    cdef int mt[4096]
    cdef int it[4096]
    cdef int x, y
    _fill_table(n, join, jt)
    _fill_table(n, mult, mt)
    _fill_table(n, imp, it)
    for x in range(n):
        for y in range(n):
            if mt[jt[x * n + y] * n + it[x * n + y]] != y:
                return False
    return True


cdef uint64_t _pack(int n, uint64_t *up) nogil:
    cdef uint64_t packed = 0
    cdef int i
    for i in range(n):
        packed |= up[i] << (8 * i)
    return packed


cdef bint _enum_prune(int n, int i, uint64_t *up, uint64_t *down) nogil:
    # every new pair keeps a glb, and every pair now under i still has
    # a unique minimal common upper bound
    cdef uint64_t di = down[i]
    cdef uint64_t m1, m2, low1, low2
    cdef int j, k
    for j in range(i):
        if _greatest(di & down[j], down) < 0:
            return False
    m1 = di & ~((<uint64_t> 1) << i)
    while m1:
        low1 = m1 & (~m1 + 1)
        j = ordalg_ctz64(low1)
        m1 ^= low1
        m2 = m1
        while m2:
            low2 = m2 & (~m2 + 1)
            k = ordalg_ctz64(low2)
            m2 ^= low2
            if _least(up[j] & up[k], up) < 0:
                return False
    return True


cdef bint _enum_complete(int n, uint64_t *up, uint64_t *down) nogil:
    cdef int j, k
    cdef uint64_t u
    for j in range(n):
        for k in range(j + 1, n):
            u = up[j] & up[k]
            if u == 0 or _least(u, up) < 0:
                return False
            if _greatest(down[j] & down[k], down) < 0:
                return False
    return True


cdef void _enum_rec(int n, int i, bint lattices_only,
                    uint64_t *up, uint64_t *down, list out):
    cdef uint64_t bi, s, m, low
    cdef bint ok
    if i == n:
        if not lattices_only or _enum_complete(n, up, down):
            out.append(_pack(n, up))
        return
    bi = (<uint64_t> 1) << i
    for s in range(<uint64_t> 1 << i):
        # s must be a down-closed subset of the earlier elements
        ok = True
        m = s
        while m:
            low = m & (~m + 1)
            if down[ordalg_ctz64(low)] & ~s:
                ok = False
                break
            m ^= low
        if not ok:
            continue
        down[i] = s | bi
        up[i] = bi
        m = s
        while m:
            low = m & (~m + 1)
            up[ordalg_ctz64(low)] |= bi
            m ^= low
        if not lattices_only or _enum_prune(n, i, up, down):
            _enum_rec(n, i + 1, lattices_only, up, down, out)
        m = s
        while m:
            low = m & (~m + 1)
            up[ordalg_ctz64(low)] &= ~bi
            m ^= low
    down[i] = 0
    up[i] = 0


def enum_orders(int n, bint lattices_only):
    """Packed order matrices of all naturally labeled posets on n points.

    Same search as the pure twin; one uint64 per poset, row i in bits
    8i..8i+n.
    """
    if not 1 <= n <= 8:
        raise ValueError("enum_orders supports 1 <= n <= 8")
    cdef uint64_t up[8]
    cdef uint64_t down[8]
    cdef int i
    for i in range(n):
        up[i] = 0
        down[i] = 0
    out = []
    _enum_rec(n, 0, lattices_only, up, down, out)
    return out


def subset_l_table(int n, down):
    """Lower-bound masks L(A) for every subset mask A; L(empty) is everything."""
    if n > 16:
        raise ValueError("subset_l_table supports n <= 16")
    cdef uint64_t db[16]
    cdef uint64_t full
    cdef uint64_t *tab
    cdef uint64_t a, size, low
    _fill_masks(n, down, db)
    full = (<uint64_t> 0xFFFFFFFFFFFFFFFF) >> (64 - n)
    size = (<uint64_t> 1) << n
    tab = <uint64_t *> PyMem_Malloc(size * sizeof(uint64_t))
    if tab == NULL:
        raise MemoryError()
    try:
        tab[0] = full
        for a in range(1, size):
            low = a & (~a + 1)
            tab[a] = tab[a ^ low] & db[ordalg_ctz64(low)]
        return [tab[a] for a in range(size)]
    finally:
        PyMem_Free(tab)


def canon_subset_scan(int n, ltab, int top):
    """Commutativity and unit laws of the canonical subset product, all subsets."""
    cdef uint64_t size = (<uint64_t> 1) << n
    cdef uint64_t tbit = (<uint64_t> 1) << top
    cdef uint64_t a, b
    cdef uint64_t *tab
    cdef bint ok = True
    tab = <uint64_t *> PyMem_Malloc(size * sizeof(uint64_t))
    if tab == NULL:
        raise MemoryError()
    try:
        for a in range(size):
            tab[a] = <uint64_t> ltab[a]
        for a in range(size):
            if tab[a | tbit] != tab[a]:
                ok = False
                break
        if ok:
            with nogil:
                for a in range(size):
                    for b in range(size):
                        if tab[a | b] != tab[b | a]:
                            ok = False
                            break
                    if not ok:
                        break
        return bool(ok)
    finally:
        PyMem_Free(tab)
