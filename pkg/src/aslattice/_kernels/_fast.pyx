# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitmask kernels; semantics match ``pure.py`` exactly."""

from libc.stdint cimport uint64_t

BACKEND = "compiled"


def transitive_closure(up):
    cdef int n = len(up)
    cdef uint64_t rows[64]
    cdef int i, k
    cdef uint64_t bit, row_k
    if n > 64:
        raise ValueError("at most 64 elements supported")
    for i in range(n):
        rows[i] = up[i]
    for k in range(n):
        bit = (<uint64_t>1) << k
        row_k = rows[k]
        for i in range(n):
            if rows[i] & bit:
                rows[i] |= row_k
        row_k = rows[k]
    return [rows[i] for i in range(n)]


cdef int _popcount(uint64_t x):
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


def enumerate_ideal_masks(down, cap):
    cdef int n = len(down)
    cdef uint64_t dn[64]
    cdef uint64_t stack_cur[65]
    cdef int stack_j[65]
    cdef int stack_state[65]
    cdef int sp, j, state
    cdef uint64_t cur
    cdef Py_ssize_t capacity = cap
    if n > 64:
        raise ValueError("at most 64 elements supported")
    cdef int i
    for i in range(n):
        dn[i] = down[i]
    out = []
    # Explicit-stack DFS: state 0 = try excluding element j, 1 = try including.
    sp = 0
    stack_j[0] = 0
    stack_cur[0] = 0
    stack_state[0] = 0
    while sp >= 0:
        j = stack_j[sp]
        cur = stack_cur[sp]
        state = stack_state[sp]
        if j == n:
            out.append(cur)
            if len(out) > capacity:
                raise ValueError("ideal count exceeds capacity bound")
            sp -= 1
            continue
        if state == 0:
            stack_state[sp] = 1
            sp += 1
            stack_j[sp] = j + 1
            stack_cur[sp] = cur
            stack_state[sp] = 0
        elif state == 1:
            stack_state[sp] = 2
            if dn[j] & ~(cur | ((<uint64_t>1) << j)) == 0:
                sp += 1
                stack_j[sp] = j + 1
                stack_cur[sp] = cur | ((<uint64_t>1) << j)
                stack_state[sp] = 0
        else:
            sp -= 1
    out.sort(key=_ideal_sort_key)
    return out


def _ideal_sort_key(m):
    return (m.bit_count(), m)


cdef struct _KeyState:
    int n
    uint64_t lt[8]
    uint64_t pred[8]
    unsigned char best[8]
    unsigned char cols[8]
    int placed[8]


cdef void _dfs(_KeyState *st, uint64_t placed_mask, int pos, bint equal):
    cdef int ncand, ci, t, v
    cdef unsigned char code
    cdef uint64_t m, full, seen_lt[8]
    cdef unsigned char cand_code[8]
    cdef int cand_v[8]
    cdef unsigned char seen_code[8]
    cdef int nseen = 0
    cdef bint dup, sub_equal
    cdef int i
    if pos == st.n:
        for i in range(st.n):
            if st.cols[i] < st.best[i]:
                for t in range(st.n):
                    st.best[t] = st.cols[t]
                return
            elif st.cols[i] > st.best[i]:
                return
        return
    full = ((<uint64_t>1) << st.n) - 1
    ncand = 0
    m = full & ~placed_mask
    while m:
        v = 0
        while not (m >> v) & 1:
            v += 1
        m &= m - 1
        if st.pred[v] & ~placed_mask == 0:
            code = 0
            for t in range(pos):
                if (st.lt[st.placed[t]] >> v) & 1:
                    code |= <unsigned char>(1 << t)
            # insertion sort by (code, v); v ascends already
            ci = ncand
            while ci > 0 and cand_code[ci - 1] > code:
                cand_code[ci] = cand_code[ci - 1]
                cand_v[ci] = cand_v[ci - 1]
                ci -= 1
            cand_code[ci] = code
            cand_v[ci] = v
            ncand += 1
    for ci in range(ncand):
        code = cand_code[ci]
        v = cand_v[ci]
        dup = False
        for t in range(nseen):
            if seen_code[t] == code and seen_lt[t] == st.lt[v]:
                dup = True
                break
        if dup:
            continue
        seen_code[nseen] = code
        seen_lt[nseen] = st.lt[v]
        nseen += 1
        if equal:
            if code > st.best[pos]:
                break
            sub_equal = code == st.best[pos]
        else:
            sub_equal = False
        st.placed[pos] = v
        st.cols[pos] = code
        _dfs(st, placed_mask | ((<uint64_t>1) << v), pos + 1, sub_equal)


def canonical_key(n, lt, pred):
    cdef _KeyState st
    cdef int i, pos, v, t, bestv
    cdef unsigned char code, bestcode
    cdef uint64_t placed_mask, m, full
    if n > 8:
        raise ValueError("canonical_key supports at most 8 elements")
    if n == 0:
        return b""
    st.n = n
    for i in range(n):
        st.lt[i] = lt[i]
        st.pred[i] = pred[i]
    full = ((<uint64_t>1) << n) - 1
    # Greedy seed.
    placed_mask = 0
    for pos in range(n):
        bestv = -1
        bestcode = 0
        m = full & ~placed_mask
        while m:
            v = 0
            while not (m >> v) & 1:
                v += 1
            m &= m - 1
            if st.pred[v] & ~placed_mask == 0:
                code = 0
                for t in range(pos):
                    if (st.lt[st.placed[t]] >> v) & 1:
                        code |= <unsigned char>(1 << t)
                if bestv < 0 or code < bestcode:
                    bestv = v
                    bestcode = code
        st.placed[pos] = bestv
        st.best[pos] = bestcode
        placed_mask |= (<uint64_t>1) << bestv
    _dfs(&st, 0, 0, True)
    return bytes([st.best[i] for i in range(n)])
