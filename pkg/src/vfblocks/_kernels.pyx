# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.  Mirrors ``_kernels_py`` exactly."""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXR = 32


cdef struct LRState:
    int R
    int L
    int shape[MAXR]
    int mu[MAXR]
    int counts[MAXR][MAXR]


cdef void _emit(LRState* st, dict out):
    key = tuple([st.shape[j] for j in range(st.R)])
    out[key] = out.get(key, 0) + 1


cdef void _place_letter(LRState* st, int t, dict out):
    cdef int prev[MAXR]
    cdef int j
    if t == st.L:
        _emit(st, out)
        return
    for j in range(st.R):
        prev[j] = st.shape[j]
    _place_row(st, t, t, st.mu[t], prev, 0, out)


cdef void _place_row(LRState* st, int t, int j, int remaining, int* prev,
                     int cum, dict out):
    cdef int cap, above, jj, x
    if remaining == 0:
        _place_letter(st, t + 1, out)
        return
    if j >= st.R:
        return
    cap = remaining
    if j > 0 and prev[j - 1] - prev[j] < cap:
        cap = prev[j - 1] - prev[j]
    if t > 0:
        above = 0
        for jj in range(j):
            above += st.counts[t - 1][jj]
        if above - cum < cap:
            cap = above - cum
    if cap < 0:
        cap = 0
    x = cap
    while x >= 0:
        st.shape[j] += x
        st.counts[t][j] = x
        _place_row(st, t, j + 1, remaining - x, prev, cum + x, out)
        st.shape[j] -= x
        st.counts[t][j] = 0
        x -= 1


def lr_expand(lam, mu, int maxrows):
    cdef LRState* st
    cdef int i, j
    lam_l = [p for p in lam if p > 0]
    mu_l = [p for p in mu if p > 0]
    if len(lam_l) > maxrows or len(mu_l) > maxrows:
        return {}
    if maxrows > MAXR:
        raise ValueError("maxrows too large for compiled kernel")
    if not mu_l:
        return {tuple(lam_l + [0] * (maxrows - len(lam_l))): 1}
    st = <LRState*> malloc(sizeof(LRState))
    if st == NULL:
        raise MemoryError()
    try:
        st.R = maxrows
        st.L = len(mu_l)
        for j in range(maxrows):
            st.shape[j] = lam_l[j] if j < len(lam_l) else 0
        for i in range(st.L):
            st.mu[i] = mu_l[i]
            for j in range(maxrows):
                st.counts[i][j] = 0
        out = {}
        _place_letter(st, 0, out)
        return out
    finally:
        free(st)


def fold_to_alcove(parts, int k):
    cdef int r = len(parts)
    cdef int a[MAXR]
    cdef int i, j, tmp, sign, gap, last
    if r > MAXR:
        raise ValueError("rank too large for compiled kernel")
    for i in range(r):
        a[i] = parts[i] + (r - 1 - i)
    sign = 1
    while True:
        for i in range(1, r):
            j = i
            while j > 0 and a[j - 1] < a[j]:
                tmp = a[j - 1]
                a[j - 1] = a[j]
                a[j] = tmp
                sign = -sign
                j -= 1
            if j > 0 and a[j - 1] == a[j]:
                return 0, None
        gap = a[0] - a[r - 1]
        if gap < k:
            break
        if gap == k:
            return 0, None
        tmp = a[0]
        a[0] = a[r - 1] + k
        a[r - 1] = tmp - k
        sign = -sign
    last = a[r - 1]
    return sign, tuple([a[i] - (r - 1 - i) - last for i in range(r)])
