"""Pure-Python hot kernels: Littlewood-Richardson expansion and alcove folding.

The Cython module ``_kernels`` exposes the same two functions with the same
signatures; :mod:`vfblocks.kernels` picks one at import time.
"""

from __future__ import annotations


def lr_expand(lam, mu, maxrows):
    """Expand ``s_lam * s_mu`` keeping only partitions with <= ``maxrows`` rows.

    Counts LR tableaux of shape ``nu/lam`` and content ``mu`` by placing the
    letters ``1..len(mu)`` one horizontal strip at a time.  Returns a dict
    mapping ``nu`` (a tuple of length ``maxrows``, zero padded) to its
    coefficient.
    """
    R = maxrows
    lam = [p for p in lam if p > 0]
    mu = [p for p in mu if p > 0]
    if len(lam) > R or len(mu) > R:
        return {}
    shape = lam + [0] * (R - len(lam))
    L = len(mu)
    if L == 0:
        return {tuple(shape): 1}
    # counts[t][j]: number of letter t+1 placed in row j
    counts = [[0] * R for _ in range(L)]
    out = {}

    def place_letter(t):
        if t == L:
            key = tuple(shape)
            out[key] = out.get(key, 0) + 1
            return
        prev = shape[:]
        place_row(t, t, mu[t], prev, 0)

    def place_row(t, j, remaining, prev, cum):
        # cum: letters t+1 already placed in rows < j
        if remaining == 0:
            place_letter(t + 1)
            return
        if j >= R:
            return
        cap = remaining
        if j > 0:
            cap = min(cap, prev[j - 1] - prev[j])
        if t > 0:
            above = 0
            row = counts[t - 1]
            for jj in range(j):
                above += row[jj]
            cap = min(cap, above - cum)
        if cap < 0:
            cap = 0
        for x in range(cap, -1, -1):
            if x:
                shape[j] += x
                counts[t][j] = x
            place_row(t, j + 1, remaining - x, prev, cum + x)
            if x:
                shape[j] -= x
                counts[t][j] = 0

    place_letter(0)
    return out


def fold_to_alcove(parts, k):
    """Reduce ``parts + rho`` into the level-``k`` fundamental alcove.

    ``parts`` is a partition with ``r`` entries (zero padded) and ``k`` the
    shifted level ``l + r``.  Returns ``(sign, normalized_parts)``; sign 0
    means the shifted weight lies on a reflecting wall.
    """
    r = len(parts)
    a = [parts[i] + (r - 1 - i) for i in range(r)]
    sign = 1
    while True:
        # finite Weyl group: sort strictly decreasing
        for i in range(1, r):
            j = i
            while j > 0 and a[j - 1] < a[j]:
                a[j - 1], a[j] = a[j], a[j - 1]
                sign = -sign
                j -= 1
            if j > 0 and a[j - 1] == a[j]:
                return 0, None
        gap = a[0] - a[r - 1]
        if gap < k:
            break
        if gap == k:
            return 0, None
        a[0], a[r - 1] = a[r - 1] + k, a[0] - k
        sign = -sign
    last = a[r - 1]
    return sign, tuple(a[i] - (r - 1 - i) - last for i in range(r))
