"""numba kernels for orderly generation of biregular bipartite graphs.

A graph is a non-decreasing sequence of column types: each side-2 vertex is an
``s``-subset of side 1, stored as a bitmask and referenced by its index in the
sorted ``types`` array.  Because columns form a multiset, column permutations
are factored out for free; row permutations are handled by requiring the
multiplicity vector ``cnt`` (indexed by type bitmask) to be lexicographically
maximal, in the comparison order given by ``tops``, under every relabelling of
side 1.  Partial sequences are tested too, which is what makes the generation
orderly.
"""

import numpy as np
import numba as nb

# stats slots
NODES, LEAVES, CONNECTED, EXACT, SMALLER, STORED, ABORTED = range(7)
NSTATS = 7

# output modes
MODE_EXACT = 0      # store leaves with diameter exactly d
MODE_CONNECTED = 1  # store every connected leaf
MODE_ALL = 2        # store every leaf
MODE_PREFIX = 3     # store prefixes reaching stop_depth instead of descending


@nb.njit(cache=True, nogil=True)
def is_canonical(n1, cnt, tops, tops_ptr, img, cand):
    """True iff no relabelling of side 1 yields a lexicographically larger ``cnt``.

    Backtracks over images ``cand[j]`` of side-1 vertex ``j``; ``img[m]`` holds the
    image of mask ``m`` over the vertices fixed so far.  After fixing ``j``, the
    types whose top vertex is ``j`` are fully mapped and can be compared.
    """
    j = 0
    cand[0] = -1
    used = 0
    img[0] = 0
    while j >= 0:
        if cand[j] >= 0:
            used &= ~(1 << cand[j])
        p = cand[j] + 1
        while p < n1 and (used >> p) & 1:
            p += 1
        if p >= n1:
            j -= 1
            continue
        cand[j] = p
        bit = 1 << p
        base = 1 << j
        for m in range(base):
            img[base | m] = img[m] | bit
        res = 0
        for k in range(tops_ptr[j], tops_ptr[j + 1]):
            t = tops[k]
            a = cnt[img[t]]
            b = cnt[t]
            if a != b:
                res = 1 if a > b else -1
                break
        if res > 0:
            return False
        if res == 0 and j + 1 < n1:
            used |= bit
            j += 1
            cand[j] = -1
    return True


@nb.njit(cache=True, nogil=True)
def diameter_capped(n1, n2, types, cols, d, nbr):
    """Diameter of the graph, ``-1`` if disconnected, ``d + 1`` if it exceeds ``d``."""
    n = n1 + n2
    for v in range(n):
        nbr[v] = 0
    for c in range(n2):
        t = types[cols[c]]
        nbr[n1 + c] = t
        for i in range(n1):
            if (t >> i) & 1:
                nbr[i] |= 1 << (n1 + c)
    full = (1 << n) - 1
    best = 0
    for root in range(n):
        seen = 1 << root
        frontier = seen
        ecc = 0
        while seen != full:
            nxt = 0
            m = frontier
            v = 0
            while m:
                if m & 1:
                    nxt |= nbr[v]
                m >>= 1
                v += 1
            nxt &= ~seen
            if nxt == 0:
                return -1
            seen |= nxt
            frontier = nxt
            ecc += 1
            if ecc > d:
                # keep going from the first root only to tell "far" from "disconnected"
                if root > 0:
                    return d + 1
        if ecc > best:
            best = ecc
        if best > d:
            return d + 1
    return best


@nb.njit(cache=True, nogil=True)
def search(n1, n2, r, s, d, types, tops, tops_ptr, prefix, stop_depth, mode, out, limit, stats):
    """Depth-first orderly generation below a fixed column prefix.

    ``prefix`` holds type indices already chosen (a sequence this kernel itself
    accepted).  With ``mode == MODE_PREFIX`` sequences of length ``stop_depth`` are
    written to ``out`` and not extended.  Otherwise completed graphs are
    classified by diameter and, depending on ``mode``, written to ``out``.
    ``stats`` is filled in place; returns when the tree is exhausted or once more
    than ``limit`` nodes have been visited (``stats[ABORTED] = 1``).
    """
    T = types.shape[0]
    cnt = np.zeros(1 << n1, np.int64)
    deg = np.zeros(n1, np.int64)
    cols = np.full(n2, -1, np.int64)
    img = np.zeros(1 << n1, np.int64)
    cand = np.zeros(n1, np.int64)
    nbr = np.zeros(n1 + n2, np.int64)
    for k in range(NSTATS):
        stats[k] = 0
    plen = prefix.shape[0]
    for k in range(plen):
        cols[k] = prefix[k]
        t = types[prefix[k]]
        cnt[t] += 1
        for i in range(n1):
            if (t >> i) & 1:
                deg[i] += 1
    cap = out.shape[0]
    width = out.shape[1]
    if plen == n2:
        # already a complete graph; classify it once
        stats[LEAVES] = 1
        diam = diameter_capped(n1, n2, types, cols, d, nbr)
        if diam >= 0:
            stats[CONNECTED] = 1
            if diam == d:
                stats[EXACT] = 1
            elif diam < d:
                stats[SMALLER] = 1
        return
    k = plen
    nodes = 0
    while k >= plen:
        if cols[k] >= 0:
            t = types[cols[k]]
            cnt[t] -= 1
            for i in range(n1):
                if (t >> i) & 1:
                    deg[i] -= 1
        if cols[k] >= 0:
            start = cols[k] + 1
        elif k > 0:
            start = cols[k - 1]
        else:
            start = 0
        advanced = False
        remaining = n2 - k
        for ti in range(start, T):
            t = types[ti]
            ok = True
            maxdef = 0
            for i in range(n1):
                b = (t >> i) & 1
                if b and deg[i] >= r:
                    ok = False
                    break
                deficit = r - deg[i] - b
                if deficit > maxdef:
                    maxdef = deficit
            if not ok or maxdef > remaining - 1:
                continue
            cnt[t] += 1
            for i in range(n1):
                if (t >> i) & 1:
                    deg[i] += 1
            nodes += 1
            if is_canonical(n1, cnt, tops, tops_ptr, img, cand):
                cols[k] = ti
                advanced = True
                break
            cnt[t] -= 1
            for i in range(n1):
                if (t >> i) & 1:
                    deg[i] -= 1
        if not advanced:
            cols[k] = -1
            k -= 1
            continue
        if mode == MODE_PREFIX and k + 1 == stop_depth:
            if stats[STORED] < cap:
                for c in range(width):
                    out[stats[STORED], c] = cols[c]
            stats[STORED] += 1
            continue
        if k + 1 == n2:
            stats[LEAVES] += 1
            diam = diameter_capped(n1, n2, types, cols, d, nbr)
            keep = mode == MODE_ALL
            if diam >= 0:
                stats[CONNECTED] += 1
                if mode == MODE_CONNECTED:
                    keep = True
                if diam == d:
                    stats[EXACT] += 1
                    if mode == MODE_EXACT:
                        keep = True
                elif diam < d:
                    stats[SMALLER] += 1
            if keep:
                if stats[STORED] < cap:
                    for c in range(width):
                        out[stats[STORED], c] = cols[c]
                stats[STORED] += 1
            if nodes > limit:
                stats[ABORTED] = 1
                break
            continue
        k += 1
        cols[k] = -1
        if nodes > limit:
            stats[ABORTED] = 1
            break
    stats[NODES] = nodes
