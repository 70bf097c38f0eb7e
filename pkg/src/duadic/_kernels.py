"""Compiled inner loops for codeword enumeration.

Codeword chunks are rows of ``uint64`` words.  Weights use LLVM's ctpop, which
lowers to the hardware popcount instruction where available.
"""

import numpy as np
import numba
from numba import njit, prange, types
from numba.extending import intrinsic

BIG = 1 << 40

if numba.config.THREADING_LAYER == "default":
    numba.config.THREADING_LAYER = "workqueue"


@intrinsic
def popcount64(typingctx, x):
    sig = types.int64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.ctpop(args[0])

    return sig, codegen


@intrinsic
def ctz64(typingctx, x):
    sig = types.int64(types.uint64)

    def codegen(context, builder, signature, args):
        return builder.cttz(args[0], context.get_constant(types.boolean, False))

    return sig, codegen


@njit(cache=True)
def _shard_one_word(P, w, i0, limit, odd_only, combo):
    # all w-subsets of range(k) whose smallest index is i0; P has one word per row
    k = P.shape[0]
    q = w - 1
    best = limit
    if q == 0:
        c = 1 + popcount64(P[i0])
        if c < best and (not odd_only or c & 1):
            best = c
            combo[0] = i0
        return best
    outer = np.empty(max(q - 1, 1), np.int64)
    acc = np.empty(q, np.uint64)
    acc[0] = P[i0]
    for t in range(q - 1):
        outer[t] = i0 + 1 + t
        acc[t + 1] = acc[t] ^ P[outer[t]]
    while True:
        base = acc[q - 1]
        start = outer[q - 2] + 1 if q >= 2 else i0 + 1
        if not odd_only:
            lo = BIG
            for j in range(start, k):
                c = popcount64(base ^ P[j])
                lo = min(lo, c)
            if w + lo < best:
                best = w + lo
                for j in range(start, k):
                    if popcount64(base ^ P[j]) == lo:
                        combo[0] = i0
                        for t in range(q - 1):
                            combo[t + 1] = outer[t]
                        combo[w - 1] = j
                        break
        else:
            for j in range(start, k):
                c = w + popcount64(base ^ P[j])
                if c < best and c & 1:
                    best = c
                    combo[0] = i0
                    for t in range(q - 1):
                        combo[t + 1] = outer[t]
                    combo[w - 1] = j
        t = q - 2
        while t >= 0 and outer[t] == k - 1 - (q - 1 - t):
            t -= 1
        if t < 0:
            break
        outer[t] += 1
        for s in range(t + 1, q - 1):
            outer[s] = outer[s - 1] + 1
        for s in range(t, q - 1):
            acc[s + 1] = acc[s] ^ P[outer[s]]
    return best


@njit(cache=True)
def _shard_words(P, w, i0, limit, odd_only, combo):
    # same enumeration as _shard_one_word for rows spanning several words
    k, nw = P.shape
    q = w - 1
    best = limit
    if q == 0:
        c = 1
        for s in range(nw):
            c += popcount64(P[i0, s])
        if c < best and (not odd_only or c & 1):
            best = c
            combo[0] = i0
        return best
    outer = np.empty(max(q - 1, 1), np.int64)
    acc = np.empty((q, nw), np.uint64)
    acc[0, :] = P[i0, :]
    for t in range(q - 1):
        outer[t] = i0 + 1 + t
        for s in range(nw):
            acc[t + 1, s] = acc[t, s] ^ P[outer[t], s]
    while True:
        start = outer[q - 2] + 1 if q >= 2 else i0 + 1
        for j in range(start, k):
            c = w
            for s in range(nw):
                c += popcount64(acc[q - 1, s] ^ P[j, s])
                if c >= best:
                    break
            if c < best and (not odd_only or c & 1):
                best = c
                combo[0] = i0
                for t in range(q - 1):
                    combo[t + 1] = outer[t]
                combo[w - 1] = j
        t = q - 2
        while t >= 0 and outer[t] == k - 1 - (q - 1 - t):
            t -= 1
        if t < 0:
            break
        outer[t] += 1
        for u in range(t + 1, q - 1):
            outer[u] = outer[u - 1] + 1
        for u in range(t, q - 1):
            for s in range(nw):
                acc[u + 1, s] = acc[u, s] ^ P[outer[u], s]
    return best


@njit(parallel=True, cache=True)
def scan_fixed_weight(P, w, limit, odd_only):
    """Lightest ``w + wt(sum of w rows of P)`` below ``limit`` over all w-subsets.

    Shards by smallest index; the reduction picks the lowest weight, then the
    lowest shard, so the answer does not depend on scheduling.  Returns
    ``(weight, combo)``; ``weight == limit`` means nothing lighter was found.
    """
    k, nw = P.shape
    nshard = k - w + 1
    bests = np.full(max(nshard, 1), limit, np.int64)
    combos = np.full((max(nshard, 1), w), -1, np.int64)
    flat = P[:, 0].copy()
    for i0 in prange(nshard):
        combo = np.full(w, -1, np.int64)
        if nw == 1:
            b = _shard_one_word(flat, w, i0, limit, odd_only, combo)
        else:
            b = _shard_words(P, w, i0, limit, odd_only, combo)
        bests[i0] = b
        combos[i0, :] = combo
    best = limit
    arg = -1
    for i in range(nshard):
        if bests[i] < best:
            best = bests[i]
            arg = i
    if arg < 0:
        return limit, np.full(w, -1, np.int64)
    return best, combos[arg].copy()


@njit(cache=True)
def gray_min_weights(G):
    """Walk all 2^k messages in Gray order.

    Returns ``(min_any, msg_any, min_odd, msg_odd, min_even, msg_even)`` over
    nonzero codewords; missing classes report ``BIG`` and message ``-1``.
    """
    k, nw = G.shape
    cur = np.zeros(nw, np.uint64)
    min_odd = BIG
    min_even = BIG
    msg_odd = -1
    msg_even = -1
    total = np.int64(1) << k
    for i in range(1, total):
        bit = ctz64(np.uint64(i))
        c = 0
        for s in range(nw):
            cur[s] ^= G[bit, s]
            c += popcount64(cur[s])
        if c & 1:
            if c < min_odd:
                min_odd = c
                msg_odd = i ^ (i >> 1)
        elif c < min_even and c > 0:
            min_even = c
            msg_even = i ^ (i >> 1)
    if min_odd <= min_even:
        return min_odd, msg_odd, min_odd, msg_odd, min_even, msg_even
    return min_even, msg_even, min_odd, msg_odd, min_even, msg_even
