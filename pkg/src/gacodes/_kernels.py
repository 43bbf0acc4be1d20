"""Compiled inner loops for minimum-distance search.

GF(2) vectors are packed little-endian into ``uint64`` words; other primes use int64 residues.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)


@njit(cache=True, inline="always")
def popcount64(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return (x * _H01) >> np.uint64(56)


@njit(cache=True)
def weight_packed(v):
    w = 0
    for t in range(v.shape[0]):
        w += popcount64(v[t])
    return w


@njit(cache=True, inline="always")
def splitmix64(x):
    z = x + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@njit(cache=True)
def trial_seed(seed, trial):
    return splitmix64(splitmix64(np.uint64(seed)) ^ np.uint64(trial))


@njit(cache=True)
def _permutation(n, state):
    perm = np.arange(n)
    for i in range(n - 1, 0, -1):
        state = splitmix64(state)
        j = np.int64(state % np.uint64(i + 1))
        perm[i], perm[j] = perm[j], perm[i]
    return perm


@njit(cache=True)
def gray_min_gf2(basis, logical, stop_at):
    """Minimum weight over span(basis) with some ``logical`` coefficient nonzero.

    Walks the binary reflected Gray code so each step adds one basis row.  Returns the
    best weight (-1 if none) and the Gray-code index where it was first reached.
    """
    m, words = basis.shape
    cur = np.zeros(words, dtype=np.uint64)
    best = -1
    best_i = np.int64(0)
    nlog = 0
    total = np.int64(1) << m
    for i in range(1, total):
        j = 0
        while not (i >> j) & 1:
            j += 1
        for t in range(words):
            cur[t] ^= basis[j, t]
        if logical[j]:
            if (((i >> j) >> 1) ^ (i >> j)) & 1:
                nlog += 1
            else:
                nlog -= 1
        if nlog > 0:
            w = 0
            for t in range(words):
                w += popcount64(cur[t])
            if best < 0 or w < best:
                best = w
                best_i = i
                if best <= stop_at:
                    break
    return best, best_i


@njit(cache=True)
def gray_min_modp(basis, p, logical, stop_at):
    """Mixed-radix analogue of :func:`gray_min_gf2`; returns the best coefficient vector."""
    m, n = basis.shape
    cur = np.zeros(n, dtype=np.int64)
    digits = np.zeros(m, dtype=np.int64)
    best_digits = np.zeros(m, dtype=np.int64)
    weight = 0
    best = -1
    nlog = 0
    total = np.int64(1)
    for _ in range(m):
        total *= p
    for i in range(1, total):
        j = 0
        r = i
        while r % p == 0:
            r //= p
            j += 1
        for c in range(n):
            b = basis[j, c]
            if b:
                old = cur[c]
                new = old + b
                if new >= p:
                    new -= p
                cur[c] = new
                if old == 0:
                    weight += 1
                elif new == 0:
                    weight -= 1
        d = digits[j] + 1
        if d == p:
            d = 0
        if logical[j]:
            if digits[j] == 0:
                nlog += 1
            elif d == 0:
                nlog -= 1
        digits[j] = d
        if nlog > 0 and (best < 0 or weight < best):
            best = weight
            best_digits[:] = digits
            if best <= stop_at:
                break
    return best, best_digits


@njit(cache=True)
def _reduce_gf2(work, perm, rank):
    """Row-reduce packed rows in place, taking pivots in ``perm`` order."""
    m, words = work.shape
    r = 0
    for c in perm:
        if r == rank:
            break
        t = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        piv = -1
        for i in range(r, m):
            if work[i, t] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for u in range(words):
                tmp = work[r, u]
                work[r, u] = work[piv, u]
                work[piv, u] = tmp
        for i in range(m):
            if i != r and work[i, t] & bit:
                for u in range(words):
                    work[i, u] ^= work[r, u]
        r += 1


@njit(cache=True)
def _nontrivial_gf2(v, checks):
    k, words = checks.shape
    for i in range(k):
        acc = np.uint64(0)
        for u in range(words):
            acc ^= v[u] & checks[i, u]
        if popcount64(acc) & np.uint64(1):
            return True
    return False


@njit(cache=True)
def random_min_gf2(basis, checks, n, seed, start, stop, pairs):
    """Information-set search over trials ``[start, stop)``; returns (weight, packed vector)."""
    m, words = basis.shape
    best = -1
    best_v = np.zeros(words, dtype=np.uint64)
    tmp = np.zeros(words, dtype=np.uint64)
    for trial in range(start, stop):
        perm = _permutation(n, trial_seed(seed, trial))
        work = basis.copy()
        _reduce_gf2(work, perm, m)
        for i in range(m):
            w = weight_packed(work[i])
            if (best < 0 or w < best) and _nontrivial_gf2(work[i], checks):
                best = w
                best_v[:] = work[i]
        if pairs:
            for i in range(m):
                for j in range(i + 1, m):
                    for u in range(words):
                        tmp[u] = work[i, u] ^ work[j, u]
                    w = weight_packed(tmp)
                    if (best < 0 or w < best) and _nontrivial_gf2(tmp, checks):
                        best = w
                        best_v[:] = tmp
    return best, best_v


@njit(cache=True)
def _inv_modp(x, p):
    r = np.int64(1)
    e = p - 2
    b = x % p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


@njit(cache=True)
def _reduce_modp(work, perm, p, rank):
    m, n = work.shape
    r = 0
    for c in perm:
        if r == rank:
            break
        piv = -1
        for i in range(r, m):
            if work[i, c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for u in range(n):
                tmp = work[r, u]
                work[r, u] = work[piv, u]
                work[piv, u] = tmp
        s = _inv_modp(work[r, c], p)
        for u in range(n):
            work[r, u] = work[r, u] * s % p
        for i in range(m):
            f = work[i, c]
            if i != r and f:
                for u in range(n):
                    work[i, u] = (work[i, u] - f * work[r, u]) % p
        r += 1


@njit(cache=True)
def _nontrivial_modp(v, checks, p):
    k, n = checks.shape
    for i in range(k):
        acc = 0
        for u in range(n):
            acc += v[u] * checks[i, u]
        if acc % p:
            return True
    return False


@njit(cache=True)
def random_min_modp(basis, checks, p, seed, start, stop, pairs):
    m, n = basis.shape
    best = -1
    best_v = np.zeros(n, dtype=np.int64)
    tmp = np.zeros(n, dtype=np.int64)
    for trial in range(start, stop):
        perm = _permutation(n, trial_seed(seed, trial))
        work = basis.copy()
        _reduce_modp(work, perm, p, m)
        for i in range(m):
            w = 0
            for u in range(n):
                if work[i, u]:
                    w += 1
            if (best < 0 or w < best) and _nontrivial_modp(work[i], checks, p):
                best = w
                best_v[:] = work[i]
        if pairs:
            for i in range(m):
                for j in range(i + 1, m):
                    for s in range(1, p):
                        w = 0
                        for u in range(n):
                            tmp[u] = (work[i, u] + s * work[j, u]) % p
                            if tmp[u]:
                                w += 1
                        if (best < 0 or w < best) and _nontrivial_modp(tmp, checks, p):
                            best = w
                            best_v[:] = tmp
    return best, best_v


@njit(cache=True)
def _reduce_pivots_gf2(work, order):
    """Like :func:`_reduce_gf2` but returns the pivot columns in reduction order."""
    m, words = work.shape
    pivots = np.empty(m, dtype=np.int64)
    r = 0
    for c in order:
        if r == m:
            break
        t = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        piv = -1
        for i in range(r, m):
            if work[i, t] & bit:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for u in range(words):
                tmp = work[r, u]
                work[r, u] = work[piv, u]
                work[piv, u] = tmp
        for i in range(m):
            if i != r and work[i, t] & bit:
                for u in range(words):
                    work[i, u] ^= work[r, u]
        pivots[r] = c
        r += 1
    return pivots[:r]


@njit(cache=True)
def information_sets_gf2(basis, n):
    """Systematic generators on successive pivot sets, each taking fresh columns first.

    Returns the stacked generators ``(J, m, words)`` and the number of fresh pivots of each.
    """
    m, words = basis.shape
    used = np.zeros(n, dtype=np.bool_)
    gens = np.zeros((n + 1, m, words), dtype=np.uint64)
    ranks = np.zeros(n + 1, dtype=np.int64)
    J = 0
    while True:
        order = np.empty(n, dtype=np.int64)
        nf = 0
        for c in range(n):
            if not used[c]:
                order[nf] = c
                nf += 1
        if nf == 0:
            break
        nu = nf
        for c in range(n):
            if used[c]:
                order[nu] = c
                nu += 1
        work = basis.copy()
        piv = _reduce_pivots_gf2(work, order)
        fresh = 0
        for c in piv:
            if not used[c]:
                fresh += 1
                used[c] = True
        if fresh == 0:
            break
        gens[J] = work
        ranks[J] = fresh
        J += 1
    return gens[:J], ranks[:J]


@njit(cache=True)
def bz_min_gf2(gens, ranks, checks, max_level, stop_at):
    """Weight-ordered search over information sets with a disjoint-set lower bound.

    Level ``w`` visits every sum of ``w`` rows of every generator.  A codeword missed by all
    levels up to ``w`` has at least ``w + 1 - (m - r_j)`` nonzeros on the fresh pivots of
    set ``j``, and those pivot sets are disjoint.  Returns ``(best, vector, certified)``.
    """
    J, m, words = gens.shape
    best = -1
    best_v = np.zeros(words, dtype=np.uint64)
    acc = np.zeros((m + 1, words), dtype=np.uint64)
    idx = np.zeros(m + 1, dtype=np.int64)
    for w in range(1, max_level + 1):
        for j in range(J):
            G = gens[j]
            for i in range(w):
                idx[i] = i
            for i in range(w):
                for u in range(words):
                    acc[i + 1, u] = acc[i, u] ^ G[idx[i], u]
            while True:
                v = acc[w]
                wt = 0
                for u in range(words):
                    wt += popcount64(v[u])
                if (best < 0 or wt < best) and _nontrivial_gf2(v, checks):
                    best = wt
                    best_v[:] = v
                    if best <= stop_at:
                        return best, best_v, True
                # next combination in lexicographic order
                i = w - 1
                while i >= 0 and idx[i] == m - w + i:
                    i -= 1
                if i < 0:
                    break
                idx[i] += 1
                for t in range(i + 1, w):
                    idx[t] = idx[t - 1] + 1
                for t in range(i, w):
                    for u in range(words):
                        acc[t + 1, u] = acc[t, u] ^ G[idx[t], u]
        bound = 0
        for j in range(J):
            extra = w + 1 - (m - ranks[j])
            if extra > 0:
                bound += extra
        if best >= 0 and best <= bound:
            return best, best_v, True
        if w == m:
            return best, best_v, True
    return best, best_v, False
