"""Compiled inner loops.

Everything here works on plain numpy arrays and integer kind codes so that the
numba signatures stay small; the public wrappers live in :mod:`selfprod.sieve`
and :mod:`selfprod.core`.
"""

import numpy as np
from numba import njit, prange

TAU = 0
OMEGA = 1
BIG_OMEGA = 2
PHI = 3
SQUAREFREE = 4


@njit(cache=True)
def sieve_segment(kind, lo, hi, primes, out):
    """Fill ``out[k - lo]`` with the arithmetic function ``kind`` at k, lo <= k < hi.

    ``primes`` must contain every prime up to isqrt(hi - 1).
    """
    n = hi - lo
    top = hi - 1
    prod = np.ones(n, np.int64)
    cnt = np.zeros(n, np.uint8)
    if kind == OMEGA or kind == BIG_OMEGA:
        out[:n] = 0
    else:
        out[:n] = 1

    for i in range(primes.size):
        p = primes[i]
        if p * p > top:
            break
        pa = p
        while True:
            for j in range((lo + pa - 1) // pa * pa - lo, n, pa):
                cnt[j] += 1
                prod[j] *= p
            if pa > top // p:
                break
            pa *= p

        first = (lo + p - 1) // p * p - lo
        if kind == TAU:
            for j in range(first, n, p):
                out[j] *= cnt[j] + 1
                cnt[j] = 0
        elif kind == OMEGA:
            for j in range(first, n, p):
                out[j] += 1
                cnt[j] = 0
        elif kind == BIG_OMEGA:
            for j in range(first, n, p):
                out[j] += cnt[j]
                cnt[j] = 0
        elif kind == PHI:
            for j in range(first, n, p):
                v = p - 1
                for _ in range(cnt[j] - 1):
                    v *= p
                out[j] *= v
                cnt[j] = 0
        else:
            for j in range(first, n, p):
                if cnt[j] > 1:
                    out[j] = 0
                cnt[j] = 0

    # whatever is left of k after the small primes is 1 or a single large prime
    if kind == TAU:
        for j in range(n):
            if prod[j] != lo + j:
                out[j] *= 2
    elif kind == OMEGA or kind == BIG_OMEGA:
        for j in range(n):
            if prod[j] != lo + j:
                out[j] += 1
    elif kind == PHI:
        for j in range(n):
            if prod[j] != lo + j:
                out[j] *= (lo + j) // prod[j] - 1


@njit(cache=True)
def _segment_products(kind, a, b, primes, x, vals):
    sieve_segment(kind, a, b, primes, vals)
    for j in range(b - a):
        v = (a + j) * vals[j]
        vals[j] = v if 0 < v <= x else 0


@njit(cache=True)
def mark_products(kind, lo, hi, primes, x, bits, seg):
    """Set bit k*f(k) of ``bits`` for lo <= k < hi whenever 1 <= k*f(k) <= x."""
    vals = np.empty(seg, np.int64)
    for a in range(lo, hi, seg):
        b = min(a + seg, hi)
        _segment_products(kind, a, b, primes, x, vals)
        for j in range(b - a):
            v = vals[j]
            if v:
                bits[v >> 3] |= np.uint8(1 << (v & 7))


@njit(parallel=True, cache=True)
def products_batch(kind, starts, hi, primes, x, seg, out):
    """Row i of ``out`` receives k*f(k) (or 0 when out of range) for the segment at starts[i]."""
    for i in prange(starts.size):
        a = starts[i]
        b = min(a + seg, hi)
        row = out[i]
        row[:] = 0
        if a < b:
            _segment_products(kind, a, b, primes, x, row)


@njit(cache=True)
def set_bits(bits, values):
    for i in range(values.size):
        v = values[i]
        if v:
            bits[v >> 3] |= np.uint8(1 << (v & 7))


@njit(cache=True)
def mark_duplicates(kind, lo, hi, primes, x, seen, dup, seg):
    """Like :func:`mark_products`, additionally flagging values hit more than once."""
    vals = np.empty(seg, np.int64)
    for a in range(lo, hi, seg):
        b = min(a + seg, hi)
        _segment_products(kind, a, b, primes, x, vals)
        for j in range(b - a):
            v = vals[j]
            if v:
                byte = v >> 3
                mask = np.uint8(1 << (v & 7))
                if seen[byte] & mask:
                    dup[byte] |= mask
                else:
                    seen[byte] |= mask


@njit(cache=True)
def collect_witnesses(kind, lo, hi, primes, x, dup, seg, out_n, out_k):
    """Write (k*f(k), k) for every k whose product carries a duplicate flag.

    With empty output arrays only the number of such k is returned.
    """
    vals = np.empty(seg, np.int64)
    store = out_n.size > 0
    m = 0
    for a in range(lo, hi, seg):
        b = min(a + seg, hi)
        _segment_products(kind, a, b, primes, x, vals)
        for j in range(b - a):
            v = vals[j]
            if v and dup[v >> 3] & np.uint8(1 << (v & 7)):
                if store:
                    out_n[m] = v
                    out_k[m] = a + j
                m += 1
    return m


@njit(cache=True)
def trial_factor(n, primes, ps, es):
    """Factor n by trial division; returns (number of factors, ok flag).

    ok is False when the table ran out before the cofactor could be certified prime.
    """
    m = 0
    r = n
    for i in range(primes.size):
        p = primes[i]
        if p * p > r:
            break
        if r % p == 0:
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            ps[m] = p
            es[m] = e
            m += 1
    else:
        if primes.size == 0 or primes[primes.size - 1] * primes[primes.size - 1] < r:
            return m, False
    if r > 1:
        ps[m] = r
        es[m] = 1
        m += 1
    return m, True


@njit(cache=True)
def invert_one(n, primes):
    """k with k*phi(k) == n, 0 if there is none, -1 if the prime table is too small."""
    if n == 1:
        return 1
    ps = np.empty(64, np.int64)
    es = np.empty(64, np.int64)
    m, ok = trial_factor(n, primes, ps, es)
    if not ok:
        return -1
    k = 1
    top = m - 1
    while True:
        while top >= 0 and es[top] == 0:
            top -= 1
        if top < 0:
            return k
        p = ps[top]
        e = es[top]
        if e % 2 == 0:
            return 0
        for _ in range((e + 1) // 2):
            k *= p
        es[top] = 0
        # strip p - 1; all of its primes are below p and must already divide n
        r = p - 1
        for i in range(top):
            q = ps[i]
            while r % q == 0:
                if es[i] == 0:
                    return 0
                es[i] -= 1
                r //= q
        if r != 1:
            return 0


@njit(cache=True)
def invert_many(ns, primes, out):
    for i in range(ns.size):
        out[i] = invert_one(ns[i], primes)
