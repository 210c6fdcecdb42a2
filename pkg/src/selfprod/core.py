"""Self-product sets A_f = {k*f(k)} for f in {tau, omega, Omega, phi}.

Membership up to x is kept in a flat little-endian bit array with one bit per
integer 0..x.  Each enumeration walks k only over a range that provably
contains every k with k*f(k) <= x; see :func:`k_range`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numba
import numpy as np

from . import _kernels
from .errors import DomainError, PreconditionError, ResourceCapError
from .sieve import SEGMENT_WIDTH, PrimeTable, TableKind, factorize, sieve_primes, sieve_table

# the bundled TBB is too old for numba; skip it instead of warning on every run
numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]

#: Default ceiling on x for bit-array enumeration (2**34 bits = 2 GiB).
MEMORY_CAP_X = 2**34

# scratch budget for the multi-threaded path: threads * segment * 8 bytes
_BATCH_BYTES = 2**28


class FKind(enum.IntEnum):
    TAU = _kernels.TAU
    OMEGA = _kernels.OMEGA
    BIG_OMEGA = _kernels.BIG_OMEGA
    PHI = _kernels.PHI

    @classmethod
    def parse(cls, value) -> "FKind":
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            key = value.strip().upper().replace("-", "_")
            key = {"BIGOMEGA": "BIG_OMEGA"}.get(key, key)
            try:
                return cls[key]
            except KeyError:
                raise DomainError(f"unknown kind {value!r}; expected tau, omega, bigomega or phi") from None
        return cls(value)

    @property
    def table(self) -> TableKind:
        return TableKind(int(self))


@dataclass(frozen=True)
class RepresentableSet:
    """A_f intersected with [1, x]; bit n of ``bits`` is set iff n = k*f(k) for some k."""

    kind: FKind
    x: int
    bits: np.ndarray = field(repr=False)
    count: int

    def __contains__(self, n: int) -> bool:
        if not 1 <= n <= self.x:
            return False
        return bool(self.bits[n >> 3] >> (n & 7) & 1)

    def __len__(self) -> int:
        return self.count

    def members(self) -> np.ndarray:
        """Sorted array of all members."""
        flags = np.unpackbits(self.bits, bitorder="little")[: self.x + 1]
        return np.flatnonzero(flags)


@dataclass(frozen=True, order=True)
class CollisionRecord:
    n: int
    k1: int
    k2: int


@dataclass(frozen=True)
class KSetStats:
    x: int
    psi: float
    k_count: int
    violators: int

    @property
    def total(self) -> int:
        return self.k_count + self.violators


def k_range(kind, x: int) -> tuple[int, int]:
    """Half-open range of k that contains every k with 1 <= k*f(k) <= x.

    * tau: tau(k) >= 2 for k >= 2, so k <= x/2 (k = 1 is always included).
    * omega, Omega: k = 1 gives 0, which is not counted; otherwise f(k) >= 1 so k <= x.
    * phi: phi(k) >= sqrt(k/2), so (k*phi(k))**2 >= k**3/2 and k**3 <= 2*x**2.
    """
    kind = FKind.parse(kind)
    if kind is FKind.TAU:
        return 1, max(x // 2, 1) + 1
    if kind in (FKind.OMEGA, FKind.BIG_OMEGA):
        return 2, max(x + 1, 2)
    return 1, _icbrt(2 * x * x) + 2


def _icbrt(n: int) -> int:
    r = int(round(n ** (1 / 3)))
    while r**3 > n:
        r -= 1
    while (r + 1) ** 3 <= n:
        r += 1
    return r


def _check_x(x: int, cap: int) -> int:
    x = int(x)
    if x < 1:
        raise DomainError(f"x must be a positive integer, got {x}")
    if x > cap:
        raise ResourceCapError(f"x = {x} exceeds the bit-array cap of {cap} (set cap= to raise it)")
    return x


def _primes_for(hi: int, primes: PrimeTable | None) -> PrimeTable:
    need = max(math.isqrt(max(hi - 1, 1)), 2)
    if primes is None:
        return sieve_primes(need)
    if primes.limit < need:
        raise PreconditionError(f"prime table up to {primes.limit} is too small; need {need}")
    return primes


def _default_threads() -> int:
    return numba.config.NUMBA_NUM_THREADS


def products(kind, lo: int, hi: int, primes: PrimeTable | None = None) -> np.ndarray:
    """Array of k*f(k) for lo <= k < hi (int64)."""
    kind = FKind.parse(kind)
    primes = _primes_for(hi, primes)
    vals = sieve_table(kind.table, lo, hi, primes).values.astype(np.int64)
    return vals * np.arange(lo, hi, dtype=np.int64)


def enumerate_representable(
    kind,
    x: int,
    *,
    primes: PrimeTable | None = None,
    threads: int | None = None,
    cap: int = MEMORY_CAP_X,
    segment: int = SEGMENT_WIDTH,
) -> RepresentableSet:
    """Build the membership bit array of A_f up to ``x``.

    ``threads == 1`` runs the sequential kernel; otherwise segments are sieved in
    parallel batches and their products merged into the bit array afterwards,
    which yields exactly the same set.
    """
    kind = FKind.parse(kind)
    x = _check_x(x, cap)
    lo, hi = k_range(kind, x)
    primes = _primes_for(hi, primes)
    bits = np.zeros((x >> 3) + 1, dtype=np.uint8)
    threads = _default_threads() if threads is None else int(threads)
    if threads < 1:
        raise DomainError(f"threads must be >= 1, got {threads}")

    if lo < hi:
        if threads == 1:
            _kernels.mark_products(int(kind), lo, hi, primes.primes, x, bits, segment)
        else:
            _mark_parallel(kind, lo, hi, primes, x, bits, threads, segment)
    count = int(np.bitwise_count(bits).sum())
    return RepresentableSet(kind, x, bits, count)


def _mark_parallel(kind, lo, hi, primes, x, bits, threads, segment):
    seg = max(2**12, min(segment, _BATCH_BYTES // (8 * threads)))
    previous = numba.get_num_threads()
    numba.set_num_threads(min(threads, numba.config.NUMBA_NUM_THREADS))
    try:
        buf = np.empty((threads, seg), dtype=np.int64)
        for start in range(lo, hi, threads * seg):
            starts = np.arange(start, start + threads * seg, seg, dtype=np.int64)
            _kernels.products_batch(int(kind), starts, hi, primes.primes, x, seg, buf)
            _kernels.set_bits(bits, buf.ravel())
    finally:
        numba.set_num_threads(previous)


def count_representable(kind, x: int, **kwargs) -> int:
    """N_f(x), the number of n <= x of the form k*f(k)."""
    return enumerate_representable(kind, x, **kwargs).count


def find_collisions(
    kind,
    x: int,
    *,
    primes: PrimeTable | None = None,
    cap: int = MEMORY_CAP_X,
    segment: int = SEGMENT_WIDTH,
) -> list[CollisionRecord]:
    """All pairs k1 < k2 with k1*f(k1) == k2*f(k2) <= x, sorted by (n, k1, k2).

    Values hit twice are flagged in a first pass over k; the second pass
    collects only the witnesses of flagged values, which are then sorted by n.
    PHI goes through the same scan; k -> k*phi(k) is injective, so it finds nothing.
    """
    kind = FKind.parse(kind)
    x = _check_x(x, cap)
    lo, hi = k_range(kind, x)
    primes = _primes_for(hi, primes)
    nbytes = (x >> 3) + 1
    seen = np.zeros(nbytes, dtype=np.uint8)
    dup = np.zeros(nbytes, dtype=np.uint8)
    code = int(kind)
    _kernels.mark_duplicates(code, lo, hi, primes.primes, x, seen, dup, segment)
    del seen
    empty = np.empty(0, dtype=np.int64)
    m = _kernels.collect_witnesses(code, lo, hi, primes.primes, x, dup, segment, empty, empty)
    ns = np.empty(m, dtype=np.int64)
    ks = np.empty(m, dtype=np.int64)
    _kernels.collect_witnesses(code, lo, hi, primes.primes, x, dup, segment, ns, ks)

    order = np.lexsort((ks, ns))
    ns, ks = ns[order].tolist(), ks[order].tolist()
    out = []
    i = 0
    while i < len(ns):
        j = i
        while j < len(ns) and ns[j] == ns[i]:
            j += 1
        group = ks[i:j]
        for a in range(len(group)):
            for b in range(a + 1, len(group)):
                out.append(CollisionRecord(ns[i], group[a], group[b]))
        i = j
    return out


def invert_phi_selfproduct(n: int, primes: PrimeTable | None = None) -> int | None:
    """Return the unique k with k*phi(k) == n, or None.

    Peels off the largest prime p of n: its exponent must be odd, 2a - 1,
    which fixes p**a as the exact power of p in k; dividing n by
    p**(2a-1) * (p - 1) leaves m*phi(m) for m = k / p**a, whose primes are all
    smaller than p.
    """
    n = int(n)
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if primes is None:
        primes = sieve_primes(max(math.isqrt(n), 2))
    fac = dict(factorize(n, primes).factors)
    k = 1
    while fac:
        p = max(fac)
        e = fac.pop(p)
        if e % 2 == 0:
            return None
        k *= p ** ((e + 1) // 2)
        r = p - 1
        for q in sorted(fac):
            while r % q == 0:
                if fac.get(q, 0) == 0:
                    return None
                fac[q] -= 1
                if fac[q] == 0:
                    del fac[q]
                r //= q
        if r != 1:
            return None
    return k


def invert_phi_many(ns, primes: PrimeTable | None = None) -> np.ndarray:
    """Vectorised :func:`invert_phi_selfproduct`; absent preimages are reported as 0."""
    ns = np.ascontiguousarray(ns, dtype=np.int64)
    if ns.size and ns.min() < 1:
        raise DomainError("all n must be positive")
    top = int(ns.max()) if ns.size else 1
    if primes is None:
        primes = sieve_primes(max(math.isqrt(top), 2))
    elif not primes.covers(top):
        raise PreconditionError(f"prime table up to {primes.limit} cannot factor {top}")
    out = np.empty(ns.size, dtype=np.int64)
    _kernels.invert_many(ns, primes.primes, out)
    if (out < 0).any():  # pragma: no cover - guarded above
        raise PreconditionError("prime table too small for some inputs")
    return out


def psi_parameter(x: float) -> float:
    """10 * sqrt(log log log x), the width used to define the typical set K."""
    return 10.0 * math.sqrt(math.log(math.log(math.log(x))))


def k_set_stats(x: int, psi: float | None = None, *, segment: int = SEGMENT_WIDTH) -> KSetStats:
    """Split {k : k*omega(k) <= x} into K (|omega(k) - log log x| <= psi*sqrt(log log x)) and the rest."""
    x = int(x)
    if x < 16:
        raise DomainError(f"k_set_stats needs x >= 16, got {x}")
    if psi is None:
        psi = psi_parameter(x)
    elif psi < 0:
        raise DomainError(f"psi must be nonnegative, got {psi}")
    loglog = math.log(math.log(x))
    width = psi * math.sqrt(loglog)
    primes = sieve_primes(max(math.isqrt(x), 2))
    inside = outside = 0
    for a in range(2, x + 1, segment):
        b = min(a + segment, x + 1)
        w = sieve_table(TableKind.OMEGA, a, b, primes).values.astype(np.int64)
        ok = w * np.arange(a, b, dtype=np.int64) <= x
        typical = np.abs(w - loglog) <= width
        inside += int(np.count_nonzero(ok & typical))
        outside += int(np.count_nonzero(ok & ~typical))
    return KSetStats(x, psi, inside, outside)
