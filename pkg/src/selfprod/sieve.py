"""Prime tables, segmented arithmetic-function sieves and trial-division factorization.

The segmented sieve marks every prime power p**a with p <= sqrt(hi - 1) inside
the segment and then treats any leftover cofactor > 1 as one extra prime.  All
five tables (tau, omega, Omega, phi and the squarefree indicator) come out of
the same pass.
"""

from __future__ import annotations

import enum
import math
import struct
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import _kernels
from .errors import DomainError, PreconditionError

#: Largest ``limit`` accepted by :func:`sieve_primes` (an odd-only byte sieve, ~1 GiB).
PRIME_LIMIT_CAP = 2**31

#: Default number of integers handled per sieve segment.
SEGMENT_WIDTH = 2**22

_INT64_MAX = 2**63 - 1


class TableKind(enum.IntEnum):
    TAU = _kernels.TAU
    OMEGA = _kernels.OMEGA
    BIG_OMEGA = _kernels.BIG_OMEGA
    PHI = _kernels.PHI
    SQUAREFREE = _kernels.SQUAREFREE

    @property
    def dtype(self) -> np.dtype:
        # omega, Omega < 64 and tau < 2**32 for every k < 2**64
        return np.dtype(_DTYPES[self])


_DTYPES = {
    TableKind.TAU: np.int32,
    TableKind.OMEGA: np.uint8,
    TableKind.BIG_OMEGA: np.uint8,
    TableKind.PHI: np.int64,
    TableKind.SQUAREFREE: np.uint8,
}


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to ``limit`` in ascending order."""

    limit: int
    primes: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return int(self.primes.size)

    def __iter__(self):
        return iter(self.primes.tolist())

    def covers(self, n: int) -> bool:
        """True when the table is large enough to trial-divide ``n`` completely."""
        return self.limit >= math.isqrt(max(n, 0))


@dataclass(frozen=True)
class ArithTable:
    """Values of one arithmetic function on the half-open segment [lo, hi)."""

    kind: TableKind
    lo: int
    hi: int
    values: np.ndarray = field(repr=False)

    def __len__(self) -> int:
        return self.hi - self.lo

    def __getitem__(self, k: int) -> int:
        if not self.lo <= k < self.hi:
            raise IndexError(f"{k} outside [{self.lo}, {self.hi})")
        return int(self.values[k - self.lo])

    def dump(self, path) -> None:
        """Write the table in the little-endian cache format (tag, lo, hi, raw values)."""
        with open(path, "wb") as fh:
            fh.write(struct.pack("<BQQ", int(self.kind), self.lo, self.hi))
            fh.write(self.values.astype(self.kind.dtype.newbyteorder("<"), copy=False).tobytes())

    @classmethod
    def load(cls, path) -> "ArithTable":
        raw = Path(path).read_bytes()
        head = struct.calcsize("<BQQ")
        tag, lo, hi = struct.unpack_from("<BQQ", raw)
        kind = TableKind(tag)
        values = np.frombuffer(raw, dtype=kind.dtype.newbyteorder("<"), offset=head)
        if values.size != hi - lo:
            raise ValueError(f"{path}: expected {hi - lo} values, found {values.size}")
        return cls(kind, lo, hi, values.astype(kind.dtype))


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def value(self) -> int:
        return math.prod(p**e for p, e in self.factors)

    @property
    def largest_prime(self) -> int:
        return self.factors[-1][0] if self.factors else 1


def sieve_primes(limit: int) -> PrimeTable:
    """Return a :class:`PrimeTable` of all primes ``<= limit``.

    ``limit`` must satisfy ``2 <= limit <= PRIME_LIMIT_CAP``.
    """
    limit = int(limit)
    if not 2 <= limit <= PRIME_LIMIT_CAP:
        raise DomainError(f"prime limit must lie in [2, {PRIME_LIMIT_CAP}], got {limit}")
    # index i stands for the odd number 2*i + 1
    odd = np.ones((limit + 1) // 2, dtype=bool)
    odd[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if odd[i]:
            p = 2 * i + 1
            odd[p * p // 2 :: p] = False
    primes = np.concatenate(([2], 2 * np.flatnonzero(odd) + 1)).astype(np.int64)
    return PrimeTable(limit, primes)


def _require_primes(primes: PrimeTable, top: int) -> None:
    if not primes.covers(top):
        raise PreconditionError(
            f"prime table up to {primes.limit} is too small; need at least isqrt({top}) = {math.isqrt(top)}"
        )


def sieve_table(kind, lo: int, hi: int, primes: PrimeTable, segment: int = SEGMENT_WIDTH) -> ArithTable:
    """Exact values of ``kind`` on [lo, hi), sieved ``segment`` integers at a time."""
    kind = TableKind(kind) if not isinstance(kind, str) else TableKind[kind.upper()]
    lo, hi = int(lo), int(hi)
    if not 1 <= lo < hi:
        raise DomainError(f"segment must satisfy 1 <= lo < hi, got [{lo}, {hi})")
    if hi - 1 > _INT64_MAX:
        raise DomainError("segments beyond the signed 64-bit range are not supported")
    _require_primes(primes, hi - 1)
    values = np.empty(hi - lo, dtype=kind.dtype)
    for a in range(lo, hi, segment):
        b = min(a + segment, hi)
        _kernels.sieve_segment(int(kind), a, b, primes.primes, values[a - lo : b - lo])
    return ArithTable(kind, lo, hi, values)


def factorize(n: int, primes: PrimeTable) -> Factorization:
    """Trial-division factorization of ``n`` using ``primes`` (which must reach isqrt(n))."""
    n = int(n)
    if n < 1:
        raise DomainError(f"factorize needs n >= 1, got {n}")
    if n > _INT64_MAX:
        raise DomainError("factorize is limited to signed 64-bit integers")
    _require_primes(primes, n)
    ps = np.empty(64, np.int64)
    es = np.empty(64, np.int64)
    m, ok = _kernels.trial_factor(n, primes.primes, ps, es)
    if not ok:  # pragma: no cover - guarded by _require_primes
        raise PreconditionError(f"could not certify the cofactor of {n}")
    return Factorization(n, tuple(zip(ps[:m].tolist(), es[:m].tolist())))
