"""Experiment drivers and report writers behind the ``selfprod`` command.

Rows are plain dataclasses; :func:`write_csv` renders them with 12 significant
digits so that repeated runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from . import constants
from .core import CollisionRecord, FKind, enumerate_representable
from .errors import DomainError
from .sieve import TableKind, sieve_primes, sieve_table

ASYMPTOTICS_HEADER = ("x", "count", "prediction", "ratio")
PHI_EXTRA_COLUMN = "dev_c0"
COLLISIONS_HEADER = ("n", "k1", "k2")
PI_L_HEADER = ("x", "l", "pi_l", "pi_l_star", "pred", "pred_star")
FCHECK_HEADER = ("s", "lhs", "rhs", "gap", "bound", "pass")

LAMBDA_GRID = tuple(i / 10 for i in range(11))


@dataclass(frozen=True)
class AsymptoticsRow:
    x: int
    count: int
    prediction: float
    ratio: float
    dev_c0: float | None = None

    def cells(self) -> tuple:
        base = (self.x, self.count, self.prediction, self.ratio)
        return base if self.dev_c0 is None else base + (self.dev_c0,)


@dataclass(frozen=True)
class PiLRow:
    x: int
    l: int  # noqa: E741
    pi_l: int
    pi_l_star: int
    prediction: float
    prediction_star: float

    def cells(self) -> tuple:
        return (self.x, self.l, self.pi_l, self.pi_l_star, self.prediction, self.prediction_star)


def fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format(float(value), ".12g")


def write_csv(stream, header, rows) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    write_csv(buf, header, rows)
    return buf.getvalue()


def main_term(kind, x: int, c0: float) -> float:
    """Leading term of N_f(x): x/sqrt(log x), x/log log x or c0 sqrt(x); nan where undefined."""
    kind = FKind.parse(kind)
    if kind is FKind.PHI:
        return c0 * math.sqrt(x)
    if kind is FKind.TAU:
        return x / math.sqrt(math.log(x)) if x > 1 else math.nan
    return x / math.log(math.log(x)) if x > math.e else math.nan


def asymptotics_rows(kind, xs, prime_limit: int = constants.DEFAULT_PRIME_LIMIT, threads=None) -> list[AsymptoticsRow]:
    kind = FKind.parse(kind)
    c0 = constants.c0_constant(prime_limit).value
    rows = []
    for x in xs:
        count = enumerate_representable(kind, x, threads=threads).count
        pred = main_term(kind, x, c0)
        ratio = count / pred if math.isfinite(pred) and pred > 0 else math.nan
        dev = abs(count / math.sqrt(x) - c0) if kind is FKind.PHI else None
        rows.append(AsymptoticsRow(int(x), count, pred, ratio, dev))
    return rows


def asymptotics_header(kind) -> tuple:
    if FKind.parse(kind) is FKind.PHI:
        return ASYMPTOTICS_HEADER + (PHI_EXTRA_COLUMN,)
    return ASYMPTOTICS_HEADER


def iterated_log(x: float, depth: int) -> float:
    """log applied ``depth`` times; nan once the argument leaves (0, inf)."""
    for _ in range(depth):
        if x <= 0:
            return math.nan
        x = math.log(x)
    return x


def collision_summary(records: list[CollisionRecord], x: int) -> dict:
    """Number of bad n and B(x) (log2 x)**1.5 / (x sqrt(log3 x) (log4 x)**2)."""
    bad = len({r.n for r in records})
    l2, l3, l4 = (iterated_log(x, d) for d in (2, 3, 4))
    if all(math.isfinite(v) and v > 0 for v in (l2, l3, l4)):
        normalized = bad * l2**1.5 / (x * math.sqrt(l3) * l4**2)
    else:
        normalized = math.nan
    return {"x": int(x), "pairs": len(records), "bad_n": bad, "normalized": normalized}


def omega_distribution(x: int, segment: int = 2**22) -> tuple[np.ndarray, np.ndarray]:
    """Counts of n in [2, x] by omega(n), overall and restricted to squarefree n."""
    primes = sieve_primes(max(math.isqrt(x), 2))
    total = np.zeros(64, dtype=np.int64)
    sqfree = np.zeros(64, dtype=np.int64)
    for a in range(2, x + 1, segment):
        b = min(a + segment, x + 1)
        w = sieve_table(TableKind.OMEGA, a, b, primes).values
        sf = sieve_table(TableKind.SQUAREFREE, a, b, primes).values.astype(bool)
        total += np.bincount(w, minlength=64)[:64]
        sqfree += np.bincount(w[sf], minlength=64)[:64]
    top = int(np.flatnonzero(total).max()) if total.any() else 0
    return total[: top + 1], sqfree[: top + 1]


def pi_l_rows(x: int, prime_limit: int = constants.DEFAULT_PRIME_LIMIT) -> list[PiLRow]:
    """pi_l(x), pi*_l(x) and the main terms x/log x (log log x)**(l-1)/(l-1)! lambda((l-1)/log log x).

    Predictions are nan where (l-1)/log log x leaves [0, 2], the range served by
    :func:`constants.lambda_fn`.
    """
    x = int(x)
    if x < 16:
        raise DomainError(f"pi-l needs x >= 16, got {x}")
    total, sqfree = omega_distribution(x)
    L = math.log(math.log(x))
    rows = []
    for l in range(1, total.size):  # noqa: E741
        z = (l - 1) / L
        base = x / math.log(x) * L ** (l - 1) / math.factorial(l - 1)
        if z <= 2.0:
            pred = base * constants.lambda_fn(z, prime_limit).value
            pred_star = base * constants.lambda_star_fn(z, prime_limit).value
        else:
            pred = pred_star = math.nan
        rows.append(PiLRow(x, l, int(total[l]), int(sqfree[l]), pred, pred_star))
    return rows


def _entry(name: str, v: constants.EulerProductValue, note: str | None = None) -> dict:
    out = {"name": name, "value": v.value, "prime_limit": v.prime_limit, "tail_bound": v.tail_bound}
    if note:
        out["note"] = note
    return out


def constants_report(prime_limit: int = constants.DEFAULT_PRIME_LIMIT) -> list[dict]:
    entries = [
        _entry("c0", constants.c0_constant(prime_limit), "published to three decimals (1.365); further digits computed here"),
    ]
    for A in (2, 3, 4, 5):
        c1, c2 = constants.c1_c2_constants(A, prime_limit)
        entries.append(_entry(f"c1({A})", c1))
        entries.append(_entry(f"c2({A})", c2))
    for z in LAMBDA_GRID:
        entries.append(_entry(f"lambda({z:g})", constants.lambda_fn(z, prime_limit)))
    for z in LAMBDA_GRID:
        entries.append(_entry(f"lambda_star({z:g})", constants.lambda_star_fn(z, prime_limit)))
    return entries


def render_json(entries) -> str:
    return json.dumps(entries, indent=2) + "\n"


def fcheck_rows(s_list, x_cap: int, prime_limit: int = constants.DEFAULT_PRIME_LIMIT) -> list[tuple]:
    rows = []
    for s in s_list:
        r = constants.f_identity_check(s, x_cap, prime_limit)
        rows.append((r.s, r.lhs, r.rhs, r.gap, r.bound, r.passed))
    return rows
