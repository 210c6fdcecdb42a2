"""``selfprod`` command line interface.

Exit codes: 0 success, 1 domain or usage error, 2 I/O error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import re
import sys

from . import constants, harness
from .core import find_collisions, invert_phi_selfproduct
from .errors import DomainError, PreconditionError, ResourceCapError
from .sieve import factorize, sieve_primes

EXIT_OK, EXIT_DOMAIN, EXIT_IO, EXIT_RESOURCE = 0, 1, 2, 3

_INT64_MAX = 2**63 - 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_int(text: str) -> int:
    """Accept 1000000, 10^6, 10**6 and 1e6."""
    text = text.strip().replace("_", "")
    m = re.fullmatch(r"(\d+)(?:\^|\*\*)(\d+)", text)
    if m:
        return int(m.group(1)) ** int(m.group(2))
    m = re.fullmatch(r"(\d+)[eE](\d+)", text)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    return [parse_int(t) for t in text.split(",") if t.strip()]


def parse_float_list(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a list of numbers: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="selfprod", description="Counting and verification tools for n = k f(k).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, kind=False, x=False):
        if kind:
            p.add_argument("--kind", required=True, choices=["tau", "omega", "bigomega", "phi"])
        if x:
            p.add_argument("--x", type=parse_int, required=True)
        p.add_argument("--prime-limit", type=parse_int, default=constants.DEFAULT_PRIME_LIMIT)
        p.add_argument("--out", default="-", help="output path (default: stdout)")
        p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")

    common(sub.add_parser("count", help="N_f(x) against its main term"), kind=True, x=True)
    p = sub.add_parser("scan", help="count over a grid of x")
    common(p, kind=True)
    p.add_argument("--x-list", type=parse_int_list, required=True)
    common(sub.add_parser("collisions", help="pairs k1 < k2 with equal k f(k)"), kind=True, x=True)
    p = sub.add_parser("invert-phi", help="solve k phi(k) = n")
    p.add_argument("n", nargs="?", type=parse_int)
    p.add_argument("--n", dest="n_flag", type=parse_int)
    p.add_argument("--out", default="-", help="output path (default: stdout)")
    common(sub.add_parser("pi-l", help="counts of n <= x by omega(n)"), x=True)
    common(sub.add_parser("constants", help="Euler-product constants as JSON"))
    p = sub.add_parser("fcheck", help="check F(s) = zeta(2s) G(s)")
    common(p)
    p.add_argument("--s-list", type=parse_float_list, default=[0.6, 0.75, 1.0, 1.5, 2.0])
    p.add_argument("--x-cap", type=parse_int, default=10**7)
    return parser


@contextlib.contextmanager
def _output(path: str):
    if path == "-":
        yield sys.stdout
        sys.stdout.flush()
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _emit(path: str, text: str) -> None:
    with _output(path) as fh:
        fh.write(text)


def _run(args) -> int:
    cmd = args.command
    if cmd in ("count", "scan"):
        xs = [args.x] if cmd == "count" else args.x_list
        if cmd == "scan" and xs != sorted(xs):
            raise DomainError("--x-list must be ascending")
        rows = harness.asymptotics_rows(args.kind, xs, args.prime_limit, args.threads)
        _emit(args.out, harness.render_csv(harness.asymptotics_header(args.kind), [r.cells() for r in rows]))
    elif cmd == "collisions":
        records = find_collisions(args.kind, args.x)
        rows = [(r.n, r.k1, r.k2) for r in records]
        _emit(args.out, harness.render_csv(harness.COLLISIONS_HEADER, rows))
        summary = harness.collision_summary(records, args.x)
        print(
            "bad_n={bad_n} pairs={pairs} normalized={norm}".format(
                bad_n=summary["bad_n"], pairs=summary["pairs"], norm=harness.fmt(summary["normalized"])
            ),
            file=sys.stderr,
        )
    elif cmd == "invert-phi":
        n = args.n if args.n is not None else args.n_flag
        if n is None:
            raise UsageError("invert-phi needs n")
        if not 1 <= n <= _INT64_MAX:
            raise DomainError(f"n must lie in [1, 2**63 - 1], got {n}")
        primes = sieve_primes(max(math.isqrt(n), 2))
        k = invert_phi_selfproduct(n, primes)
        if k is not None:
            phi = math.prod(p ** (e - 1) * (p - 1) for p, e in factorize(k, primes).factors)
            if k * phi != n:  # pragma: no cover - would indicate a bug in the inversion
                raise DomainError(f"internal check failed: {k} * phi({k}) != {n}")
        _emit(args.out, f"{k if k is not None else 'none'}\n")
    elif cmd == "pi-l":
        rows = harness.pi_l_rows(args.x, args.prime_limit)
        _emit(args.out, harness.render_csv(harness.PI_L_HEADER, [r.cells() for r in rows]))
    elif cmd == "constants":
        _emit(args.out, harness.render_json(harness.constants_report(args.prime_limit)))
    elif cmd == "fcheck":
        rows = harness.fcheck_rows(args.s_list, args.x_cap, args.prime_limit)
        _emit(args.out, harness.render_csv(harness.FCHECK_HEADER, rows))
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except UsageError as exc:
        print(f"selfprod: usage error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, PreconditionError) as exc:
        print(f"selfprod: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceCapError as exc:
        print(f"selfprod: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"selfprod: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
