"""Special functions and Euler-product constants in double precision.

Every product over primes is evaluated as exp(sum(log(term))) with an exactly
rounded sum (:func:`math.fsum`).  The reported ``tail_bound`` bounds
|log(true / computed)|: the primes above ``prime_limit`` are covered by
comparing their log-terms with sum_{m >= P} m**-beta, plus a fixed allowance
for floating-point rounding.

Convergence is accelerated by pulling out the exact p**-2 part of each
log-term: with u = 1/p and log t_p = a2 u**2 + O(u**3), the product is
zeta(2)**a2 * prod_p t_p (1 - u**2)**a2, whose log-terms are O(u**3).
Writing the log-terms as power series in u gives explicit bounds
|h_p| <= M u**3 for u <= 1/P, and sum_{p > P} p**-3 <= 1/(2 P**2) finishes
the tail.  G(s) is summed directly; its terms are at most s (p - 1)**-(1 + 2s).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .core import FKind, k_range, products
from .errors import DomainError
from .sieve import PRIME_LIMIT_CAP, sieve_primes

#: Allowance for accumulated rounding in a log-sum, valid for any prime_limit <= PRIME_LIMIT_CAP.
ROUNDING_ALLOWANCE = 1e-13

#: Empirical constant C in N_phi(y) <= C sqrt(y), used for the F(s) truncation tail.
PHI_DENSITY_BOUND = 2.0

DEFAULT_PRIME_LIMIT = 10**6

# Bernoulli numbers B_2, B_4, ..., B_24
_BERNOULLI = (
    1 / 6,
    -1 / 30,
    1 / 42,
    -1 / 30,
    5 / 66,
    -691 / 2730,
    7 / 6,
    -3617 / 510,
    43867 / 798,
    -174611 / 330,
    854513 / 138,
    -236364091 / 2730,
)


@dataclass(frozen=True)
class EulerProductValue:
    value: float
    prime_limit: int
    tail_bound: float

    def interval(self) -> tuple[float, float]:
        """Enclosure of the true value implied by ``tail_bound``."""
        return self.value * math.exp(-self.tail_bound), self.value * math.exp(self.tail_bound)


@dataclass(frozen=True)
class QValue:
    alpha: float
    q: float


@dataclass(frozen=True)
class FIdentityReport:
    s: float
    x_cap: int
    prime_limit: int
    lhs: float
    rhs: float
    gap: float
    bound: float
    truncation_bound: float

    @property
    def passed(self) -> bool:
        return self.gap <= self.bound


def gamma(z: float) -> float:
    """Gamma function on (0, 3]."""
    z = float(z)
    if not 0.0 < z <= 3.0:
        raise DomainError(f"gamma is provided on (0, 3], got {z}")
    return math.gamma(z)


def zeta_with_error(s: float, terms: int = 16, order: int = 10) -> tuple[float, float]:
    """Riemann zeta for real s >= 1.2 by Euler-Maclaurin summation.

    Returns ``(value, error_bound)``; for real s the remainder after ``order``
    correction terms is bounded by the first omitted one.
    """
    s = float(s)
    if not s >= 1.2 or math.isinf(s):
        raise DomainError(f"zeta is provided for real s >= 1.2, got {s}")
    n = terms
    parts = [k**-s for k in range(1, n)]
    parts.append(n ** (1 - s) / (s - 1))
    parts.append(0.5 * n**-s)
    rising = s  # s (s+1) ... (s + 2j - 2)
    fact = 2.0  # (2j)!
    for j in range(1, order + 2):
        term = _BERNOULLI[j - 1] / fact * rising * n ** (-s - 2 * j + 1)
        if j == order + 1:
            remainder = abs(term)
            break
        parts.append(term)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        fact *= (2 * j + 1) * (2 * j + 2)
    value = math.fsum(parts)
    return value, remainder + 4 * np.finfo(float).eps * value


def zeta(s: float) -> float:
    """Riemann zeta for real s >= 1.2."""
    return zeta_with_error(s)[0]


def q_function(alpha: float) -> QValue:
    """Q(alpha) = alpha log alpha - alpha + 1."""
    alpha = float(alpha)
    if not alpha > 0:
        raise DomainError(f"Q is defined for alpha > 0, got {alpha}")
    return QValue(alpha, alpha * math.log(alpha) - (alpha - 1.0))


@functools.lru_cache(maxsize=4)
def _primes(limit: int) -> np.ndarray:
    return sieve_primes(limit).primes.astype(np.float64)


def _check_limit(prime_limit) -> int:
    prime_limit = int(prime_limit)
    if not 100 <= prime_limit <= PRIME_LIMIT_CAP:
        raise DomainError(f"prime_limit must lie in [100, {PRIME_LIMIT_CAP}], got {prime_limit}")
    return prime_limit


def _check_z(z) -> float:
    z = float(z)
    if not 0.0 <= z <= 2.0:
        raise DomainError(f"z must lie in [0, 2], got {z}")
    return z


def _cube_tail(M: float, P: int) -> float:
    return M / (2.0 * P * P)


def _product(log_terms: np.ndarray, prefactor: float, prime_limit: int, tail: float) -> EulerProductValue:
    value = prefactor * math.exp(math.fsum(log_terms.tolist()))
    return EulerProductValue(value, prime_limit, tail + ROUNDING_ALLOWANCE)


def _zeta2_power(c: float) -> float:
    return (math.pi**2 / 6.0) ** c


def _shifted_log_terms(w: float, p: np.ndarray, P: int) -> tuple[np.ndarray, float, float]:
    """Accelerated log-terms of (1 - w u) / (1 - u)**w, u = 1/p.

    log t_p = sum_j (w - w**j) u**j / j, so a2 = (w - w**2)/2 and, for |w| <= 1,
    |h_p| <= u**3 (2|w| / (3 (1 - u)) + |a2| u / (2 (1 - u**2))).
    Returns (terms, a2, tail).
    """
    a2 = (w - w * w) / 2.0
    u = 1.0 / p
    terms = np.log1p(-w * u) - w * np.log1p(-u) + a2 * np.log1p(-u * u)
    uP = 1.0 / P
    M = 2.0 * abs(w) / (3.0 * (1.0 - uP)) + abs(a2) * uP / (2.0 * (1.0 - uP * uP))
    return terms, a2, _cube_tail(M, P)


def lambda_fn(z: float, prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductValue:
    """lambda(z) = 1/Gamma(z+1) prod_p (1 + z/(p-1)) (1 - 1/p)**z, for 0 <= z <= 2."""
    z, P = _check_z(z), _check_limit(prime_limit)
    # (1 + z/(p-1)) (1 - 1/p)**z == (1 - w u) / (1 - u)**w with w = 1 - z
    terms, a2, tail = _shifted_log_terms(1.0 - z, _primes(P), P)
    return _product(terms, _zeta2_power(a2) / gamma(z + 1.0), P, tail)


def lambda_star_fn(z: float, prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductValue:
    """lambda*(z) = 1/Gamma(z+1) prod_p (1 + z/p) (1 - 1/p)**z, for 0 <= z <= 2."""
    z, P = _check_z(z), _check_limit(prime_limit)
    u = 1.0 / _primes(P)
    # log t_p = sum_j ((-1)**(j+1) z**j - z) u**j / j
    a2 = -(z + z * z) / 2.0
    terms = np.log1p(z * u) + z * np.log1p(-u) + a2 * np.log1p(-u * u)
    uP = 1.0 / P
    M = (z**3 / (1.0 - z * uP) + z / (1.0 - uP)) / 3.0 + abs(a2) * uP / (2.0 * (1.0 - uP * uP))
    return _product(terms, _zeta2_power(a2) / gamma(z + 1.0), P, _cube_tail(M, P))


def c0_constant(prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductValue:
    """prod_p (1 + 1/(p (p - 1 + sqrt(p**2 - p)))), the density of {k phi(k)} against sqrt(x)."""
    P = _check_limit(prime_limit)
    u = 1.0 / _primes(P)
    # term = u**2 / D with D = 1 - u + sqrt(1 - u) in [2 - 2u, 2], so term = u**2/2 + O(u**3)
    terms = np.log1p(u * u / (1.0 - u + np.sqrt(1.0 - u))) + 0.5 * np.log1p(-u * u)
    uP = 1.0 / P
    M = 1.0 / (2.0 * (1.0 - uP)) + uP / (8.0 * (1.0 - uP) ** 2) + uP / (4.0 * (1.0 - uP * uP))
    return _product(terms, _zeta2_power(0.5), P, _cube_tail(M, P))


def c1_c2_constants(A: int, prime_limit: int = DEFAULT_PRIME_LIMIT) -> tuple[EulerProductValue, EulerProductValue]:
    """Leading constants for k*A**omega(k) and k*A**Omega(k), both with prefactor 1/Gamma(1/A)."""
    if int(A) != A or A < 2:
        raise DomainError(f"A must be an integer >= 2, got {A}")
    P = _check_limit(prime_limit)
    z = 1.0 / int(A)
    p = _primes(P)
    pre = 1.0 / gamma(z)
    terms, a2, tail = _shifted_log_terms(1.0 - z, p, P)
    c1 = _product(terms, pre * _zeta2_power(a2), P, tail)
    # log of (1 - z u)**-1 (1 - u)**z is sum_j (z**j - z) u**j / j, |z**j - z| <= z
    u = 1.0 / p
    b2 = (z * z - z) / 2.0
    terms = z * np.log1p(-u) - np.log1p(-z * u) + b2 * np.log1p(-u * u)
    uP = 1.0 / P
    M = z / (3.0 * (1.0 - uP)) + abs(b2) * uP / (2.0 * (1.0 - uP * uP))
    c2 = _product(terms, pre * _zeta2_power(b2), P, _cube_tail(M, P))
    return c1, c2


def g_function(s: float, prime_limit: int = DEFAULT_PRIME_LIMIT) -> EulerProductValue:
    """G(s) = prod_p (1 + (p**s - (p-1)**s) / (p**(2s) (p-1)**s)) for 1/2 <= s <= 2.

    At s = 1/2 the closed form :func:`c0_constant` is returned.
    """
    s = float(s)
    if not 0.5 <= s <= 2.0:
        raise DomainError(f"G is provided for 1/2 <= s <= 2, got {s}")
    P = _check_limit(prime_limit)
    if s == 0.5:
        return c0_constant(P)
    p = _primes(P)
    numer = -np.expm1(s * np.log1p(-1.0 / p))  # (p**s - (p-1)**s) / p**s
    logs = np.log1p(numer * np.exp(-s * (np.log(p) + np.log(p - 1.0))))
    beta = 1.0 + 2.0 * s
    tail = s * (float(P) ** -beta + float(P) ** (1.0 - beta) / (beta - 1.0))
    return _product(logs, 1.0, P, tail)


def f_identity_check(
    s: float,
    x_cap: int = 10**7,
    prime_limit: int = DEFAULT_PRIME_LIMIT,
) -> FIdentityReport:
    """Compare sum_{n in A_phi, n <= x_cap} n**-s with zeta(2s) G(s).

    The missing part of the series is bounded by partial summation, assuming
    N_phi(y) <= PHI_DENSITY_BOUND * sqrt(y) for y > x_cap:
    sum_{n > X} n**-s <= s C X**(1/2 - s) / (s - 1/2) - N(X) X**-s.
    """
    s = float(s)
    if not 0.6 <= s <= 2.0:
        raise DomainError(f"the F(s) check is provided for 0.6 <= s <= 2, got {s}")
    x_cap = int(x_cap)
    if x_cap < 10**4:
        raise DomainError(f"x_cap must be at least 10**4, got {x_cap}")

    lo, hi = k_range(FKind.PHI, x_cap)
    ns = products(FKind.PHI, lo, hi)
    ns = np.sort(ns[ns <= x_cap])[::-1].astype(np.float64)
    lhs = math.fsum((ns**-s).tolist())
    X = float(x_cap)
    truncation = s * PHI_DENSITY_BOUND * X ** (0.5 - s) / (s - 0.5) - ns.size * X**-s
    truncation = max(truncation, 0.0)

    z, z_err = zeta_with_error(2.0 * s)
    g = g_function(s, prime_limit)
    rhs = z * g.value
    rhs_err = rhs * math.expm1(g.tail_bound) + z_err * g.value * math.exp(g.tail_bound)
    rounding = 1e-12 * max(lhs, rhs)
    gap = abs(lhs - rhs)
    return FIdentityReport(s, x_cap, g.prime_limit, lhs, rhs, gap, float(truncation + rhs_err + rounding), truncation)
