"""
Euler products with certified tails
===================================

Each value comes with a bound on |log(true/computed)| from the primes past
the truncation point.
"""

import math

from selfprod import (
    c0_constant,
    c1_c2_constants,
    f_identity_check,
    g_function,
    lambda_fn,
    lambda_star_fn,
    zeta,
)

c0 = c0_constant(10**6)
print(f"c0 = {c0.value:.15f}  +- {c0.tail_bound:.1e}")

# the same constant from G(s) as s -> 1/2
print("G(0.5001) =", g_function(0.5001).value)

for P in (10**3, 10**4, 10**5, 10**6):
    v = lambda_fn(0.5, P)
    print(f"lambda(0.5) at P={P:>7}: {v.value:.15f}  tail {v.tail_bound:.1e}")

print("lambda*(1) =", lambda_star_fn(1).value, " 6/pi^2 =", 6 / math.pi**2)

# c1(A) is lambda(1/A) / A, because Gamma(1 + z) = z Gamma(z)
for A in (2, 3, 4, 5):
    c1, c2 = c1_c2_constants(A)
    print(f"A={A}: c1={c1.value:.12f}  lambda(1/A)/A={lambda_fn(1 / A).value / A:.12f}  c2={c2.value:.12f}")

print("zeta(1.5) =", zeta(1.5))

# sum of n**-s over n = k phi(k) against zeta(2s) G(s)
for s in (0.6, 1.0, 2.0):
    r = f_identity_check(s, 10**7)
    print(f"s={s}: lhs={r.lhs:.10f} rhs={r.rhs:.10f} gap={r.gap:.1e} bound={r.bound:.1e} pass={r.passed}")
