"""
Solving k phi(k) = n
====================

The largest prime of n fixes the largest prime of k, and peeling it off
repeats the argument, so at most one k exists.
"""

import numpy as np

from selfprod import invert_phi_many, invert_phi_selfproduct, sieve_primes

primes = sieve_primes(10**6)
# 999983 is prime, so 999983 * 999982 = k phi(k) for k = 999983
for n in (1, 4, 12, 8, 999983 * 999982, 2**39, 2**39 + 1):
    print(n, "->", invert_phi_selfproduct(n, primes))

# a whole range at once; 0 marks "no solution"
ns = np.arange(1, 10**6 + 1)
ks = invert_phi_many(ns, primes)
hits = np.flatnonzero(ks)
print(len(hits), "values of k phi(k) up to 10**6; the last few:")
print(list(zip(ns[hits[-5:]].tolist(), ks[hits[-5:]].tolist())))
