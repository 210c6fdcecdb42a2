"""
Arithmetic tables from a segmented sieve
========================================

tau, omega, Omega and phi over any window [lo, hi), even far from 1.
"""

import numpy as np

from selfprod import factorize, sieve_primes, sieve_table

primes = sieve_primes(10**6)
print(len(primes), "primes up to", primes.limit)

# a window near 10**12; the prime table only needs to reach its square root
lo = 10**12
tau = sieve_table("TAU", lo, lo + 10, primes)
phi = sieve_table("PHI", lo, lo + 10, primes)
for n in range(lo, lo + 10):
    print(n, tau[n], phi[n], factorize(n, primes).factors)

# omega <= Omega everywhere, equality exactly on squarefree n
w = sieve_table("OMEGA", 1, 10**6 + 1, primes).values
W = sieve_table("BIG_OMEGA", 1, 10**6 + 1, primes).values
sf = sieve_table("SQUAREFREE", 1, 10**6 + 1, primes).values.astype(bool)
print("squarefree share below 10**6:", sf.mean(), "(6/pi**2 =", 6 / np.pi**2, ")")
print("omega == Omega iff squarefree:", np.array_equal(w == W, sf))
