"""
Integers by number of prime factors
===================================

pi_l(x) counts n <= x with omega(n) = l; pi*_l(x) keeps only squarefree n.
The predictions use lambda((l - 1)/log log x).
"""

from selfprod.harness import pi_l_rows

print(f"{'l':>3} {'pi_l':>8} {'pred':>10} {'pi*_l':>8} {'pred*':>10}")
for r in pi_l_rows(10**7):
    print(f"{r.l:>3} {r.pi_l:>8} {r.prediction:>10.0f} {r.pi_l_star:>8} {r.prediction_star:>10.0f}")
