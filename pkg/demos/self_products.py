"""
Counting n = k f(k)
===================

How many n <= x are of the form k tau(k), k omega(k), k Omega(k) or k phi(k),
next to the leading terms x/sqrt(log x), x/log log x and c0 sqrt(x).
"""

import math

from selfprod import c0_constant, enumerate_representable

s = enumerate_representable("phi", 100)
print("k phi(k) <= 100:", s.members().tolist())

c0 = c0_constant().value
print(f"{'x':>12} {'tau':>12} {'omega':>12} {'Omega':>12} {'phi':>8}")
for e in range(3, 9):
    x = 10**e
    counts = [enumerate_representable(kind, x).count for kind in ("tau", "omega", "bigomega", "phi")]
    print(f"{x:>12} " + " ".join(f"{c:>12}" for c in counts[:3]) + f" {counts[3]:>8}")

# normalised: tau is only known up to a constant, phi tends to c0
for e in (4, 6, 8):
    x = 10**e
    t = enumerate_representable("tau", x).count * math.sqrt(math.log(x)) / x
    p = enumerate_representable("phi", x).count / math.sqrt(x)
    print(f"x=10^{e}: N_tau sqrt(log x)/x = {t:.4f}   N_phi/sqrt(x) = {p:.4f}   c0 = {c0:.4f}")
