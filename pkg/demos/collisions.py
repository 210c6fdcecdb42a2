"""
When k f(k) is not injective
============================

k tau(k) and k omega(k) repeat values; k phi(k) never does.
"""

from collections import Counter

from selfprod import find_collisions

tau = find_collisions("tau", 10**5)
print("first tau collisions:", [(r.n, r.k1, r.k2) for r in tau[:5]])

# 18m and 27m collide when gcd(m, 6) = 1, at n = 108 m tau(m)
print([(r.n, r.k1, r.k2) for r in tau if r.k1 % 18 == 0 and 2 * r.k2 == 3 * r.k1][:5])

omega = find_collisions("omega", 10**5)
print("omega pairs (6q, 9q):", [(r.k1, r.k2) for r in omega[:6]])

# some n have three or more preimages
triples = [n for n, c in Counter(r.n for r in tau).items() if c >= 3]
print("n with >= 3 preimages under k tau(k):", triples[:5])

print("phi collisions up to 10**6:", find_collisions("phi", 10**6))
