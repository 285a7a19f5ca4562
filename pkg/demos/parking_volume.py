"""Parking functions, their volume polynomial, and the umbral theorem behind it.

Run: python3 demos/parking_volume.py
"""
import math

from umbracomb import MomentSeq, catalan, count_parking, dot, evaluate, new_umbra, orbit_representatives, volume_poly, volume_umbral

print("Parking functions of length n and their orbits under permutation:")
for n in range(1, 7):
    print(f"  n={n}: {count_parking(n):6d} = {n + 1}^{n - 1}   orbits {len(orbit_representatives(n)):4d} = C_{n}={catalan(n)}")

# The volume polynomial only depends on how often each entry occurs, so we
# keep one coefficient per exponent multiset.
n = 4
print(f"\nV_{n} aggregated by exponent multiset (from the definition):")
for mu, c in volume_poly(n, "A", "definition").items():
    print(f"  x^({mu}): {c}")

print("\nIt agrees with the closed form (n)_(l-1)/(m! mu!):",
      volume_poly(n, "A", "definition") == volume_poly(n, "A", "closed_form"))

# Generic moments a_1..a_n turn the identity into one between polynomials.
alpha = new_umbra(MomentSeq.generic(n), "alpha")
left = volume_umbral(n, "A", alpha.moments) * math.factorial(n)
right = evaluate(alpha * (alpha + dot(n, alpha)) ** (n - 1))
print(f"\n{n}! E[V_{n}(alpha_1..alpha_{n})] = {left}")
print(f"E[alpha (alpha + {n}.alpha)^{n - 1}]   = {right}")
print("equal:", left == right)
