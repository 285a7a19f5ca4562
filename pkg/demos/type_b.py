"""Type B parking functions: every sequence in [n]^n.

Three routes to n! PF^B_n: a power of the dot umbra, an Abel polynomial of
type B, and the type B volume polynomial.
"""
import math

from umbracomb import abel_poly, dot, evaluate, pf_typeB, special_umbra, volume_poly, volume_umbral

for n in range(1, 5):
    theta = special_umbra("theta_bar", n + 1)
    x = dot(-1, theta)
    routes = [
        evaluate(dot(n, theta) ** n),
        evaluate(abel_poly(n, x, x, "B")),
        volume_umbral(n, "B", theta.moments) * math.factorial(n),
    ]
    target = pf_typeB(n) * math.factorial(n)
    print(f"n={n}: n! PF^B_n = {target}")
    print(f"      all three routes agree: {all(r == target for r in routes)}")

print("\nV^B_3 by exponent multiset:", volume_poly(3, "B").to_dict())
