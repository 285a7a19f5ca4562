"""Parking-function symmetric functions and the series they come from.

PF_n is the Frobenius characteristic of the parking representation.  Its
generating function is a compositional inverse, and its k-parking and type B
cousins fall out of the same series machinery.
"""
from umbracomb import TruncSeries, hstar, omega, pf, pf_k, pf_typeB
from umbracomb.symfunc import dimension, h_series

for n in range(1, 5):
    print(f"PF_{n} = {pf(n)}    (dimension {dimension(pf(n))})")

order = 6
t = TruncSeries.variable(order)
tpf = TruncSeries([0, 1] + [pf(i) for i in range(1, order)], order)
print("\nt PF(t) composed with t/H(t) returns t:", tpf.compose(t / h_series(order)) == t)

print("\nk = 2:")
for n in range(1, 4):
    print(f"  PF_{n}^(2) = {pf_k(n, 2)}")

print("\ntype B, [t^n] H(t)^n:")
for n in range(1, 4):
    print(f"  PF_{n}^B = {pf_typeB(n)}")

print("\nMacdonald's h*_n and the omega relation:")
for n in range(1, 5):
    print(f"  h*_{n} = {hstar(n)}   (-1)^n omega(h*_n) == PF_n: {omega(hstar(n)) * (-1) ** n == pf(n)}")
