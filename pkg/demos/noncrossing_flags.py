"""Noncrossing partition lattices, maximal chains and the flag symmetric function."""
from umbracomb import chain_symfunc, enumerate_nc, flag_vectors, maximal_chains, omega, pf, special_umbra, volume_umbral

for n in range(1, 7):
    print(f"|NC_{n}| = {len(enumerate_nc(n)):3d}   maximal chains {maximal_chains(n)}")

print("\nType B:")
for n in range(1, 4):
    print(f"  |NC^B_{n}| = {len(enumerate_nc(n, 'B'))}   maximal chains {maximal_chains(n, 'B')} = {n}^{n}")

n = 3
fv = flag_vectors(n)
print(f"\nFlag vectors of NC_{n + 1}:")
for s in fv.alpha:
    print(f"  S={set(s) or '{}'}: alpha={fv.alpha[s]}  beta={fv.beta[s]}")

# sum_S beta(S) Q_S is symmetric; omega of it is PF_n
f = chain_symfunc(n)
print(f"\nF_NC{n + 1} = {f}")
print("omega(F) == PF_n:", omega(f) == pf(n))
print("E[V_n(eps_bar)] == F:", volume_umbral(n, "A", special_umbra("eps_bar", n).moments) == f)
