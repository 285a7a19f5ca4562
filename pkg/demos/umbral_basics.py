"""A tour of the umbral engine: moments, dot products, inverses and special umbrae."""
from umbracomb import MomentSeq, TruncSeries, derivative, dot, evaluate, new_umbra, similar, special_umbra, umbra_to_genfun
from umbracomb.umbral import moments_of, negate

alpha = new_umbra(MomentSeq.generic(4), "alpha")
gamma = similar(alpha, "gamma")
print("E[alpha^2]            =", evaluate(alpha ** 2))
print("E[alpha gamma]        =", evaluate(alpha * gamma))
print("E[(alpha + gamma)^3]  =", evaluate((alpha + gamma) ** 3))
print("third moment of 2.alpha:", dot(2, alpha).moments[3])

# -1.alpha has reciprocal generating function
inv = dot(-1, alpha)
print("\nf(alpha,t) f(-1.alpha,t) == 1:", umbra_to_genfun(alpha) * umbra_to_genfun(inv) == TruncSeries.one(4))
print("f(alpha_D,t) == 1 + t f(alpha,t):", umbra_to_genfun(derivative(alpha)) == umbra_to_genfun(alpha).shift() + 1)

bell = special_umbra("bell", 8)
print("\nBell umbra moments:", [str(bell.moments[i]) for i in range(1, 9)])
print("singleton genfun:  ", umbra_to_genfun(special_umbra("singleton", 5)))

theta = special_umbra("theta_bar", 5)
eps = special_umbra("eps_bar", 5)
print("\ntheta_bar moments:   ", [str(theta.moments[i]) for i in range(1, 4)])
print("-1.(-eps_bar) moments:", [str(m) for m in moments_of(dot(-1, negate(eps)), 3).moments])
