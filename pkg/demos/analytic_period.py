"""Truncated analytic series over the completion at infinity.

The additive exponential e(z) = sum z^(q^n) / D_n linearizes the Carlitz
action: e(Tz) = rho_T(e(z)).  Its period is approximated by exact rational
partial products whose expansions form a fast Cauchy sequence, and rank-one
Eisenstein-type lattice sums obey an exact scaling law.  Every truncation
carries a certificate of term valuations.
"""

from carlitz.analytic import Lattice, SeriesBudget, carlitz_exp, eisenstein, period_partial
from carlitz.gf import GF
from carlitz.operator import carlitz_act
from carlitz.poly import Poly
from carlitz.series import VqElem

gf = GF(3)
T = Poly.T(gf)
budget = SeriesBudget(term_count=8, degree_bound=4, precision=30)

print("--- the additive exponential ---")
z = VqElem.monomial(gf, 1, 2, prec=40)
e, cert = carlitz_exp(z, budget, with_certificate=True)
print(f"z       = {z}")
print(f"e(z)    = {e}")
print(f"certificate (term -> valuation): {cert}")
lhs = carlitz_exp(VqElem.from_poly(T) * z, budget)
rhs = carlitz_act(T, carlitz_exp(z, budget))
assert lhs.agrees(rhs, upto=min(lhs.prec, rhs.prec, 25))
print("functional equation e(Tz) = e(z)^q + T e(z) verified to 25 digits")
print()

print("--- partial products for the period ---")
prev = None
for N in range(1, 5):
    exact, expansion = period_partial(gf, N, prec=200)
    line = f"N = {N}: exact rational of degree {exact.num.degree - exact.den.degree}"
    if prev is not None:
        line += f", v_s(difference from N-1) = {(expansion - prev).valuation()}"
    print(line)
    prev = expansion
print("successive differences sink fast: the sequence is Cauchy")
print()

print("--- eisenstein-type lattice sums ---")
L = Lattice([VqElem.monomial(gf, 1, -1)])
E2, cert = eisenstein(L, 2, SeriesBudget(precision=20), with_certificate=True)
print(f"E_2(L)  = {E2}")
print(f"shell certificate: {cert}")
c = VqElem.from_poly(T)
Ec = eisenstein(L.scaled(c), 2, SeriesBudget(precision=20))
scaled = E2 * (c.inverse(prec=26) ** 4)
assert Ec.agrees(scaled, upto=min(Ec.prec, scaled.prec, 16))
print("scaling law E_2(cL) = c^-4 E_2(L) verified")
