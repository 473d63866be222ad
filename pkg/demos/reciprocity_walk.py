"""Power reciprocity over F_q[T], end to end.

Computes d-th power residue symbols between small primes, verifies the
reciprocity law exhaustively in low degree, and then uses the two splitting
oracles (the symbol's multiplicative order, and the order of the prime in the
conductor's unit group) to predict how division polynomials factor -- checked
against an honest distinct-degree factorization.
"""

from carlitz.gf import GF
from carlitz.operator import cyclotomic_poly
from carlitz.poly import monic_irreducibles
from carlitz.reciprocity import (
    check_reciprocity,
    residue_degree_cyclotomic,
    residue_degree_kummer,
    residue_symbol,
)
from carlitz.residues import ddf

gf = GF(3)
irr = monic_irreducibles(gf, 2)
print(f"monic irreducibles of degree <= 2 over F_3: {[str(p) for p in irr]}")
print()

print("--- quadratic residue symbols ---")
for P in irr:
    for Q in irr:
        if P == Q:
            continue
        print(f"  ({P} / {Q})_2 = {gf.fmt_elem(residue_symbol(P, Q, 2))}")
print()

print("--- the reciprocity law, exhaustively ---")
checked = 0
for P in irr:
    for Q in irr:
        if P == Q:
            continue
        for d in (1, 2):
            lhs, rhs, holds = check_reciprocity(P, Q, d)
            assert holds
            checked += 1
print(f"law holds for all {checked} (P, Q, d) combinations")
print()

print("--- splitting oracles vs. actual factorizations ---")
for P in irr:
    for A in irr:
        if P == A:
            continue
        f = residue_degree_cyclotomic(P, A)
        psi = cyclotomic_poly(A, 1)
        degs = ddf(list(psi.coeffs), P)
        print(f"  P = {P!s:6} A = {A!s:6} predicted degree {f}, ddf says {degs}")
        assert all(d == f for d, _ in degs)
print()

P, A, d = irr[3], irr[0], 2
f = residue_degree_kummer(A, P, d)
print(f"radical side: x^{d} - {A} mod {P} factors in degree {f} "
      f"(symbol order {f})")
