"""Power-residue symbols, the reciprocity law for F_q[T], residue-degree
predicates, Newton polygons, and the (q-1)-st power Kummer map on V_q.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import CarlitzError, DomainError
from .operator import XPoly, carlitz_act, carlitz_operator
from .poly import Poly, euler_phi, is_irreducible, pow_mod, poly_gcd
from .series import InfLaurent, VqElem

__all__ = [
    "residue_symbol",
    "check_reciprocity",
    "residue_degree_kummer",
    "residue_degree_cyclotomic",
    "xi_poly",
    "NewtonPolygon",
    "newton_polygon",
    "kummer_map",
    "kummer_solve",
    "star_action",
]


def _check_symbol_pre(A: Poly, P: Poly, d: int):
    gf = P.gf
    if d < 1 or (gf.q - 1) % d != 0:
        raise DomainError(f"d = {d} does not divide q - 1 = {gf.q - 1}")
    if P.degree < 1 or not P.is_monic() or not is_irreducible(P):
        raise DomainError(f"{P} is not monic irreducible")
    if (A % P).is_zero():
        raise DomainError(f"{A} is not coprime to {P}")


def residue_symbol(A: Poly, P: Poly, d: int) -> int:
    """The d-th power residue symbol (A/P)_d = A^((q^r - 1)/d) mod P in F_q^*.

    The symbol is 1 exactly when A is a d-th power residue mod P.
    """
    _check_symbol_pre(A, P, d)
    gf = P.gf
    r = P.degree
    e = (gf.q ** r - 1) // d
    val = pow_mod(A % P, e, P)
    if not val.is_const():
        raise CarlitzError(
            f"symbol computation left the constant field: {val} mod {P}"
        )
    return val[0]


def check_reciprocity(P: Poly, Q: Poly, d: int):
    """(P/Q)_d * (Q/P)_d^{-1} against the sign (-1)^((q-1)/d * deg P * deg Q).

    Returns (lhs, rhs, holds).
    """
    gf = P.gf
    if P == Q:
        raise DomainError("the pair must be coprime")
    lhs = gf.mul(residue_symbol(P, Q, d), gf.inv(residue_symbol(Q, P, d)))
    exp = ((gf.q - 1) // d) * P.degree * Q.degree
    rhs = gf.pow(gf.neg(1), exp)
    return lhs, rhs, lhs == rhs


def _mult_order_in_gf(gf, a: int) -> int:
    if a == 0:
        raise DomainError("zero has no multiplicative order")
    k, x = 1, a
    while x != 1:
        x = gf.mul(x, a)
        k += 1
    return k


def residue_degree_kummer(A: Poly, P: Poly, d: int) -> int:
    """Residue degree of P in the degree-d radical extension adjoining a
    d-th root of A: the multiplicative order of the residue symbol."""
    return _mult_order_in_gf(P.gf, residue_symbol(A, P, d))


def residue_degree_cyclotomic(P: Poly, A: Poly) -> int:
    """Residue degree of P in the A-division-point extension: the
    multiplicative order of P in (F_q[T]/A)^*."""
    if poly_gcd(P, A).degree != 0:
        raise DomainError(f"{P} is not coprime to {A}")
    base = P % A
    one = Poly.one(P.gf)
    cap = euler_phi(A)
    x = base
    for k in range(1, cap + 1):
        if x == one:
            return k
        x = (x * base) % A
    raise CarlitzError(f"order of {P} mod {A} exceeds the group order {cap}")


def xi_poly(A: Poly) -> XPoly:
    """The polynomial Xi with rho_A(u) = u * Xi(u^(q-1)): the i-th operator
    coefficient lands at v-exponent (q^i - 1)/(q - 1)."""
    if A.is_zero():
        raise DomainError("zero polynomial has no Xi")
    gf = A.gf
    q = gf.q
    op = carlitz_operator(A)
    return XPoly.from_terms(
        gf,
        {(q ** i - 1) // (q - 1): c for i, c in enumerate(op.coeffs) if not c.is_zero()},
    )


class NewtonPolygon:
    """Lower convex hull of (exponent, coefficient valuation) points."""

    __slots__ = ("vertices", "segments")

    def __init__(self, vertices):
        self.vertices = list(vertices)
        segs = []
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            segs.append((Fraction(y1 - y0, x1 - x0), Fraction(x1 - x0)))
        self.segments = segs

    def slopes(self):
        return [s for s, _ in self.segments]

    def root_valuations(self):
        """(valuation, count) pairs: a segment of slope m and length l carries
        l roots of valuation -m."""
        return [(-s, l) for s, l in self.segments]

    def __eq__(self, other):
        return isinstance(other, NewtonPolygon) and self.vertices == other.vertices

    def __repr__(self):
        return f"NewtonPolygon(vertices={self.vertices})"


def newton_polygon(f: XPoly, val=None) -> NewtonPolygon:
    """Newton polygon of f with respect to a coefficient valuation.

    Default valuation is the one at infinity, v = -deg.  Works for any XPoly;
    pass ``val`` to value coefficients differently.
    """
    if f.is_zero():
        raise DomainError("zero polynomial has no Newton polygon")
    if val is None:
        val = lambda c: -c.degree
    pts = [(e, val(c)) for e, c in enumerate(f.coeffs) if not c.is_zero()]
    # Andrew-monotone-chain lower hull, left to right
    hull = []
    for p in pts:
        while len(hull) >= 2:
            (x0, y0), (x1, y1) = hull[-2], hull[-1]
            if (x1 - x0) * (p[1] - y0) <= (p[0] - x0) * (y1 - y0):
                hull.pop()
            else:
                break
        hull.append(p)
    return NewtonPolygon(hull)


def kummer_map(u: VqElem) -> InfLaurent:
    """kappa(u) = u^(q-1), which lands in the embedded base completion; errors
    with the offending s-digit index if it does not."""
    gf = u.gf
    w = u ** (gf.q - 1)
    return w.to_inf()


def kummer_solve(M: InfLaurent) -> VqElem:
    """One root of X^(q-1) = M in V_q (the rest are its F_q^*-multiples).

    Strategy: with m = v(M) (u-adic), M = (-T)^(-m) * U for a unit U; a root
    is s^m * Y with Y^(q-1) = U, found by Newton iteration from the residue.
    Solvable only when U has residue 1 — the residue field is F_q, where the
    only (q-1)-st power is 1; anything else is reported.
    """
    gf = M.gf
    q = gf.q
    if M.is_zero():
        raise DomainError("zero has no nonzero (q-1)-st root; kappa(0) = 0")
    m = M.v
    sign = gf.neg(1) if m % 2 else 1
    Tm = InfLaurent.monomial(gf, sign, -m)  # (-1)^m T^m sits at u-exponent -m
    U = M * Tm
    eta = U.coeffs[0]
    if eta != 1:
        raise CarlitzError(
            f"residue {gf.fmt_elem(eta)} is not a (q-1)-st power in F_q; "
            "no root exists in this completion"
        )
    prec = U.prec
    if prec is None:
        prec = max(10, 2 * (q - 1))
        U = U.truncate(prec)
    # Newton for g(Y) = Y^(q-1) - U; g'(Y) = -Y^(q-2) (since q-1 = -1 mod p)
    Y = InfLaurent.one(gf, prec)
    for _ in range(prec + 2):
        g = Y ** (q - 1) - U
        if g.is_zero():
            break
        dg = (Y ** (q - 2)).scale(gf.neg(1)) if q > 2 else InfLaurent.one(gf, prec)
        Y = Y - g / dg
    return VqElem.from_inf(Y).shifted(m)


def star_action(A: Poly, nu: InfLaurent) -> InfLaurent:
    """A acting on a kappa-image: kappa(rho_A(u)) for any u with kappa(u) = nu.

    Well defined because kappa collapses F_q^*-multiples and rho_A is
    F_q-linear.
    """
    if nu.is_zero():
        return nu
    u = kummer_solve(nu)
    return kummer_map(carlitz_act(A, u))
