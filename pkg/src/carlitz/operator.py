"""Additive operators of the Carlitz module and the polynomials built from them.

The T-action is rho_T(u) = u^q + T*u; it extends F_q-linearly and
multiplicatively to rho_M for every M in F_q[T].  rho_M is F_q-linear in u, so
it is determined by its coefficient vector (c_0, ..., c_d) with
rho_M(u) = sum c_i u^(q^i), c_0 = M, d = deg M.
"""

from __future__ import annotations

import functools

from .errors import CarlitzError, DomainError
from .padic import PadicCtx, PadicElem
from .poly import Poly, euler_phi, is_irreducible
from .series import Series

__all__ = [
    "XPoly",
    "AdditiveOperator",
    "carlitz_operator",
    "carlitz_act",
    "cyclotomic_poly",
    "brackets_D",
]


class XPoly:
    """A polynomial in one variable x with coefficients in F_q[T].

    Dense ascending representation; coefficient arithmetic is exact.
    """

    __slots__ = ("gf", "coeffs")

    def __init__(self, gf, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.gf = gf
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, gf):
        return cls(gf, ())

    @classmethod
    def from_terms(cls, gf, terms: dict):
        if not terms:
            return cls.zero(gf)
        n = max(terms)
        vec = [Poly.zero(gf)] * (n + 1)
        for e, c in terms.items():
            vec[e] = c
        return cls(gf, vec)

    def deg(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def coeff(self, e: int) -> Poly:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else Poly.zero(self.gf)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(
            self.gf,
            [self.coeff(i) + other.coeff(i) for i in range(n)],
        )

    def __neg__(self):
        return XPoly(self.gf, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return XPoly.zero(self.gf)
        out = {}
        zero = Poly.zero(self.gf)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if b.is_zero():
                    continue
                out[i + j] = out.get(i + j, zero) + a * b
        return XPoly.from_terms(self.gf, out)

    def scale(self, c: Poly):
        return XPoly(self.gf, [c * a for a in self.coeffs])

    def __divmod__(self, other: "XPoly"):
        """Division; the divisor's leading coefficient must be a unit constant."""
        if other.is_zero():
            raise DomainError("division by the zero polynomial")
        lead = other.coeffs[-1]
        if lead.degree != 0:
            raise DomainError("divisor leading coefficient must be a nonzero constant")
        linv = self.gf.inv(lead.coeffs[0])
        rem = list(self.coeffs)
        dq = self.deg() - other.deg()
        if dq < 0:
            return XPoly.zero(self.gf), self
        quo = [Poly.zero(self.gf)] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[other.deg() + k].scale(linv)
            quo[k] = c
            if not c.is_zero():
                for j, b in enumerate(other.coeffs):
                    rem[j + k] = rem[j + k] - c * b
        return XPoly(self.gf, quo), XPoly(self.gf, rem)

    def derivative(self):
        gf = self.gf
        p = gf.p
        return XPoly(
            gf,
            [c.scale(i % p) for i, c in enumerate(self.coeffs[1:], start=1)],
        )

    def evaluate(self, u: Poly) -> Poly:
        """Value at a polynomial argument (Horner)."""
        acc = Poly.zero(self.gf)
        for c in reversed(self.coeffs):
            acc = acc * u + c
        return acc

    def evaluate_in(self, ctx: PadicCtx, a: PadicElem) -> PadicElem:
        acc = ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * a + ctx.elem(c)
        return acc

    def evaluate_series(self, a: Series) -> Series:
        cls = type(a)
        acc = cls.zero(a.gf)
        for c in reversed(self.coeffs):
            acc = acc * a + cls.from_poly(c)
        return acc

    def __eq__(self, other):
        return isinstance(other, XPoly) and self.gf == other.gf and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.gf, self.coeffs))

    def __str__(self):
        parts = []
        for e in range(self.deg(), -1, -1):
            c = self.coeff(e)
            if c.is_zero():
                continue
            xs = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
            multi = len([1 for t in c.coeffs if t]) > 1
            if e == 0:
                parts.append(f"({c})" if multi else str(c))
            elif c == Poly.one(self.gf):
                parts.append(xs)
            else:
                parts.append(f"({c})*{xs}" if multi else f"{c}*{xs}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"XPoly({self})"


class AdditiveOperator:
    """The operator rho_M: u -> sum c_i u^(q^i) with c_0 = M."""

    __slots__ = ("gf", "coeffs")

    def __init__(self, gf, coeffs):
        coeffs = list(coeffs)
        while len(coeffs) > 1 and coeffs[-1].is_zero():
            coeffs.pop()
        self.gf = gf
        self.coeffs = tuple(coeffs)

    @property
    def M(self) -> Poly:
        return self.coeffs[0]

    def to_xpoly(self) -> XPoly:
        return XPoly.from_terms(
            self.gf,
            {self.gf.q ** i: c for i, c in enumerate(self.coeffs) if not c.is_zero()},
        )

    def apply(self, u):
        """Apply in u's ring, using that ring's q-power Frobenius."""
        gf = self.gf
        if isinstance(u, Poly):
            acc = Poly.zero(gf)
            p = u
            for c in self.coeffs:
                if not c.is_zero():
                    acc = acc + c * p
                p = p.frob_q()
            return acc
        if isinstance(u, PadicElem):
            ctx = u.ctx
            acc = ctx.zero()
            p = u
            q = gf.q
            for c in self.coeffs:
                if not c.is_zero():
                    acc = acc + ctx.elem(c) * p
                p = p ** q
            return acc
        if isinstance(u, Series):
            cls = type(u)
            acc = cls.zero(gf)
            p = u
            for c in self.coeffs:
                if not c.is_zero():
                    acc = acc + cls.from_poly(c) * p
                p = p.frobenius()
            return acc
        raise DomainError(f"cannot apply an additive operator to {type(u).__name__}")

    def __eq__(self, other):
        return (
            isinstance(other, AdditiveOperator)
            and self.gf == other.gf
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.gf, self.coeffs))

    def __repr__(self):
        return f"AdditiveOperator({', '.join(str(c) for c in self.coeffs)})"


@functools.lru_cache(maxsize=None)
def _operator_cached(M: Poly) -> AdditiveOperator:
    gf = M.gf
    d = M.degree
    if d < 0:
        return AdditiveOperator(gf, [Poly.zero(gf)])
    # coefficient vectors of rho_{T^k} for k = 0..d, built by the T-step
    # c'_j = c_{j-1}^q + T*c_j
    T = Poly.T(gf)
    zero = Poly.zero(gf)
    pow_vecs = [[Poly.one(gf)]]
    for _ in range(d):
        prev = pow_vecs[-1]
        nxt = []
        for j in range(len(prev) + 1):
            below = prev[j - 1].frob_q() if j >= 1 else zero
            here = T * prev[j] if j < len(prev) else zero
            nxt.append(below + here)
        pow_vecs.append(nxt)
    out = [zero] * (d + 1)
    for k, a in enumerate(M.coeffs):
        if not a:
            continue
        vec = pow_vecs[k]
        for j, c in enumerate(vec):
            out[j] = out[j] + c.scale(a)
    return AdditiveOperator(gf, out)


def carlitz_operator(M: Poly) -> AdditiveOperator:
    """The additive operator rho_M, with coefficient degrees (deg M - i)*q^i."""
    return _operator_cached(M)


@functools.lru_cache(maxsize=None)
def _operator_coeffs_mod(M: Poly, ctx: PadicCtx):
    # Same T-step recursion as _operator_cached, but with every coefficient
    # reduced in the quotient ring as we go.  Reduction commutes with the
    # q-power map in characteristic p, so this agrees with reducing the exact
    # operator -- and it stays cheap even when deg M is large enough that the
    # exact coefficients (degree (deg M - i)*q^i) would be enormous.
    d = M.degree
    if d < 0:
        return (ctx.zero(),)
    T = ctx.elem(Poly.T(ctx.gf))
    zero = ctx.zero()
    q = ctx.gf.q
    pow_vecs = [[ctx.one()]]
    for _ in range(d):
        prev = pow_vecs[-1]
        nxt = []
        for j in range(len(prev) + 1):
            below = prev[j - 1] ** q if j >= 1 else zero
            here = T * prev[j] if j < len(prev) else zero
            nxt.append(below + here)
        pow_vecs.append(nxt)
    out = [zero] * (d + 1)
    for k, a in enumerate(M.coeffs):
        if not a:
            continue
        for j, c in enumerate(pow_vecs[k]):
            out[j] = out[j] + c.scale(a)
    return tuple(out)


def carlitz_act(M: Poly, u):
    """rho_M(u) in whichever ring u lives in."""
    if isinstance(u, PadicElem):
        ctx = u.ctx
        acc = ctx.zero()
        p = u
        q = u.ctx.gf.q
        for c in _operator_coeffs_mod(M, ctx):
            if not c.is_zero():
                acc = acc + c * p
            p = p ** q
        return acc
    return carlitz_operator(M).apply(u)


def brackets_D(gf, n: int):
    """The pair ([n], D_n): [n] = T^(q^n) - T, D_0 = 1, D_n = [n] * D_{n-1}^q."""
    if n < 0:
        raise DomainError("index must be nonnegative")
    T = Poly.T(gf)
    q = gf.q
    D = Poly.one(gf)
    bracket = Poly.zero(gf)
    for k in range(1, n + 1):
        bracket = Poly.one(gf).shift(q ** k) - T
        D = bracket * D.frob_q()
    if n == 0:
        return Poly.zero(gf), D
    return bracket, D


def cyclotomic_poly(P: Poly, n: int = 1) -> XPoly:
    """The division polynomial rho_{P^n}(x) / rho_{P^(n-1)}(x), exact in x."""
    if n < 1:
        raise DomainError("exponent must be positive")
    if P.degree < 1 or not is_irreducible(P):
        raise DomainError(f"{P} is not irreducible")
    num = carlitz_operator(P ** n).to_xpoly()
    den = carlitz_operator(P ** (n - 1)).to_xpoly()
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise CarlitzError("inexact division while forming a cyclotomic polynomial")
    assert quo.deg() == euler_phi(P ** n) if n >= 1 else True
    return quo
