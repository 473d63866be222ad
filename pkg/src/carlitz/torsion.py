"""Torsion points of the Carlitz module in both completions, division points,
and Dirichlet-style approximation by torsion.

Torsion here means the kernel of rho_M.  In the P-adic completion the relevant
kernel is that of rho_{P-1}, which splits completely: one simple root over
every residue class mod P, lifted by Hensel.  In V_q (the ramified extension
of the completion at infinity, uniformizer s) the kernel of rho_M consists of
q^{deg M} Laurent series; they are enumerated digit by digit, pruning partial
sums whose image under rho_M can no longer be cancelled by any tail.
"""

from __future__ import annotations

import json

from .errors import BelowPrecision, CarlitzError, DomainError, PrecisionError
from .operator import carlitz_act, carlitz_operator
from .padic import PadicCtx, PadicElem, hensel_lift
from .poly import Poly
from .series import VqElem

__all__ = [
    "TorsionSetPadic",
    "TorsionSetVq",
    "torsion_padic",
    "torsion_vq",
    "divide_T",
    "completed_action",
    "division_chain",
    "dirichlet_approx",
]


class TorsionSetPadic:
    """All q^{deg P} roots of rho_{P-1} in F_q[T]/P^N."""

    __slots__ = ("ctx", "order", "points")

    def __init__(self, ctx: PadicCtx, order: Poly, points):
        self.ctx = ctx
        self.order = order
        self.points = list(points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, x: PadicElem):
        return x in self.points

    def to_json(self) -> str:
        return json.dumps(
            {
                "q": self.ctx.gf.q,
                "P": str(self.ctx.P),
                "order": str(self.order),
                "precision": self.ctx.N,
                "points": sorted(str(x) for x in self.points),
            }
        )


class TorsionSetVq:
    """All q^{deg M} roots of rho_M in V_q, as truncated s-series."""

    __slots__ = ("order", "prec", "points")

    def __init__(self, order: Poly, prec: int, points):
        self.order = order
        self.prec = prec
        self.points = list(points)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, x: VqElem):
        return any(x.agrees(p) for p in self.points)

    def to_json(self) -> str:
        return json.dumps(
            {
                "q": self.order.gf.q,
                "M": str(self.order),
                "precision": self.prec,
                "points": sorted(str(x) for x in self.points),
            }
        )


def torsion_padic(P: Poly, N: int) -> TorsionSetPadic:
    """Lift every residue class mod P to a root of rho_{P-1} mod P^N.

    rho_{P-1}(x) is congruent to x^{q^d} - x mod P (d = deg P), so each of the
    q^d residue classes carries exactly one simple root; its x-derivative is
    the unit P-1, so Hensel applies everywhere.
    """
    ctx = PadicCtx(P, N)
    order = P - Poly.one(P.gf)
    f = carlitz_operator(order).to_xpoly()
    points = []
    for r in ctx.residues():
        points.append(hensel_lift(f, ctx.elem(r), ctx))
    return TorsionSetPadic(ctx, order, points)


def _slope_data(M: Poly):
    """s-valuations of the operator coefficients, indexed by Frobenius power."""
    gf = M.gf
    e = gf.q - 1
    op = carlitz_operator(M)
    return [
        (i, -e * c.degree) for i, c in enumerate(op.coeffs) if not c.is_zero()
    ], op


def min_separating_prec(M: Poly) -> int:
    """Smallest s-precision that tells all q^{deg M} roots of rho_M apart.

    Distinct roots differ by a nonzero root, of valuation at most
    (deg M - 1)(q-1) - 1; one digit past that suffices.
    """
    return (M.degree - 1) * (M.gf.q - 1) if M.degree >= 1 else 1


def torsion_vq(M: Poly, prec: int) -> TorsionSetVq:
    """All roots of rho_M in V_q, to the given s-adic precision.

    Digit-by-digit search: a partial sum x with digits at exponents < k is
    viable when every known digit of rho_M(x) sits at an exponent reachable by
    the tail's image, i.e. at >= min_i (v(c_i) + q^i * k).  Additivity of
    u -> u^{q^i} makes the update after appending a digit exact and cheap.
    """
    if M.is_zero():
        raise DomainError("torsion of the zero polynomial is everything")
    gf = M.gf
    q = gf.q
    d = M.degree
    sep = min_separating_prec(M)
    if prec <= sep - 1 and d >= 2:
        raise PrecisionError(
            f"precision {prec} cannot separate the roots; need at least {sep}",
            needed=sep,
        )
    coeff_vals, op = _slope_data(M)
    if d == 0:
        return TorsionSetVq(M, prec, [VqElem.zero(gf, prec)])

    def tail_floor(k: int) -> int:
        # least s-exponent the digits at exponents >= k can still reach
        return min(v + (q ** i) * k for i, v in coeff_vals)

    start = -1  # no root has valuation below -1
    # candidates: (digits dict of the partial sum, digits dict of its image)
    cands = [({}, {})]
    for k in range(start, prec):
        floor_next = tail_floor(k + 1)
        # image digits contributed by a unit digit a at exponent k:
        # c_i * a^{q^i} * s^{k q^i}; precompute per nonzero coefficient
        contrib = []
        for i, _ in coeff_vals:
            c = op.coeffs[i]
            terms = [
                ((q - 1) * (-j) + k * (q ** i), (1 if (j % 2 == 0) else -1), cj)
                for j, cj in enumerate(c.coeffs)
                if cj
            ]
            contrib.append((i, terms))
        nxt = []
        for digits, image in cands:
            for a in range(q):
                if a == 0:
                    new_digits, new_image = digits, image
                else:
                    new_digits = dict(digits)
                    new_digits[k] = a
                    new_image = dict(image)
                    for i, terms in contrib:
                        apow = gf.pow(a, q ** i)
                        for exp, sgn, cj in terms:
                            val = gf.mul(cj, apow)
                            if sgn < 0:
                                val = gf.neg(val)
                            cur = gf.add(new_image.get(exp, 0), val)
                            if cur:
                                new_image[exp] = cur
                            else:
                                new_image.pop(exp, None)
                if all(e >= floor_next for e in new_image):
                    nxt.append((new_digits, new_image))
        cands = nxt
    expected = q ** d
    if len(cands) != expected:
        raise PrecisionError(
            f"found {len(cands)} root truncations, expected {expected}; "
            f"increase precision beyond {prec}",
            needed=prec + 1,
        )
    points = [VqElem.from_terms(gf, digs, prec) for digs, _ in cands]
    return TorsionSetVq(M, prec, points)


# torsion sets are pure functions of (M, prec); memoize for the test suite
_vq_cache: dict = {}


def torsion_vq_cached(M: Poly, prec: int) -> TorsionSetVq:
    key = (M, prec)
    if key not in _vq_cache:
        _vq_cache[key] = torsion_vq(M, prec)
    return _vq_cache[key]


def divide_T(u: VqElem, prec: int = None) -> list:
    """The q solutions v of v^q + T*v = u, canonical branch first.

    The canonical branch is the fixed point of v <- (u - v^q)/T, which is the
    unique solution of maximal valuation; the others differ from it by the
    nonzero elements of the kernel of rho_T (the multiples of s^{-1}).
    """
    gf = u.gf
    q = gf.q
    T_inv = VqElem.monomial(gf, gf.neg(1), q - 1)  # 1/T = -s^(q-1)
    try:
        vu = u.valuation()
    except BelowPrecision:
        vu = u.prec
    if vu != float("inf") and vu <= -q:
        raise PrecisionError(
            f"argument valuation {vu} <= -{q}; the contraction does not converge"
        )
    if u.prec is None and not u.is_zero():
        # exact nonzero input: the fixed point is an infinite series, so a
        # working precision is needed; default to a comfortable window
        work = prec if prec is not None else u.v + 10 * (q - 1)
        u = u.truncate(work)
    elif prec is not None:
        u = u.truncate(prec)
    if u.prec is None:
        budget = 2
    else:
        budget = u.prec - min(vu if vu != float("inf") else 0, 0) + q + 2
    v = VqElem.zero(gf)
    for _ in range(max(budget, 4)):
        v_new = (u - v.frobenius()) * T_inv
        if v_new == v:
            break
        v = v_new
    out = [v]
    for z in range(1, q):
        out.append(v + VqElem.monomial(gf, z, -1))
    return out


def division_chain(u: VqElem, depth: int) -> list:
    """Canonical iterated T-division points v_{-1}, ..., v_{-depth}."""
    chain = []
    cur = u
    for _ in range(depth):
        cur = divide_T(cur)[0]
        chain.append(cur)
    return chain


def completed_action(M, u: VqElem, branch: str = "canonical") -> VqElem:
    """Action of a Laurent series M = sum a_k T^k on u.

    The polynomial part acts through iterated rho_T; each principal-part term
    a_{-k} T^{-k} contributes a_{-k} times the canonical k-fold T-division
    point of u.  Tail term valuations must eventually increase strictly
    (slope q-1 per division step); the sum is truncated once they pass the
    working precision.
    """
    if branch != "canonical":
        raise DomainError(f"unknown branch policy {branch!r}")
    gf = u.gf
    if isinstance(M, Poly):
        return carlitz_act(M, u)
    # M is an InfLaurent: u-exponent k corresponds to T^{-k}
    if M.is_zero():
        return VqElem.zero(gf)
    acc = VqElem.zero(gf)
    # polynomial part: u-exponents <= 0
    poly_coeffs = {}
    depth = 0
    for k, c in M.terms():
        if k <= 0:
            poly_coeffs[-k] = c
        else:
            depth = max(depth, k)
    if poly_coeffs:
        n = max(poly_coeffs)
        vec = [poly_coeffs.get(i, 0) for i in range(n + 1)]
        acc = acc + carlitz_act(Poly(gf, vec), u)
    if depth:
        chain = division_chain(u, depth)
        target = u.prec if u.prec is not None else None
        prev_val = None
        for k in range(1, depth + 1):
            a = M.digit(k) if (M.prec is None or k < M.prec) else 0
            vk = chain[k - 1]
            try:
                val = vk.valuation()
            except BelowPrecision:
                val = vk.prec
            if prev_val is not None and val is not None and val < prev_val:
                raise CarlitzError(
                    f"tail term {k} has valuation {val} < previous {prev_val}; "
                    "division tail fails to converge"
                )
            prev_val = val
            if a:
                if target is not None and val is not None and val >= target:
                    break
                acc = acc + vk.scale(a)
    return acc


def dirichlet_approx(lam: VqElem, n: int):
    """Best torsion approximation of order T^n.

    Requires v(lam) = i(q-1) - 1 for some i >= 0 and n >= i + 1.  Returns
    (T^n, lam_n) with lam_n in the kernel of rho_{T^n} and
    v(lam_n - lam) > (n-1)(q-1) - 1.
    """
    gf = lam.gf
    q = gf.q
    try:
        v = lam.valuation()
    except BelowPrecision:
        v = float("inf")
    if v != float("inf"):
        i, r = divmod(v + 1, q - 1)
        if r != 0 or i < 0:
            raise DomainError(
                f"valuation {v} is not of the form i(q-1) - 1 with i >= 0"
            )
        if n < i + 1:
            raise DomainError(f"order {n} too small for valuation {v}; need n >= {i + 1}")
    if n < 1:
        raise DomainError("order must be positive")
    Mn = Poly.T(gf) ** n
    sep = min_separating_prec(Mn)
    prec = max(lam.prec if lam.prec is not None else sep + q, sep)
    tset = torsion_vq_cached(Mn, prec)
    best, best_val = None, None
    for p in tset:
        diff = p - lam
        try:
            dv = diff.valuation()
        except BelowPrecision:
            dv = float("inf")
        if best_val is None or dv > best_val:
            best, best_val = p, dv
    bound = (n - 1) * (q - 1) - 1
    if best_val <= bound:
        raise CarlitzError(
            f"no order-{n} torsion point within valuation {bound}; best was {best_val}"
        )
    return Mn, best
