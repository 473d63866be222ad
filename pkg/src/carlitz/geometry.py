"""Horoball fractions on the projective line over F_q(T), tangency and
Descartes/Soddy forms, the (q+1)-valent Bruhat-Tits tree, and the normal
basis of the ramified (q-1)-extension at infinity.
"""

from __future__ import annotations

from fractions import Fraction as Rational

from .errors import DomainError
from .poly import Poly, RatFn, poly_ext_gcd, poly_gcd
from .series import InfLaurent, VqElem

__all__ = [
    "Fraction",
    "random_tangent_family",
    "tangent",
    "tangent_family",
    "descartes_form",
    "soddy_form",
    "TreeVertex",
    "tree_neighbors",
    "tree_distance",
    "geodesic_ray",
    "NormalBasisData",
    "normal_basis",
    "galois_embed",
]


class Fraction:
    """A reduced fraction num/den over F_q[T] with monic denominator;
    infinity is 1/0."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        gf = num.gf
        if den.is_zero():
            if num.is_zero():
                raise DomainError("0/0 is not a point of the projective line")
            num = Poly.one(gf)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            c = gf.inv(den.lc)
            num = num.scale(c)
            den = den.scale(c)
        self.num = num
        self.den = den

    @classmethod
    def infinity(cls, gf):
        return cls(Poly.one(gf), Poly.zero(gf))

    @classmethod
    def zero(cls, gf):
        return cls(Poly.zero(gf), Poly.one(gf))

    @property
    def gf(self):
        return self.num.gf

    def is_infinity(self):
        return self.den.is_zero()

    def to_ratfn(self) -> RatFn:
        if self.is_infinity():
            raise DomainError("infinity is not a rational function")
        return RatFn(self.num, self.den)

    def __eq__(self, other):
        return (
            isinstance(other, Fraction)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.is_infinity():
            return "inf"
        if self.den == Poly.one(self.gf):
            return str(self.num)

        def wrap(p):
            s = str(p)
            return f"({s})" if "+" in s else s

        return f"{wrap(self.num)}/{wrap(self.den)}"

    def __repr__(self):
        return f"Fraction({self})"


def _cross_det(f1: Fraction, f2: Fraction) -> Poly:
    return f1.num * f2.den - f2.num * f1.den


def tangent(f1: Fraction, f2: Fraction) -> bool:
    """Two horoballs are tangent when the cross-determinant is a unit."""
    d = _cross_det(f1, f2)
    return d.degree == 0


def tangent_family(f1: Fraction, f2: Fraction):
    """The q+1 mutually tangent horoballs spanned by a tangent pair:
    f2 together with (num1 + b*num2)/(den1 + b*den2) for b in F_q."""
    if not tangent(f1, f2):
        raise DomainError(f"{f1} and {f2} are not tangent")
    gf = f1.gf
    members = [f2]
    for b in range(gf.q):
        members.append(
            Fraction(f1.num + f2.num.scale(b), f1.den + f2.den.scale(b))
        )
    if len(set(members)) != gf.q + 1:
        raise DomainError("degenerate family: members collide")
    return members


def descartes_form(xs) -> RatFn:
    """The form (sum X_i)^(q-1) - sum X_i^(q-1) on q+1 exact curvatures.

    Curvatures are the fractions themselves (as rational functions); families
    containing infinity are rejected.
    """
    vals = []
    for x in xs:
        if isinstance(x, Fraction):
            if x.is_infinity():
                raise DomainError("descartes form is undefined on a family containing infinity")
            vals.append(x.to_ratfn())
        elif isinstance(x, RatFn):
            vals.append(x)
        else:
            vals.append(RatFn.from_poly(x))
    gf = vals[0].gf
    q = gf.q
    if len(vals) != q + 1:
        raise DomainError(f"expected {q + 1} curvatures, got {len(vals)}")
    total = vals[0]
    for v in vals[1:]:
        total = total + v
    acc = total ** (q - 1)
    for v in vals:
        acc = acc - v ** (q - 1)
    return acc


def soddy_form(n: int, ks) -> Rational:
    """The classical characteristic-zero form (sum k)^2 - n * sum k^2."""
    ks = [Rational(k) for k in ks]
    if len(ks) != n + 2:
        raise DomainError(f"expected {n + 2} curvatures, got {len(ks)}")
    s = sum(ks)
    return s * s - n * sum(k * k for k in ks)


def random_tangent_family(gf, rng, max_deg: int = 3):
    """A random mutually tangent family: start from a random unimodular pair."""
    while True:
        a = Poly(gf, [rng.randrange(gf.q) for _ in range(rng.randint(1, max_deg + 1))])
        c = Poly(gf, [rng.randrange(gf.q) for _ in range(rng.randint(1, max_deg + 1))])
        if a.is_zero() and c.is_zero():
            continue
        try:
            g, x, y = poly_ext_gcd(a, c)
        except DomainError:
            continue
        if g.degree != 0:
            continue
        inv = gf.inv(g.lc)
        b = y.scale(gf.neg(inv))
        d = x.scale(inv)
        # now a*d - b*c = 1; the two columns give a tangent pair
        f1 = Fraction(a, c)
        f2 = Fraction(b, d)
        if f1.is_infinity() or f2.is_infinity() or f1 == f2:
            continue
        fam = tangent_family(f1, f2)
        if any(m.is_infinity() for m in fam):
            continue
        return fam


class TreeVertex:
    """A vertex (level n, class a mod pi^n) of the Bruhat-Tits tree at
    infinity, pi = 1/T.  The class is stored as its nonzero digits at
    u-exponents below n."""

    __slots__ = ("gf", "level", "cls")

    def __init__(self, gf, level: int, digits):
        self.gf = gf
        self.level = level
        self.cls = tuple(sorted((e, c) for e, c in dict(digits).items() if c and e < level))

    @classmethod
    def base(cls, gf):
        return cls(gf, 0, {})

    def parent(self) -> "TreeVertex":
        return TreeVertex(self.gf, self.level - 1, dict(self.cls))

    def child(self, digit: int) -> "TreeVertex":
        d = dict(self.cls)
        if digit:
            d[self.level] = digit
        return TreeVertex(self.gf, self.level + 1, d)

    def __eq__(self, other):
        return (
            isinstance(other, TreeVertex)
            and self.gf == other.gf
            and self.level == other.level
            and self.cls == other.cls
        )

    def __hash__(self):
        return hash((self.gf, self.level, self.cls))

    def label(self) -> str:
        ser = InfLaurent.from_terms(self.gf, dict(self.cls), prec=self.level)
        return f"({self.level}; {ser})"

    def __repr__(self):
        return f"TreeVertex{self.label()}"


def tree_neighbors(v: TreeVertex):
    """The parent and the q children; always q+1 vertices."""
    return [v.parent()] + [v.child(d) for d in range(v.gf.q)]


def tree_distance(v1: TreeVertex, v2: TreeVertex) -> int:
    """Graph distance: (m - l) + (n - l) where l is the level of the deepest
    common ancestor, bounded by the first differing class digit."""
    if v1.gf != v2.gf:
        raise DomainError("vertices of different trees")
    d1, d2 = dict(v1.cls), dict(v2.cls)
    diff_exps = [e for e in set(d1) | set(d2) if d1.get(e, 0) != d2.get(e, 0)]
    l = min(v1.level, v2.level)
    if diff_exps:
        l = min(l, min(diff_exps))
    return (v1.level - l) + (v2.level - l)


def geodesic_ray(f: Fraction, steps: int):
    """The first steps+1 vertices of the ray from the base vertex toward the
    boundary point f.

    The ray first descends to level min(0, v(f)) through truncations of 0,
    then climbs through the classes f mod pi^n read off the Laurent digits of
    f; toward infinity it descends forever.
    """
    gf = f.gf
    out = [TreeVertex.base(gf)]
    if f.is_infinity():
        while len(out) <= steps:
            out.append(out[-1].parent())
        return out
    ser = InfLaurent.from_ratfn(f.to_ratfn(), prec=steps + 1)
    digits = dict(ser.terms())
    v = min(digits) if digits else 0
    down = min(0, v)
    level = 0
    while level > down:
        level -= 1
        out.append(TreeVertex(gf, level, {}))
        if len(out) > steps:
            return out[: steps + 1]
    while len(out) <= steps:
        level += 1
        out.append(TreeVertex(gf, level, {e: c for e, c in digits.items() if e < level}))
    return out[: steps + 1]


def _mat_mul(gf, A, B):
    n = len(A)
    return [
        [
            _dot(gf, A[i], [B[k][j] for k in range(n)])
            for j in range(n)
        ]
        for i in range(n)
    ]


def _dot(gf, xs, ys):
    acc = 0
    for x, y in zip(xs, ys):
        acc = gf.add(acc, gf.mul(x, y))
    return acc


def _det(gf, M):
    n = len(M)
    M = [row[:] for row in M]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            M[col], M[piv] = M[piv], M[col]
            det = gf.neg(det)
        det = gf.mul(det, M[col][col])
        inv = gf.inv(M[col][col])
        for r in range(col + 1, n):
            if M[r][col]:
                factor = gf.mul(M[r][col], inv)
                M[r] = [gf.sub(a, gf.mul(factor, b)) for a, b in zip(M[r], M[col])]
    return det


class NormalBasisData:
    __slots__ = ("theta", "conjugates", "change_matrix", "det_valuation")

    def __init__(self, theta, conjugates, change_matrix, det_valuation):
        self.theta = theta
        self.conjugates = conjugates
        self.change_matrix = change_matrix
        self.det_valuation = det_valuation


def normal_basis(gf, prec: int = None) -> NormalBasisData:
    """theta = sum of lambda^{-i} for a T-torsion generator lambda = s^{-1};
    the Galois conjugates lambda -> zeta*lambda expand over the power basis
    {s^i} through the Vandermonde matrix (zeta^{ij}), a unit."""
    q = gf.q
    if q <= 2:
        theta = VqElem.one(gf)
        return NormalBasisData(theta, [theta], [[1]], 0)
    zeta = gf.primitive_element()
    n = q - 1
    matrix = [[gf.pow(zeta, i * j) for i in range(n)] for j in range(n)]
    conjugates = [
        VqElem.from_terms(gf, {i: row[i] for i in range(n)}) for row in matrix
    ]
    theta = conjugates[0]
    d = _det(gf, matrix)
    if d == 0:
        raise DomainError("normal basis change matrix is singular")
    return NormalBasisData(theta, conjugates, matrix, 0)


def galois_embed(gf):
    """Matrices of the cyclic Galois group (order q-1) acting on the normal
    basis: the regular representation, i.e. cyclic permutation matrices."""
    q = gf.q
    n = max(q - 1, 1)
    mats = []
    for k in range(n):
        mats.append([[1 if (i - j) % n == k else 0 for j in range(n)] for i in range(n)])
    return mats
