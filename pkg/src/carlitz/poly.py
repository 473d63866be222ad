"""Dense polynomials F_q[T] and reduced rational functions F_q(T).

All arithmetic is exact.  Coefficients are GF element ints; the coefficient
vector is ascending in powers of T with no trailing zeros, so the zero
polynomial has an empty vector and degree -1 by convention.
"""

from __future__ import annotations

from .errors import DomainError
from .gf import GF


class Poly:
    __slots__ = ("gf", "coeffs")

    def __init__(self, gf: GF, coeffs):
        self.gf = gf
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    # -- constructors --

    @classmethod
    def zero(cls, gf):
        return cls(gf, ())

    @classmethod
    def one(cls, gf):
        return cls(gf, (1,))

    @classmethod
    def const(cls, gf, c):
        return cls(gf, (c,))

    @classmethod
    def T(cls, gf):
        return cls(gf, (0, 1))

    # -- structure --

    @property
    def degree(self) -> int:
        """Degree, with deg(0) = -1."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_const(self):
        return len(self.coeffs) <= 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations --

    def __add__(self, other):
        other = self._coerce(other)
        gf = self.gf
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = gf.add(out[i], c)
        return Poly(gf, out)

    def __neg__(self):
        gf = self.gf
        return Poly(gf, [gf.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            other = Poly.const(self.gf, other % self.gf.q if other >= 0 else self.gf.neg((-other) % self.gf.q))
        other = self._coerce(other)
        gf = self.gf
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly.zero(gf)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = gf.add(out[i + j], gf.mul(x, y))
        return Poly(gf, out)

    __rmul__ = __mul__

    def scale(self, c: int):
        gf = self.gf
        return Poly(gf, [gf.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise DomainError("polynomial division by zero")
        gf = self.gf
        rem = list(self.coeffs)
        db = other.degree
        inv_lc = gf.inv(other.lc)
        quo = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                f = gf.mul(c, inv_lc)
                quo[i - db] = f
                for j, y in enumerate(other.coeffs):
                    rem[i - db + j] = gf.sub(rem[i - db + j], gf.mul(f, y))
        return Poly(gf, quo), Poly(gf, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        res, base = Poly.one(self.gf), self
        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(self.gf.inv(self.lc))

    def frob_q(self):
        """The q-th power: coefficients fixed, T-exponents multiplied by q."""
        q = self.gf.q
        out = [0] * (q * self.degree + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            if c:
                out[q * i] = c
        return Poly(self.gf, out)

    def shift(self, k: int):
        """Multiply by T^k."""
        if self.is_zero():
            return self
        return Poly(self.gf, (0,) * k + self.coeffs)

    def derivative(self):
        gf = self.gf
        out = []
        for i in range(1, len(self.coeffs)):
            out.append(gf.mul(i % gf.p, self.coeffs[i]))
        return Poly(gf, out)

    def evaluate(self, x: int) -> int:
        """Horner evaluation at a field element."""
        gf = self.gf
        acc = 0
        for c in reversed(self.coeffs):
            acc = gf.add(gf.mul(acc, x), c)
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, Poly) and self.gf == other.gf and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.gf, self.coeffs))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.gf != self.gf:
                raise DomainError("mixed coefficient fields")
            return other
        raise TypeError(f"cannot combine Poly with {type(other).__name__}")

    # -- text form (see the polynomial grammar in the README) --

    def __str__(self):
        if not self.coeffs:
            return "0"
        gf = self.gf
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if not c:
                continue
            cs = gf.fmt_elem(c)
            if i == 0:
                parts.append(cs)
            else:
                t = "T" if i == 1 else f"T^{i}"
                parts.append(t if c == 1 else f"{cs}*{t}")
        return "+".join(parts)

    def __repr__(self):
        return f"Poly({self})"


def parse_poly(s: str, gf: GF) -> Poly:
    """Parse the polynomial text grammar: terms joined by +, term = c, c*T^k, T^k, T."""
    s = "".join(s.split())
    if not s:
        raise DomainError("empty polynomial string")
    coeffs = {}
    pos = 0
    # split on + at paren depth 0 (coefficients over F_{p^r} carry parens)
    terms, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    terms.append("".join(cur))
    for term in terms:
        if not term:
            raise DomainError(f"syntax error near position {pos} in {s!r}")
        if "T" in term:
            cpart, _, tpart = term.partition("T")
            cpart = cpart.rstrip("*")
            c = gf.parse_elem(cpart) if cpart else 1
            if tpart == "":
                k = 1
            elif tpart.startswith("^"):
                k = int(tpart[1:])
            else:
                raise DomainError(f"syntax error in term {term!r}")
            if k < 0:
                raise DomainError("negative exponent in polynomial")
        else:
            c, k = gf.parse_elem(term), 0
        coeffs[k] = gf.add(coeffs.get(k, 0), c)
        pos += len(term) + 1
    n = max(coeffs) + 1 if coeffs else 0
    vec = [0] * n
    for k, c in coeffs.items():
        vec[k] = c
    return Poly(gf, vec)


def poly_divmod(a: Poly, b: Poly):
    """Exact division with remainder: a = q*b + r, deg r < deg b."""
    return divmod(a, b)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; defined as long as not both arguments are zero."""
    if a.is_zero() and b.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a: Poly, b: Poly):
    """Extended gcd: returns (g, x, y) with g = a*x + b*y, g monic."""
    gf = a.gf
    r0, r1 = a, b
    x0, x1 = Poly.one(gf), Poly.zero(gf)
    y0, y1 = Poly.zero(gf), Poly.one(gf)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    c = gf.inv(r0.lc)
    return r0.scale(c), x0.scale(c), y0.scale(c)


def pow_mod(a: Poly, e: int, modulus: Poly) -> Poly:
    """a^e mod modulus by square-and-multiply."""
    if e < 0:
        raise DomainError("negative exponent in pow_mod")
    res = Poly.one(a.gf)
    base = a % modulus
    while e:
        if e & 1:
            res = (res * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return res


def inv_mod(a: Poly, modulus: Poly) -> Poly:
    """Inverse of a modulo modulus; a must be a unit in the quotient."""
    g, x, _ = poly_ext_gcd(a % modulus, modulus)
    if g.degree != 0:
        raise DomainError("element is not invertible modulo the given modulus")
    return x % modulus


def is_irreducible(f: Poly) -> bool:
    """Rabin's criterion via gcd(f, T^{q^k} - T) ladders."""
    n = f.degree
    if n < 1:
        raise DomainError("irreducibility is defined for degree >= 1")
    if n == 1:
        return True
    q = f.gf.q
    T = Poly.T(f.gf)
    # prime divisors of n
    primes, m = [], n
    d = 2
    while d * d <= m:
        if m % d == 0:
            primes.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        primes.append(m)
    # h_k = T^{q^k} mod f
    powers = {}
    h = T % f
    for k in range(1, n + 1):
        h = pow_mod(h, q, f)
        powers[k] = h
    if powers[n] != T % f:
        return False
    for pdiv in primes:
        g = powers[n // pdiv] - T
        if g.is_zero() or poly_gcd(f, g).degree > 0:
            return False
    return True


def monic_irreducibles(gf: GF, max_deg: int):
    """All monic irreducibles of degree 1..max_deg, by increasing degree."""
    out = []
    for d in range(1, max_deg + 1):
        for enc in range(gf.q**d):
            coeffs = []
            e = enc
            for _ in range(d):
                coeffs.append(e % gf.q)
                e //= gf.q
            coeffs.append(1)
            f = Poly(gf, coeffs)
            if is_irreducible(f):
                out.append(f)
    return out


def _factor(m: Poly):
    """Trial-division factorization into monic irreducibles (desk scale).

    Returns a dict {irreducible: multiplicity}; the unit is discarded.
    """
    if m.is_zero():
        raise DomainError("cannot factor zero")
    m = m.monic()
    factors = {}
    d = 1
    while m.degree > 0:
        if d > m.degree // 2:
            factors[m] = factors.get(m, 0) + 1
            break
        found = False
        for p in monic_irreducibles(m.gf, d)[::-1]:
            if p.degree != d:
                continue
            while (m % p).is_zero():
                m = m // p
                factors[p] = factors.get(p, 0) + 1
                found = True
        if not found:
            d += 1
    return factors


def euler_phi(m: Poly) -> int:
    """Order of the unit group (F_q[T]/m)^*."""
    if m.is_zero():
        raise DomainError("euler_phi(0) is undefined")
    q = m.gf.q
    total = 1
    for p, mult in _factor(m).items():
        d = p.degree
        total *= q ** (d * (mult - 1)) * (q**d - 1)
    return total


class RatFn:
    """A reduced fraction num/den with den monic and gcd(num, den) = 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise DomainError("rational function with zero denominator")
        gf = num.gf
        if not num.is_zero():
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num // g, den // g
        else:
            den = Poly.one(gf)
        c = gf.inv(den.lc)
        self.num = num.scale(c)
        self.den = den.scale(c)

    @classmethod
    def from_poly(cls, p: Poly):
        return cls(p, Poly.one(p.gf))

    @property
    def gf(self):
        return self.num.gf

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return RatFn(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise DomainError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero():
                raise DomainError("division by zero rational function")
            return RatFn(self.den**-e, self.num**-e)
        return RatFn(self.num**e, self.den**e)

    def valuation_inf(self):
        """Valuation at the infinite place, v = deg(den) - deg(num)."""
        if self.is_zero():
            return None
        return self.den.degree - self.num.degree

    def __eq__(self, other):
        if isinstance(other, Poly):
            other = RatFn.from_poly(other)
        return isinstance(other, RatFn) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _coerce(self, other):
        if isinstance(other, Poly):
            return RatFn.from_poly(other)
        if isinstance(other, RatFn):
            return other
        raise TypeError(f"cannot combine RatFn with {type(other).__name__}")

    def __str__(self):
        if self.den == Poly.one(self.gf):
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFn({self})"
