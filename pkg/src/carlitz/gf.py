"""The coefficient field F_q, q = p^r.

Elements are plain ints in [0, q).  The base-p digits of an element are its
coordinates with respect to the power basis 1, w, ..., w^(r-1), where w is a
root of the defining modulus.  For r = 1 the element *is* its residue mod p.

The modulus, when not supplied, is the lexicographically least monic
irreducible of degree r over F_p (least in the base-p integer encoding of the
non-leading coefficients), so results are reproducible without any table
dependency.
"""

from __future__ import annotations

from .errors import DomainError


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _fp_polymul(a, b, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] = (res[i + j] + x * y) % p
    return res


def _fp_polymod(a, m, p):
    # m monic; reduce a modulo m
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        if c:
            shift = len(a) - 1 - dm
            for i, y in enumerate(m):
                a[shift + i] = (a[shift + i] - c * y) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_irreducible(coeffs, p):
    """Trial-division irreducibility over F_p for small degrees."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    # divide by every monic polynomial of degree 1..deg//2
    for d in range(1, deg // 2 + 1):
        for enc in range(p**d):
            div = []
            e = enc
            for _ in range(d):
                div.append(e % p)
                e //= p
            div.append(1)
            if not _fp_polymod(coeffs, div, p):
                return False
    return True


class GF:
    """Context object for arithmetic in F_q = F_{p^r}."""

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        if r < 1:
            raise DomainError("extension degree must be positive")
        self.p = p
        self.r = r
        self.q = p**r
        if r == 1:
            if modulus is not None:
                raise DomainError("prime field takes no modulus")
            self.modulus = None
        else:
            if modulus is None:
                modulus = self._least_irreducible()
            else:
                modulus = tuple(int(c) % p for c in modulus)
                if len(modulus) != r + 1 or modulus[-1] != 1:
                    raise DomainError("modulus must be monic of degree r")
                if not _fp_irreducible(list(modulus), p):
                    raise DomainError("supplied modulus is reducible")
            self.modulus = tuple(modulus)
        self._mul_table = None
        self._inv_table = None

    def _least_irreducible(self):
        p, r = self.p, self.r
        for enc in range(p**r):
            coeffs = []
            e = enc
            for _ in range(r):
                coeffs.append(e % p)
                e //= p
            coeffs.append(1)
            if _fp_irreducible(coeffs, p):
                return tuple(coeffs)
        raise AssertionError("no irreducible polynomial found")

    # -- element arithmetic (elements are ints in [0, q)) --

    def coords(self, a: int):
        """Coordinates of a w.r.t. the power basis of the modulus."""
        out = []
        for _ in range(self.r):
            out.append(a % self.p)
            a //= self.p
        return tuple(out)

    def _from_coords(self, coords):
        v = 0
        for c in reversed(coords):
            v = v * self.p + (c % self.p)
        return v

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        ca, cb = self.coords(a), self.coords(b)
        return self._from_coords([(x + y) % self.p for x, y in zip(ca, cb)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        return self._from_coords([(-c) % self.p for c in self.coords(a)])

    def _build_tables(self):
        q = self.q
        table = [[0] * q for _ in range(q)]
        for a in range(q):
            pa = list(self.coords(a))
            for b in range(a, q):
                pb = list(self.coords(b))
                prod = _fp_polymod(_fp_polymul(pa, pb, self.p), list(self.modulus), self.p)
                v = self._from_coords(prod + [0] * (self.r - len(prod)))
                table[a][b] = v
                table[b][a] = v
        self._mul_table = table
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if table[a][b] == 1:
                    inv[a] = b
                    break
        self._inv_table = inv

    def mul(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a * b) % self.p
        if self._mul_table is None:
            self._build_tables()
        return self._mul_table[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("division by zero in F_q")
        if self.r == 1:
            return pow(a, self.p - 2, self.p)
        if self._inv_table is None:
            self._build_tables()
        return self._inv_table[a]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        res, base = 1, a
        while e:
            if e & 1:
                res = self.mul(res, base)
            base = self.mul(base, base)
            e >>= 1
        return res

    def frob(self, a: int) -> int:
        """Frobenius x -> x^p."""
        return self.pow(a, self.p)

    def primitive_element(self) -> int:
        """A generator of the multiplicative group F_q^*."""
        n = self.q - 1
        for g in range(1, self.q):
            if self.order(g) == n:
                return g
        raise AssertionError("no primitive element")

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DomainError("0 has no multiplicative order")
        k, x = 1, a
        while x != 1:
            x = self.mul(x, a)
            k += 1
        return k

    # -- text form --

    def fmt_elem(self, a: int) -> str:
        if self.r == 1 or a < self.p:
            return str(a)
        parts = []
        for i in reversed(range(self.r)):
            c = self.coords(a)[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                power = "w" if i == 1 else f"w^{i}"
                parts.append(power if c == 1 else f"{c}*{power}")
        if len(parts) == 1:
            return parts[0]
        return "(" + "+".join(parts) + ")"

    def parse_elem(self, s: str) -> int:
        s = s.strip()
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        coords = [0] * self.r
        for term in s.split("+"):
            term = term.strip()
            if not term:
                raise DomainError("empty coefficient term")
            if "w" in term:
                if self.r == 1:
                    raise DomainError("w not allowed over a prime field")
                if "*" in term:
                    cpart, wpart = term.split("*", 1)
                    c = int(cpart)
                else:
                    c, wpart = 1, term
                wpart = wpart.strip()
                i = 1 if wpart == "w" else int(wpart[2:])
            else:
                c, i = int(term), 0
            if not 0 <= c < self.p:
                raise DomainError(f"coefficient {c} out of range [0, {self.p})")
            if i >= self.r:
                raise DomainError(f"w^{i} out of range for degree-{self.r} extension")
            coords[i] = (coords[i] + c) % self.p
        return self._from_coords(coords)

    def __eq__(self, other):
        return (
            isinstance(other, GF)
            and self.p == other.p
            and self.r == other.r
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.p, self.r, self.modulus))

    def __repr__(self):
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"


def gf_build(p: int, r: int = 1, modulus=None) -> GF:
    """Build the field context for F_{p^r}; see GF for modulus selection."""
    return GF(p, r, modulus)
