"""Truncated Laurent series for the completions at infinity.

Two models share one representation:

* InfLaurent -- the completion of F_q(T) at the infinite place, written in the
  uniformizer 1/T.  Valuation convention v = -deg, so v(T) = -1.
* VqElem -- the degree-(q-1) extension generated by T-torsion, written in a
  uniformizer s defined by T = -s^{-(q-1)}; v(s) = 1, v(T) = -(q-1).

Exponents index powers of the uniformizer.  ``prec`` is an exclusive upper
exponent: digits at exponents >= prec are unknown.  ``prec is None`` marks an
exact element (all unlisted digits are truly zero), e.g. an embedded
polynomial.  Precision propagates pessimistically through arithmetic; no
operation ever reports digits it cannot certify.
"""

from __future__ import annotations

import math

from .errors import BelowPrecision, DomainError, PrecisionError
from .gf import GF
from .poly import Poly, RatFn

INF = math.inf


def _min_prec(*ps):
    vals = [p for p in ps if p is not None]
    if not vals:
        return None
    m = min(vals)
    return None if m == INF else m


class Series:
    __slots__ = ("gf", "v", "coeffs", "prec")

    #: subclasses set the uniformizer name used by the text format
    VAR = "?"

    def __init__(self, gf: GF, v: int, coeffs, prec=None):
        coeffs = list(coeffs)
        if prec is not None:
            cut = int(prec) - v
            if cut < len(coeffs):
                coeffs = coeffs[: max(cut, 0)]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            v += 1
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.gf = gf
        self.coeffs = tuple(coeffs)
        self.v = v if coeffs else 0
        self.prec = int(prec) if prec is not None else None

    # -- constructors --

    @classmethod
    def zero(cls, gf, prec=None):
        return cls(gf, 0, (), prec)

    @classmethod
    def const(cls, gf, c, prec=None):
        return cls(gf, 0, (c,), prec)

    @classmethod
    def one(cls, gf, prec=None):
        return cls.const(gf, 1, prec)

    @classmethod
    def monomial(cls, gf, c, k, prec=None):
        return cls(gf, k, (c,), prec)

    @classmethod
    def from_terms(cls, gf, terms: dict, prec=None):
        if not terms:
            return cls.zero(gf, prec)
        lo = min(terms)
        hi = max(terms)
        vec = [0] * (hi - lo + 1)
        for k, c in terms.items():
            vec[k - lo] = c
        return cls(gf, lo, vec, prec)

    # -- structure --

    def is_zero(self):
        """True when no digit is known nonzero (exact or truncated zero)."""
        return not self.coeffs

    def digit(self, k: int) -> int:
        if self.prec is not None and k >= self.prec:
            raise BelowPrecision(f"digit at exponent {k} is beyond O({self.VAR}^{self.prec})")
        i = k - self.v
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.v + i, c

    def valuation(self):
        """Exact valuation; math.inf for exact zero; BelowPrecision otherwise."""
        if self.coeffs:
            return self.v
        if self.prec is None:
            return INF
        raise BelowPrecision(
            f"element is indistinguishable from zero below O({self.VAR}^{self.prec})"
        )

    def _veff(self):
        # lower bound on the valuation, defined for every element
        if self.coeffs:
            return self.v
        return INF if self.prec is None else self.prec

    # -- arithmetic --

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.gf != self.gf:
            raise DomainError("mixed coefficient fields")

    def _new(self, v, coeffs, prec):
        return type(self)(self.gf, v, coeffs, prec)

    def __add__(self, other):
        self._check(other)
        gf = self.gf
        prec = _min_prec(self.prec, other.prec)
        if self.is_zero():
            return self._new(other.v, other.coeffs, prec)
        if other.is_zero():
            return self._new(self.v, self.coeffs, prec)
        lo = min(self.v, other.v)
        hi = max(self.v + len(self.coeffs), other.v + len(other.coeffs))
        vec = [0] * (hi - lo)
        for k, c in self.terms():
            vec[k - lo] = c
        for k, c in other.terms():
            vec[k - lo] = gf.add(vec[k - lo], c)
        return self._new(lo, vec, prec)

    def __neg__(self):
        gf = self.gf
        return self._new(self.v, [gf.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        gf = self.gf
        if (self.is_zero() and self.prec is None) or (other.is_zero() and other.prec is None):
            return self.zero(gf)
        pa = self.prec if self.prec is not None else INF
        pb = other.prec if other.prec is not None else INF
        prec = min(self._veff() + pb, other._veff() + pa)
        prec = None if prec == INF else prec
        if self.is_zero() or other.is_zero():
            return self.zero(gf, prec)
        out = {}
        for i, a in self.terms():
            for j, b in other.terms():
                k = i + j
                if prec is not None and k >= prec:
                    continue
                out[k] = gf.add(out.get(k, 0), gf.mul(a, b))
        return self.from_terms(gf, out, prec)

    def scale(self, c: int):
        gf = self.gf
        return self._new(self.v, [gf.mul(c, x) for x in self.coeffs], self.prec)

    def shifted(self, k: int):
        """Multiply by the k-th power of the uniformizer."""
        return self._new(self.v + k, self.coeffs, None if self.prec is None else self.prec + k)

    def frobenius(self):
        """The q-th power: exponents scale by q, digits are fixed by x -> x^q."""
        gf = self.gf
        q = gf.q
        out = {q * k: gf.pow(c, q) for k, c in self.terms()}
        prec = None if self.prec is None else q * self.prec
        return self.from_terms(gf, out, prec)

    def inverse(self, prec=None):
        """Multiplicative inverse, solved digit by digit.

        ``prec`` bounds the exponents of the result; it is required when the
        input is exact with more than one term (the expansion is infinite).
        """
        if self.is_zero():
            raise DomainError("cannot invert (a truncation of) zero")
        gf = self.gf
        v = self.v
        own = None if self.prec is None else self.prec - 2 * v
        target = _min_prec(own, prec)
        if target is None:
            if len(self.coeffs) == 1:
                return self.monomial(gf, gf.inv(self.coeffs[0]), -v)
            raise PrecisionError(
                "inverse of an exact multi-term series needs an explicit precision"
            )
        # y with x*y = 1; digits of y at exponents -v .. target-1
        n = int(target) + v  # number of digits to solve
        if n <= 0:
            raise DomainError("requested inverse precision is vacuous")
        c = [self.digit(v + i) if (self.prec is None or v + i < self.prec) else 0 for i in range(n)]
        y = [0] * n
        inv0 = gf.inv(c[0])
        y[0] = inv0
        for m in range(1, n):
            acc = 0
            for i in range(1, m + 1):
                if i < len(c) and c[i] and y[m - i]:
                    acc = gf.add(acc, gf.mul(c[i], y[m - i]))
            y[m] = gf.neg(gf.mul(inv0, acc))
        return self._new(-v, y, target)

    def __truediv__(self, other):
        self._check(other)
        if len(other.coeffs) == 1 and other.prec is None:
            return self * other.inverse()
        pa = self.prec if self.prec is not None else INF
        pb = other.prec if other.prec is not None else INF
        if pa == INF and pb == INF:
            raise DomainError("exact series division needs an explicit inverse precision")
        if other.is_zero():
            raise DomainError("cannot divide by (a truncation of) zero")
        v1, v2 = self._veff(), other.v
        out_prec = min(pa - v2, pb + v1 - 2 * v2)
        return self * other.inverse(prec=int(out_prec - v1))

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative series power; use inverse() explicitly")
        res = self.one(self.gf)
        base = self
        while e:
            if e & 1:
                res = res * base
            base = base * base
            e >>= 1
        return res

    def truncate(self, prec: int):
        return self._new(self.v, self.coeffs, _min_prec(self.prec, prec))

    # -- comparison --

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.gf == other.gf
            and self.v == other.v
            and self.coeffs == other.coeffs
            and self.prec == other.prec
        )

    def __hash__(self):
        return hash((type(self).__name__, self.gf, self.v, self.coeffs, self.prec))

    def agrees(self, other, upto=None):
        """Digitwise equality on every exponent both sides can certify."""
        self._check(other)
        bound = _min_prec(self.prec, other.prec, upto)
        if bound is None:
            return self.coeffs == other.coeffs and self.v == other.v
        for k in range(min(self._veff(), other._veff(), bound), int(bound)):
            if self.digit(k) != other.digit(k):
                return False
        return True

    # -- text form --

    def __str__(self):
        parts = []
        for k, c in self.terms():
            cs = self.gf.fmt_elem(c)
            if k == 0:
                parts.append(cs)
            else:
                t = self.VAR if k == 1 else f"{self.VAR}^{k}"
                parts.append(t if cs == "1" else f"{cs}*{t}")
        if self.prec is not None:
            parts.append(f"O({self.VAR}^{self.prec})")
        if not parts:
            return "0"
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def parse_series(text: str, gf: GF, cls):
    """Parse the series text format: `c*VAR^k` terms joined by `+`, with an
    optional `O(VAR^prec)` tail marker.  InfLaurent uses variable T, VqElem
    uses s; exponents may be negative."""
    s = "".join(text.split())
    if not s:
        raise DomainError("empty series string")
    var = "T" if cls is InfLaurent else "s"
    terms = {}
    prec = None
    # split on + at paren depth 0
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    for part in parts:
        if not part:
            raise DomainError(f"syntax error in series {text!r}")
        if part.startswith("O(") and part.endswith(")"):
            inner = part[2:-1]
            if inner == var:
                k = 1
            elif inner.startswith(var + "^"):
                k = int(inner[len(var) + 1 :])
            else:
                raise DomainError(f"bad tail marker {part!r}")
            p = -k if var == "T" else k
            prec = p if prec is None else min(prec, p)
            continue
        if var in part:
            cpart, _, vpart = part.partition(var)
            cpart = cpart.rstrip("*")
            c = gf.parse_elem(cpart) if cpart else 1
            if vpart == "":
                k = 1
            elif vpart.startswith("^"):
                k = int(vpart[1:])
            else:
                raise DomainError(f"syntax error in term {part!r}")
        else:
            c, k = gf.parse_elem(part), 0
        e = -k if var == "T" else k
        terms[e] = gf.add(terms.get(e, 0), c)
    return cls.from_terms(gf, terms, prec)


class InfLaurent(Series):
    """Laurent series at the infinite place of F_q(T), in the uniformizer 1/T."""

    VAR = "u"  # u = 1/T

    @classmethod
    def from_poly(cls, f: Poly):
        gf = f.gf
        return cls.from_terms(gf, {-i: c for i, c in enumerate(f.coeffs) if c})

    @classmethod
    def from_ratfn(cls, x, prec):
        """Expansion of a rational function to the given (exclusive) precision."""
        if isinstance(x, Poly):
            return cls.from_poly(x)
        num = cls.from_poly(x.num)
        den = cls.from_poly(x.den)
        if num.is_zero():
            return cls.zero(den.gf)
        if len(den.coeffs) == 1:
            return num * den.inverse()
        return num * den.inverse(prec=prec - num.v)

    # -- text form prints powers of T (exponent of T = -exponent of u) --

    def __str__(self):
        parts = []
        for k, c in self.terms():
            cs = self.gf.fmt_elem(c)
            m = -k
            if m == 0:
                parts.append(cs)
            else:
                t = "T" if m == 1 else f"T^{m}"
                parts.append(t if cs == "1" else f"{cs}*{t}")
        if self.prec is not None:
            parts.append(f"O(T^{-self.prec})")
        if not parts:
            return "0"
        return " + ".join(parts)


class VqElem(Series):
    """Laurent series in the uniformizer s of V_q, with T = -s^{-(q-1)}."""

    VAR = "s"

    @classmethod
    def from_inf(cls, x: InfLaurent) -> "VqElem":
        """Embed via 1/T = -s^(q-1); valuations scale by the ramification q-1."""
        gf = x.gf
        e = gf.q - 1
        out = {}
        for k, c in x.terms():
            out[e * k] = gf.neg(c) if k % 2 else c  # u^k = (-1)^k s^((q-1)k)
        prec = None if x.prec is None else e * x.prec
        return cls.from_terms(gf, out, prec)

    @classmethod
    def from_poly(cls, f: Poly) -> "VqElem":
        return cls.from_inf(InfLaurent.from_poly(f))

    @classmethod
    def from_ratfn(cls, x, prec_s):
        e = x.gf.q - 1
        return cls.from_inf(InfLaurent.from_ratfn(x, prec=-(-prec_s // e)))

    def to_inf(self) -> InfLaurent:
        """Inverse of the embedding; requires support on exponents = 0 mod (q-1)."""
        gf = self.gf
        e = gf.q - 1
        out = {}
        for k, c in self.terms():
            if k % e:
                raise DomainError(
                    f"digit at s-exponent {k} is outside the base-field lattice"
                )
            j = k // e
            out[j] = gf.neg(c) if j % 2 else c
        prec = None if self.prec is None else -(-self.prec // e)
        return InfLaurent.from_terms(gf, out, prec)
