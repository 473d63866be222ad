"""Truncated analytic objects of the Carlitz module: the exponential e(z),
partial products of the period, and lattice Eisenstein series.

Convergence is certificate-based: a sum is accepted only when the term (or
shell) valuations strictly increase past the precision cutoff; otherwise the
operation raises.  Certificates (index -> valuation) are returned alongside
the values for inspection and CLI output.
"""

from __future__ import annotations

from .errors import BelowPrecision, CarlitzError, DomainError
from .operator import brackets_D
from .poly import Poly, RatFn
from .series import InfLaurent, VqElem

__all__ = [
    "Lattice",
    "SeriesBudget",
    "carlitz_exp",
    "period_partial",
    "eisenstein",
]


class SeriesBudget:
    """Truncation policy: how many terms, how deep an enumeration, and the
    target s-adic precision."""

    __slots__ = ("term_count", "degree_bound", "precision")

    def __init__(self, term_count: int = 8, degree_bound: int = 4, precision: int = 24):
        if term_count < 1 or degree_bound < 1 or precision < 1:
            raise DomainError("budget fields must be positive")
        self.term_count = term_count
        self.degree_bound = degree_bound
        self.precision = precision


class Lattice:
    """A finitely generated F_q[T]-submodule of V_q, given by a basis."""

    __slots__ = ("basis", "rank")

    def __init__(self, basis):
        basis = list(basis)
        if not basis:
            raise DomainError("a lattice needs at least one basis element")
        for b in basis:
            if b.is_zero():
                raise DomainError("lattice basis elements must be nonzero")
        self.basis = basis
        self.rank = len(basis)

    def scaled(self, c: VqElem) -> "Lattice":
        return Lattice([c * b for b in self.basis])


def _valuation_or_none(x):
    try:
        return x.valuation()
    except BelowPrecision:
        return None


def carlitz_exp(z: VqElem, budget: SeriesBudget = None, with_certificate: bool = False):
    """e(z) = sum over n of (-1)^n z^(q^n) / D_n, truncated with a rigorous
    tail check: term valuations must strictly increase and pass the precision
    cutoff within the term budget."""
    budget = budget or SeriesBudget()
    gf = z.gf
    q = gf.q
    prec = min(budget.precision, z.prec) if z.prec is not None else budget.precision
    if z.is_zero():
        out = VqElem.zero(gf, z.prec)
        return (out, {}) if with_certificate else out
    acc = VqElem.zero(gf)
    zq = z  # z^(q^n)
    cert = {}
    prev_val = None
    done = False
    for n in range(budget.term_count):
        _, Dn = brackets_D(gf, n)
        # n-th coefficient is 1/D_n: the unique choice (with the standard D_n
        # recursion) satisfying e(Tz) = e(z)^q + T*e(z), which the test suite
        # enforces
        term = zq / VqElem.from_poly(Dn)
        val = _valuation_or_none(term)
        cert[n] = val if val is not None else f">={term.prec}"
        if val is not None and prev_val is not None and val <= prev_val:
            raise CarlitzError(
                f"term {n} valuation {val} does not increase past {prev_val}; "
                "the series does not converge at this argument"
            )
        if val is not None:
            prev_val = val
        acc = acc + term
        if val is None or val >= prec:
            done = True
            break
        zq = zq.frobenius()
    if not done:
        raise CarlitzError(
            f"term budget {budget.term_count} exhausted before valuations "
            f"reached precision {prec}"
        )
    acc = acc.truncate(prec)
    return (acc, cert) if with_certificate else acc


def period_partial(gf, N: int, prec: int = None):
    """The partial period product: prod over n = 1..N of (1 - [n]/[n+1]).

    Returns the exact rational function; with ``prec`` also its Laurent
    expansion at infinity, as a pair (ratfn, series).
    """
    if N < 1:
        raise DomainError("need at least one factor")
    one = RatFn.from_poly(Poly.one(gf))
    acc = one
    prev_bracket, _ = brackets_D(gf, 1)
    for n in range(1, N + 1):
        nxt_bracket, _ = brackets_D(gf, n + 1)
        acc = acc * (one - RatFn(prev_bracket, nxt_bracket))
        prev_bracket = nxt_bracket
    if prec is None:
        return acc
    return acc, InfLaurent.from_ratfn(acc, prec=prec)


def eisenstein(L: Lattice, k: int, budget: SeriesBudget = None, with_certificate: bool = False):
    """E_(q-1)k(L) = sum over nonzero alpha in L of alpha^(-(q-1)k).

    Enumeration is by coefficient-degree shells: shell m holds the
    combinations sum A_i * basis_i with max deg A_i = m.  Shell-sum
    valuations must not decrease; the last shell's valuation is the
    convergence certificate.
    """
    budget = budget or SeriesBudget()
    if k < 1:
        raise DomainError("the weight index must be positive")
    b0 = L.basis[0]
    gf = b0.gf
    q = gf.q
    e = (q - 1) * k
    prec = budget.precision
    acc = VqElem.zero(gf)
    cert = {}
    prev = None
    for m in range(budget.degree_bound + 1):
        shell = VqElem.zero(gf)
        any_term = False
        for coeffs in _shell_coeffs(gf, L.rank, m):
            alpha = VqElem.zero(gf)
            for c, b in zip(coeffs, L.basis):
                if not c.is_zero():
                    alpha = alpha + VqElem.from_poly(c) * b
            if alpha.is_zero():
                continue
            any_term = True
            t = max(prec + (e - 1) * alpha.v, -alpha.v + 1)
            shell = shell + alpha.inverse(prec=t) ** e
        if not any_term:
            continue
        sval = _valuation_or_none(shell)
        cert[m] = sval if sval is not None else f">={shell.prec}"
        if sval is not None and prev is not None and sval < prev:
            raise CarlitzError(
                f"shell {m} valuation {sval} dropped below {prev}; "
                "the Eisenstein sum diverges at this precision"
            )
        if sval is not None:
            prev = sval
        acc = acc + shell
    acc = acc.truncate(prec)
    return (acc, cert) if with_certificate else acc


def _shell_coeffs(gf, rank: int, m: int):
    """All coefficient tuples (A_1..A_rank) with max degree exactly m
    (m = -1 meaning all zero is excluded; included are tuples of constants)."""
    q = gf.q

    def polys_up_to(d):
        if d < 0:
            yield Poly.zero(gf)
            return
        for code in range(q ** (d + 1)):
            c = code
            coeffs = []
            for _ in range(d + 1):
                coeffs.append(c % q)
                c //= q
            yield Poly(gf, coeffs)

    def rec(i, tup, has_max):
        if i == rank:
            if has_max:
                yield tuple(tup)
            return
        for p in polys_up_to(m):
            yield from rec(i + 1, tup + [p], has_max or p.degree == m)

    if m < 0:
        return
    yield from rec(0, [], False)
