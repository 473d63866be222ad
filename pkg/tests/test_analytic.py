"""Truncated analytic series: the additive exponential, partial products for
the period, and rank-one Eisenstein-type lattice sums, each with a
convergence certificate."""

import random

import pytest

from conftest import field
from carlitz.analytic import Lattice, SeriesBudget, carlitz_exp, eisenstein, period_partial
from carlitz.errors import DomainError
from carlitz.operator import carlitz_act
from carlitz.poly import Poly, RatFn
from carlitz.series import VqElem


# ---------------------------------------------------------------- exponential


def test_exp_frozen_series():
    gf = field(3)
    z = VqElem.monomial(gf, 1, 2, prec=40)
    e, cert = carlitz_exp(z, SeriesBudget(precision=36), with_certificate=True)
    assert str(e) == "s^2 + 2*s^12 + 2*s^16 + 2*s^20 + 2*s^24 + 2*s^28 + 2*s^32 + O(s^36)"
    # certificate: strictly increasing term valuations
    assert cert == {0: 2, 1: 12, 2: 54}
    assert sorted(cert.values()) == list(cert.values())


def test_exp_functional_equation():
    gf = field(3)
    T = Poly.T(gf)
    rng = random.Random(31)
    budget = SeriesBudget(precision=30)
    for _ in range(10):
        z = VqElem.from_terms(
            gf,
            {k: rng.randrange(3) for k in range(1, 6)},
            prec=40,
        )
        lhs = carlitz_exp(VqElem.from_poly(T) * z, budget)
        rhs = carlitz_act(T, carlitz_exp(z, budget))
        upto = min(lhs.prec, rhs.prec, 25)
        assert lhs.agrees(rhs, upto=upto)


def test_exp_additivity():
    gf = field(3)
    rng = random.Random(37)
    budget = SeriesBudget(precision=30)
    for _ in range(5):
        a = VqElem.from_terms(gf, {k: rng.randrange(3) for k in range(1, 5)}, prec=40)
        b = VqElem.from_terms(gf, {k: rng.randrange(3) for k in range(1, 5)}, prec=40)
        lhs = carlitz_exp(a + b, budget)
        rhs = carlitz_exp(a, budget) + carlitz_exp(b, budget)
        assert lhs.agrees(rhs, upto=min(lhs.prec, rhs.prec, 25))


def test_exp_entire_at_negative_valuation():
    # term valuations q^n(v(z) + (q-1)n) grow for any v(z), so the sum
    # converges even below valuation zero
    gf = field(3)
    z = VqElem.monomial(gf, 1, -1, prec=20)
    e, cert = carlitz_exp(z, SeriesBudget(precision=16), with_certificate=True)
    assert e.valuation() == -1
    vals = [v for v in cert.values() if isinstance(v, int)]
    assert vals == sorted(vals)


# ---------------------------------------------------------------- period


def test_period_partial_types():
    gf = field(3)
    r, s = period_partial(gf, 2, prec=40)
    assert isinstance(r, RatFn)
    assert s.prec == 40


def test_period_cauchy_valuations():
    gf = field(3)
    expansions = [period_partial(gf, N, prec=200)[1] for N in range(1, 5)]
    diffs = [
        (b - a).valuation() for a, b in zip(expansions, expansions[1:])
    ]
    assert diffs == [18, 54, 162]


# ---------------------------------------------------------------- eisenstein


def test_eisenstein_frozen_rank_one():
    gf = field(3)
    L = Lattice([VqElem.monomial(gf, 1, -1)])
    E2, cert = eisenstein(L, 2, SeriesBudget(precision=20), with_certificate=True)
    assert str(E2) == "2*s^4 + s^16 + O(s^20)"
    assert cert[0] == 4 and cert[1] == 16
    assert str(cert[2]).startswith(">=")


def test_eisenstein_scaling_law():
    gf = field(3)
    q = 3
    k = 2
    L = Lattice([VqElem.monomial(gf, 1, -1)])
    c = VqElem.from_poly(Poly.T(gf))
    E = eisenstein(L, k, SeriesBudget(precision=24))
    Ec = eisenstein(L.scaled(c), k, SeriesBudget(precision=24))
    # E_k(cL) = c^{-k(q-1)} E_k(L)
    scaled = E * (c.inverse(prec=30) ** (k * (q - 1)))
    assert Ec.agrees(scaled, upto=min(Ec.prec, scaled.prec, 20))


def test_lattice_validation():
    gf = field(3)
    with pytest.raises(DomainError):
        Lattice([])
    with pytest.raises(DomainError):
        Lattice([VqElem.zero(gf)])
