"""The Carlitz operator, its torsion in both completions, T-division, and
Dirichlet-style approximation by torsion points."""

import random

import pytest

from conftest import field, rand_poly
from carlitz.errors import BelowPrecision, DomainError, PrecisionError
from carlitz.operator import (
    XPoly,
    brackets_D,
    carlitz_act,
    carlitz_operator,
    cyclotomic_poly,
)
from carlitz.padic import PadicCtx
from carlitz.poly import Poly, parse_poly
from carlitz.series import InfLaurent, VqElem
from carlitz.torsion import (
    completed_action,
    dirichlet_approx,
    divide_T,
    division_chain,
    min_separating_prec,
    torsion_padic,
    torsion_vq,
)


# ---------------------------------------------------------------- operator


def test_operator_of_T():
    gf = field(3)
    op = carlitz_operator(Poly.T(gf))
    assert list(op.coeffs) == [Poly.T(gf), Poly.one(gf)]
    assert str(op.to_xpoly()) == "x^3 + T*x"


@pytest.mark.parametrize("q", [2, 3])
def test_operator_coefficient_degrees(q):
    gf = field(q)
    rng = random.Random(q)
    for _ in range(20):
        M = rand_poly(gf, rng, 4, nonzero=True)
        op = carlitz_operator(M)
        d = M.degree
        for i, c in enumerate(op.coeffs):
            assert c.degree == (d - i) * q**i


@pytest.mark.parametrize("q", [3, 4])
def test_operator_module_identities(q):
    gf = field(q)
    rng = random.Random(100 + q)
    for _ in range(25):
        M = rand_poly(gf, rng, 2)
        N = rand_poly(gf, rng, 2)
        u = rand_poly(gf, rng, 3)
        assert carlitz_act(M + N, u) == carlitz_act(M, u) + carlitz_act(N, u)
        assert carlitz_act(M * N, u) == carlitz_act(M, carlitz_act(N, u))


def test_operator_acts_in_padic_quotients():
    gf = field(3)
    ctx = PadicCtx(parse_poly("T^2+1", gf), 3)
    rng = random.Random(2)
    for _ in range(20):
        M = rand_poly(gf, rng, 4)
        u = rand_poly(gf, rng, 5)
        assert carlitz_act(M, ctx.elem(u)) == ctx.elem(carlitz_act(M, u))


def test_operator_acts_on_series():
    gf = field(3)
    f = parse_poly("T^2+2", gf)
    u = parse_poly("T+1", gf)
    assert carlitz_act(f, VqElem.from_poly(u)) == VqElem.from_poly(carlitz_act(f, u))


def test_brackets_and_D():
    gf = field(3)
    T = Poly.T(gf)
    b1, D1 = brackets_D(gf, 1)
    assert b1 == Poly.one(gf).shift(3) - T  # T^3 - T
    b2, D2 = brackets_D(gf, 2)
    assert b2 == Poly.one(gf).shift(9) - T
    assert D2 == b2 * D1.frob_q()
    _, D0 = brackets_D(gf, 0)
    assert D0 == Poly.one(gf)


def test_cyclotomic_divides_operator():
    gf = field(3)
    for P in (Poly.T(gf), parse_poly("T^2+1", gf)):
        phi1 = cyclotomic_poly(P, 1)
        x = XPoly(gf, [Poly.zero(gf), Poly.one(gf)])
        assert phi1 * x == carlitz_operator(P).to_xpoly()
        phi2 = cyclotomic_poly(P, 2)
        assert phi2 * carlitz_operator(P).to_xpoly() == carlitz_operator(P * P).to_xpoly()


def test_cyclotomic_frozen_value():
    gf = field(3)
    assert str(cyclotomic_poly(Poly.T(gf), 1)) == "x^2 + T"


# ---------------------------------------------------------------- P-adic torsion


def test_torsion_padic_frozen_q3():
    gf = field(3)
    ts = torsion_padic(Poly.T(gf), 3)
    assert len(ts) == 3
    reps = sorted(str(x) for x in ts)
    assert reps == ["0", "2*T^2+2*T+2", "T^2+T+1"]


def test_torsion_padic_is_a_module():
    gf = field(3)
    P = parse_poly("T^2+1", gf)
    ts = torsion_padic(P, 4)
    assert len(ts) == 9
    order = P - Poly.one(gf)
    pts = list(ts)
    for x in pts:
        assert carlitz_act(order, x).is_zero()
    rng = random.Random(3)
    for _ in range(20):
        a, b = rng.choice(pts), rng.choice(pts)
        assert (a + b) in ts
        assert carlitz_act(rand_poly(gf, rng, 3), a) in ts


# ---------------------------------------------------------------- V_q torsion


def test_min_separating_prec():
    gf = field(3)
    T = Poly.T(gf)
    assert min_separating_prec(T) == 0
    assert min_separating_prec(T * T) == 2
    assert min_separating_prec(T * T * T) == 4


def test_torsion_vq_counts_and_valuations():
    gf = field(3)
    M = parse_poly("T^2", gf)
    ts = torsion_vq(M, 8)
    assert len(ts) == 9
    vals = []
    for p in ts:
        try:
            vals.append(p.valuation())
        except BelowPrecision:
            pass
    zero_count = sum(1 for p in ts if p.is_zero())
    assert zero_count == 1
    assert sorted(v for v in vals if v != float("inf")) == [-1] * 6 + [1] * 2


def test_torsion_vq_killed_by_order():
    gf = field(3)
    M = parse_poly("T^2+1", gf)
    ts = torsion_vq(M, 10)
    assert len(ts) == 9
    for p in ts:
        img = carlitz_act(M, p)
        assert img.is_zero() or img.valuation() >= img.prec or not any(
            c for _, c in img.terms()
        )


def test_torsion_vq_precision_guard():
    gf = field(3)
    M = parse_poly("T^2", gf)
    with pytest.raises(PrecisionError) as e:
        torsion_vq(M, 1)
    assert e.value.needed is not None and e.value.needed >= 2


# ---------------------------------------------------------------- division


def test_divide_T_branches():
    gf = field(3)
    ts = torsion_vq(parse_poly("T^2", gf), 12)
    u = next(p for p in ts if not p.is_zero() and p.valuation() == 1)
    branches = divide_T(u)
    assert len(branches) == 3
    # every branch maps back to u under rho_T
    for v in branches:
        back = carlitz_act(Poly.T(gf), v)
        assert back.agrees(u, upto=min(back.prec, u.prec, 8))
    # branches differ from the canonical one by multiples of s^-1 (ker rho_T)
    canon = branches[0]
    for z, v in enumerate(branches):
        diff = v - canon
        if z:
            assert diff.valuation() == -1
    # canonical branch has the largest valuation
    assert canon.valuation() == max(v.valuation() for v in branches)


def test_divide_T_rejects_low_valuation():
    gf = field(3)
    u = VqElem.monomial(gf, 1, -3)
    with pytest.raises(PrecisionError):
        divide_T(u)


def test_division_chain_valuation_slope():
    gf = field(3)
    ts = torsion_vq(Poly.T(gf), 30)
    u = next(p for p in ts if not p.is_zero())
    chain = division_chain(u.truncate(25), 8)
    vals = [v.valuation() for v in chain]
    assert vals == [u.valuation() + 2 * (k + 1) for k in range(8)]


def test_completed_action_matches_polynomial_action():
    gf = field(3)
    rng = random.Random(9)
    for _ in range(10):
        M = rand_poly(gf, rng, 3)
        u = VqElem.from_poly(rand_poly(gf, rng, 2)).truncate(15)
        a = completed_action(M, u)
        b = carlitz_act(M, u)
        assert a.agrees(b, upto=min(a.prec, b.prec))
        a2 = completed_action(InfLaurent.from_poly(M), u)
        assert a2.agrees(b, upto=min(a2.prec, b.prec, 10))


def test_completed_action_principal_part_is_division():
    gf = field(3)
    ts = torsion_vq(parse_poly("T^2", gf), 20)
    u = next(p for p in ts if not p.is_zero() and p.valuation() == 1)
    Minv = InfLaurent.monomial(gf, 1, 1)  # the series T^{-1}
    v = completed_action(Minv, u)
    canon = divide_T(u)[0]
    assert v.agrees(canon, upto=min(v.prec, canon.prec, 12))


# ---------------------------------------------------------------- dirichlet


def test_dirichlet_approx_bound():
    gf = field(3)
    ts = torsion_vq(parse_poly("T^4", gf), 20)
    lam = next(p for p in ts if not p.is_zero() and p.valuation() == -1)
    n = 3
    order, best = dirichlet_approx(lam, n)
    assert order == parse_poly("T^3", gf)
    diff = best - lam
    bound = (n - 1) * (3 - 1) - 1
    try:
        dv = diff.valuation()
    except BelowPrecision:
        dv = diff.prec
    assert dv > bound


def test_dirichlet_rejects_bad_valuation():
    gf = field(3)
    lam = VqElem.monomial(gf, 1, -2, prec=10)  # v = -2 is not i(q-1) - 1
    with pytest.raises(DomainError):
        dirichlet_approx(lam, 3)
