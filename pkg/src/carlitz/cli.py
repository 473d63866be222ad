"""Command-line frontend.

Every library operation is exposed as a subcommand with exact text/JSON
output; batch ``sweep`` commands drive the exhaustive law checks.  Exit codes:
0 success, 1 domain/computation error, 2 usage error.  The environment
variable CARLITZ_MAX_DEG caps enumeration bounds.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction as Rational

from . import analytic, geometry, reciprocity, torsion
from .errors import CarlitzError, DomainError, PrecisionError
from .gf import GF
from .operator import brackets_D, carlitz_act, carlitz_operator, cyclotomic_poly
from .poly import Poly, RatFn, monic_irreducibles, parse_poly
from .series import InfLaurent, VqElem, parse_series


class UsageError(Exception):
    pass


DEFAULT_MAX_DEG = 6


def max_deg_cap() -> int:
    raw = os.environ.get("CARLITZ_MAX_DEG")
    if raw is None:
        return DEFAULT_MAX_DEG
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CARLITZ_MAX_DEG={raw!r} is not an integer")


def check_cap(deg: int, what: str):
    cap = max_deg_cap()
    if deg > cap:
        raise UsageError(
            f"{what} degree {deg} exceeds the enumeration cap {cap} "
            "(raise CARLITZ_MAX_DEG to override)"
        )


def build_gf(args) -> GF:
    q = args.q
    p, r = _prime_power(q)
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(c) for c in args.modulus.split(",")]
    return GF(p, r, modulus)


def _prime_power(q: int):
    if q < 2:
        raise UsageError(f"q = {q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise UsageError(f"q = {q} is not a prime power")
            return p, r
    raise UsageError(f"q = {q} is not a prime power")


def parse_fraction(s: str, gf) -> geometry.Fraction:
    s = s.strip()
    if s in ("inf", "infinity", "1/0"):
        return geometry.Fraction.infinity(gf)
    if "/" in s:
        num, den = s.split("/", 1)
        return geometry.Fraction(parse_poly(num.strip("() "), gf), parse_poly(den.strip("() "), gf))
    return geometry.Fraction(parse_poly(s, gf), Poly.one(gf))


def emit(args, payload: dict, text_lines):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------- commands


def cmd_act(args):
    gf = build_gf(args)
    M = parse_poly(args.M, gf)
    u = parse_poly(args.u, gf)
    out = carlitz_act(M, u)
    emit(args, {"result": str(out)}, [str(out)])


def cmd_operator(args):
    gf = build_gf(args)
    M = parse_poly(args.M, gf)
    op = carlitz_operator(M)
    coeffs = [str(c) for c in op.coeffs]
    emit(args, {"coeffs": coeffs}, ["; ".join(coeffs)])


def cmd_cyclotomic(args):
    gf = build_gf(args)
    P = parse_poly(args.P, gf)
    out = cyclotomic_poly(P, args.n)
    emit(args, {"poly": str(out)}, [str(out)])


def cmd_torsion_padic(args):
    gf = build_gf(args)
    P = parse_poly(args.P, gf)
    check_cap(P.degree, "prime")
    ts = torsion.torsion_padic(P, args.N)
    pts = sorted(str(x) for x in ts)
    emit(args, json.loads(ts.to_json()), pts)


def cmd_torsion_vq(args):
    gf = build_gf(args)
    M = parse_poly(args.M, gf)
    check_cap(M.degree, "order")
    prec = args.prec if args.prec is not None else torsion.min_separating_prec(M) + gf.q
    ts = torsion.torsion_vq(M, prec)
    pts = sorted(str(x) for x in ts)
    emit(args, json.loads(ts.to_json()), pts)


def cmd_divide_t(args):
    gf = build_gf(args)
    u = parse_series(args.u, gf, VqElem)
    branches = torsion.divide_T(u, prec=args.prec)
    lines = [str(b) for b in branches]
    emit(args, {"branches": lines}, lines)


def cmd_completed_act(args):
    gf = build_gf(args)
    M = parse_series(args.M, gf, InfLaurent)
    u = parse_series(args.u, gf, VqElem)
    out = torsion.completed_action(M, u)
    emit(args, {"result": str(out)}, [str(out)])


def cmd_dirichlet(args):
    gf = build_gf(args)
    lam = parse_series(args.target, gf, VqElem)
    Mn, ln = torsion.dirichlet_approx(lam, args.n)
    emit(
        args,
        {"M": str(Mn), "approximant": str(ln)},
        [f"M_n = {Mn}", f"lambda_n = {ln}"],
    )


def cmd_symbol(args):
    gf = build_gf(args)
    A = parse_poly(args.A, gf)
    P = parse_poly(args.P, gf)
    val = reciprocity.residue_symbol(A, P, args.d)
    emit(args, {"symbol": gf.fmt_elem(val)}, [gf.fmt_elem(val)])


def cmd_reciprocity(args):
    gf = build_gf(args)
    P = parse_poly(args.P, gf)
    Q = parse_poly(args.Q, gf)
    lhs, rhs, holds = reciprocity.check_reciprocity(P, Q, args.d)
    emit(
        args,
        {"lhs": gf.fmt_elem(lhs), "rhs": gf.fmt_elem(rhs), "holds": holds},
        [f"lhs = {gf.fmt_elem(lhs)}", f"rhs = {gf.fmt_elem(rhs)}", f"holds = {holds}"],
    )


def cmd_split_kummer(args):
    gf = build_gf(args)
    A = parse_poly(args.A, gf)
    P = parse_poly(args.P, gf)
    f = reciprocity.residue_degree_kummer(A, P, args.d)
    emit(args, {"residue_degree": f}, [str(f)])


def cmd_split_cyclotomic(args):
    gf = build_gf(args)
    P = parse_poly(args.P, gf)
    A = parse_poly(args.A, gf)
    f = reciprocity.residue_degree_cyclotomic(P, A)
    emit(args, {"residue_degree": f}, [str(f)])


def cmd_xi(args):
    gf = build_gf(args)
    A = parse_poly(args.A, gf)
    out = reciprocity.xi_poly(A)
    emit(args, {"poly": str(out)}, [str(out)])


def cmd_newton(args):
    gf = build_gf(args)
    A = parse_poly(args.A, gf)
    np = reciprocity.newton_polygon(reciprocity.xi_poly(A))
    verts = [[int(x), int(y)] for x, y in np.vertices]
    segs = [[str(s), str(l)] for s, l in np.segments]
    emit(
        args,
        {"vertices": verts, "segments": segs},
        [f"vertices: {verts}", f"segments (slope, length): {segs}"],
    )


def cmd_kummer(args):
    gf = build_gf(args)
    if args.kummer_cmd == "map":
        u = parse_series(args.u, gf, VqElem)
        out = reciprocity.kummer_map(u)
        emit(args, {"image": str(out)}, [str(out)])
    else:
        M = parse_series(args.M, gf, InfLaurent)
        out = reciprocity.kummer_solve(M)
        emit(args, {"root": str(out)}, [str(out)])


def cmd_star(args):
    gf = build_gf(args)
    A = parse_poly(args.A, gf)
    nu = parse_series(args.nu, gf, InfLaurent)
    out = reciprocity.star_action(A, nu)
    emit(args, {"result": str(out)}, [str(out)])


def cmd_tangent(args):
    gf = build_gf(args)
    f1 = parse_fraction(args.f1, gf)
    f2 = parse_fraction(args.f2, gf)
    res = geometry.tangent(f1, f2)
    emit(args, {"tangent": res}, [str(res).lower()])


def cmd_family(args):
    gf = build_gf(args)
    f1 = parse_fraction(args.f1, gf)
    f2 = parse_fraction(args.f2, gf)
    fam = geometry.tangent_family(f1, f2)
    lines = [str(m) for m in fam]
    emit(args, {"members": lines}, lines)


def _descartes_on_family(fam):
    val = geometry.descartes_form(fam)
    return val


def cmd_descartes(args):
    gf = build_gf(args)
    if args.descartes_cmd == "family":
        f1 = parse_fraction(args.f1, gf)
        f2 = parse_fraction(args.f2, gf)
        fam = geometry.tangent_family(f1, f2)
        val = _descartes_on_family(fam)
        emit(
            args,
            {"members": [str(m) for m in fam], "form": str(val), "zero": val.is_zero()},
            [str(m) for m in fam] + [f"form = {val}", f"zero = {val.is_zero()}"],
        )
    elif args.descartes_cmd == "eval":
        xs = [parse_fraction(s, gf) for s in args.curvatures.split(";")]
        val = geometry.descartes_form(xs)
        emit(args, {"form": str(val), "zero": val.is_zero()}, [str(val)])
    else:  # sweep
        rng = random.Random(args.seed)
        rows = []
        bad = 0
        for _ in range(args.count):
            fam = geometry.random_tangent_family(gf, rng)
            val = _descartes_on_family(fam)
            rows.append((";".join(str(m) for m in fam), str(val), val.is_zero()))
            if not val.is_zero():
                bad += 1
        rows.sort()
        for members, form, zero in rows:
            print(f"{members}\t{form}\t{'zero' if zero else 'NONZERO'}")
        if bad:
            raise CarlitzError(f"{bad} of {args.count} families violate the form")


def cmd_soddy(args):
    ks = [Rational(x) for x in args.ks.split(",")]
    val = geometry.soddy_form(args.n, ks)
    emit(args, {"form": str(val), "zero": val == 0}, [str(val)])


def _parse_vertex(s: str, gf) -> geometry.TreeVertex:
    # format: level;series  (series in the T-digit format, possibly 0)
    level_s, _, ser_s = s.partition(";")
    level = int(level_s)
    digits = {}
    if ser_s.strip() not in ("", "0"):
        ser = parse_series(ser_s, gf, InfLaurent)
        digits = dict(ser.terms())
    return geometry.TreeVertex(gf, level, digits)


def cmd_tree(args):
    gf = build_gf(args)
    if args.tree_cmd == "neighbors":
        v = _parse_vertex(args.vertex, gf)
        lines = [n.label() for n in geometry.tree_neighbors(v)]
        emit(args, {"neighbors": lines}, lines)
    elif args.tree_cmd == "distance":
        v1 = _parse_vertex(args.v1, gf)
        v2 = _parse_vertex(args.v2, gf)
        d = geometry.tree_distance(v1, v2)
        emit(args, {"distance": d}, [str(d)])
    else:  # export
        radius = args.radius
        check_cap(radius, "radius")
        base = geometry.TreeVertex.base(gf)
        seen = {base: 0}
        frontier = [base]
        edges = set()
        while frontier:
            v = frontier.pop()
            if seen[v] >= radius:
                continue
            for w in geometry.tree_neighbors(v):
                edges.add(tuple(sorted((v.label(), w.label()))))
                if w not in seen:
                    seen[w] = seen[v] + 1
                    frontier.append(w)
        print("graph tree {")
        for v in sorted(seen, key=lambda x: (seen[x], x.label())):
            print(f'  "{v.label()}";')
        for a, b in sorted(edges):
            print(f'  "{a}" -- "{b}";')
        print("}")


def cmd_ray(args):
    gf = build_gf(args)
    f = parse_fraction(args.f, gf)
    verts = geometry.geodesic_ray(f, args.steps)
    lines = [v.label() for v in verts]
    emit(args, {"ray": lines}, lines)


def cmd_normal_basis(args):
    gf = build_gf(args)
    data = geometry.normal_basis(gf, args.prec)
    emit(
        args,
        {
            "theta": str(data.theta),
            "conjugates": [str(c) for c in data.conjugates],
            "matrix": [[gf.fmt_elem(e) for e in row] for row in data.change_matrix],
            "det_valuation": data.det_valuation,
        },
        [f"theta = {data.theta}"]
        + [f"sigma^{j}(theta) = {c}" for j, c in enumerate(data.conjugates)]
        + [f"matrix = {data.change_matrix}", f"det valuation = {data.det_valuation}"],
    )


def cmd_exp(args):
    gf = build_gf(args)
    z = parse_series(args.z, gf, VqElem)
    budget = analytic.SeriesBudget(
        term_count=args.terms, precision=args.prec or 24
    )
    val, cert = analytic.carlitz_exp(z, budget, with_certificate=True)
    cert_s = {str(k): str(v) for k, v in cert.items()}
    emit(
        args,
        {"value": str(val), "certificate": cert_s},
        [str(val), json.dumps(cert_s, sort_keys=True)],
    )


def cmd_period(args):
    gf = build_gf(args)
    prec = args.prec or 16
    ratfn, series = analytic.period_partial(gf, args.N, prec=prec)
    emit(
        args,
        {"ratfn": str(ratfn), "series": str(series)},
        [f"exact = {ratfn}", f"series = {series}"],
    )


def cmd_eisenstein(args):
    gf = build_gf(args)
    basis = [parse_series(s, gf, VqElem) for s in args.basis.split(";")]
    L = analytic.Lattice(basis)
    budget = analytic.SeriesBudget(
        degree_bound=args.degree_bound, precision=args.prec or 24
    )
    val, cert = analytic.eisenstein(L, args.k, budget, with_certificate=True)
    cert_s = {str(k): str(v) for k, v in cert.items()}
    emit(
        args,
        {"value": str(val), "certificate": cert_s},
        [str(val), json.dumps(cert_s, sort_keys=True)],
    )


def cmd_sweep(args):
    gf = build_gf(args)
    kind = args.kind
    check_cap(args.max_deg, "sweep")
    bad = 0
    rows = []
    if kind == "reciprocity":
        irr = list(monic_irreducibles(gf, args.max_deg))
        divisors = [d for d in range(1, gf.q) if (gf.q - 1) % d == 0]
        for i, P in enumerate(irr):
            for Q in irr[i + 1 :]:
                for d in divisors:
                    pq = reciprocity.residue_symbol(P, Q, d)
                    qp = reciprocity.residue_symbol(Q, P, d)
                    lhs, rhs, holds = reciprocity.check_reciprocity(P, Q, d)
                    rows.append(
                        (str(P), str(Q), str(d), gf.fmt_elem(pq), gf.fmt_elem(qp), gf.fmt_elem(rhs), str(holds))
                    )
                    if not holds:
                        bad += 1
    elif kind == "descartes":
        rng = random.Random(args.seed)
        for _ in range(args.count):
            fam = geometry.random_tangent_family(gf, rng)
            val = geometry.descartes_form(fam)
            rows.append((";".join(str(m) for m in fam), str(val), str(val.is_zero())))
            if not val.is_zero():
                bad += 1
    elif kind == "torsion":
        for P in monic_irreducibles(gf, args.max_deg):
            ts = torsion.torsion_padic(P, args.N)
            expected = gf.q ** P.degree
            ok = len(ts) == expected
            rows.append((str(P), str(len(ts)), str(expected), str(ok)))
            if not ok:
                bad += 1
    elif kind == "splitting":
        from .residues import ddf

        irr = list(monic_irreducibles(gf, args.max_deg))
        for P in irr:
            for A in irr:
                if P == A:
                    continue
                f = reciprocity.residue_degree_cyclotomic(P, A)
                psi = cyclotomic_poly(A, 1)
                degs = ddf(list(psi.coeffs), P)
                ok = all(d == f for d, _ in degs)
                rows.append((str(P), str(A), str(f), str(degs), str(ok)))
                if not ok:
                    bad += 1
    else:
        raise UsageError(f"unknown sweep kind {kind!r}")
    for row in sorted(rows):
        print("\t".join(row))
    if bad:
        raise CarlitzError(f"{bad} rows violate the law in sweep {kind!r}")


# ---------------------------------------------------------------- parser


def build_parser():
    top = argparse.ArgumentParser(
        prog="carlitz",
        description="Exact arithmetic for the Carlitz module over F_q(T).",
    )

    def common(sp):
        sp.add_argument("--q", type=int, default=3, help="field size, a prime power")
        sp.add_argument("--modulus", help="comma-separated F_p coefficients of the field modulus (r > 1)")
        sp.add_argument("--prec", type=int, default=None, help="working precision")
        sp.add_argument("--seed", type=int, default=0, help="PRNG seed for randomized sweeps")
        sp.add_argument("--output", choices=("text", "json"), default="text")

    sub = top.add_subparsers(dest="command", required=True)

    def add(name, fn, setup=None):
        sp = sub.add_parser(name)
        common(sp)
        if setup:
            setup(sp)
        sp.set_defaults(fn=fn)
        return sp

    add("act", cmd_act, lambda sp: (sp.add_argument("--M", required=True), sp.add_argument("--u", required=True)))
    add("operator", cmd_operator, lambda sp: sp.add_argument("--M", required=True))
    add("cyclotomic", cmd_cyclotomic, lambda sp: (sp.add_argument("--P", required=True), sp.add_argument("--n", type=int, default=1)))
    add("torsion-padic", cmd_torsion_padic, lambda sp: (sp.add_argument("--P", required=True), sp.add_argument("--N", type=int, default=6)))
    add("torsion-vq", cmd_torsion_vq, lambda sp: sp.add_argument("--M", required=True))
    add("divide-t", cmd_divide_t, lambda sp: sp.add_argument("--u", required=True))
    add("completed-act", cmd_completed_act, lambda sp: (sp.add_argument("--M", required=True), sp.add_argument("--u", required=True)))
    add("dirichlet", cmd_dirichlet, lambda sp: (sp.add_argument("--target", required=True), sp.add_argument("--n", type=int, required=True)))
    add("symbol", cmd_symbol, lambda sp: (sp.add_argument("--A", required=True), sp.add_argument("--P", required=True), sp.add_argument("--d", type=int, required=True)))
    add("reciprocity", cmd_reciprocity, lambda sp: (sp.add_argument("--P", required=True), sp.add_argument("--Q", required=True), sp.add_argument("--d", type=int, required=True)))
    add("split-kummer", cmd_split_kummer, lambda sp: (sp.add_argument("--A", required=True), sp.add_argument("--P", required=True), sp.add_argument("--d", type=int, required=True)))
    add("split-cyclotomic", cmd_split_cyclotomic, lambda sp: (sp.add_argument("--P", required=True), sp.add_argument("--A", required=True)))
    add("xi", cmd_xi, lambda sp: sp.add_argument("--A", required=True))
    add("newton", cmd_newton, lambda sp: sp.add_argument("--A", required=True))

    kp = add("kummer", cmd_kummer)
    ksub = kp.add_subparsers(dest="kummer_cmd", required=True)
    km = ksub.add_parser("map")
    common(km)
    km.add_argument("--u", required=True)
    km.set_defaults(fn=cmd_kummer)
    ks = ksub.add_parser("solve")
    common(ks)
    ks.add_argument("--M", required=True)
    ks.set_defaults(fn=cmd_kummer)

    add("star", cmd_star, lambda sp: (sp.add_argument("--A", required=True), sp.add_argument("--nu", required=True)))
    add("tangent", cmd_tangent, lambda sp: (sp.add_argument("--f1", required=True), sp.add_argument("--f2", required=True)))
    add("family", cmd_family, lambda sp: (sp.add_argument("--f1", required=True), sp.add_argument("--f2", required=True)))

    dp = add("descartes", cmd_descartes)
    dsub = dp.add_subparsers(dest="descartes_cmd", required=True)
    df = dsub.add_parser("family")
    common(df)
    df.add_argument("--f1", required=True)
    df.add_argument("--f2", required=True)
    df.set_defaults(fn=cmd_descartes)
    de = dsub.add_parser("eval")
    common(de)
    de.add_argument("--curvatures", required=True, help="semicolon-separated fractions")
    de.set_defaults(fn=cmd_descartes)
    ds = dsub.add_parser("sweep")
    common(ds)
    ds.add_argument("--count", type=int, default=20)
    ds.set_defaults(fn=cmd_descartes)

    add("soddy", cmd_soddy, lambda sp: (sp.add_argument("--n", type=int, default=2), sp.add_argument("--ks", required=True)))

    tp = add("tree", cmd_tree)
    tsub = tp.add_subparsers(dest="tree_cmd", required=True)
    tn = tsub.add_parser("neighbors")
    common(tn)
    tn.add_argument("--vertex", required=True, help="level;series")
    tn.set_defaults(fn=cmd_tree)
    td = tsub.add_parser("distance")
    common(td)
    td.add_argument("--v1", required=True)
    td.add_argument("--v2", required=True)
    td.set_defaults(fn=cmd_tree)
    te = tsub.add_parser("export")
    common(te)
    te.add_argument("--radius", type=int, default=2)
    te.set_defaults(fn=cmd_tree)

    add("ray", cmd_ray, lambda sp: (sp.add_argument("--f", required=True), sp.add_argument("--steps", type=int, default=5)))
    add("normal-basis", cmd_normal_basis)
    add("exp", cmd_exp, lambda sp: (sp.add_argument("--z", required=True), sp.add_argument("--terms", type=int, default=10)))
    add("period", cmd_period, lambda sp: sp.add_argument("--N", type=int, required=True))
    add("eisenstein", cmd_eisenstein, lambda sp: (sp.add_argument("--basis", required=True, help="semicolon-separated series"), sp.add_argument("--k", type=int, default=1), sp.add_argument("--degree-bound", type=int, default=3)))
    add("sweep", cmd_sweep, lambda sp: (sp.add_argument("--kind", required=True, choices=("reciprocity", "descartes", "torsion", "splitting")), sp.add_argument("--max-deg", type=int, default=2), sp.add_argument("--count", type=int, default=20), sp.add_argument("--N", type=int, default=4)))

    return top


def _emit_error(args, code: str, exc: Exception) -> None:
    if getattr(args, "output", "text") == "json":
        ctx = {}
        if isinstance(exc, PrecisionError) and exc.needed is not None:
            ctx["needed_precision"] = exc.needed
        print(
            json.dumps({"code": code, "message": str(exc), "context": ctx}),
            file=sys.stderr,
        )
    else:
        print(f"error[{code}]: {exc}", file=sys.stderr)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        args.fn(args)
        return 0
    except (UsageError, ValueError) as e:
        _emit_error(args, "usage", e)
        return 2
    except PrecisionError as e:
        _emit_error(args, "precision", e)
        return 1
    except (CarlitzError, DomainError) as e:
        _emit_error(args, "domain", e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
