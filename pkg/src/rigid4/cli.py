"""Command-line front end: rigid4 <subcommand> ...

Exit status 0 on success, 1 on a domain error, 2 on a usage error.
"""

import argparse
import csv
import json
import sys
from fractions import Fraction

from .construct import (MonodromyTriple, check_triple, goursat_params,
                        goursat_params_factored, goursat_triple, integral_triple,
                        normalize_twist, reducibility_witness, validate_spectra)
from .exactnum import CycElt, fmt_rat, rat
from .group import DEFAULT_CAP, CapExceeded, enumerate_group
from .hermitian import (arcs_definite, det_identity, finite_monodromy, form_signature,
                        hermitian_matrix, param_definite, special_counts)
from .obstruction import format_places, mu_table, quaternion_class, ramified_primes
from .ode import (LinearOperator, PowerSeries, goursat_operator, indicial_exponents,
                  ode_coefficients, series_solutions, verify_algebraic)
from .search import CSV_HEADER, SearchBounds, search_finite, search_moduli_Q
from .stargraph import GOURSAT, StarDiagram, is_rigid, render_trace


def _fracs(text):
    try:
        return [rat(x) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated fractions a/b, got {text!r}")


def _coeff(v):
    """A JSON number/string is rational; a dict is a cyclotomic element."""
    if isinstance(v, dict):
        return CycElt.from_json(v)
    return rat(v)


def _json_value(c):
    if isinstance(c, CycElt):
        return fmt_rat(c.to_fraction()) if c.is_rational() else c.to_json()
    return fmt_rat(c)


def _emit(obj, fmt="json"):
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(obj)


def _spectra(args):
    return validate_spectra(args.alpha, args.beta, args.gamma)


def _add_spectra(p, beta=True):
    p.add_argument("--alpha", type=_fracs, required=True, help="a1,a2")
    if beta:
        p.add_argument("--beta", type=_fracs, required=True, help="b1,b2")
    p.add_argument("--gamma", type=_fracs, required=True, help="c1,c2,c3,c4")


# ---------------------------------------------------------------------------
# subcommands

def cmd_rigid(args):
    if args.diagram:
        if args.diagram not in GOURSAT:
            raise ValueError(f"unknown diagram {args.diagram}; known: {', '.join(GOURSAT)}")
        d = GOURSAT[args.diagram]
    else:
        parts = [[int(x) for x in leg.split(",")] for leg in args.partitions.split(";")]
        d = StarDiagram.from_partitions(sum(parts[0]), parts)
    out = is_rigid(d)
    if args.format == "json":
        _emit({"rigid": out.rigid, "failure": None if out.failure is None else str(out.failure),
               "steps": [label for label, _ in out.trace]})
    else:
        print(render_trace(out))
    return 0


def cmd_construct(args):
    s = _spectra(args)
    if args.flavor == "integral":
        t = integral_triple(s)
    else:
        t = goursat_triple(normalize_twist(s)[0])
    out = t.to_json()
    out["check"] = check_triple(t, s if args.flavor == "integral" else normalize_twist(s)[0])
    if args.params:
        ns = normalize_twist(s)[0]
        p = goursat_params(ns)
        R, BC, S = goursat_params_factored(ns)
        out["params"] = {k: _json_value(getattr(p, k)) for k in ("A", "D", "BC", "R")}
        # the factored route fixes A and D as the two roots of X^2 - (R - S + 1) X + (R + BC)
        out["routes_agree"] = (p.R == R and p.BC == BC and p.A + p.D == R - S + 1
                               and p.A * p.D == R + BC)
    _emit(out)
    return 0


def cmd_irreducible(args):
    s = _spectra(args)
    ns, tw = normalize_twist(s)
    w = reducibility_witness(ns)
    _emit({"irreducible": w.irreducible, "witness": w.kind, "labeling": list(w.labeling),
           "normalized": ns.to_json()})
    return 0


def cmd_hermitian(args):
    s = _spectra(args)
    ns, _ = normalize_twist(s)
    if not reducibility_witness(ns).irreducible:
        raise ValueError("spectra are reducible; no invariant form is defined")
    if args.finite:
        ok, reports = finite_monodromy(s, jobs=args.jobs)
        _emit({"finite": ok, "twists": [{"t": r.twist, "verdict": r.verdict} for r in reports]})
        return 0
    p = goursat_params(ns)
    tns = normalize_twist(ns.twisted(args.twist))[0] if args.twist != 1 else ns
    tp = goursat_params(tns)
    v = arcs_definite(tns)
    out = {
        "twist": args.twist,
        "signature": list(form_signature(tp)),
        "param_definite": param_definite(tp).verdict,
        "arcs_definite": v.definite,
        "arcs_degenerate": v.degenerate,
        "det_identity": hermitian_matrix(p).det() == det_identity(p),
    }
    if args.matrix:
        out["H"] = hermitian_matrix(tp).H.to_json()
    if args.special is not None:
        out["special_counts"] = list(special_counts(args.special, s.gamma))
    _emit(out)
    return 0


def cmd_group(args):
    if args.matrices:
        with open(args.matrices) as f:
            t = MonodromyTriple.from_json(json.load(f))
    else:
        s = _spectra(args)
        t = integral_triple(s) if args.flavor == "integral" else goursat_triple(normalize_twist(s)[0])
    rep = enumerate_group(t.gens, cap=args.cap, jobs=args.jobs)
    _emit(rep.to_json())
    return 0


def cmd_obstruction(args):
    if args.D is not None:
        if args.mu is None:
            raise ValueError("--D needs --mu")
        places = ramified_primes(args.D, args.mu)
        _emit({"D": args.D, "mu": args.mu, "ramified": list(places),
               "display": format_places(places)})
        return 0
    if None in (args.alpha, args.beta, args.gamma):
        raise ValueError("give --alpha, --beta and --gamma, or --D and --mu")
    s = _spectra(args)
    q = quaternion_class(s)
    out = q.to_json()
    out["mu_table"] = mu_table(s)
    out["display"] = format_places(q.ramified)
    _emit(out)
    return 0


def cmd_ode(args):
    c = ode_coefficients(args.alpha, args.gamma)
    phi0, phi1 = series_solutions(c, args.terms)
    _emit({"constants": dict(zip("ABCDEFGH", (fmt_rat(x) for x in c.as_list()))),
           "beta": fmt_rat(c.beta),
           "operator": goursat_operator(c).to_json(),
           "phi0": [fmt_rat(x) for x in phi0.coeffs],
           "phi1": [fmt_rat(x) for x in phi1.coeffs]})
    return 0


def cmd_indicial(args):
    if args.operator:
        with open(args.operator) as f:
            L = LinearOperator.from_json(json.load(f))
    else:
        L = goursat_operator(ode_coefficients(args.alpha, args.gamma))
    out = {}
    for pt in args.point:
        key = pt if pt == "inf" else rat(pt)
        r = indicial_exponents(L, key)
        out[pt] = {"exponents": [fmt_rat(x) for x in r.roots],
                   "polynomial": [fmt_rat(x) for x in r.polynomial],
                   "irrational_factors": [[fmt_rat(x) for x in f] for f in r.irrational_factors]}
    _emit(out)
    return 0


def cmd_verify(args):
    with open(args.poly) as f:
        P = {(int(t["x"]), int(t["y"])): _coeff(t["c"]) for t in json.load(f)}
    if args.series:
        with open(args.series) as f:
            y = PowerSeries([_coeff(v) for v in json.load(f)])
    else:
        if args.alpha is None or args.gamma is None:
            raise ValueError("give --series or both --alpha and --gamma")
        c = ode_coefficients(args.alpha, args.gamma)
        phi0, phi1 = series_solutions(c, args.terms)
        k = _coeff(json.loads(args.a1)) if args.a1 else Fraction(0)
        y = PowerSeries([a + k * b for a, b in zip(phi0.coeffs, phi1.coeffs)], args.terms)
    ok = verify_algebraic(P, y, args.terms)
    _emit({"annihilates": ok, "terms": args.terms})
    return 0 if ok else 1


def cmd_search(args):
    if args.kind == "finite":
        bounds = SearchBounds(args.max_abd, args.max_gd,
                              tuple(args.conductor) if args.conductor else None)
        progress = None
        if args.progress:
            progress = lambda i, n: print(f"\r{i}/{n}", end="" if i < n else "\n", file=sys.stderr)
        hits = search_finite(bounds, jobs=args.jobs, progress=progress)
        groups = [("finite", hits)]
    else:
        indef, defin = search_moduli_Q()
        groups = [("signature (2,2)", indef), ("signature (4,0)", defin)]
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for _, hits in groups:
            for h in hits:
                w.writerow(h.row())
    else:
        _emit({name: [h.to_json() for h in hits] for name, hits in groups})
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(prog="rigid4", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rigid", help="star-graph rigidity reduction")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--diagram", help="one of " + ", ".join(GOURSAT))
    g.add_argument("--partitions", help='eigenvalue multiplicities, e.g. "2,1,1;2,2;1,1,1,1"')
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_rigid)

    p = sub.add_parser("construct", help="monodromy triple for G-II spectra")
    _add_spectra(p)
    p.add_argument("--flavor", choices=["goursat", "integral"], default="goursat")
    p.add_argument("--params", action="store_true", help="also print A, D, BC, AD-BC from both routes")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("irreducible", help="irreducibility from exponents")
    _add_spectra(p)
    p.set_defaults(func=cmd_irreducible)

    p = sub.add_parser("hermitian", help="invariant form, signature and definiteness")
    _add_spectra(p)
    p.add_argument("--twist", type=int, default=1, help="Galois twist t, a unit mod N")
    p.add_argument("--finite", action="store_true", help="definiteness under every twist")
    p.add_argument("--matrix", action="store_true", help="include the form itself")
    p.add_argument("--special", type=rat, default=None, metavar="ALPHA1",
                   help="also report (n1, n2) for the special case with this alpha1")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_hermitian)

    p = sub.add_parser("group", help="order and center of the monodromy group")
    p.add_argument("--alpha", type=_fracs)
    p.add_argument("--beta", type=_fracs)
    p.add_argument("--gamma", type=_fracs)
    p.add_argument("--matrices", help="JSON file with T0, T1, Tinf")
    p.add_argument("--flavor", choices=["goursat", "integral"], default="integral")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("obstruction", help="mu and the quaternion algebra (D, mu)")
    p.add_argument("--alpha", type=_fracs)
    p.add_argument("--beta", type=_fracs)
    p.add_argument("--gamma", type=_fracs)
    p.add_argument("--D", type=int)
    p.add_argument("--mu", type=int)
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("ode", help="Goursat operator constants and series solutions")
    _add_spectra(p, beta=False)
    p.add_argument("--terms", type=int, default=10)
    p.set_defaults(func=cmd_ode)

    p = sub.add_parser("indicial", help="local exponents of an operator")
    p.add_argument("--operator", "--op", help="JSON file: list of coefficient polynomials, lowest first")
    p.add_argument("--alpha", type=_fracs)
    p.add_argument("--gamma", type=_fracs)
    p.add_argument("--point", "--at", action="append", default=None,
                   help="0, 1, inf or a rational; repeatable (default 0, 1, inf)")
    p.set_defaults(func=cmd_indicial)

    p = sub.add_parser("verify", help="check that P(x, y(x)) = 0 to a given order")
    p.add_argument("--poly", required=True,
                   help='JSON file: [{"x": i, "y": j, "c": coeff}, ...]')
    p.add_argument("--series", help="JSON file: list of coefficients")
    p.add_argument("--alpha", type=_fracs)
    p.add_argument("--gamma", type=_fracs)
    p.add_argument("--a1", help="coefficient of phi1 (JSON value), default 0")
    p.add_argument("--terms", type=int, default=25)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive searches")
    ss = p.add_subparsers(dest="kind", required=True)
    q = ss.add_parser("finite", help="finite monodromy within denominator bounds")
    q.add_argument("--max-abd", type=int, default=6, help="max denominator of alpha, beta")
    q.add_argument("--max-gd", type=int, default=30, help="max denominator of gamma")
    q.add_argument("--conductor", type=int, action="append", help="restrict to these conductors")
    q.add_argument("--jobs", type=int, default=1)
    q.add_argument("--progress", action="store_true")
    q.add_argument("--format", choices=["csv", "json"], default="csv")
    q.set_defaults(func=cmd_search)
    q = ss.add_parser("moduli-q", help="field of moduli Q")
    q.add_argument("--format", choices=["csv", "json"], default="csv")
    q.set_defaults(func=cmd_search)
    return ap


def run(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "command", None) == "indicial":
        if not args.operator and (args.alpha is None or args.gamma is None):
            ap.error("indicial needs --operator or --alpha and --gamma")
        args.point = args.point or ["0", "1", "inf"]
    if getattr(args, "command", None) in ("group",) and not args.matrices and None in (
            args.alpha, args.beta, args.gamma):
        ap.error("group needs --matrices or --alpha, --beta and --gamma")
    if getattr(args, "jobs", 1) < 1:
        ap.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, CapExceeded, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
