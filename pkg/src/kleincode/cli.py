"""Command-line surface for the Kleinian-code toolkit.

Every verb maps onto one library operation chain and emits JSON by
default (tables with --table where applicable).  Exit codes: 0 success,
1 usage error, 2 mathematical-certificate failure (a mass audit or a
table reproduction coming out wrong).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from kleincode import classify as cls
from kleincode import construct as con
from kleincode import design as des
from kleincode import extremal as ext
from kleincode import kcore
from kleincode import lex as lexmod
from kleincode import sym
from kleincode import wenum


class CertificateError(RuntimeError):
    pass


def _load_code(args) -> kcore.KCode:
    if getattr(args, "code", None):
        return kcore.read_code(args.code)
    if getattr(args, "name", None):
        params = {}
        if getattr(args, "n", None) is not None:
            params["n"] = args.n
        if getattr(args, "m", None) is not None:
            params["m"] = args.m
        return kcore.standard_code(args.name, **params)
    raise SystemExit("one of --code FILE or --name NAME is required")


def _emit(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _budget(args) -> float | None:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("KLEINC_BUDGET_SECS")
    return float(env) if env else None


def cmd_we(args) -> None:
    code = _load_code(args)
    _emit(wenum.hamming_we(code).to_json())


def cmd_cwe(args) -> None:
    code = _load_code(args)
    _emit(wenum.complete_we(code).to_json())


def cmd_swe(args) -> None:
    code = _load_code(args)
    _emit(wenum.swe(code).to_json())


def cmd_dual(args) -> None:
    code = _load_code(args)
    sys.stdout.write(kcore.emit_code(code.dual()))


def cmd_macwilliams(args) -> None:
    code = _load_code(args)
    w = wenum.hamming_we(code)
    _emit(wenum.macwilliams(w, code.size).to_json())


def cmd_shadow(args) -> None:
    code = _load_code(args)
    sh = wenum.shadow(code)
    _emit({"n": code.n, "A": list(sh.shadow_distribution()),
           "even_case": sh.is_even_case})


def cmd_mass(args) -> None:
    _emit({"n": args.n, "even": args.even, "mass": cls.mass(args.n, args.even)})


def _classification(args):
    return cls.classify(args.n, even=args.even, jobs=args.jobs)


def cmd_classify(args) -> None:
    try:
        records = _classification(args)
    except cls.MassAuditError as exc:
        raise CertificateError(str(exc)) from None
    if args.table:
        wd_width = max(len(str(max(r.we))) for r in records)
        for i, rec in enumerate(sorted(records, key=lambda r: (-r.we[2] if r.n >= 2 else 0, r.we)), 1):
            a = " ".join(f"{x:>{wd_width}}" for x in rec.we)
            print(f"{rec.n:>2} {i:>3}  {rec.skeleton.name():<12} |Aut|={rec.aut_order:<10} A=({a})")
        return
    _emit([rec.to_json() for rec in records])


def cmd_children(args) -> None:
    records = _classification(args)
    out = []
    for rec in records:
        kids = cls.children(rec)
        seen = {}
        for (pos, s), kid in kids:
            key = sym.canonical(kid).image.rows
            seen.setdefault(key, ((pos, s), kid))
        out.append({
            "parent": rec.to_json(),
            "children": [kcore.emit_code(kid).strip().split("\n")
                         for _, kid in seen.values()],
        })
    _emit(out)


def cmd_neighbors(args) -> None:
    code = _load_code(args)
    n1, n2 = cls.neighbors(code)
    _emit({"neighbors": [kcore.emit_code(n1).strip().split("\n"),
                         kcore.emit_code(n2).strip().split("\n")]})


def cmd_graph(args) -> None:
    graph = cls.neighborhood_graph(args.n)
    _emit({
        "n": args.n,
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "loops": len(graph.loops),
        "proper_edges": len(graph.proper_edges),
        "connected": graph.is_connected(),
        "incidence": [[v1, v2] for _, v1, v2 in graph.edges],
    })


def cmd_extremal_we(args) -> None:
    sol = ext.extremal_we(args.n, even=args.even)
    _emit({"n": args.n, "even": args.even,
           "A": [str(a) for a in sol.A],
           "basis_coeffs": list(sol.basis_coeffs)})


def cmd_nonexist(args) -> None:
    cert = ext.nonexistence_certificate(args.n, even=args.even)
    if cert is None:
        _emit({"n": args.n, "certificate": None})
    else:
        _emit({"n": args.n, "kind": cert.kind, "index": cert.index,
               "value": str(cert.value)})


def cmd_search(args) -> None:
    result = ext.search(args.n, even=args.even, d_target=args.d,
                        budget_secs=_budget(args), exhaustive=args.exhaustive)
    doc = {"status": result.status, "nodes": result.nodes,
           "elapsed": round(result.elapsed, 3)}
    if result.code is not None:
        doc["generators"] = kcore.emit_code(result.code).strip().split("\n")
        doc["A"] = list(result.code.weight_distribution())
    _emit(doc)


def cmd_design(args) -> None:
    code = _load_code(args)
    y = des.slice_of(code, args.weight)
    report = des.check_design(y, args.t)
    _emit({"n": report.n, "k": report.k, "t": report.t,
           "blocks": len(y), "is_design": report.is_design,
           "mu": report.mu,
           "fisher_bound": des.fisher_bound(report.n, report.k)})


def cmd_orbits(args) -> None:
    code = _load_code(args)
    table = sym.orbits(code, weight=args.weight)
    _emit({"orbits": [{"representative": str(w), "size": s}
                      for w, s in table.entries]})


def cmd_covering(args) -> None:
    code = _load_code(args)
    radius, reps = sym.covering_radius(code)
    _emit({"radius": radius,
           "coset_weights": sorted(w.weight() for w in reps)})


def cmd_aut(args) -> None:
    code = _load_code(args)
    result = sym.aut(code)
    _emit({"order": result.order,
           "generators": [str(g) for g in result.generators]})


def cmd_construct(args) -> None:
    code = _load_code(args)
    binary = con.rho_a(code) if args.mode == "A" else con.rho_b(code)
    predicted = con.predicted_we(wenum.hamming_we(code), args.mode)
    actual = binary.weight_enum()
    if predicted.A != actual.A:
        raise CertificateError("enumerator identity failed for the construction")
    _emit({"mode": args.mode, "m": binary.m, "dim": binary.dim,
           "min_weight": binary.min_weight(),
           "A": list(actual.A),
           "generators": con.emit_binary(binary).strip().split("\n")})


def cmd_lex(args) -> None:
    trace = lexmod.lexicode(args.n, args.d)
    _emit({"accepted": [str(w) for w in trace.accepted],
           "linear": trace.is_linear,
           "generators": kcore.emit_code(trace.code).strip().split("\n")})


def cmd_solex(args) -> None:
    traces, report = lexmod.so_lexicode(args.d, args.max)
    doc = {"lengths": [{"n": t.n, "dim2": t.code.dim2,
                        "accepted": len(t.accepted)} for t in traces]}
    if report is not None:
        doc["period"] = report.period
        doc["element"] = kcore.emit_code(report.element).strip().split("\n")
        doc["verified_length"] = report.verified_length
    _emit(doc)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kleinc",
        description="codes over the Kleinian four-group: algebra, "
                    "classification, extremal search, designs, constructions")
    sub = parser.add_subparsers(dest="verb", required=True)

    def code_opts(p):
        p.add_argument("--code", help="code file (one generator per line)")
        p.add_argument("--name", help="named code (gamma1, epsilon2, delta, "
                                      "delta+, C5, C6, O6, hamming, hamming+)")
        p.add_argument("--n", type=int, help="length parameter for delta/delta+")
        p.add_argument("--m", type=int, help="parameter for hamming codes")

    for verb, fn, needs_code in [
        ("we", cmd_we, True), ("cwe", cmd_cwe, True), ("swe", cmd_swe, True),
        ("dual", cmd_dual, True), ("macwilliams", cmd_macwilliams, True),
        ("shadow", cmd_shadow, True), ("aut", cmd_aut, True),
    ]:
        p = sub.add_parser(verb)
        code_opts(p)
        p.set_defaults(func=fn)

    p = sub.add_parser("mass")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.set_defaults(func=cmd_mass)

    for verb, fn in [("classify", cmd_classify), ("children", cmd_children)]:
        p = sub.add_parser(verb)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--even", action="store_true")
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--table", action="store_true")
        p.set_defaults(func=fn)

    p = sub.add_parser("neighbors")
    code_opts(p)
    p.set_defaults(func=cmd_neighbors)

    p = sub.add_parser("graph")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("extremal-we")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.set_defaults(func=cmd_extremal_we)

    p = sub.add_parser("nonexist")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.set_defaults(func=cmd_nonexist)

    p = sub.add_parser("search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--even", action="store_true")
    p.add_argument("--budget", type=float, default=None,
                   help="seconds (default: KLEINC_BUDGET_SECS)")
    p.add_argument("--exhaustive", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("design")
    code_opts(p)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--t", type=int, default=2)
    p.set_defaults(func=cmd_design)

    p = sub.add_parser("orbits")
    code_opts(p)
    p.add_argument("--weight", type=int, default=None)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("covering")
    code_opts(p)
    p.set_defaults(func=cmd_covering)

    p = sub.add_parser("construct")
    code_opts(p)
    p.add_argument("--mode", choices=["A", "B"], required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("lex")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_lex)

    p = sub.add_parser("solex")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(func=cmd_solex)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        args.func(args)
    except CertificateError as exc:
        print(f"certificate failure: {exc}", file=sys.stderr)
        return 2
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
