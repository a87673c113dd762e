"""Command-line front end.

Subcommands mirror the library modules: `lattice`, `fibration`, `autnum`,
`stablemap`, and `verify` for the full check battery. Exit codes: 0 on
success, 1 when a verification check fails, 2 on usage errors.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import autnum, enumeration, fibration, stablemap, verify
from .errors import K3KitError
from .lattice import (
    GlueVector,
    discriminant_group,
    lambda_d,
    lambda_tilde_d,
    lattice_from_json,
    orthogonal_complement,
    overlattice,
    short_vectors,
    standard_lattice,
)


def _dump(payload, as_json):
    if as_json:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str))
    else:
        _print_plain(payload)


def _inline(seq):
    return "[" + ", ".join(str(x) for x in seq) + "]"


def _print_plain(payload, indent=0):
    pad = "  " * indent
    if isinstance(payload, dict):
        for k, v in payload.items():
            if isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v):
                print(f"{pad}{k}: {_inline(v)}")
            elif isinstance(v, list) and all(isinstance(x, list) for x in v):
                print(f"{pad}{k}:")
                for row in v:
                    print(f"{pad}  {_inline(row)}")
            elif isinstance(v, (dict, list)):
                print(f"{pad}{k}:")
                _print_plain(v, indent + 1)
            else:
                print(f"{pad}{k}: {v}")
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                _print_plain(v, indent)
                print()
            else:
                print(f"{pad}{v}")
    else:
        print(f"{pad}{payload}")


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _lattice_from_args(args):
    if getattr(args, "name", None):
        return standard_lattice(args.name)
    if getattr(args, "input", None):
        return lattice_from_json(_load_json(args.input))
    raise SystemExit2("provide --name or --input")


class SystemExit2(Exception):
    """Usage error: message printed to stderr, exit code 2."""


def _lattice_info(lat):
    pos, neg = lat.signature
    return {
        "rank": lat.rank,
        "det": lat.det,
        "signature": [pos, neg],
        "even": lat.is_even,
        "gram": [list(r) for r in lat.gram],
        **({"name": lat.name} if lat.name else {}),
    }


def _parse_vector(text):
    return tuple(Fraction(part.strip()) for part in text.split(","))


def _parse_matrix(text):
    return [[int(x) for x in row.split(",")] for row in text.split(";")]


# --- subcommand handlers ---

def _cmd_lattice(args):
    sub = args.lattice_cmd
    if sub == "build":
        lat = lattice_from_json(_load_json(args.input))
        _dump(_lattice_info(lat), args.json)
    elif sub == "invariants":
        _dump(_lattice_info(_lattice_from_args(args)), args.json)
    elif sub == "disc":
        lat = _lattice_from_args(args)
        d = discriminant_group(lat)
        _dump({
            "elementary_divisors": list(d.elementary_divisors),
            "order": d.order,
            "generators": [[str(c) for c in g] for g in d.generators],
            "qvalues": [str(q) for q in d.qvalues],
        }, args.json)
    elif sub == "overlattice":
        lat = _lattice_from_args(args)
        glue = GlueVector(_parse_vector(args.glue))
        ext, emb = overlattice(lat, glue)
        _dump({"lattice": _lattice_info(ext), "embedding": [list(r) for r in emb]}, args.json)
    elif sub == "complement":
        lat = _lattice_from_args(args)
        comp = orthogonal_complement(_parse_matrix(args.sub), lat)
        _dump(_lattice_info(comp), args.json)
    elif sub == "short-vectors":
        lat = _lattice_from_args(args)
        count = short_vectors(lat, args.norm, force_pure=args.pure)
        _dump({"norm": args.norm, "count": count,
               "backend": "pure" if args.pure else enumeration.backend_name(
                   [list(r) for r in lat.gram], args.norm)}, args.json)
    elif sub == "lambda":
        _dump(_lattice_info(lambda_d(args.d)), args.json)
    elif sub == "lambda-tilde":
        if args.d % 2 != 0:
            raise SystemExit2("d must be even")
        _dump(_lattice_info(lambda_tilde_d(args.d)), args.json)
    return 0


def _cmd_fibration(args):
    sub = args.fibration_cmd
    if sub == "analyze":
        if args.input:
            model = fibration.model_from_json(_load_json(args.input))
        elif args.random is not None:
            model = fibration.sample_generic_model(args.random)
        else:
            raise SystemExit2("provide --input or --random SEED")
        reports = fibration.classify_fibers(model)
        genericity = fibration.check_generic(model)
        payload = {
            "model": fibration.model_to_json(model),
            "generic": genericity.ok,
            "generic_failures": list(genericity.failures),
            "two_torsion_section": fibration.two_torsion_check(model),
            "fibers": [fibration.report_to_json(r) for r in reports],
            "euler_sum": fibration.euler_check(reports),
            "shioda_tate_rank": fibration.shioda_tate_rank(reports, args.mw_rank),
        }
        _dump(payload, args.json)
    elif sub == "ns":
        lat, classes = fibration.ns_lattice()
        payload = _lattice_info(lat)
        payload["classes"] = {name: [str(c) for c in cls.coords]
                              for name, cls in sorted(classes.items())}
        _dump(payload, args.json)
    elif sub == "classes":
        classes = fibration.named_classes()
        c = fibration.curve_class(args.e)
        rows = {}
        for name in ("sigma", "tau", "F") + tuple(f"N{i}" for i in range(1, 9)):
            rows[name] = fibration.intersect(c, classes[name])
        report = fibration.positivity_report(c)
        _dump({
            "e": args.e,
            "class": [str(x) for x in c.coords],
            "self_intersection": report.self_intersection,
            "primitive": c.is_primitive(),
            "pairings": rows,
            "all_positive": report.all_positive,
        }, args.json)
    elif sub == "split":
        inv, anti = fibration.ns_involution_split()
        _dump({"invariant": _lattice_info(inv), "anti_invariant": _lattice_info(anti)},
              args.json)
    return 0


def _cmd_autnum(args):
    _dump(autnum.table(), args.json)
    return 0


def _stablemap_config(args):
    if getattr(args, "input", None):
        return stablemap.config_from_json(_load_json(args.input))
    if getattr(args, "chain_config", None) is not None:
        return stablemap.standard_chain_config(args.chain_config)
    raise SystemExit2("provide --input or --chain-config E")


def _cmd_stablemap(args):
    sub = args.stablemap_cmd
    if sub == "genus":
        cfg = _stablemap_config(args)
        _dump({"arithmetic_genus": stablemap.arithmetic_genus(cfg)}, args.json)
    elif sub == "validate":
        cfg = _stablemap_config(args)
        check = stablemap.validate_chain_config(cfg)
        _dump({"ok": check.ok,
               "failures": [{"condition": c, "message": m} for c, m in check.failures]},
              args.json)
    elif sub == "cohomology":
        if args.degrees:
            degrees = tuple(int(x) for x in args.degrees.split(","))
            head_genus = args.head_genus
        else:
            cfg = _stablemap_config(args)
            bundle = stablemap.chain_bundle_for(cfg, seed=args.seed)
            degrees, head_genus = bundle.degrees, bundle.head_genus
        payload = {"degrees": list(degrees), "head_genus": head_genus}
        if head_genus == 0:
            payload["oracle"] = list(stablemap.chain_cohomology_oracle(degrees, seed=args.seed))
            peeled = stablemap.peel_cohomology(degrees)
            payload["peeling"] = list(peeled) if peeled else None
        bundle = stablemap.ChainBundle(degrees=degrees, head_genus=head_genus, seed=args.seed)
        try:
            payload["chain_normal_cohomology"] = list(stablemap.chain_normal_cohomology(bundle))
        except K3KitError as exc:
            payload["chain_normal_cohomology"] = f"unsupported shape: {exc}"
        _dump(payload, args.json)
    elif sub == "chain-config":
        cfg = stablemap.standard_chain_config(args.e)
        _dump(stablemap.config_to_json(cfg), args.json)
    return 0


def _cmd_verify(args):
    report = verify.run_all(seed=args.seed, samples=args.samples)
    if args.json:
        print(report.to_json())
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def _build_parser():
    parser = argparse.ArgumentParser(prog="k3kit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_lat = sub.add_parser("lattice", help="lattice construction and invariants")
    lat_sub = p_lat.add_subparsers(dest="lattice_cmd", required=True)
    for name in ("build", "invariants", "disc", "overlattice", "complement",
                 "short-vectors", "lambda", "lambda-tilde"):
        p = lat_sub.add_parser(name)
        p.add_argument("--json", action="store_true")
        if name in ("invariants", "disc", "overlattice", "complement", "short-vectors"):
            p.add_argument("--name", help="standard lattice: U, E8, or NIKULIN")
            p.add_argument("--input", help="lattice JSON file")
        if name == "build":
            p.add_argument("--input", required=True, help="lattice JSON file")
        if name == "overlattice":
            p.add_argument("--glue", required=True, help="rational coordinates, e.g. '1/2,0'")
        if name == "complement":
            p.add_argument("--sub", required=True,
                           help="sublattice basis rows, e.g. '1,0,0;0,1,0'")
        if name == "short-vectors":
            p.add_argument("--norm", type=int, required=True)
            p.add_argument("--pure", action="store_true",
                           help="force the pure-Python enumeration backend")
        if name in ("lambda", "lambda-tilde"):
            p.add_argument("--d", type=int, required=True)

    p_fib = sub.add_parser("fibration", help="elliptic surface analysis")
    fib_sub = p_fib.add_subparsers(dest="fibration_cmd", required=True)
    p = fib_sub.add_parser("analyze")
    p.add_argument("--json", action="store_true")
    p.add_argument("--input", help="model JSON file")
    p.add_argument("--random", type=int, help="sample a generic model from this seed")
    p.add_argument("--mw-rank", type=int, default=0)
    for name in ("ns", "split"):
        p = fib_sub.add_parser(name)
        p.add_argument("--json", action="store_true")
    p = fib_sub.add_parser("classes")
    p.add_argument("--json", action="store_true")
    p.add_argument("--e", type=int, default=2)

    p_aut = sub.add_parser("autnum", help="automorphism numerology")
    aut_sub = p_aut.add_subparsers(dest="autnum_cmd", required=True)
    p = aut_sub.add_parser("table")
    p.add_argument("--json", action="store_true")

    p_sm = sub.add_parser("stablemap", help="nodal chain calculus")
    sm_sub = p_sm.add_subparsers(dest="stablemap_cmd", required=True)
    for name in ("genus", "validate", "cohomology", "chain-config"):
        p = sm_sub.add_parser(name)
        p.add_argument("--json", action="store_true")
        if name in ("genus", "validate", "cohomology"):
            p.add_argument("--input", help="configuration JSON file")
            p.add_argument("--chain-config", type=int, metavar="E",
                           help="use the built-in genus-one chain with e = E")
        if name == "cohomology":
            p.add_argument("--degrees", help="chain degrees, e.g. '0,-1,-1'")
            p.add_argument("--head-genus", type=int, default=0)
            p.add_argument("--seed", type=int, default=0)
        if name == "chain-config":
            p.add_argument("--e", type=int, required=True)

    p_ver = sub.add_parser("verify", help="run the full verification battery")
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--samples", type=int, default=25)
    p_ver.add_argument("--json", action="store_true")

    return parser


_HANDLERS = {
    "lattice": _cmd_lattice,
    "fibration": _cmd_fibration,
    "autnum": _cmd_autnum,
    "stablemap": _cmd_stablemap,
    "verify": _cmd_verify,
}


def run(argv=None):
    """Parse and dispatch; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return _HANDLERS[args.command](args)
    except SystemExit2 as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except K3KitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
