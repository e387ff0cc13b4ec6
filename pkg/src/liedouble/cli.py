"""Command-line front end: load a model file, run checks, emit verdicts.

Exit codes: 0 check passed, 1 check failed (witnesses in the report),
2 usage or parse error.  JSON output is byte-deterministic for a given
(model, verb, seed); elapsed_ms is kept at 0 for that reason.
"""

from __future__ import annotations

import argparse
import sys

from .report import CheckReport
from .algebroid import LieAlgebroid, check_axioms
from .matched_pair import (MatchedPair, Representation, check_matched_pair,
                           check_representation, build_double_sum,
                           build_vacant_double, check_vacant_conditions)
from .bialgebroid import (LieBialgebroid, ManinDouble, check_bialgebroid,
                          check_manin, semidirect_E, semidirect_Estar,
                          bialgebroid_from_matched_pair)
from .poisson import PoissonAlgebra, check_jacobi_poisson
from .dvb import (DecomposedDVB, check_interchange, check_pairing_nondegenerate,
                  check_zmaps, cotangent_model)
from .modelfile import ModelError, ModelFile, parse_model, print_model

CHECK_KINDS = {
    "algebroid": "algebroid",
    "rep": "rep",
    "matched-pair": "matchedpair",
    "bialgebroid": "bialgebroid",
    "poisson": "poisson",
    "manin": "manin",
}


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_model(fh.read())


def _target(model, name, kind, parser):
    obj = model.objects.get(name)
    if obj is None:
        parser.error("unknown target %r" % name)
    actual = model.kind_of(name)
    if actual != kind:
        parser.error("%r is a %s; this verb needs a %s" % (name, actual, kind))
    return obj


def _emit(report: CheckReport, as_json: bool) -> int:
    print(report.to_json() if as_json else report.to_text())
    return 0 if report.passed else 1


def cmd_check(args, parser):
    model = _load(args.file)
    kind = CHECK_KINDS[args.what]
    obj = _target(model, args.name, kind, parser)
    if args.what == "algebroid":
        rep = check_axioms(obj)
    elif args.what == "rep":
        rep = check_representation(obj, seed=args.seed, samples=args.samples,
                                   max_degree=args.max_degree)
    elif args.what == "matched-pair":
        rep = check_matched_pair(obj, seed=args.seed, samples=args.samples,
                                 max_degree=args.max_degree)
    elif args.what == "bialgebroid":
        rep = check_bialgebroid(obj)
    elif args.what == "poisson":
        rep = check_jacobi_poisson(obj)
    else:  # manin
        rep = obj.report if obj.report is not None else check_manin(obj)
    rep.seed = args.seed
    return _emit(rep, args.json)


def cmd_build(args, parser):
    model = _load(args.file)
    mp = _target(model, args.name, "matchedpair", parser)
    pre = check_matched_pair(mp, seed=args.seed, samples=args.samples,
                             max_degree=args.max_degree)
    if not pre.passed:
        pre.seed = args.seed
        return _emit(pre, args.json)
    out = ModelFile()
    if args.what == "double":
        out.add("algebroid", "%s_double" % args.name, build_double_sum(mp))
    elif args.what == "vacant":
        V = build_vacant_double(mp)
        out.add("algebroid", "%s_vertical" % args.name, V.vertical)
        out.add("algebroid", "%s_horizontal" % args.name, V.horizontal)
    else:  # semidirect
        bi = bialgebroid_from_matched_pair(mp)
        out.add("algebroid", "%s_E" % args.name, bi.E)
        out.add("algebroid", "%s_Estar" % args.name, bi.Estar)
        out.add("bialgebroid", "%s_bi" % args.name, bi)
    text = print_model(out)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_dvb(args, parser):
    model = _load(args.file)
    D = _target(model, args.name, "dvb", parser)
    if args.what == "pair":
        rep = check_pairing_nondegenerate(D)
        rep.extend(check_interchange(D), prefix="interchange: ")
        rep.check = "dvb-pair"
    elif args.what == "zmaps":
        rep = check_zmaps(D)
    else:  # vue
        if D.dim_k != D.dim_h:
            parser.error("vue requires dim_K == dim_H (cotangent-type core)")
        rep = cotangent_model(D.dim_h, D.dim_v).check_vue()
    rep.seed = args.seed
    return _emit(rep, args.json)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="liedouble",
        description="Symbolic checks for Lie algebroids, matched pairs, "
                    "double vector bundles and Lie bialgebroids.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, output=False):
        sp.add_argument("name", help="declaration name in the model file")
        sp.add_argument("-f", "--file", required=True, help="model file")
        if output:
            sp.add_argument("-o", "--output", required=True,
                            help="output model file ('-' for stdout)")
        sp.add_argument("--json", action="store_true", help="JSON report")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--samples", type=int, default=50)
        sp.add_argument("--max-degree", type=int, default=2)

    sp = sub.add_parser("check", help="run an axiom/identity suite")
    sp.add_argument("what", choices=sorted(CHECK_KINDS))
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("build", help="construct derived structures")
    sp.add_argument("what", choices=["double", "vacant", "semidirect"])
    common(sp, output=True)
    sp.set_defaults(func=cmd_build)

    sp = sub.add_parser("dvb", help="double vector bundle checks")
    sp.add_argument("what", choices=["pair", "zmaps", "vue"])
    common(sp)
    sp.set_defaults(func=cmd_dvb)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args, parser)
    except ModelError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except SystemExit as e:  # parser.error inside commands
        return 2 if e.code not in (0, None) else 0
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
