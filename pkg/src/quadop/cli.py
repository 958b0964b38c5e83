"""Command-line front end: build named objects, print dimension tables, and
run verification suites with seeds.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Reports are
byte-identical across runs for a fixed seed; wall-clock timing is only
included with --timings.
"""

import argparse
import json
import sys
import time

from . import realize
from .catalog import named_qd
from .operads import build_family
from .qd import apply_functor, monoidal_product, qd_loads, qd_to_json, QDFlavor
from .suites import DEFAULT_SEED, SUITES


def _family_descriptor(fam, nmax):
    return {
        "name": fam.name,
        "symmetric": fam.symmetric,
        "k": fam.k,
        "max_arity": nmax,
        "generator_dims": [fam.component(n).gdim for n in range(nmax + 1)],
        "relation_dims": [fam.component(n).rdim for n in range(nmax + 1)],
    }


def _emit(args, payload, tsv_rows=None):
    if args.format == "tsv" and tsv_rows is not None:
        text = "\n".join("\t".join(str(x) for x in row) for row in tsv_rows) + "\n"
    else:
        text = json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=1) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_qd(args, spec_value=None):
    value = spec_value if spec_value is not None else args.qd
    if value.endswith(".json"):
        with open(value) as fh:
            return qd_loads(fh.read())
    if args.n is None:
        raise UsageError("--qd %s needs --n" % value)
    return named_qd(value, args.n, k=args.k, max_arity=args.nmax)


def cmd_dims(args):
    if args.family:
        fam = build_family(args.family, args.nmax or 6, k=args.k)
        nmax = args.nmax or 6
        if args.relations:
            dims = [fam.component(n).rdim for n in range(1, nmax + 1)]
            _emit(args, {"family": fam.name, "relation_dims": dims},
                  tsv_rows=[dims])
        else:
            _emit(args, _family_descriptor(fam, nmax),
                  tsv_rows=[[fam.component(n).gdim for n in range(1, nmax + 1)],
                            [fam.component(n).rdim for n in range(1, nmax + 1)]])
        return 0
    if not args.qd:
        raise UsageError("dims needs --family or --qd")
    q = _resolve_qd(args)
    if args.relations:
        _emit(args, {"qd": args.qd, "relation_dim": q.rdim}, tsv_rows=[[q.rdim]])
        return 0
    wmax = args.wmax if args.wmax is not None else 5
    if q.flavor is QDFlavor.SYM:
        reals = ("S", "Sc")
    elif q.flavor is QDFlavor.SKEW:
        reals = ("A", "L")
    else:
        reals = ("A", "Tc")
    table = {}
    rows = []
    for r in reals:
        dims = realize.hilbert_series(r, q, wmax).truncation()
        table[r] = dims
        rows.append([r] + dims)
    _emit(args, {"qd": args.qd, "weights": list(range(wmax + 1)), "dims": table},
          tsv_rows=rows)
    return 0


def cmd_verify(args):
    if args.suite not in SUITES:
        raise UsageError("unknown suite %r (choose from %s)"
                         % (args.suite, ", ".join(sorted(SUITES))))
    fn = SUITES[args.suite]
    kwargs = {"seed": args.seed}
    if args.suite in ("qd-coherence", "boqd-coherence", "diagram-faces",
                      "realize-duality"):
        if args.trials:
            kwargs["trials"] = args.trials
    if args.suite == "operad-axioms" and args.family:
        kwargs.update(family=args.family, k=args.k, nmax=args.nmax)
    if args.suite == "minimality" and args.shell:
        kwargs.update(shell=args.shell, k=args.k, nmax=args.nmax)
    if args.suite == "koszul-duals" and args.nmax:
        kwargs["nmax"] = args.nmax
    t0 = time.time()
    report = fn(**kwargs)
    if args.timings:
        report.runtime_ms = int((time.time() - t0) * 1000)
    _emit(args, report.to_json())
    return 0 if report.ok else 1


def cmd_build(args):
    if args.family and not args.functor and not args.product:
        fam = build_family(args.family, args.nmax or 6, k=args.k)
        _emit(args, _family_descriptor(fam, args.nmax or 6))
        return 0
    if args.functor:
        if not args.qd:
            raise UsageError("build --functor needs --qd")
        q = _resolve_qd(args)
        out = apply_functor(args.functor, q)
        _emit(args, qd_to_json(out))
        return 0
    if args.product:
        if len(args.qd_multi) != 2:
            raise UsageError("build --product needs exactly two --qd arguments")
        a = _resolve_qd(args, args.qd_multi[0])
        b = _resolve_qd(args, args.qd_multi[1])
        out = monoidal_product(args.product, a, b)
        _emit(args, qd_to_json(out))
        return 0
    if args.qd:
        _emit(args, qd_to_json(_resolve_qd(args)))
        return 0
    raise UsageError("build needs --family, --functor, --product, or --qd")


class UsageError(Exception):
    pass


def make_parser():
    parser = argparse.ArgumentParser(
        prog="quadop",
        description="exact computations with quadratic data and operads",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--family", help="family name: BKW DK HG RHG EHKR LG LHG")
        p.add_argument("--qd", help="named datum (AOS or a family name) or a JSON file")
        p.add_argument("--k", type=int, help="hyperedge size for HG/RHG/LHG")
        p.add_argument("--n", type=int, help="arity of the component")
        p.add_argument("--nmax", type=int, help="arity bound")
        p.add_argument("--wmax", type=int, help="weight bound")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        p.add_argument("--trials", type=int)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.add_argument("--out", help="write output to a file")
        p.add_argument("--timings", action="store_true",
                       help="include wall-clock runtime in reports")

    p_dims = sub.add_parser("dims", help="dimension tables")
    common(p_dims)
    p_dims.add_argument("--relations", action="store_true",
                        help="relation-space dimensions instead of weights")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", help=", ".join(sorted(SUITES)))
    common(p_verify)
    p_verify.add_argument("--shell", help="shell family for the minimality suite")

    p_build = sub.add_parser("build", help="serialize a named object")
    common(p_build)
    p_build.add_argument("--functor",
                         help="lambda sigma script_s antishriek antishriek_inv star shriek")
    p_build.add_argument("--product",
                         help="tensor utensor vee oplus black white")
    return parser


def main(argv=None):
    parser = make_parser()
    argv = sys.argv[1:] if argv is None else argv
    # allow repeated --qd for build --product
    qd_multi = [argv[i + 1] for i, a in enumerate(argv) if a == "--qd"]
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    args.qd_multi = qd_multi
    try:
        if args.command == "dims":
            return cmd_dims(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "build":
            return cmd_build(args)
        raise UsageError("unknown command")
    except UsageError as e:
        sys.stderr.write("usage error: %s\n" % e)
        return 2
    except (ValueError, KeyError, OSError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
