"""Command-line front end: normalize expressions, run verification sweeps,
enumerate integral bases, build p/D elements, and validate algebra tables.

Exit codes: 0 success / all checks pass, 1 verification failure, 2 usage or
parse error."""

import argparse
import os
import sys

from .algebra import SpecError, load_spec_path, preset, validate, PRESET_NAMES
from .coeffalg import MonoidError, monoid_preset
from .combinatorics import Multiset
from .engine import AlgebraError, Engine, Order, key_degree
from .exprio import ParseError, divided_key_str, divided_sort_key, divided_str, \
    parse_expr, uelem_str
from . import identities as ident
from . import verify as ver


class UsageError(Exception):
    pass


def load_algebra(name):
    if name in PRESET_NAMES:
        return preset(name)
    if os.path.exists(name):
        return load_spec_path(name)
    raise UsageError("unknown algebra %r: not a preset (%s) nor a readable file"
                     % (name, ", ".join(PRESET_NAMES)))


def make_order(spec, text):
    if text is None or text == "triangular":
        return Order.triangular(spec)
    if text == "lex":
        return Order.lexicographic(spec)
    return Order.from_items(spec, text.split(","))


def make_engine(args, default_monoid="poly"):
    spec = load_algebra(args.algebra)
    monoid = monoid_preset(getattr(args, "monoid", None) or default_monoid)
    return Engine(spec, monoid, make_order(spec, getattr(args, "order", None)))


def parse_mset(monoid, text):
    items = []
    if text and text != "0":
        for piece in text.split(","):
            if ":" in piece:
                elt, mult = piece.rsplit(":", 1)
                items.append((monoid.parse_elt(elt), int(mult)))
            else:
                items.append((monoid.parse_elt(piece), 1))
    return Multiset(items)


# ---------------------------------------------------------------------------
# commands

def cmd_normalize(args):
    engine = make_engine(args)
    x = parse_expr(engine, args.expression)
    if args.divided:
        df = engine.to_divided(x)
        print(divided_str(engine, df, multiline=True))
        print("INTEGRAL: %s" % ("yes" if df.is_integral() else "no"))
    else:
        print(uelem_str(engine, x, multiline=True))
    return 0


_PARAM_FLAGS = ("alpha", "beta", "gamma", "delta", "i", "j", "r", "s", "m",
                "a", "b", "chi", "phi")


def _fixed_params(args):
    fixed = {}
    for k in _PARAM_FLAGS:
        v = getattr(args, k, None)
        if v is not None:
            fixed[k] = v
    return fixed


def cmd_verify(args):
    if args.config:
        with open(args.config) as fh:
            config = ver.SuiteConfig.from_json(fh.read())
        result = ver.run_suite(config, emit=print)
        return 0 if result.ok else 1

    engine = ver.get_engine(args.algebra, args.monoid or "trunc:4",
                            args.order or "triangular")
    bounds = ver.SweepBounds()
    fixed = _fixed_params(args)
    ids = [args.id] if args.id else list(ver.IDENTITIES)
    reports = []
    for ident_id in ids:
        if ident_id == "L5.2":
            reps = ver.sweep_lemma_5_2(engine, bounds)
            reps = [r for r in reps
                    if all(dict(r.params).get(k) == v for k, v in fixed.items())]
        elif ident_id == "comb":
            reps = [ver.sweep_comb_identity()]
        elif ident_id in ver.IDENTITIES:
            reps = ver.sweep_identity(engine, ident_id, bounds, fixed or None)
        else:
            raise UsageError("unknown identity id %r (have %s)"
                             % (ident_id, ", ".join(ver.IDENTITY_IDS)))
        reports.extend(reps)
    if not reports:
        raise UsageError("no parameter combination matches the given flags")
    for r in reports:
        print(r.line())
    result = ver.SuiteResult(reports)
    print(result.summary())
    return 0 if result.ok else 1


def cmd_basis(args):
    engine = make_engine(args, default_monoid="trunc:2")
    if not engine.monoid.finite:
        raise UsageError("basis enumeration needs a truncated coefficient algebra "
                         "(use --monoid trunc:<n>)")
    d = args.degree
    print("ALGEBRA %s MONOID %s DEGREE %d" % (engine.spec.name, engine.monoid.name, d))
    segments = (("B-", -1), ("B0", 0), ("B+", 1))
    for title, seg in segments:
        syms = [s for s in engine.order.syms if engine.segment_of(s) == seg]
        keys = engine.enumerate_basis(d, syms)
        keys.sort(key=lambda k: (key_degree(k), divided_sort_key(engine, k)))
        print("%s (%d)" % (title, len(keys)))
        for k in keys:
            print(divided_key_str(engine, k))
    keys = engine.enumerate_basis(d)
    keys.sort(key=lambda k: (key_degree(k), divided_sort_key(engine, k)))
    print("B (%d)" % len(keys))
    for k in keys:
        print(divided_key_str(engine, k))
    return 0


def _print_elem(engine, x, divided):
    if divided:
        df = engine.to_divided(x)
        print(divided_str(engine, df, multiline=True))
        print("INTEGRAL: %s" % ("yes" if df.is_integral() else "no"))
    else:
        print(uelem_str(engine, x, multiline=True))


def cmd_pelem(args):
    engine = make_engine(args)
    chi = parse_mset(engine.monoid, args.chi)
    which = args.i if args.i is not None else args.alpha
    if which is None:
        raise UsageError("pelem wants --i <cartan index> or --alpha <root label>")
    _print_elem(engine, engine.p(which, chi), args.divided)
    return 0


def cmd_delem(args):
    engine = make_engine(args)
    d = engine.monoid.parse_elt(args.d)
    c = engine.monoid.parse_elt(args.c)
    x = ident.divided_D(engine, args.alpha, args.j, args.k, d, c)
    _print_elem(engine, x, args.divided)
    return 0


def cmd_validate_spec(args):
    if args.algebra in PRESET_NAMES:
        spec = preset(args.algebra)
    elif os.path.exists(args.algebra):
        spec = load_spec_path(args.algebra, check=False)
    else:
        raise UsageError("unknown algebra %r" % args.algebra)
    bad = validate(spec)
    if bad:
        for line in bad:
            print("VIOLATION %s" % line)
        print("INVALID %s (%d violations)" % (spec.name, len(bad)))
        return 1
    print("VALID %s (rank %d, %d roots, %d odd)"
          % (spec.name, spec.rank, len(spec.roots), len(spec.odd_roots())))
    return 0


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(
        prog="superpbw",
        description="Exact PBW normalization and integral-basis verification "
                    "for map superalgebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, monoid_help="coefficient monoid preset", algebra_required=True):
        sp.add_argument("--algebra", required=algebra_required,
                        help="preset name (%s) or path to an algebra file"
                             % ", ".join(PRESET_NAMES))
        sp.add_argument("--monoid", help=monoid_help + " (poly, laurent, poly2, trunc:n)")
        sp.add_argument("--order", help="comma list of root labels and Cartan "
                                        "indices, or 'triangular'/'lex'")

    sp = sub.add_parser("normalize", help="expand an expression in the PBW basis")
    common(sp)
    sp.add_argument("--divided", action="store_true",
                    help="print the divided-power form and an integrality verdict")
    sp.add_argument("expression")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("verify", help="run identity and property checks")
    common(sp, algebra_required=False)   # --config mode carries its own algebras
    sp.add_argument("--id", help="identity id (%s); all if omitted"
                                 % ", ".join(ver.IDENTITY_IDS))
    sp.add_argument("--config", help="JSON suite configuration path")
    sp.add_argument("--seed", type=int, default=0)
    for flag in ("alpha", "beta", "gamma", "delta", "a", "b", "chi", "phi",
                 "i", "j", "r", "s", "m"):
        sp.add_argument("--%s" % flag)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("basis", help="enumerate the integral basis by degree")
    common(sp, "finite coefficient monoid")
    sp.add_argument("--degree", type=int, required=True)
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("pelem", help="build a Cartan p-element")
    common(sp)
    sp.add_argument("--i", type=int, help="Cartan index")
    sp.add_argument("--alpha", help="root label (uses the coroot map)")
    sp.add_argument("--chi", default="", help="multiset, e.g. 't:2,t^2:1'")
    sp.add_argument("--divided", action="store_true")
    sp.set_defaults(func=cmd_pelem)

    sp = sub.add_parser("delem", help="build a divided-power D sum")
    common(sp)
    sp.add_argument("--alpha", required=True)
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", required=True)
    sp.add_argument("--c", required=True)
    sp.add_argument("--divided", action="store_true")
    sp.set_defaults(func=cmd_delem)

    sp = sub.add_parser("validate-spec", help="validate an algebra table")
    sp.add_argument("--algebra", required=True)
    sp.set_defaults(func=cmd_validate_spec)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.config and not args.algebra:
        print("error: verify wants --algebra or --config", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, ParseError, SpecError, MonoidError, AlgebraError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
