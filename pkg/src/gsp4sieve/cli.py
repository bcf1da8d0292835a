"""Command-line entry point: ``gsp4sieve {count,analyze,grouplab}``.

Exit codes: 0 success, 1 input error, 2 analysis finished with warnings.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .arithdata import ConductorData, parse_conductor
from .curve import BadReductionError, CountingError, char_poly, frobenius_data, load_curve
from .fixtures import FIXTURES, get_fixture, hecke_data_dir
from .heckedata import HeckeTableError, load_hecke_dir
from .report import SAMPLE_KINDS, AnalysisConfig, analyze, render

EXIT_OK, EXIT_INPUT, EXIT_INCOMPLETE = 0, 1, 2


class InputError(Exception):
    pass


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _key_value(text: str) -> tuple[str, str]:
    key, sep, val = text.partition("=")
    if not sep or not key or not val:
        raise InputError(f"expected key=value, got {text!r}")
    return key.strip(), val.strip()


def _load_curve(args):
    if args.fixture and args.curve:
        raise InputError("give either a curve file or --fixture, not both")
    if args.fixture:
        return get_fixture(args.fixture).curve(), get_fixture(args.fixture)
    if not args.curve:
        raise InputError("a curve file or --fixture is required")
    return load_curve(args.curve), None


def cmd_count(args) -> int:
    curve, _ = _load_curve(args)
    fd = frobenius_data(curve, args.p)
    print(f"p={fd.p} a={fd.a} b={fd.b} Pol={char_poly(fd)}")
    return EXIT_OK


def _build_config(args) -> AnalysisConfig:
    curve, fx = _load_curve(args)
    expr = args.conductor or (fx.conductor if fx else None)
    if expr is None:
        raise InputError("--conductor is required for a curve file")
    factors = parse_conductor(expr)
    phi = dict(fx.phi) if fx and not args.conductor else {}
    semi = set(fx.semiabelian) if fx and not args.conductor else set()
    bound = set(fx.bound_at) if fx and not args.conductor else set()
    for item in args.phi:
        k, v = _key_value(item)
        try:
            phi[int(k)] = int(v)
        except ValueError:
            raise InputError(f"bad --phi value {item!r}") from None
    semi |= set(args.semiabelian)
    bound |= set(args.bound_at)
    if args.conductor_is_bound:
        bound |= set(factors)
    cond = ConductorData(factors, phi=phi, semiabelian_at=frozenset(semi), bound_at=frozenset(bound))
    for p in cond.semiabelian_at:
        if p not in cond.phi:
            raise InputError(f"--semiabelian {p} needs --phi {p}=<value>")

    samples = dict(fx.samples()) if fx else {}
    if args.primes:
        primes = _int_list(args.primes)
        samples = {k: primes for k in SAMPLE_KINDS}
    for item in args.samples:
        k, v = _key_value(item)
        if k not in SAMPLE_KINDS:
            raise InputError(f"unknown sample kind {k!r}; choose from {', '.join(SAMPLE_KINDS)}")
        samples[k] = _int_list(v)
    if not any(samples.values()):
        raise InputError("no sample primes: use --primes or --samples")

    if args.no_hecke:
        table = None
    else:
        table = load_hecke_dir(args.hecke_dir or hecke_data_dir())
    star = _int_list(args.star) if args.star else (fx.star if fx else ())
    return AnalysisConfig(
        curve,
        cond,
        samples,
        hecke=table,
        assume_serre=args.assume_serre,
        star=star,
        table_bound=args.table_bound,
        workers=args.workers,
    )


def cmd_analyze(args) -> int:
    cfg = _build_config(args)
    rep = analyze(cfg)
    text = render(rep)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        print(rep.summary)
    else:
        sys.stdout.write(text)
    if rep.incomplete:
        print(f"warning: {len(rep.warnings)} warning(s); analysis incomplete", file=sys.stderr)
        return EXIT_INCOMPLETE
    return EXIT_OK


def cmd_grouplab(args) -> int:
    from . import grouplab

    if args.regen_orders:
        changed = grouplab.write_orders_module()
        print(f"{grouplab.ORDERS_MODULE.name}: {'rewritten' if changed else 'unchanged'}")
        if args.ell is None:
            return EXIT_OK
    ell = 3 if args.ell is None else args.ell
    if ell not in (3, 5, 7):
        raise InputError(f"grouplab supports ell in {{3, 5, 7}}, got {ell}")
    passed, trials = grouplab.verify_dickson(ell, args.trials)
    if ell in grouplab.CLOSURE_FIELDS:
        size = grouplab.symplectic_closure(grouplab.standard_generators(ell), ell)
        print(f"Sp(4,{ell}) closure = {size}, Dickson {passed}/{trials}")
    else:
        print(f"Sp(4,{ell}) closure skipped (cost guard), Dickson {passed}/{trials}")
    for name, orders in sorted(grouplab.exceptional_order_sets().items()):
        print(f"{name}: {sorted(orders)}")
    print(f"allowed projective orders: {sorted(grouplab.allowed_projective_orders())}")
    return EXIT_OK if passed == trials else EXIT_INCOMPLETE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gsp4sieve", description="Exceptional primes for mod-ell images of genus-2 Jacobians.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def curve_args(p):
        p.add_argument("curve", nargs="?", help="curve file (label = ..., f = c6,...,c0)")
        p.add_argument("--fixture", choices=sorted(FIXTURES), help="use a bundled example curve")

    c = sub.add_parser("count", help="Frobenius data at one prime")
    curve_args(c)
    c.add_argument("-p", type=int, required=True, help="good prime")
    c.set_defaults(func=cmd_count)

    a = sub.add_parser("analyze", help="run the sieve and certificates")
    curve_args(a)
    a.add_argument("--conductor", help="e.g. 2^12*5*23 (fixture default otherwise)")
    a.add_argument("--conductor-is-bound", action="store_true", help="every exponent is only an upper bound")
    a.add_argument("--bound-at", type=int, action="append", default=[], help="prime whose exponent is a bound")
    a.add_argument("--primes", help="sample primes for every case, comma-separated")
    a.add_argument("--samples", action="append", default=[], metavar="KIND=LIST",
                   help=f"per-case samples; KIND in {', '.join(SAMPLE_KINDS)}")
    a.add_argument("--hecke-dir", help="directory of Hecke tables (bundled tables by default)")
    a.add_argument("--no-hecke", action="store_true", help="skip the HeckePair case")
    a.add_argument("--phi", action="append", default=[], metavar="P=V", help="component group order Phi(p)")
    a.add_argument("--semiabelian", type=int, action="append", default=[], metavar="P",
                   help="assert semiabelian reduction at p")
    a.add_argument("--star", help="primes q for the case (*) Legendre families")
    a.add_argument("--assume-serre", action="store_true", help="accept HeckePair exclusions")
    a.add_argument("--table-bound", type=int, default=50, help="list verdicts for all primes up to this bound")
    a.add_argument("--workers", type=int, default=None, help="threads for point counting")
    a.add_argument("-o", "--output", help="write the report here")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("grouplab", help="finite-group checks over small fields")
    g.add_argument("--ell", type=int, default=None)
    g.add_argument("--trials", type=int, default=1000)
    g.add_argument("--regen-orders", action="store_true", help="rewrite the element-order constants")
    g.set_defaults(func=cmd_grouplab)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BadReductionError, CountingError, HeckeTableError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"gsp4sieve: error: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
