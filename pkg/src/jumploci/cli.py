"""Command-line front end: parse JSON inputs, dispatch analyses, emit a
deterministic JSON report on stdout.

Exit codes: 0 success, 2 rejected input (including parse errors), 3 refused
certification (degeneracy).  `verify-paper` additionally exits 1 when any
acceptance check fails.  Reports are identical for identical inputs and seed,
up to the elapsed_s timing field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import fields, is_dataclass
from fractions import Fraction
from importlib import resources

from . import __version__
from .aomoto import (generic_dims_sample, log_resonance_membership,
                     resonance_membership)
from .arrangement import matroid_circuits, os_algebra, poincare_and_euler
from .elliptic import e2_page, elliptic_model
from .errors import DegeneracyError, ParseError, PreconditionError
from .foxcalc import Character, twisted_cohomology
from .io import (load_json, parse_arrangement, parse_input, parse_presentation,
                 serialize)
from .master import (critical_points_bivariate, critical_points_univariate,
                     local_koszul_univariate, log_zero_divisor_p1,
                     residues_line_arrangement)
from .scalars import DEFAULT_PRIME, GaussianRational, PrimeFieldElement
from .torus import ExpPolynomial, etc_membership
from .verify import check_elliptic_suite, run_all

_IU = GaussianRational(0, 1)


def jsonable(x):
    """Exact JSON form of report values: rationals as strings, dataclasses
    as objects, tuple keys flattened to comma-joined strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str, float)):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GaussianRational):
        return {"re": str(x.re), "im": str(x.im)}
    if isinstance(x, PrimeFieldElement):
        return {"residue": x.value, "prime": x.p}
    if isinstance(x, ExpPolynomial):
        return [{"frequency": str(mu), "coeff": str(c)} for mu, c in x.terms]
    if is_dataclass(x):
        return {f.name: jsonable(getattr(x, f.name)) for f in fields(x)}
    if isinstance(x, dict):
        return {
            (",".join(str(k) for k in key) if isinstance(key, tuple)
             else str(key)): jsonable(v)
            for key, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [jsonable(v) for v in x]
    return str(x)


def resolve_path(path):
    """Filesystem path, else a bundled fixture by basename."""
    if os.path.exists(path):
        return path
    name = os.path.basename(path)
    if not name.endswith(".json"):
        name += ".json"
    bundled = resources.files("jumploci").joinpath("fixtures", name)
    if bundled.is_file():
        return str(bundled)
    raise ParseError("file not found and no bundled fixture matches", path)


def _digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _load_arrangement(path):
    path = resolve_path(path)
    arr = parse_arrangement(load_json(path), path)
    return arr, {"path": path, "sha256": _digest(path)}


def _load_typed(path):
    path = resolve_path(path)
    value = parse_input(path)
    return value, {"path": path, "sha256": _digest(path)}


def parse_rational_csv(text, what):
    out = []
    for k, tok in enumerate(text.split(",")):
        try:
            out.append(Fraction(tok.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {tok.strip()!r}: {exc}",
                             f"{what}[{k}]") from None
    return out


def _subspace_rows(text):
    return [parse_rational_csv(row, "subspace row") for row in text.split(";")]


# --------------------------------------------------------------------- handlers

def _cmd_os_algebra(args):
    arr, digest = _load_arrangement(args.arrangement)
    if args.top is None or args.top >= arr.rank():
        coeffs, chi = poincare_and_euler(arr)
        result = {"dims": coeffs, "euler": chi}
    else:
        result = {"dims": os_algebra(arr, args.top).dims(), "euler": None}
    result.update({
        "size": arr.size, "rank": arr.rank(), "central": arr.central,
        "circuits": matroid_circuits(arr),
        "canonical_input": serialize(arr),
    })
    return result, {"arrangement": digest}


def _cmd_aomoto(args):
    arr, digest = _load_arrangement(args.arrangement)
    alpha = parse_rational_csv(args.alpha, "alpha")
    algebra = os_algebra(arr)
    rep = resonance_membership(algebra, alpha, args.degree, args.depth)
    return jsonable(rep), {"arrangement": digest}


def _cmd_resonance_sample(args):
    arr, digest = _load_arrangement(args.arrangement)
    algebra = os_algebra(arr)
    subspace = _subspace_rows(args.subspace) if args.subspace else None
    rep = generic_dims_sample(algebra, subspace=subspace,
                              trials=args.trials or 40,
                              prime=args.prime, seed=args.seed)
    return jsonable(rep), {"arrangement": digest}


def _cmd_log_resonance(args):
    arr, digest = _load_arrangement(args.arrangement)
    alpha = parse_rational_csv(args.alpha, "alpha")
    rep = log_resonance_membership(os_algebra(arr), alpha)
    return jsonable(rep), {"arrangement": digest}


def _cmd_elliptic(args):
    kwargs = {}
    if args.trials:
        kwargs = {"scroll_samples": args.trials, "f1_samples": args.trials,
                  "lr_samples": args.trials,
                  "e2_samples": max(1, args.trials // 8)}
    check = check_elliptic_suite(args.n, seed=args.seed, **kwargs)
    return jsonable(check), {"n": args.n}


def _cmd_e2_page(args):
    x = parse_rational_csv(args.x, "x")
    model = elliptic_model(args.n)
    y = [_IU * c for c in x]
    rep = e2_page(model, x, y)
    return jsonable(rep), {"n": args.n, "x": args.x}


def _cmd_etc_membership(args):
    system, digest = _load_typed(args.system)
    alpha = parse_rational_csv(args.alpha, "alpha")
    rep = etc_membership(system, alpha)
    return jsonable(rep), {"system": digest}


def _cmd_master(args):
    if (args.points is None) == (args.arrangement is None):
        raise PreconditionError(
            "need exactly one of --points (univariate) or --arrangement "
            "(bivariate)")
    if args.points is not None:
        points = parse_rational_csv(args.points, "points")
        lam = parse_rational_csv(args.weights, "weights")
        return {
            "critical": jsonable(critical_points_univariate(points, lam)),
            "log_divisor": jsonable(log_zero_divisor_p1(points, lam)),
            "koszul": jsonable(local_koszul_univariate(points, lam)),
        }, {"points": args.points, "weights": args.weights}
    arr, digest = _load_arrangement(args.arrangement)
    lam = parse_rational_csv(args.weights, "weights")
    rep = critical_points_bivariate(arr, lam, seed=args.seed)
    return jsonable(rep), {"arrangement": digest, "weights": args.weights}


def _cmd_residues(args):
    arr, digest = _load_arrangement(args.arrangement)
    lam = parse_rational_csv(args.weights, "weights")
    return jsonable(residues_line_arrangement(arr, lam)), \
        {"arrangement": digest, "weights": args.weights}


def _cmd_fox_h1(args):
    pres, digest = _load_typed(args.presentation)
    values = parse_rational_csv(args.character, "character")
    rep = twisted_cohomology(pres, Character(pres, values))
    return jsonable(rep), {"presentation": digest, "character": args.character}


def _cmd_verify_paper(args):
    checks = run_all(seed=args.seed, prime=args.prime)
    result = {
        "checks": jsonable(checks),
        "passed": all(c.passed for c in checks),
    }
    return result, {"seed": args.seed, "prime": args.prime}


# --------------------------------------------------------------------- wiring

def build_parser():
    parser = argparse.ArgumentParser(
        prog="jumploci",
        description="Exact cohomology jumping-loci computations; every "
                    "subcommand prints a JSON report.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="subcommand", required=True)

    def sub(name, handler, **kw):
        p = subs.add_parser(name, **kw)
        p.set_defaults(handler=handler)
        p.add_argument("--seed", type=int, default=0,
                       help="seed for all randomized sampling (default 0)")
        p.add_argument("--prime", type=int, default=DEFAULT_PRIME,
                       help="prime for finite-field sampling")
        p.add_argument("--trials", type=int, default=None,
                       help="sample count override where applicable")
        p.add_argument("--json-out", metavar="PATH", default=None,
                       help="also write the report to this file")
        return p

    p = sub("os-algebra", _cmd_os_algebra,
            help="Orlik-Solomon dims, Euler number, circuits")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--top", type=int, default=None)

    p = sub("aomoto", _cmd_aomoto,
            help="Aomoto cohomology dims and resonance membership")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--alpha", required=True,
                   help="comma-separated rational coefficients")
    p.add_argument("--degree", type=int, default=1)
    p.add_argument("--depth", type=int, default=1)

    p = sub("resonance-sample", _cmd_resonance_sample,
            help="generic cohomology dims over a prime field")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--subspace", default=None,
                   help="semicolon-separated rows of rational coefficients")

    p = sub("log-resonance", _cmd_log_resonance,
            help="logarithmic degree-1 resonance membership")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--alpha", required=True)

    p = sub("elliptic", _cmd_elliptic,
            help="full elliptic configuration-space battery for one n")
    p.add_argument("--n", type=int, required=True)

    p = sub("e2-page", _cmd_e2_page,
            help="E2 page of the twisted complex at a pure class (x, ix)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", required=True,
                   help="comma-separated rational x coordinates")

    p = sub("etc-membership", _cmd_etc_membership,
            help="exponential tangent cone membership of a direction")
    p.add_argument("--system", required=True)
    p.add_argument("--alpha", required=True)

    p = sub("master", _cmd_master,
            help="critical points of a master function")
    p.add_argument("--points", default=None,
                   help="puncture points (univariate mode)")
    p.add_argument("--arrangement", default=None,
                   help="line arrangement file (bivariate mode)")
    p.add_argument("--weights", required=True,
                   help="comma-separated rational weights")

    p = sub("residues", _cmd_residues,
            help="boundary residues of a projective line arrangement form")
    p.add_argument("--arrangement", required=True)
    p.add_argument("--weights", required=True)

    p = sub("fox-h1", _cmd_fox_h1,
            help="twisted cohomology of a presentation at a character")
    p.add_argument("--presentation", required=True)
    p.add_argument("--character", required=True,
                   help="comma-separated nonzero rational character values")

    sub("verify-paper", _cmd_verify_paper,
        help="run the full acceptance battery (exit 1 on any failure)")

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    t0 = time.monotonic()
    try:
        result, inputs = args.handler(args)
    except ParseError as exc:
        print(json.dumps({"error": str(exc), "kind": "parse"}),
              file=sys.stderr)
        return 2
    except DegeneracyError as exc:
        print(json.dumps({"error": str(exc), "kind": "degeneracy"}),
              file=sys.stderr)
        return 3
    except PreconditionError as exc:
        print(json.dumps({"error": str(exc), "kind": "precondition"}),
              file=sys.stderr)
        return 2
    report = {
        "tool": "jumploci",
        "version": __version__,
        "subcommand": args.subcommand,
        "seed": args.seed,
        "inputs": jsonable(inputs),
        "result": result,
        "elapsed_s": round(time.monotonic() - t0, 6),
    }
    text = json.dumps(report, indent=2)
    print(text)
    if args.json_out:
        with open(args.json_out, "w") as fh:
            fh.write(text + "\n")
    if args.subcommand == "verify-paper" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
