"""Command-line front end.

Exit codes: 0 success, 1 computation failure, 2 usage error, 3 verification
failure.
"""
from __future__ import annotations

import argparse
import cmath
import json
import math
import sys

from . import braids
from .braids import BraidError, BraidSyntaxError
from .homology import SurfaceError, build_setup, psi_matrix
from .intertwiner import (
    representation_equivalence,
    theorem_cases,
    verify_equivariance,
    verify_rank,
)
from .scalars import ScalarDomainError
from .spectral import (
    DEFAULT_GRID,
    EigenvalueError,
    fmt,
    matrix_at_x,
    order_certificates,
    sr_scan,
    stretch_estimate,
)
from .tl import DiagramError, dimension, enumerate_basis, rep_word

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _levels(text):
    try:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError("levels must look like KMIN..KMAX")
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError("need 1 <= KMIN <= KMAX")
    return range(lo, hi + 1)


def _frac(text):
    try:
        p, q = text.split("/")
        p, q = int(p), int(q)
    except ValueError:
        raise argparse.ArgumentTypeError("expected P/Q")
    if q == 0:
        raise argparse.ArgumentTypeError("Q must be nonzero")
    return p, q


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "text"), default=None)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    p = argparse.ArgumentParser(prog="jonesrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def nd(sp, required=True):
        sp.add_argument("--n", type=int, required=required)
        sp.add_argument("--d", type=int, required=required)

    sp = sub.add_parser("dim", parents=[common], help="dimension of V^{n,d}")
    nd(sp)

    sp = sub.add_parser("basis", parents=[common], help="diagram basis of V^{n,d}")
    nd(sp)

    sp = sub.add_parser("matrix", parents=[common], help="representation matrix of a braid word")
    nd(sp)
    sp.add_argument("--braid", required=True)
    at = sp.add_mutually_exclusive_group()
    at.add_argument("--at", type=float, metavar="X", help="A = exp(-pi*i*X/4)")
    at.add_argument("--A-frac", type=_frac, metavar="P/Q", dest="a_frac", help="A = exp(2*pi*i*P/Q)")
    sp.add_argument("--rescale", action="store_true", help="multiply each letter by A^-+1")

    sp = sub.add_parser("homology", parents=[common], help="homology action of a braid word")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--surface", choices=("closed", "one-boundary", "two-boundary"), required=True)

    sp = sub.add_parser("scan", parents=[common], help="spectral radius along A = exp(-pi*i*x/4)")
    nd(sp)
    sp.add_argument("--braid", required=True)
    sp.add_argument("--grid", type=int, default=DEFAULT_GRID)
    sp.add_argument("--workers", type=int, default=1)

    sp = sub.add_parser("order-report", parents=[common], help="infinite-order certificates per level")
    nd(sp)
    sp.add_argument("--braid", required=True)
    sp.add_argument("--levels", type=_levels, default=range(1, 13))
    sp.add_argument("--rank-N", type=int, default=2, dest="rank_n")

    sp = sub.add_parser("stretch", parents=[common], help="homological spectral radius")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--surface", choices=("closed", "one-boundary", "two-boundary"), required=True)

    sp = sub.add_parser("verify", parents=[common], help="exact checks of the intertwiner")
    vsub = sp.add_subparsers(dest="what", required=True)
    vp = vsub.add_parser("equivariance", parents=[common])
    nd(vp)
    vp.add_argument("--surface", choices=("closed", "one-boundary", "two-boundary"))
    vp = vsub.add_parser("theorems", parents=[common])
    vp.add_argument("--max-n", type=int, default=9, dest="max_n")
    vp.add_argument("--words", type=int, default=0, help="random words per case for the matrix-level check")

    sp = sub.add_parser("catalog", parents=[common], help="named braids")
    sp.add_argument("name", nargs="?")
    return p


def _word(text, n):
    """Parse --braid; the strand count comes from --n or from a lone catalog reference."""
    if n is None:
        stripped = text.strip()
        if stripped.startswith("@") and stripped[1:].isidentifier():
            n = braids.catalog_strands(stripped[1:])
        else:
            raise UsageError("--n is required unless the braid is a single @name")
    return braids.word(text, n)


def _complex_json(z):
    return [float(fmt(z.real)), float(fmt(z.imag))]


def cmd_dim(args, out):
    out.write(f"{dimension(args.n, args.d)}\n")


def cmd_basis(args, out):
    names = [str(D) for D in enumerate_basis(args.n, args.d)]
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "d": args.d, "basis": names}, ensure_ascii=False) + "\n")
    else:
        out.write("".join(s + "\n" for s in names))


def cmd_matrix(args, out):
    w = _word(args.braid, args.n)
    basis = [str(D) for D in enumerate_basis(args.n, args.d)]
    if args.at is None and args.a_frac is None:
        m = rep_word(w, args.n, args.d, "laurent", rescale=args.rescale)
        entries = [[p.to_json() for p in row] for row in m.entries]
        domain = "laurent"
    else:
        if args.at is not None:
            if args.rescale:
                mat = matrix_at_x(w, args.n, args.d, args.at)
            else:
                a = cmath.exp(-1j * math.pi * args.at / 4)
                mat = rep_word(w, args.n, args.d, "complex", a=a).entries
        else:
            p, q = args.a_frac
            a = cmath.exp(2j * math.pi * p / q)
            mat = rep_word(w, args.n, args.d, "complex", a=a, rescale=args.rescale).entries
        entries = [[_complex_json(z) for z in row] for row in mat]
        domain = "complex"
    obj = {"n": args.n, "d": args.d, "braid": str(w), "basis": basis, "entries": entries, "domain": domain}
    out.write(json.dumps(obj, ensure_ascii=False) + "\n")


def _surface(args):
    return args.surface.replace("-", "_")


def cmd_homology(args, out):
    w = _word(args.braid, args.n)
    setup = build_setup(_surface(args), w.strands)
    m = psi_matrix(w, setup)
    obj = {
        "surface": setup.kind.tag,
        "n": w.strands,
        "dim": setup.dim,
        "braid": str(w),
        "matrix": m,
        "pairing": [list(r) for r in setup.pairing],
        "relation": list(setup.relation) if setup.relation else None,
    }
    out.write(json.dumps(obj) + "\n")


def cmd_scan(args, out):
    w = _word(args.braid, args.n)
    res = sr_scan(w, args.n, args.d, args.grid, workers=args.workers)
    if args.format == "json":
        for x, v in zip(res.grid, res.values):
            out.write(json.dumps({"x": float(fmt(x)), "sr": float(fmt(v))}) + "\n")
    else:
        out.write(res.to_csv())
    for x, msg in res.errors.items():
        print(f"x={fmt(x)}: {msg}", file=sys.stderr)
    return EXIT_COMPUTE if res.errors else EXIT_OK


def cmd_order_report(args, out):
    w = _word(args.braid, args.n)
    for c in order_certificates(w, args.n, args.d, args.rank_n, args.levels):
        out.write(json.dumps(c.to_json()) + "\n")


def cmd_stretch(args, out):
    w = _word(args.braid, args.n)
    out.write(fmt(stretch_estimate(w, _surface(args))) + "\n")


def _report_line(rep):
    return json.dumps(rep, ensure_ascii=False) + "\n"


def cmd_verify(args, out):
    ok = True
    if args.what == "equivariance":
        n, d = args.n, args.d
        kind = _surface(args) if args.surface else ("one_boundary" if n % 2 else "two_boundary")
        rep = verify_equivariance(n, d, kind)
        ok = rep["ok"]
        out.write(_report_line(rep))
    else:
        if args.max_n < 2:
            raise UsageError("--max-n must be at least 2")
        for n, d, kind in theorem_cases(args.max_n):
            for rep in (verify_equivariance(n, d, kind), verify_rank(n, d, kind)):
                ok &= rep["ok"]
                out.write(_report_line(rep))
            if args.words:
                rep = representation_equivalence(n, d, kind, words=args.words)
                ok &= rep["ok"]
                out.write(_report_line(rep))
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_catalog(args, out):
    names = [args.name] if args.name else list(braids.CATALOG_NAMES)
    for name in names:
        expr = braids.catalog(name)
        strands = braids.catalog_strands(name)
        flat = braids.flatten(expr, strands)
        if args.format == "json":
            obj = {"name": name, "strands": strands, "expression": braids.to_text(expr),
                   "length": len(flat), "exponent_sum": flat.exponent_sum()}
            out.write(json.dumps(obj) + "\n")
        else:
            out.write(f"{name}\t{strands}\t{braids.to_text(expr)}\n")


COMMANDS = {
    "dim": cmd_dim,
    "basis": cmd_basis,
    "matrix": cmd_matrix,
    "homology": cmd_homology,
    "scan": cmd_scan,
    "order-report": cmd_order_report,
    "stretch": cmd_stretch,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


class _Sink:
    """Buffers output so nothing is written when a command fails part way."""

    def __init__(self):
        self.parts = []

    def write(self, s):
        self.parts.append(s)

    def getvalue(self):
        return "".join(self.parts)


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    sink = _Sink()
    try:
        code = COMMANDS[args.command](args, sink) or EXIT_OK
    except (UsageError, BraidSyntaxError, BraidError, DiagramError, SurfaceError, ScalarDomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EigenvalueError, ArithmeticError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    text = sink.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
