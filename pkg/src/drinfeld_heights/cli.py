"""Command-line front end.

Spec files are JSON::

    {
      "field": {"p": 3, "m": 1},
      "phi": ["T", "T", "1"],
      "kernels": [
        {"type": "torsion", "a": "T"},
        {"type": "span", "points": ["1"]},
        {"type": "annihilator", "coeffs": ["1", "1/T"]}
      ],
      "lattices": [[["1", "0"], ["0", "T"]], [["T", "0"], ["0", "1"]]],
      "reference": [["T", "0"], ["0", "T"]]
    }

``phi`` lists the coefficients of phi_T starting with the constant term,
which must be ``T``.  Lattice matrices are given row by row and their columns
generate the lattice.  Kernel indices on the command line are 0-based.

Exit status: 0 on success, 1 when a report shows an inequality or identity
failing, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import __version__
from .alattice import ALattice, covolume_identity_check, lattice_intersect
from .drinfeld import (
    DrinfeldModule,
    KernelModule,
    kernel_from_annihilator,
    kernel_from_points,
    quotient,
    torsion_kernel,
)
from .errors import DrinfeldError
from .funcfield import Place, Poly, set_seed
from .gf import FqContext, field_create
from .heights import Flavor, graded_global, modular_height, parallelogram_report
from .ore import TwistedPoly
from .parser import parse_poly, parse_ratfunc, parse_twisted
from .valpoly import polygon_build, polygon_lambda

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class SpecError(DrinfeldError):
    """Structural problem in a spec file."""


@dataclass
class Spec:
    ctx: FqContext
    phi: DrinfeldModule | None
    kernels: list = field(default_factory=list)
    lattices: list = field(default_factory=list)
    reference: ALattice | None = None


def _where(path, exc):
    return "%s: %s" % (path, exc)


def _parse_at(path, fn, src, ctx):
    if not isinstance(src, str):
        raise SpecError("%s: expected an expression string" % path)
    try:
        return fn(src, ctx)
    except DrinfeldError as exc:
        exc.args = (_where(path, exc),)
        raise


def _matrix(ctx, rows, path):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise SpecError("%s: expected a list of rows" % path)
    vals = [
        [_parse_at("%s[%d][%d]" % (path, i, j), parse_ratfunc, x, ctx) for j, x in enumerate(row)]
        for i, row in enumerate(rows)
    ]
    return ALattice.from_matrix(ctx, vals)


def _kernel(phi, desc, path) -> KernelModule:
    ctx = phi.ctx
    if not isinstance(desc, dict) or "type" not in desc:
        raise SpecError("%s: kernel needs a 'type'" % path)
    kind = desc["type"]
    if kind == "torsion":
        a = _parse_at(path + ".a", parse_poly, desc.get("a"), ctx)
        return torsion_kernel(phi, a)
    if kind == "span":
        pts = [
            _parse_at("%s.points[%d]" % (path, k), parse_ratfunc, s, ctx)
            for k, s in enumerate(desc.get("points", []))
        ]
        return kernel_from_points(phi, pts)
    if kind == "annihilator":
        cs = [
            _parse_at("%s.coeffs[%d]" % (path, k), parse_ratfunc, s, ctx)
            for k, s in enumerate(desc.get("coeffs", []))
        ]
        return kernel_from_annihilator(phi, TwistedPoly(ctx, cs))
    raise SpecError("%s: unknown kernel type %r" % (path, kind))


def load_spec(path: str) -> Spec:
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SpecError("%s: invalid JSON at line %d, column %d: %s" % (path, exc.lineno, exc.colno, exc.msg))
    except OSError as exc:
        raise SpecError("cannot read %s: %s" % (path, exc.strerror))
    return build_spec(raw)


def build_spec(raw: dict) -> Spec:
    if not isinstance(raw, dict) or "field" not in raw:
        raise SpecError("spec needs a 'field' entry")
    fd = raw["field"]
    try:
        ctx = field_create(int(fd["p"]), int(fd.get("m", 1)), fd.get("modulus"))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, DrinfeldError):
            raise
        raise SpecError("field: expected {p, m, modulus?} (%s)" % exc)
    phi = None
    if "phi" in raw:
        cs = [
            _parse_at("phi[%d]" % k, parse_ratfunc, s, ctx) for k, s in enumerate(raw["phi"])
        ]
        phi = DrinfeldModule(TwistedPoly(ctx, cs))
    kernels = []
    for k, desc in enumerate(raw.get("kernels", [])):
        if phi is None:
            raise SpecError("kernels given without phi")
        kernels.append(_kernel(phi, desc, "kernels[%d]" % k))
    lattices = [_matrix(ctx, m, "lattices[%d]" % k) for k, m in enumerate(raw.get("lattices", []))]
    ref = _matrix(ctx, raw["reference"], "reference") if "reference" in raw else None
    return Spec(ctx, phi, kernels, lattices, ref)


def parse_place(s: str, ctx) -> Place:
    if s.strip().lower() in ("inf", "infinity", "oo"):
        return Place.infinity()
    return Place.finite(parse_poly(s, ctx))


# ---------------------------------------------------------------------------
# commands

def _emit(args, payload: dict, text: str):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _need_phi(spec):
    if spec.phi is None:
        raise SpecError("spec has no 'phi'")
    return spec.phi


def cmd_heights(args) -> int:
    for n, path in enumerate(args.spec):
        spec = load_spec(path)
        phi = _need_phi(spec)
        rep = graded_global(phi)
        payload = rep.to_json()
        text = rep.to_table()
        if phi.rank == 2:
            hm = modular_height(phi)
            payload["modular_height"] = hm
            text += "\nmodular height h_m = %d" % hm
        if len(args.spec) > 1:
            payload = {"spec": path, **payload}
            text = "== %s\n%s" % (path, text)
        _emit(args, payload, text)
    return EXIT_OK


def _kernel_pair(spec, sel: str):
    try:
        i, j = (int(x) for x in sel.split(","))
    except ValueError:
        raise SpecError("--kernels expects two indices 'i,j'")
    n = len(spec.kernels)
    for k in (i, j):
        if not 0 <= k < n:
            raise SpecError("kernel index %d out of range (spec has %d)" % (k, n))
    return spec.kernels[i], spec.kernels[j]


def cmd_parallelogram(args) -> int:
    spec = load_spec(args.spec)
    phi = _need_phi(spec)
    G, H = _kernel_pair(spec, args.kernels)
    flavor = Flavor.TAG_FINITE if args.tag_finite else Flavor.GR
    rep = parallelogram_report(phi, G, H, flavor)
    payload = rep.to_json()
    text = rep.to_table()
    if flavor is Flavor.GR and phi.rank == 2:
        hm = {n: modular_height(c) for n, c in rep.corners.items()}
        payload["modular_heights"] = hm
        text += "\nmodular heights: " + ", ".join("%s=%d" % kv for kv in hm.items())
    _emit(args, payload, text)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def _target(spec, sel: str) -> TwistedPoly:
    if sel == "phi":
        return _need_phi(spec).phiT
    kind, _, idx = sel.partition(":")
    if kind in ("kernel", "quotient") and idx.isdigit():
        k = int(idx)
        if k >= len(spec.kernels):
            raise SpecError("kernel index %d out of range" % k)
        G = spec.kernels[k]
        return G.ann if kind == "kernel" else quotient(G.phi, G)[0].phiT
    return _parse_at("--target", parse_twisted, sel, spec.ctx)


def cmd_polygon(args) -> int:
    spec = load_spec(args.spec)
    f = _target(spec, args.target)
    v = parse_place(args.place, spec.ctx)
    P = polygon_build(f, v)
    lam = polygon_lambda(f, v) if f.degree >= 1 and f.constant else None
    payload = {"target": str(f), "place": str(v), **P.to_json()}
    payload["lambda"] = None if lam is None else str(lam)
    rows = [[str(z), str(y)] for z, y in ((z, P(z)) for z in P.sample_points())]
    payload["samples"] = rows
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            fh.write(P.to_csv())
    text = "\n".join(
        ["target: %s" % f, "place: %s" % v]
        + ["line i=%d: %s + %d*z" % (ln.index, ln.intercept, ln.slope) for ln in P.lines]
        + ["breaks: %s" % (", ".join(str(b) for b in P.breaks) or "none")]
        + ["lambda: %s" % ("n/a" if lam is None else lam)]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_lattice(args) -> int:
    spec = load_spec(args.spec)
    if len(spec.lattices) < 2:
        raise SpecError("spec needs at least two lattices")
    L1, L2 = spec.lattices[:2]
    if args.auto_ref:
        ref = lattice_intersect(L1, L2).scaled(Poly.T(spec.ctx))
    elif spec.reference is not None:
        ref = spec.reference
    else:
        raise SpecError("no 'reference' lattice in spec (use --auto-ref)")
    lhs, rhs, ok = covolume_identity_check(L1, L2, ref)
    payload = {
        "L1": L1.to_json(),
        "L2": L2.to_json(),
        "reference": ref.to_json(),
        "lhs": lhs,
        "rhs": rhs,
        "equal": ok,
    }
    text = "\n".join(
        [
            "L1: %s" % L1,
            "L2: %s" % L2,
            "reference: %s" % ref,
            "log_q (L1+L2 : ref) + log_q (L1 cap L2 : ref) = %d" % lhs,
            "log_q (L1 : ref) + log_q (L2 : ref) = %d" % rhs,
            "verdict: %s" % ("equal" if ok else "MISMATCH"),
        ]
    )
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS lets the flags appear before or after the subcommand
    common.add_argument(
        "--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON instead of tables"
    )
    common.add_argument(
        "--seed", type=int, default=argparse.SUPPRESS, help="seed for polynomial factorization"
    )

    ap = argparse.ArgumentParser(
        prog="drinfeld-heights",
        description="Heights of Drinfeld modules over F_q(T) and parallelogram checks.",
        parents=[common],
    )
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("heights", parents=[common], help="local and global graded heights")
    p.add_argument("spec", nargs="+")
    p.set_defaults(func=cmd_heights)

    p = sub.add_parser("parallelogram", parents=[common], help="parallelogram report for two kernels")
    p.add_argument("spec")
    p.add_argument("--kernels", required=True, metavar="I,J")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--gr", action="store_true", help="graded heights (default)")
    g.add_argument("--tag-finite", action="store_true", help="finite-place Taguchi components")
    p.set_defaults(func=cmd_parallelogram)

    p = sub.add_parser("polygon", parents=[common], help="valuation polygon at a place")
    p.add_argument("spec")
    p.add_argument("--target", default="phi", help="phi, kernel:I, quotient:I or a twisted expression")
    p.add_argument("--place", required=True, help="monic irreducible polynomial or 'inf'")
    p.add_argument("--csv", metavar="OUT", help="write (z, V(z)) rows to OUT")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("lattice", parents=[common], help="covolume identity for two lattices")
    p.add_argument("spec")
    p.add_argument("--auto-ref", action="store_true", help="use T * (L1 cap L2) as reference")
    p.set_defaults(func=cmd_lattice)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    args.json = getattr(args, "json", False)
    if getattr(args, "seed", None) is not None:
        set_seed(args.seed)
    try:
        return args.func(args)
    except DrinfeldError as exc:
        print("error: %s: %s" % (type(exc).__name__, exc), file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print("consistency check failed: %s" % (exc or "assertion"), file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
