"""Command-line front end: ``spincover <command> --g N ...``.

Every command prints plain text by default or a JSON document with
``--format json``.  Exit status is 0 on success, 1 when a verification
fails and 2 for usage errors (bad flags, wrong bit lengths, matrices of the
wrong kind).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .action_orth import classify_A1, stabilizer_check
from .action_symp import (PreconditionError, arf_of, classify_epi, factorize_transvections,
                          kt_subspace, replay)
from .gf2core import GF2Mat, GF2Vec, ShapeError
from .grouptool import FormSpace, Isometry, NotIsometryError, is_isometry
from .homology import (OSurface, SectionParams, SpecialCovering, TotalN, epi_set,
                       presentation, specials)
from .liftweak import (KernelNotPreserved, lift_to_symp, project_to_orth, weak_class,
                       weak_witness)

SCHEMA = "spincover/1"


class UsageError(Exception):
    pass


# -- argument helpers ---------------------------------------------------------

def _bits(text: str | None, length: int, flag: str) -> GF2Vec | None:
    if text is None:
        return None
    try:
        v = GF2Vec.from_str(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}") from None
    if v.n != length:
        raise UsageError(f"{flag} needs {length} bits for this genus, got {v.n}")
    return v


def _params(args) -> SectionParams:
    g = args.g
    rho = _bits(getattr(args, "rho", None), g + 1, "--rho")
    r = _bits(getattr(args, "r", None), 2 * g, "--r")
    return SectionParams.make(g, rho=rho, r=r)


def _matrix(path: str, n: int) -> GF2Mat:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"--matrix: {exc}") from None
    try:
        m = GF2Mat.from_str(text)
    except (ValueError, ShapeError) as exc:
        raise UsageError(f"--matrix: {exc}") from None
    if m.shape != (n, n):
        raise UsageError(f"--matrix must be {n}x{n}, got {m.rows}x{m.cols}")
    return m


def _psi(text: str, g: int, flag: str = "--psi") -> SpecialCovering:
    return SpecialCovering.on_n(g, _bits(text, g + 1, flag))


def _genus(g: int) -> None:
    if g < 1:
        raise UsageError("--g must be at least 1")


# -- commands -----------------------------------------------------------------

def cmd_enumerate(args) -> tuple[dict, str]:
    g = args.g
    if args.epi:
        params = SectionParams.make(g, r=_bits(args.r, 2 * g, "--r"))
        rows = []
        for m in epi_set(g):
            rows.append({"phi": str(m.phi), "psi": [str(p) for p in m.psis],
                         "arf": arf_of(m.phi, params)})
        doc = {"g": g, "r": str(params.r), "count": len(rows), "epi": rows}
        lines = [f"E_pi for g={g}, r={params.r}: {len(rows)} members"]
        lines += [f"  phi={x['phi']}  from psi={','.join(x['psi'])}  arf={x['arf']}" for x in rows]
        return doc, "\n".join(lines)
    rows = []
    for psi in specials(TotalN(g)):
        rows.append({"psi": str(psi), "class": weak_class(psi), "epsilon": presentation(psi).epsilon})
    doc = {"g": g, "count": len(rows), "coverings": rows}
    lines = [f"special coverings for g={g}: {len(rows)}"]
    lines += [f"  psi={x['psi']}  class={x['class']}" for x in rows]
    return doc, "\n".join(lines)


def cmd_verify(args) -> tuple[dict, str, bool]:
    from .verify import run_suite

    if args.regen_fixtures:
        from ._oracles import write_fixtures
        path = write_fixtures()
        return {"regenerated": str(path.name)}, f"fixtures written to {path.name}", True
    if not args.all and not args.theorem:
        raise UsageError("verify needs --all or --theorem NAME")
    rho = r = None
    if args.g is not None:
        _genus(args.g)
        rho = _bits(args.rho, args.g + 1, "--rho")
        r = _bits(args.r, 2 * args.g, "--r")
    elif args.rho or args.r:
        raise UsageError("--rho and --r need --g")
    names = None if args.all else args.theorem
    try:
        reports = run_suite(args.max_g, names, g=args.g, r=r, rho=rho)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    ok = all(rep.passed for rep in reports)
    doc = {"max_g": args.max_g, "g": args.g, "passed": ok,
           "results": [rep.to_dict() for rep in reports]}
    lines = []
    for rep in reports:
        line = f"{'PASS' if rep.passed else 'FAIL'}  {rep.name}"
        if rep.details:
            line += "  " + json.dumps(rep.details, sort_keys=True)
        lines.append(line)
    lines.append(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return doc, "\n".join(lines), ok


def _orbit_text(title: str, rep) -> str:
    lines = [title]
    for o in rep.orbits:
        lines.append(f"  [{o.label}] size {o.size}: {' '.join(str(m) for m in o.members)}")
    return "\n".join(lines)


def cmd_classify_o(args) -> tuple[dict, str]:
    params = _params(args)
    rep = classify_A1(args.g, params)
    doc = {"g": args.g, "rho": str(params.rho), "sizes": rep.sizes, **rep.to_dict()}
    return doc, _orbit_text(f"orthogonal action, g={args.g}, rho={params.rho}: sizes {rep.sizes}", rep)


def cmd_stabilizer(args) -> tuple[dict, str, bool]:
    rep = stabilizer_check(args.g, args.alpha)
    doc = rep.to_dict()
    d = rep.details
    text = (f"isotropy of alpha{args.alpha} in O({args.g + 1}): order {d['stabilizer_order']}, "
            f"generator closure {d['closure_order']}, "
            f"{'match' if rep.passed else 'MISMATCH'}")
    return doc, text, rep.passed


def cmd_classify_sp(args) -> tuple[dict, str]:
    params = _params(args)
    rep = classify_epi(args.g, params, args.mode)
    doc = {"g": args.g, "r": str(params.r), "mode": args.mode,
           "exceptional": params.is_exceptional(), "sizes": rep.sizes, **rep.to_dict()}
    title = f"E_pi under {args.mode}, g={args.g}, r={params.r}: sizes {rep.sizes}"
    if params.is_exceptional():
        title += " (t = 0)"
    return doc, _orbit_text(title, rep)


def cmd_factor(args) -> tuple[dict, str]:
    g = args.g
    space = OSurface(g).space
    m = _matrix(args.matrix, 2 * g)
    if not is_isometry(space, m):
        raise UsageError("--matrix is not symplectic")
    params = _params(args)
    V = kt_subspace(g, params) if args.subspace == "kt" else []
    try:
        ys = factorize_transvections(Isometry(space, m), V)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    ok = replay(space, ys) == m
    doc = {"g": g, "subspace": args.subspace, "r": str(params.r),
           "factors": [str(y) for y in ys], "replay_ok": ok}
    text = "\n".join([f"{len(ys)} transvection factor(s):"] + [f"  T_{y}" for y in ys])
    return doc, text


def cmd_weak(args) -> tuple[dict, str]:
    g = args.g
    a, b = _psi(args.psi, g), _psi(args.psi2, g, "--psi2")
    w = weak_witness(a, b)
    doc = {"g": g, "psi": str(a), "psi2": str(b), "class": [weak_class(a), weak_class(b)],
           "equivalent": w is not None,
           "witness": None if w is None else [str(w.mat.row(i)) for i in range(w.mat.rows)]}
    text = f"classes {weak_class(a)} / {weak_class(b)}: "
    text += "weakly equivalent, witness\n" + str(w.mat) if w is not None else "not weakly equivalent"
    return doc, text


def _rows(m: GF2Mat) -> list[str]:
    return [str(m.row(i)) for i in range(m.rows)]


def cmd_lift(args) -> tuple[dict, str]:
    g = args.g
    m = _matrix(args.matrix, g + 1)
    try:
        f = lift_to_symp(Isometry(FormSpace.dot(g + 1), m))
    except NotIsometryError as exc:
        raise UsageError(str(exc)) from None
    return {"g": g, "lift": _rows(f.mat)}, str(f.mat)


def cmd_project(args) -> tuple[dict, str]:
    g = args.g
    m = _matrix(args.matrix, 2 * g)
    try:
        cands = project_to_orth(Isometry(OSurface(g).space, m))
    except (NotIsometryError, KernelNotPreserved) as exc:
        raise UsageError(str(exc)) from None
    doc = {"g": g, "projections": [_rows(F.mat) for F in cands]}
    if not cands:
        return doc, "no orthogonal projection (A^t S A != S)"
    return doc, "\n\n".join(str(F.mat) for F in cands)


def cmd_presentation(args) -> tuple[dict, str]:
    p = presentation(_psi(args.psi, args.g))
    return {"g": args.g, "psi": args.psi, **p.to_dict()}, str(p)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="spincover",
                                 description="Spin structures on circle bundles over non-orientable surfaces.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    sub = ap.add_subparsers(dest="command")

    def add(name, help_, g_required=True):
        p = sub.add_parser(name, help=help_, parents=[common])
        p.add_argument("--g", type=int, required=g_required)
        return p

    p = add("enumerate", "list special coverings or E_pi")
    p.add_argument("--epi", action="store_true")
    p.add_argument("--r")

    p = add("verify", "replay the classification theorems", g_required=False)
    p.add_argument("--all", action="store_true")
    p.add_argument("--theorem", action="append")
    p.add_argument("--max-g", type=int, default=3)
    p.add_argument("--rho")
    p.add_argument("--r")
    p.add_argument("--regen-fixtures", action="store_true")

    p = add("classify-o", "orbits of the orthogonal action")
    p.add_argument("--rho")

    p = add("stabilizer", "isotropy subgroup of alpha_0 or alpha_1")
    p.add_argument("--alpha", type=int, choices=(0, 1), required=True)

    p = add("classify-sp", "orbits of the symplectic action on E_pi")
    p.add_argument("--r")
    p.add_argument("--mode", choices=("kt", "gs", "both"), default="kt")

    p = add("factor", "factor a symplectic matrix into transvections")
    p.add_argument("--matrix", required=True)
    p.add_argument("--subspace", choices=("kt", "none"), default="kt")
    p.add_argument("--r")

    p = add("weak", "decide weak equivalence of two coverings")
    p.add_argument("--psi", required=True)
    p.add_argument("--psi2", required=True)

    p = add("lift", "lift an orthogonal matrix to a symplectic one")
    p.add_argument("--matrix", required=True)

    p = add("project", "project a kernel-preserving symplectic matrix")
    p.add_argument("--matrix", required=True)

    p = add("presentation", "fundamental group presentation of a covering")
    p.add_argument("--psi", required=True)
    return ap


COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "classify-o": cmd_classify_o,
    "stabilizer": cmd_stabilizer,
    "classify-sp": cmd_classify_sp,
    "factor": cmd_factor,
    "weak": cmd_weak,
    "lift": cmd_lift,
    "project": cmd_project,
    "presentation": cmd_presentation,
}


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        ap.print_usage(sys.stderr)
        return 2
    try:
        if args.g is not None:
            _genus(args.g)
        result = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"spincover {args.command}: error: {exc}", file=sys.stderr)
        return 2
    doc, text, ok = result if len(result) == 3 else (*result, True)
    if args.format == "json":
        print(json.dumps({"schema": SCHEMA, "command": args.command, **doc}, sort_keys=True, indent=2))
    else:
        print(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
