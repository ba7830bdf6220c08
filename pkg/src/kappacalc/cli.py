"""Command line front end: ``kappacalc <command> [options]``.

Every command builds a :class:`Report` and renders it as text, CSV or JSON.
JSON output is ``json.dumps(..., sort_keys=True, indent=2)`` and rationals are
always ``"num/den"`` strings (``"8"`` when integral).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import arithgrp, dualcoh, genera, k3family
from .exactalg import frac_text

FORMATS = ("text", "csv", "json")


class CLIError(Exception):
    pass


@dataclass
class Report:
    data: dict
    text: list = field(default_factory=list)
    rows: list = field(default_factory=list)  # CSV rows, header first

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, sort_keys=True, indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerows(self.rows)
            return buf.getvalue()
        return "\n".join(self.text) + "\n"


def _lambda_symbol(args) -> str:
    return "λ" if getattr(args, "unicode", False) else "l"


def _model(args) -> k3family.FamilyModel:
    path = getattr(args, "a_values", None)
    if path is None:
        return k3family.DEFAULT_MODEL
    try:
        return k3family.FamilyModel(k3family.read_a_values(path))
    except (OSError, ValueError) as exc:
        raise CLIError(f"cannot read a-values from {path}: {exc}") from exc


def _poly_json(poly) -> dict:
    return {"text": poly.to_text(), "poly": poly.to_json()}


# -- commands ------------------------------------------------------------------

def cmd_kappa_table(args) -> Report:
    model = _model(args)
    sym = _lambda_symbol(args)
    if args.max < 1:
        raise CLIError("--max must be at least 1")
    try:
        rows = model.kappa_table(args.max)
    except k3family.MissingAValueError as exc:
        raise CLIError(f"{exc}; supply more values with --a-values") from exc
    signature = model.kappa(genera.l_polynomial(1))
    euler = model.fiber_integrate(k3family.TOTAL_RING.gen("t2")).constant_term()
    note = (
        f"i=0: integral of L_1 = {frac_text(signature.coefficient)} (signature), "
        f"integral of t2 = {frac_text(euler)} (Euler characteristic)"
    )
    report = Report(
        data={
            "command": "kappa-table",
            "a_values": [frac_text(a) for a in model.a_values],
            "rows": [
                {"i": i, "coefficient": frac_text(r.coefficient), "lambda_power": r.lambda_power}
                for i, r in enumerate(rows, 1)
            ],
            "notes": [note],
        }
    )
    report.text.append(f"{'i':>2}  kappa(L_(i+1))")
    for i, r in enumerate(rows, 1):
        report.text.append(f"{i:>2}  {r.to_text(sym)}")
    report.text.append(f"# {note}")
    report.rows.append(["index", "coefficient", "power"])
    for i, r in enumerate(rows, 1):
        report.rows.append([i, frac_text(r.coefficient), r.lambda_power])
    return report


def cmd_franke(args) -> Report:
    try:
        spec = arithgrp.GroupSpec.parse(args.spec)
        result = arithgrp.franke_bound(spec)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    table = []
    for info in result.table:
        entry = {"k": info.k, "dim_N": info.dim_N}
        if args.oracle:
            try:
                oracle = arithgrp.oracle_unipotent_dim(spec, info.k)
            except arithgrp.OracleSizeError as exc:
                raise CLIError(str(exc)) from exc
            entry["oracle"] = oracle
            entry["agrees"] = oracle == info.dim_N
        table.append(entry)
    report = Report(
        data={"command": "franke", "spec": str(spec), "bound": result.bound,
              "argmin_k": result.argmin_k, "parabolics": table}
    )
    report.text.append(f"group {spec}: injective in degrees * <= {result.bound} (argmin k = {result.argmin_k})")
    for e in table:
        line = f"  k={e['k']:<3} dim N_k = {e['dim_N']}"
        if args.oracle:
            line += f"  oracle = {e['oracle']}  {'ok' if e['agrees'] else 'MISMATCH'}"
        report.text.append(line)
    header = ["k", "dim_N"] + (["oracle", "agrees"] if args.oracle else [])
    report.rows.append(header)
    for e in table:
        report.rows.append([e[h] for h in header])
    return report


def cmd_l_poly(args) -> Report:
    n = args.n
    if n < 0:
        raise CLIError("n must be non-negative")
    L = genera.l_polynomial(n, order=max(n, 1))
    Lt = genera.atiyah_singer_l(n, order=max(n, 1))
    report = Report(data={"command": "l-poly", "n": n, "L": _poly_json(L), "L_tilde": _poly_json(Lt)})
    report.text += [f"L_{n} = {L}", f"L~_{n} = {Lt}"]
    report.rows.append(["class", "monomial", "coefficient"])
    for label, poly in (("L", L), ("L_tilde", Lt)):
        for mono, c in poly.items():
            report.rows.append([label, poly.ring.mono_to_text(mono), frac_text(c)])
    return report


def cmd_x_class(args) -> Report:
    try:
        x = arithgrp.x_class(args.i)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    report = Report(data={"command": "x-class", "i": args.i, "x": _poly_json(x)})
    report.text.append(f"x_{4 * args.i} = {x}")
    report.rows.append(["monomial", "coefficient"])
    for mono, c in x.items():
        report.rows.append([x.ring.mono_to_text(mono), frac_text(c)])
    return report


def cmd_taut(args) -> Report:
    g = args.g
    if not 1 <= g <= dualcoh.MAX_G:
        raise CLIError(f"g must be in 1..{dualcoh.MAX_G}")
    R = dualcoh.sp_dual_ring(g)
    basis = dualcoh.vdg_basis(R)
    kernel = dualcoh.matsushima_kernel_sp(R)
    ortho = dualcoh.kernel_orthogonality_check(R)
    report = Report(
        data={
            "command": "taut",
            "g": g,
            "graded_dims": R.graded_dims(),
            "total_dim": R.total_dim,
            "vdg_basis": [str(m) for m in basis.monomials],
            "kernel": [str(m) for m in kernel.monomials],
            "kernel_dim": kernel.dim,
            "kernel_is_orthogonal_complement": ortho,
        }
    )
    report.text += [
        f"g = {g}",
        f"graded dims (weight 0..{R.top_weight}): {R.graded_dims()}  total {R.total_dim}",
        f"tautological basis ({len(basis)}): {', '.join(str(m) for m in basis.monomials)}",
        f"Matsushima kernel ({kernel.dim}): {', '.join(str(m) for m in kernel.monomials)}",
        f"kernel = (u{g})^perp: {ortho}",
    ]
    report.rows.append(["weight", "dim"])
    for d, dim in enumerate(R.graded_dims()):
        report.rows.append([d, dim])
    return report


def cmd_sl_image(args) -> Report:
    try:
        alg = dualcoh.sl_image(args.n)
    except ValueError as exc:
        raise CLIError(str(exc)) from exc
    pp = alg.poincare_polynomial()
    report = Report(
        data={
            "command": "sl-image",
            "n": args.n,
            "generators": [f"cbar{i}" for i in alg.indices],
            "degrees": list(alg.degrees),
            "poincare_polynomial": pp,
            "nonzero_degrees": [d for d, c in enumerate(pp) if c],
        }
    )
    gens = ", ".join(f"cbar{i} (deg {2 * i - 1})" for i in alg.indices) or "none"
    report.text += [
        f"n = {args.n}: exterior algebra on {gens}",
        f"nonzero degrees: {[d for d, c in enumerate(pp) if c]}",
    ]
    report.rows.append(["degree", "dim"])
    for d, c in enumerate(pp):
        report.rows.append([d, c])
    return report


def cmd_nielsen_report(args) -> Report:
    if args.i < 0:
        raise CLIError("i must be non-negative")
    model = _model(args)
    try:
        rep = k3family.bott_obstruction(args.i, model)
    except k3family.MissingAValueError as exc:
        raise CLIError(str(exc)) from exc
    sym = _lambda_symbol(args)
    report = Report(
        data={
            "command": "nielsen-report",
            "i": rep.i,
            "class_degree": rep.class_degree,
            "bott_bound": rep.bott_bound,
            "obstructs": rep.obstructs,
            "kappa": {"coefficient": frac_text(rep.kappa.coefficient), "lambda_power": rep.kappa.lambda_power},
            "contradiction": rep.contradiction,
        }
    )
    cmp = ">" if rep.obstructs else "<="
    report.text += [
        f"class L_{rep.i + 1} has degree {rep.class_degree} {cmp} {rep.bott_bound} (Bott bound)",
        f"kappa(L_{rep.i + 1}) = {rep.kappa.to_text(sym)}",
        "nonzero class above the Bott bound: splitting is obstructed"
        if rep.contradiction
        else "no obstruction from this class",
    ]
    report.rows.append(["i", "class_degree", "bott_bound", "obstructs", "kappa_coefficient", "lambda_power"])
    report.rows.append([rep.i, rep.class_degree, rep.bott_bound, rep.obstructs,
                        frac_text(rep.kappa.coefficient), rep.kappa.lambda_power])
    return report


def cmd_solve_a(args) -> Report:
    known = k3family.KNOWN_A_VALUES
    if args.a_values is not None:
        known = _model(args).a_values
    try:
        sol = k3family.solve_a_values(known, require_integer=args.strict)
    except k3family.ASolveError as exc:
        raise CLIError(str(exc)) from exc
    if not sol.consistent:
        bad = [i for i, ok in sol.consistency.items() if not ok]
        raise CLIError(f"known a-values are inconsistent with table rows {bad}")
    if args.write:
        with open(args.write, "w") as fh:
            fh.write(k3family.format_a_values(sol.a_values))
    report = Report(
        data={
            "command": "solve-a",
            "known": [frac_text(a) for a in known],
            "checked_rows": sorted(sol.consistency),
            "solved": {str(j): frac_text(v) for j, v in sol.solved.items()},
            "non_integral": list(sol.non_integral),
            "a_values": [frac_text(a) for a in sol.a_values],
        }
    )
    report.text.append(f"known: {', '.join(f'a{j} = {frac_text(a)}' for j, a in enumerate(known))}")
    report.text.append(f"rows checked against known values: {sorted(sol.consistency)} (all consistent)")
    for j, v in sol.solved.items():
        flag = "" if v.denominator == 1 else "  (not an integer)"
        report.text.append(f"row {j} -> a{j} = {frac_text(v)}{flag}")
    report.rows.append(["index", "value", "source"])
    for j, v in enumerate(sol.a_values):
        report.rows.append([j, frac_text(v), "solved" if j in sol.solved else "given"])
    return report


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--a-values", metavar="PATH", help="a-values file with lines 'aN = value'")
    family.add_argument("--unicode", action="store_true", help="print lambda as λ instead of l")

    parser = argparse.ArgumentParser(prog="kappacalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa-table", parents=[common, family], help="kappa(L_(i+1)) for the K3 family")
    p.add_argument("--max", type=int, default=8)
    p.set_defaults(func=cmd_kappa_table)

    p = sub.add_parser("franke", parents=[common], help="Franke injectivity bound")
    p.add_argument("spec", help="so:p,q | sp:n | sl:n")
    p.add_argument("--oracle", action="store_true", help="recompute each dim N_k by nullspace")
    p.set_defaults(func=cmd_franke)

    p = sub.add_parser("l-poly", parents=[common], help="L_n and its Atiyah-Singer modification")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_l_poly)

    p = sub.add_parser("x-class", parents=[common], help="x_4i = 2 ph_4i(eta_+)")
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_x_class)

    p = sub.add_parser("taut", parents=[common], help="dual ring of Sp(2g) and the tautological ring of A_g")
    p.add_argument("g", type=int)
    p.set_defaults(func=cmd_taut)

    p = sub.add_parser("sl-image", parents=[common], help="Matsushima image for SL_n(Z)")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_sl_image)

    p = sub.add_parser("nielsen-report", parents=[common, family], help="Bott vanishing degree check")
    p.add_argument("i", type=int)
    p.set_defaults(func=cmd_nielsen_report)

    p = sub.add_parser("solve-a", parents=[common, family], help="recover a_4..a_8 from the kappa table")
    p.add_argument("--strict", action="store_true", help="fail on non-integral solutions")
    p.add_argument("--write", metavar="PATH", help="write the full a-values file")
    p.set_defaults(func=cmd_solve_a)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = args.func(args)
    except CLIError as exc:
        print(f"kappacalc {args.command}: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report.render(args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
