"""Command-line entry point.

Exit codes: 0 success, 1 usage or input error, 2 reference-table mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from importlib import metadata
from typing import Any, Sequence

from . import goursat as gs
from . import quatgroups as qg
from . import rootvol as rv
from . import signcodes as sc
from . import sunada
from . import symgroup as sg
from .errors import IsospecError

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 by default
        raise UsageError(message)


def _version() -> str:
    try:
        return metadata.version("artifact")
    except metadata.PackageNotFoundError:  # pragma: no cover
        return "0+unknown"


class Output:
    """Columns and rows for table/csv, plus a JSON payload."""

    def __init__(self, columns: Sequence[str], rows: Sequence[Sequence[Any]], payload: Any = None,
                 title: str | None = None):
        self.columns = list(columns)
        self.rows = [[("" if v is None else str(v)) for v in row] for row in rows]
        self.payload = payload if payload is not None else [dict(zip(self.columns, r)) for r in self.rows]
        self.title = title

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload, indent=2, sort_keys=False) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.columns)
            w.writerows(self.rows)
            return buf.getvalue()
        widths = [max(len(c), *(len(r[i]) for r in self.rows)) if self.rows else len(c)
                  for i, c in enumerate(self.columns)]
        lines = []
        if self.title:
            lines.append(self.title)
        lines.append("  ".join(c.ljust(w) for c, w in zip(self.columns, widths)).rstrip())
        lines.append("  ".join("-" * w for w in widths))
        for r in self.rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"


def _parse_parts(text: str) -> sg.Partition:
    try:
        return sg.parse_partition(text)
    except IsospecError as exc:
        raise UsageError(str(exc)) from None


# -- search -------------------------------------------------------------------

def cmd_search(args) -> tuple[Output, int]:
    if args.m > args.max_m:
        raise UsageError(f"--m {args.m} exceeds --max-m {args.max_m}")
    rows = sunada.search(args.m, cap=args.max_m, jobs=args.jobs)
    cols = ["partition", "n", "m", "mod8_x", "mod8_xy", "M_positive", "faithful", "m6_caveat"]
    table = [[sg.render_partition(r.partition), r.n, r.m, r.cond_mod8_x, r.cond_mod8_xy,
              r.cond_M_positive, r.faithful, r.m6_caveat] for r in rows]
    payload = {"m": args.m, "rows": [
        {"partition": sg.render_partition(r.partition), "n": r.n, "cond_mod8_x": r.cond_mod8_x,
         "cond_mod8_xy": r.cond_mod8_xy, "cond_M_positive": r.cond_M_positive, "faithful": r.faithful,
         "admissible": r.admissible, "m6_caveat": r.m6_caveat} for r in rows]}
    return Output(cols, table, payload), EXIT_OK


# -- char ---------------------------------------------------------------------

def cmd_char(args) -> tuple[Output, int]:
    lam = _parse_parts(args.lam)
    m = sum(lam)
    mus = [_parse_parts(args.mu)] if args.mu else sg.enumerate_partitions(m)
    rows = []
    for mu in mus:
        if sum(mu) != m:
            raise UsageError(f"cycle type {sg.render_partition(mu)} is not a partition of {m}")
        rows.append([sg.render_partition(lam), sg.render_partition(mu), sg.mn_character(lam, mu)])
    payload = {"lambda": sg.render_partition(lam), "dimension": sg.dimension(lam),
               "values": [{"mu": r[1], "chi": r[2]} for r in rows]}
    return Output(["lambda", "mu", "chi"], rows, payload), EXIT_OK


# -- ade ----------------------------------------------------------------------

def cmd_ade(args) -> tuple[Output, int]:
    if args.action == "classes":
        group = qg.ade_group(args.group)
        classes = qg.conjugacy_classes(group)
        rows = [[c.representative.render(), c.size, c.real_part.render()] for c in classes]
        payload = {"group": group.label, "order": group.order,
                   "classes": [dict(zip(("representative", "size", "real_part"), r)) for r in rows]}
        return Output(["representative", "size", "real_part"], rows, payload), EXIT_OK
    if args.action == "elements":
        group = qg.ade_group(args.group)
        rows = [[q.render(), q.order()] for q in group]
        return Output(["element", "order"], rows, {"group": group.label, "elements": [r[0] for r in rows]}), EXIT_OK
    if args.action == "outer":
        if args.group not in qg.OUTER_GENERATORS:
            raise UsageError("outer action is available for 2O and 2I")
        rows = [[r.source, r.target, r.image_real_part.render()] for r in qg.class_action(args.group)]
        return Output(["class", "image_class", "image_real_part"], rows), EXIT_OK
    if args.action == "bd4":
        rows = [[q.render(), *(x.render() for x in imgs)] for q, imgs in qg.bo_action_on_bd4().items()]
        return Output(["coset", "i", "j", "k"], rows), EXIT_OK
    raise UsageError(f"unknown ade action {args.action!r}")  # pragma: no cover


# -- goursat ------------------------------------------------------------------

PRESETS = {
    "z3-2t-1": lambda: gs.z3_2t_pair()[0],
    "z3-2t-2": lambda: gs.z3_2t_pair()[1],
    "z4-2d6-1": lambda: gs.z4_2d6_pair()[0],
    "z4-2d6-2": lambda: gs.z4_2d6_pair()[1],
}


def _group_spec(spec) -> qg.FiniteQuatGroup:
    if isinstance(spec, str):
        return qg.ade_group(spec)
    if isinstance(spec, list):
        return qg.generate([qg.UnitQuaternion.parse(x) for x in spec] or [qg.ONE])
    raise UsageError(f"group must be an ADE label or a list of generators, got {spec!r}")


def load_quintuple(text: str) -> gs.GoursatQuintuple:
    """A preset name, a JSON object, or a path to a JSON file."""
    if text in PRESETS:
        return PRESETS[text]()
    if not text.lstrip().startswith("{"):
        if not os.path.exists(text):
            raise UsageError(f"not a preset, JSON object or file: {text!r}; presets: {', '.join(PRESETS)}")
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from None
    missing = [k for k in ("A", "A0", "B", "B0", "theta") if k not in data]
    if missing:
        raise UsageError(f"quintuple is missing {', '.join(missing)}")
    groups = [_group_spec(data[k]) for k in ("A", "A0", "B", "B0")]
    pairs = [(qg.UnitQuaternion.parse(a), qg.UnitQuaternion.parse(b)) for a, b in data["theta"]]
    return gs.GoursatQuintuple.from_generators(*groups, pairs)


def _witnesses(spec: str) -> list[gs.QuatPair]:
    # "LEFT:RIGHT" with each side an ADE label or 1
    try:
        left, right = spec.split(":")
    except ValueError:
        raise UsageError("--witnesses must look like 1:2O or 2O:1") from None
    side = lambda s: [qg.ONE] if s.strip() == "1" else list(qg.ade_group(s.strip()))  # noqa: E731
    return gs.witnesses_from(side(left), side(right))


def cmd_goursat(args) -> tuple[Output, int]:
    if args.action == "build":
        q = load_quintuple(args.quintuple)
        c = gs.build_subgroup(q)
        payload = {"quintuple": q.summary(), "order": c.order}
        rows = [[k, json.dumps(v) if isinstance(v, list) else v] for k, v in q.summary().items()]
        rows.append(["order", c.order])
        if args.elements:
            payload["elements"] = [[p.a.render(), p.b.render()] for p in c.sorted_elements()]
            rows += [["element", p.render()] for p in c.sorted_elements()]
        return Output(["field", "value"], rows, payload), EXIT_OK
    if args.action == "compare":
        c1 = gs.build_subgroup(load_quintuple(args.lhs))
        c2 = gs.build_subgroup(load_quintuple(args.rhs))
        almost = gs.spin4_almost_conjugate(c1, c2)
        payload = {"lhs_order": c1.order, "rhs_order": c2.order, "almost_conjugate": almost}
        if args.witnesses:
            w = gs.conjugate_by_witness(c1, c2, _witnesses(args.witnesses))
            payload["witness_set"] = args.witnesses
            payload["witness"] = None if w is None else [w.a.render(), w.b.render()]
        rows = [[k, json.dumps(v) if isinstance(v, list) else v] for k, v in payload.items()]
        return Output(["field", "value"], rows, payload), EXIT_OK
    raise UsageError(f"unknown goursat action {args.action!r}")  # pragma: no cover


# -- codes --------------------------------------------------------------------

def cmd_codes(args) -> tuple[Output, int]:
    g1, g2 = sc.paper_groups()
    res = sc.permutation_search(g1, g2)
    rows = []
    for name, g in (("group1", g1), ("group2", g2)):
        for c in g.sorted_codewords():
            rows.append([name, c.render(), c.weight])
    w1, w2 = sc.weight_enumerator(g1), sc.weight_enumerator(g2)
    payload = {
        "group1": [c.render() for c in g1.sorted_codewords()],
        "group2": [c.render() for c in g2.sorted_codewords()],
        "weights1": {str(k): v for k, v in w1.items()},
        "weights2": {str(k): v for k, v in w2.items()},
        "so6_almost_conjugate": sc.so6_almost_conjugate(g1, g2),
        "permutation": None if res.permutation is None else list(res.permutation),
        "permutations_tried": res.tried,
    }
    rows += [["summary", "weights1", json.dumps(payload["weights1"])],
             ["summary", "weights2", json.dumps(payload["weights2"])],
             ["summary", "so6_almost_conjugate", payload["so6_almost_conjugate"]],
             ["summary", "permutation", payload["permutation"]],
             ["summary", "permutations_tried", res.tried]]
    return Output(["group", "codeword", "weight"], rows, payload), EXIT_OK


# -- volume -------------------------------------------------------------------

def cmd_volume(args) -> tuple[Output, int]:
    kappa = args.kappa
    if args.table:
        keys = list(rv.NEARLY_KAEHLER_TABLE)
    elif args.space:
        keys = [args.space]
    else:
        raise UsageError("volume needs --space or --table")
    rows, payload = [], []
    for key in keys:
        sv = rv.space_volume(key)
        value = sv.value
        if value is not None and kappa is not None:
            value = value.rescaled(Fraction(30, kappa), sv.dim)
        text = value.render() if value is not None else sv.quoted
        entry = {"space": key, "description": sv.description, "derived": sv.derived, "value": text,
                 "display": value.render_fraction() if value is not None else sv.quoted}
        if value is not None:
            entry.update({"q": str(value.r.q), "sqrt": value.r.d, "pi_power": value.a})
        if args.table:
            entry["reference"] = f"(30/kappa)^3 * {rv.NEARLY_KAEHLER_TABLE[key]}"
        payload.append(entry)
        rows.append([key, text, entry["display"], "derived" if sv.derived else "quoted, not derived"]
                    + ([entry["reference"]] if args.table else []))
    cols = ["space", "volume", "display", "source"] + (["reference"] if args.table else [])
    title = None
    if args.table:
        title = ("derived values use the fixed normal metrics; reference entries carry (30/kappa)^3"
                 if kappa is None else f"derived values rescaled by (30/{kappa})^3")
    return Output(cols, rows, payload, title=title), EXIT_OK


# -- paper-tables ---------------------------------------------------------------

def cmd_tables(args) -> tuple[Output, int]:
    from . import golden

    results = golden.run_checks(jobs=args.jobs)
    rows = [[r.status, r.check, r.expected, r.computed, r.note] for r in results]
    payload = [r.__dict__ for r in results]
    statuses = {r.status for r in results}
    code = EXIT_OK
    if golden.MISMATCH in statuses or (args.strict and golden.KNOWN in statuses):
        code = EXIT_MISMATCH
    return Output(["status", "check", "expected", "computed", "note"], rows, payload), code


# -- driver -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for partition sweeps")
    common.add_argument("--manifest", action="store_true", help="print a run manifest to stderr")

    p = _Parser(prog="isospec", description="Almost-conjugate subgroups and exact volumes.")
    p.add_argument("--version", action="version", version=_version())
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("search", parents=[common], help="admissible irreps of Sym(m)")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--max-m", type=int, default=sunada.SEARCH_CAP)
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("char", parents=[common], help="symmetric group character values")
    s.add_argument("--lambda", dest="lam", required=True, help="irrep, e.g. 3,2,1")
    s.add_argument("--mu", help="cycle type; omit for the whole row")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("ade", parents=[common], help="finite subgroups of SU(2)")
    s.add_argument("action", choices=("classes", "elements", "outer", "bd4"))
    s.add_argument("--group", default="2O")
    s.set_defaults(func=cmd_ade)

    s = sub.add_parser("goursat", parents=[common], help="subgroups of SU(2)xSU(2)")
    s.add_argument("action", choices=("build", "compare"))
    s.add_argument("--quintuple")
    s.add_argument("--lhs")
    s.add_argument("--rhs")
    s.add_argument("--witnesses", help="witness set LEFT:RIGHT, e.g. 1:2O")
    s.add_argument("--elements", action="store_true", help="list the subgroup elements")
    s.set_defaults(func=cmd_goursat)

    s = sub.add_parser("codes", parents=[common], help="sign-code subgroups of SO(6)")
    s.add_argument("action", choices=("verify",), nargs="?", default="verify")
    s.set_defaults(func=cmd_codes)

    s = sub.add_parser("volume", parents=[common], help="exact volumes")
    s.add_argument("--space", choices=rv.SPACES)
    s.add_argument("--table", action="store_true")
    s.add_argument("--kappa", type=int, help="rescale derived volumes from scalar curvature 30 to KAPPA")
    s.set_defaults(func=cmd_volume)

    s = sub.add_parser("paper-tables", parents=[common], help="recompute every reference table")
    s.add_argument("--strict", action="store_true", help="treat known discrepancies as failures")
    s.set_defaults(func=cmd_tables)
    return p


def _check_goursat_args(args) -> None:
    if args.command != "goursat":
        return
    if args.action == "build" and not args.quintuple:
        raise UsageError("goursat build needs --quintuple")
    if args.action == "compare" and not (args.lhs and args.rhs):
        raise UsageError("goursat compare needs --lhs and --rhs")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    start = time.perf_counter()
    try:
        args = parser.parse_args(argv)
        _check_goursat_args(args)
        out, code = args.func(args)
    except UsageError as exc:
        print(f"isospec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IsospecError as exc:
        print(f"isospec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out.render(args.format))
    if args.manifest:
        params = {k: v for k, v in vars(args).items() if k not in ("func", "manifest")}
        manifest = {"subcommand": args.command, "parameters": params, "version": _version(),
                    "elapsed_ms": round((time.perf_counter() - start) * 1000, 3), "rows": len(out.rows)}
        print(json.dumps(manifest, sort_keys=True), file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
