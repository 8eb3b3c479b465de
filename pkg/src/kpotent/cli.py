"""Command-line front end: ``kpotent <verb> [options]``.

Exit status is 0 on success, 1 on a domain error or a failed check, 2 on a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__, counting
from .bruteforce import SearchSpaceTooLarge, brute_force_count, default_cap, state_space
from .field import FieldError, FieldSpec, char_divisibility_guard, parse_field, potent_scalars, primitive_kth_root
from .incmat import MatrixError, is_potent
from .poset import Poset, PosetError, parse_poset, poset_from_shorthand
from .potent import (CompletionError, DiagonalAssignment, complete_potent, count_by_construction,
                     enumerate_potents, free_slot_polynomial)
from .tables import TABLE_IDS, TableError, check_table, load_table, render_table

VERIFY_CASES = [
    ("chain:1", "3", 1), ("chain:2", "3", 1), ("chain:3", "3", 1), ("chain:4", "3", 1),
    ("chain:1", "5", 2), ("chain:2", "5", 2), ("chain:3", "5", 2), ("chain:4", "5", 2),
    ("chain:2", "7", 2), ("chain:3", "7", 2), ("chain:2", "7", 3), ("chain:3", "7", 3),
    ("star:1:1", "5", 2), ("rhombus:1:1", "5", 2), ("y:1:1:1", "5", 2),
]


class UsageError(Exception):
    pass


@dataclass
class Shape:
    """A poset plus, when it came from a shorthand, the builder that made it."""

    poset: Poset
    kind: str
    params: tuple

    @property
    def label(self) -> str:
        if self.kind == "file":
            return "file"
        if self.kind == "star":
            n, arms = self.params
            return f"star:{n}:" + ",".join(map(str, arms))
        return self.kind + "".join(f":{p}" for p in self.params)


def load_shape(spec: str) -> Shape:
    if spec.startswith("@"):
        return Shape(parse_poset(Path(spec[1:]).read_text("utf-8")), "file", ())
    poset = poset_from_shorthand(spec)
    kind, *args = spec.split(":")
    if kind == "star":
        n = int(args[0])
        arms = tuple(int(a) for a in args[1].split(",") if a) if len(args) > 1 else ()
        return Shape(poset, kind, (n, arms))
    return Shape(poset, kind, tuple(int(a) for a in args))


def formula_count(shape: Shape, s: int, q: int | None = None):
    """Closed-form count for a builder shape; None for posets read from a file."""
    k, p = shape.kind, shape.params
    if k == "chain":
        return counting.count_triangular(p[0], s, q)
    if k == "star":
        return counting.star_count(p[0], p[1], s, q)
    if k == "rhombus":
        return counting.rhombus_count(p[0], p[1], s, q)
    if k == "y":
        return counting.y_count(p[0], p[1], p[2], s, q)
    return None


def _field_name(f: FieldSpec) -> str:
    return str(f.q) if f.e == 1 else f"{f.p}^{f.e}"


# -- verbs -----------------------------------------------------------------------

def cmd_roots(args) -> tuple[dict, list[str], list[dict]]:
    f = parse_field(args.field)
    roots = potent_scalars(f, args.k)
    guard = char_divisibility_guard(f, args.k)
    lines = [" ".join(str(x.code) for x in roots), f"s={len(roots)}"]
    result = {"potent_scalars": [x.code for x in roots], "s": len(roots)}
    if (f.q - 1) % args.k == 0:
        w = primitive_kth_root(f, args.k)
        lines.append(f"omega={w.code}")
        result["omega"] = w.code
    else:
        lines.append(f"omega: none ({args.k} does not divide {f.q - 1})")
        result["omega"] = None
    lines.append(f"guard: {'pass' if guard else 'fail'} ({guard.reason})")
    result["guard"] = bool(guard)
    return result, lines, []


def cmd_count(args):
    shape = load_shape(args.poset)
    if args.symbolic:
        if args.s is None:
            raise UsageError("--symbolic needs --s")
        poly = formula_count(shape, args.s)
        if poly is None:
            poly = free_slot_polynomial(shape.poset, args.s)
        return {"count": str(poly)}, [str(poly)], []
    if args.field is None:
        raise UsageError("count needs --field, or --s with --symbolic")
    f = parse_field(args.field)
    s = counting.num_scalars(f, args.k, args.mode)
    value = formula_count(shape, s, f.q)
    if value is None:
        value = count_by_construction(shape.poset, f, args.k, args.mode)
    return {"count": value, "s": s}, [str(value)], []


def cmd_enumerate(args):
    shape = load_shape(args.poset)
    f = parse_field(args.field)
    lines = []
    if args.list:
        total = 0
        for m in enumerate_potents(shape.poset, f, args.k, args.mode):
            total += 1
            lines.append(m.render().rstrip("\n"))
            lines.append("")
    else:
        total = count_by_construction(shape.poset, f, args.k, args.mode)
    lines.append(f"count={total}")
    return {"count": total}, lines, []


def _verify_one(poset_spec: str, field_text: str, k: int, cap: int, threads: int):
    shape = load_shape(poset_spec)
    f = parse_field(field_text)
    name = f"{shape.label} field={_field_name(f)} k={k}"
    if not char_divisibility_guard(f, k):
        return {"name": name, "status": "SKIP", "reason": "characteristic guard"}
    s = counting.num_scalars(f, k)
    formula = formula_count(shape, s, f.q)
    construction = count_by_construction(shape.poset, f, k)
    entry = {"name": name, "formula": formula, "construction": construction}
    if state_space(shape.poset, f) > cap:
        entry["status"] = "SKIP"
        entry["reason"] = f"state space {state_space(shape.poset, f)} exceeds cap {cap}"
        return entry
    oracle = brute_force_count(shape.poset, f, k, cap=cap, workers=threads)
    entry["oracle"] = oracle
    values = {oracle, construction} | ({formula} if formula is not None else set())
    entry["status"] = "PASS" if len(values) == 1 else "FAIL"
    return entry


def cmd_verify(args):
    cap = int(float(args.cap)) if args.cap is not None else default_cap()
    if args.all:
        cases = VERIFY_CASES
    else:
        if not (args.poset and args.field and args.k):
            raise UsageError("verify needs --all or --poset/--field/--k")
        cases = [(args.poset, args.field, args.k)]
    checks, lines = [], []
    for spec, fld, k in cases:
        e = _verify_one(spec, fld, k, cap, args.threads)
        checks.append(e)
        vals = " ".join(f"{key}={e[key]}" for key in ("oracle", "formula", "construction") if key in e)
        lines.append(f"{e['status']} {e['name']} {vals}".rstrip()
                     + (f" ({e['reason']})" if "reason" in e else ""))
    failed = sum(c["status"] == "FAIL" for c in checks)
    lines.append(f"verify: {len(checks)} cases, {failed} failed")
    return {"cases": len(checks), "failed": failed}, lines, checks


def cmd_tables(args):
    ids = [args.id] if args.id is not None else list(TABLE_IDS)
    checks, lines = [], []
    for i in ids:
        report = check_table(load_table(i))
        lines.append(render_table(report))
        checks.append({"name": f"table {i}", "status": "PASS" if report.ok else "FAIL",
                       "diffs": [str(d) for d in report.diffs]})
    return {"tables": ids}, lines, checks


def cmd_slowik(args):
    rep = counting.slowik_equiv_check(args.n_max, args.l_max)
    lines = [f"checked {rep.checked} identities"]
    if rep.ok:
        lines.append("PASS")
    else:
        n, l, a, b = rep.counterexample
        lines.append(f"FAIL at n={n} l={l}: {a} != {b}")
    return ({"checked": rep.checked, "ok": rep.ok}, lines,
            [{"name": f"slowik n<={args.n_max} l<={args.l_max}", "status": "PASS" if rep.ok else "FAIL"}])


def _parse_free(tokens: list[str]) -> dict[tuple[int, int], int]:
    out = {}
    for tok in tokens:
        try:
            ij, code = tok.split("=")
            i, j = ij.split(",")
            out[(int(i) - 1, int(j) - 1)] = int(code)
        except ValueError:
            raise UsageError(f"bad --free token {tok!r}; expected i,j=code") from None
    return out


def cmd_complete(args):
    shape = load_shape(args.poset)
    f = parse_field(args.field)
    d = DiagonalAssignment(shape.poset, f, args.k, [int(c) for c in args.diag], args.mode)
    m = complete_potent(d, _parse_free(args.free or []))
    ok = is_potent(m, args.k)
    checks = [{"name": "is_potent", "status": "PASS" if ok else "FAIL"}]
    return {"matrix": m.render()}, m.render().rstrip("\n").splitlines(), checks


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="kpotent", description="(k+1)-potent elements of "
                                 "triangular matrix groups and incidence algebras over finite fields")
    ap.add_argument("--version", action="version", version=f"kpotent {__version__}")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p, field=True, mode=True):
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        if field:
            p.add_argument("--field", help='"p^e" or a prime power q')
        if mode:
            p.add_argument("--mode", choices=["s", "D"], default="s",
                           help="diagonal alphabet: all potent scalars (s) or {0,1,w,..} (D)")

    p = sub.add_parser("roots", help="potent scalars and the canonical k-th root")
    common(p, mode=False)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("count", help="closed-form count")
    common(p)
    p.add_argument("--poset", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--s", type=int)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="count (or list) by construction")
    common(p)
    p.add_argument("--poset", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", action="store_true", help="print every potent element")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="oracle vs formula vs construction")
    common(p, mode=False)
    p.add_argument("--poset")
    p.add_argument("--k", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--cap", help="state-space cap for the oracle (e.g. 1e7)")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("tables", help="recompute the reference tables and diff them")
    common(p, field=False, mode=False)
    p.add_argument("--id", type=int)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("slowik-equiv", help="partition form vs composition form")
    common(p, field=False, mode=False)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--l-max", type=int, default=5)
    p.set_defaults(func=cmd_slowik)

    p = sub.add_parser("complete", help="complete a potent element from its diagonal and free entries")
    common(p)
    p.add_argument("--poset", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--diag", nargs="+", required=True, help="diagonal codes in extension order")
    p.add_argument("--free", nargs="*", help="free entries as i,j=code (1-based)")
    p.set_defaults(func=cmd_complete)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "field", None) is None and args.verb in ("roots", "enumerate", "complete"):
        ap.error(f"{args.verb} needs --field")
    try:
        result, lines, checks = args.func(args)
    except UsageError as exc:
        ap.error(str(exc))
    except (FieldError, PosetError, CompletionError, TableError, SearchSpaceTooLarge,
            counting.CharGuardFailed, MatrixError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    failed = any(c.get("status") == "FAIL" for c in checks)
    if args.json:
        inputs = {k: v for k, v in vars(args).items() if k not in ("func", "json")}
        print(json.dumps({"verb": args.verb, "inputs": inputs, "result": result,
                          "checks": checks}, sort_keys=True, default=str))
    else:
        print("\n".join(lines))
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
