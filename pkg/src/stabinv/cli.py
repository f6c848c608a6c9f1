"""Command-line interface: ``stabinv <subcommand> ...``.

Exit codes: 0 success, 1 input error, 2 computation guard, 3 failed
expectation rows in ``verify-paper``.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .algebra import AlgebraError, FDAlgebra, algebra_from_presentation
from .catalog import ENTRIES, CatalogError, ParamSet, instantiate, list_families
from .fields import QQ, FieldError, FieldSpec
from .hochschild import SIZE_GUARD
from .presentation import PresentationError, format_presentation, parse_presentation
from .report import ReportConfig, build_report, compare_reports, rows_to_json, verify_paper_tables
from .rewriting import DEFAULT_DEGREE_BOUND, CompletionError

EXIT_OK, EXIT_INPUT, EXIT_GUARD, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--char", type=int, default=0, help="characteristic (0 for the rationals)")
    p.add_argument("--degree", type=int, default=1, help="extension degree over GF(p)")
    p.add_argument("--modulus", help="comma-separated coefficients c0,...,ck of the defining polynomial")


def _compute_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n-max", type=int, default=3)
    p.add_argument("--hh-max", type=int, default=2, choices=range(0, 4))
    p.add_argument("--hh-method", default="auto", choices=("auto", "unit", "radical"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    p.add_argument("--guard", type=int, default=SIZE_GUARD, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="stabinv", description="Stable invariants of quiver algebras with relations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="construct an algebra and summarise its basis")
    b.add_argument("file")
    b.add_argument("--degree-bound", type=int, default=DEFAULT_DEGREE_BOUND)
    b.add_argument("--json", action="store_true")

    inv = sub.add_parser("invariants", help="compute the invariant report")
    inv.add_argument("file", nargs="?")
    inv.add_argument("--family")
    inv.add_argument("--param", action="append", default=[], metavar="K=V")
    _field_args(inv)
    _compute_args(inv)
    inv.add_argument("--json", action="store_true")

    cmp_ = sub.add_parser("compare", help="compare the reports of two algebras")
    cmp_.add_argument("a", help="presentation file or FAMILY[:k=v,...]")
    cmp_.add_argument("b", help="presentation file or FAMILY[:k=v,...]")
    _field_args(cmp_)
    _compute_args(cmp_)
    cmp_.add_argument("--json", action="store_true")

    cat = sub.add_parser("catalog", help="list or emit catalog presentations")
    catsub = cat.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cl = catsub.add_parser("list")
    cl.add_argument("--json", action="store_true")
    ce = catsub.add_parser("emit")
    ce.add_argument("family")
    ce.add_argument("--param", action="append", default=[], metavar="K=V")
    _field_args(ce)

    vp = sub.add_parser("verify-paper", help="check the published invariant tables")
    vp.add_argument("--char", default="all", choices=("0", "2", "3", "all"))
    vp.add_argument("--seed", type=int, default=0)
    vp.add_argument("--samples", type=int, default=64)
    vp.add_argument("--json", action="store_true")
    return parser


# -- helpers ------------------------------------------------------------------

def _field(args) -> FieldSpec:
    if args.char == 0:
        if args.degree != 1 or args.modulus:
            raise InputError("--degree/--modulus need a positive --char")
        return QQ
    mod = None
    if args.modulus:
        try:
            mod = tuple(int(c) for c in args.modulus.split(","))
        except ValueError as exc:
            raise InputError(f"bad --modulus {args.modulus!r}") from exc
    return FieldSpec.gf(args.char, args.degree, mod)


def _params(pairs: list[str]) -> dict:
    out = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InputError(f"expected K=V, got {pair!r}")
        out[key.strip()] = value.strip()
    return out


def _read_file(path: str) -> tuple[str, str]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return text, "sha256:" + hashlib.sha256(text.encode()).hexdigest()[:16]


def _identity(family: str, params: dict) -> str:
    if not params:
        return family
    return family + "(" + ",".join(f"{k}={v}" for k, v in sorted(params.items())) + ")"


def _load(source: str | None, family: str | None, params: dict, field: FieldSpec, degree_bound: int):
    """Algebra and identity string from a file or a catalog family."""
    if family and source:
        raise InputError("give either a file or --family, not both")
    if family:
        pres = instantiate(family, ParamSet.from_pairs(params), field)
        ident = _identity(family, params)
    elif source:
        if params:
            raise InputError("--param only applies to --family")
        text, ident = _read_file(source)
        pres = parse_presentation(text)
    else:
        raise InputError("need a presentation file or --family")
    return algebra_from_presentation(pres, degree_bound), ident


def _load_spec(spec: str, field: FieldSpec, degree_bound: int):
    if Path(spec).exists():
        return _load(spec, None, {}, field, degree_bound)
    family, _, rest = spec.partition(":")
    if family not in ENTRIES:
        raise InputError(f"{spec!r} is neither a file nor a catalog family")
    params = _params([p for p in rest.split(",") if p]) if rest else {}
    return _load(None, family, params, field, degree_bound)


def _config(args) -> ReportConfig:
    return ReportConfig(n_max=args.n_max, hh_max=args.hh_max, seed=args.seed, samples=args.samples,
                        hh_method=args.hh_method, guard=args.guard)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _fmt(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    return str(v)


def _report_table(r) -> str:
    rows = [
        ["identity", r.identity],
        ["field", _fmt(r.field)],
        ["dimension", r.dimension],
        ["cartan.matrix", _fmt(r.cartan["matrix"])],
        ["cartan.det", r.cartan["det"]],
        ["cartan.divisors", _fmt(r.cartan["divisors"])],
        ["dim_commutator", r.dim_commutator],
        ["dim_center", r.dim_center],
        ["Z/(soc∩Z)", r.center_quotients["reynolds"]],
        ["Z/rad Z", r.center_quotients["radical"]],
        ["kulshammer.dims", _fmt(r.kulshammer["dims"]) if r.kulshammer["dims"] else r.kulshammer["status"]],
        ["orthogonal_quotient.dims",
         _fmt(r.orthogonal_quotient["dims"]) if r.orthogonal_quotient["dims"] else r.orthogonal_quotient["status"]],
        ["hh.dims", _fmt(r.hh["dims"]) if r.hh["dims"] is not None else r.hh["status"]],
        ["loewy_length", r.loewy_length],
    ]
    rows += [[f"flags.{k}", v] for k, v in r.flags.items()]
    return _table(rows, ["invariant", "value"])


# -- subcommands --------------------------------------------------------------

def _cmd_build(args, out) -> int:
    text, ident = _read_file(args.file)
    a = algebra_from_presentation(parse_presentation(text), args.degree_bound)
    if args.json:
        doc = a.to_json()
        doc["identity"] = ident
        doc["dimension"] = a.dim
        print(_dump(doc), file=out)
        return EXIT_OK
    print(f"{ident}: dimension {a.dim} over {a.field}", file=out)
    rows = [[i, a.word_name(i), a.quiver.vertices[b.source], a.quiver.vertices[b.target]]
            for i, b in enumerate(a.basis)]
    print(_table(rows, ["index", "word", "source", "target"]), file=out)
    return EXIT_OK


def _cmd_invariants(args, out) -> int:
    field = _field(args)
    a, ident = _load(args.file, args.family, _params(args.param), field, args.degree_bound)
    rep = build_report(a, _config(args), ident)
    print(rep.dumps() if args.json else _report_table(rep), file=out)
    return EXIT_GUARD if str(rep.hh["status"]).startswith("skipped") else EXIT_OK


def _cmd_compare(args, out) -> int:
    field = _field(args)
    cfg = _config(args)
    a, ident_a = _load_spec(args.a, field, args.degree_bound)
    b, ident_b = _load_spec(args.b, field, args.degree_bound)
    ra = build_report(a, cfg, ident_a)
    rb = build_report(b, cfg, ident_b)
    res = compare_reports(ra, rb)
    if args.json:
        print(_dump({"left": ra.identity, "right": rb.identity, **res.to_json()}), file=out)
    else:
        rows = [[name, _fmt(res.values[name][0]), _fmt(res.values[name][1]), verdict]
                for name, verdict in res.verdicts.items()]
        print(_table(rows, ["invariant", ra.identity, rb.identity, "verdict"]), file=out)
        print(f"overall: {res.overall}", file=out)
        if res.overall == "not_distinguished":
            print("(these invariants do not separate the algebras; this is not an equivalence)", file=out)
    return EXIT_OK


def _cmd_catalog(args, out) -> int:
    if args.action == "list":
        entries = list_families()
        if args.json:
            doc = [{"family": e.family, "display": e.display, "params": list(e.params),
                    "constraint": e.constraint, "symmetric": e.symmetric,
                    "special_biserial": e.special_biserial, "citation": e.citation} for e in entries]
            print(_dump(doc), file=out)
        else:
            rows = [[e.family, e.display, ",".join(e.params) or "-", e.constraint, e.symmetric]
                    for e in entries]
            print(_table(rows, ["family", "name", "params", "constraint", "symmetric"]), file=out)
        return EXIT_OK
    field = _field(args)
    params = _params(args.param)
    pres = instantiate(args.family, ParamSet.from_pairs(params), field)
    print(format_presentation(pres, comment=ENTRIES[args.family].display + " " + _identity(args.family, params)),
          end="", file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    selector = "all" if args.char == "all" else f"char{args.char}"
    rows = verify_paper_tables(selector, ReportConfig(seed=args.seed, samples=args.samples))
    failed = any(r.status == "FAIL" for r in rows)
    if args.json:
        print(_dump({"selector": selector, "rows": rows_to_json(rows), "failed": failed}), file=out)
    else:
        table = [[r.table, r.algebra, r.field, r.invariant, _fmt(r.expected), _fmt(r.got), r.status]
                 for r in rows]
        print(_table(table, ["table", "algebra", "field", "invariant", "expected", "got", "status"]), file=out)
        for r in rows:
            print(r.line(), file=out)
    return EXIT_VERIFY if failed else EXIT_OK


COMMANDS = {"build": _cmd_build, "invariants": _cmd_invariants, "compare": _cmd_compare,
            "catalog": _cmd_catalog, "verify-paper": _cmd_verify}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except (InputError, PresentationError, CatalogError, FieldError, AlgebraError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except CompletionError as exc:
        print(f"guard: {exc}", file=err)
        return EXIT_GUARD


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
