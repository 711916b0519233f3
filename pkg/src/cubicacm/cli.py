"""Command-line front end.

Every command prints JSON by default (keys sorted, two-space indent).
``--format tsv`` prints a header row and tab-separated values instead.
Exit status: 0 on success, 1 when ``verify`` reports a failure, 2 on a
usage error (bad arguments, unparsable class, unknown check id, or a
request outside a command's domain).
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from typing import Any, Dict, Iterable, List, Optional, Sequence, TextIO

from . import acm, catalog, census, cohomology, tables, weyl
from .lattice import H, DivisorClass, degree, dot
from .parser import ParseError, format_class, format_label, parse_class


class UsageError(Exception):
    pass


def _class_arg(text: str) -> DivisorClass:
    try:
        return parse_class(text)
    except ParseError as exc:
        raise UsageError(f"cannot parse class: {exc}\n{exc.caret()}") from exc


def _twist_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        a, b = int(lo), int(hi if sep else lo)
    except ValueError:
        raise UsageError(f"bad twist range {text!r}; expected a..b") from None
    if a > b:
        raise UsageError(f"empty twist range {text!r}")
    return range(a, b + 1)


def _jsonable(x: Any) -> Any:
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: _jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (list, tuple)):
        return ",".join(_cell(v) for v in x)
    return str(x)


def emit(payload: Dict[str, Any], fmt: str, out: TextIO,
         rows_key: Optional[str] = None, columns: Sequence[str] = ()) -> None:
    if fmt == "tsv":
        if rows_key is None:
            columns = sorted(payload)
            rows: Iterable[Dict[str, Any]] = [payload]
        else:
            rows = payload[rows_key]
        out.write("\t".join(columns) + "\n")
        for row in rows:
            out.write("\t".join(_cell(row.get(c)) for c in columns) + "\n")
    else:
        out.write(json.dumps(_jsonable(payload), sort_keys=True, indent=2) + "\n")


def _describe(d: DivisorClass) -> Dict[str, Any]:
    return {"class": list(d), "canonical": format_class(d), "label": format_label(d)}


# -- commands ----------------------------------------------------------------------

def cmd_info(args, out) -> int:
    d = _class_arg(args.expr)
    hv = cohomology.h_vector(d)
    pos = cohomology.positivity(d)
    payload = _describe(d)
    payload.update(
        degree=degree(d), self_int=dot(d, d), genus=cohomology.genus(d),
        chi=cohomology.euler_char(d), h0=hv.h0, h1=hv.h1, h2=hv.h2,
        effective=pos.effective, nef=pos.nef, ample=pos.ample,
        membership=catalog.classify_membership(d),
    )
    emit(payload, args.format, out)
    return 0


def cmd_cohomology(args, out) -> int:
    d = _class_arg(args.expr)
    rows = []
    for t in _twist_range(args.twists):
        hv = cohomology.h_vector(d + t * H)
        rows.append({"t": t, "h0": hv.h0, "h1": hv.h1, "h2": hv.h2})
    payload = _describe(d)
    payload["rows"] = rows
    emit(payload, args.format, out, "rows", ("t", "h0", "h1", "h2"))
    return 0


def cmd_acm(args, out) -> int:
    d = _class_arg(args.expr)
    lo, hi = acm.acm_window(d)
    nonzero = []
    for t in range(lo, hi + 1):
        h1 = cohomology.h_vector(d + t * H).h1
        if h1:
            nonzero.append({"t": t, "h1": h1})
    payload = _describe(d)
    payload.update(acm=not nonzero, window=[lo, hi], nonzero_h1=nonzero)
    emit(payload, args.format, out)
    return 0


def cmd_classify(args, out) -> int:
    c1 = _class_arg(args.c1)
    t, n1, n2, rt = acm.normalize_chern(c1, args.c2)
    payload = {
        "c1": list(c1), "c2": args.c2, "twist": t,
        "normalized_c1": list(n1), "normalized_c2": n2,
        "type": rt.label if rt is not None else "none",
        "record": rt,
    }
    emit(payload, args.format, out)
    return 0


def cmd_extension(args, out) -> int:
    m, n = _class_arg(args.m), _class_arg(args.n)
    try:
        rec = acm.extension_profile(m, n, args.t)
    except acm.NoExtensionError as exc:
        raise UsageError(str(exc)) from exc
    emit(_jsonable(rec), args.format, out)
    return 0


_CENSUS_COLUMNS = {
    "families": ("type", "c1_pattern", "c2", "family_count", "family_dim",
                 "printed_dims", "stability"),
    "extensions": ("type", "m", "n", "product", "h1", "pairs_per_c1",
                   "printed_count", "stability"),
    "appendix": ("table", "value", "family", "condition", "printed_count",
                 "computed_count"),
    "maps": ("map", "description", "domain_size", "codomain_size",
             "fiber_sizes", "expected_fiber", "ok"),
}


def _census_rows(table: str) -> List[Dict[str, Any]]:
    if table == "families":
        return [{
            "type": r.type_label, "c1_pattern": r.c1_pattern, "c2": r.c2,
            "family_count": r.family_count, "family_dim": r.family_dim,
            "printed_dims": [p.dim for p in r.printed_rows],
            "stability": ["+".join(tags) for tags in r.stability_tags],
        } for r in census.family_census()]
    if table == "extensions":
        rows = []
        for row in tables.CENSUS_EXTENSIONS:
            c = census.count_extensions(row)
            rows.append({
                "type": row.type_label, "m": row.m_pool, "n": row.n_pool,
                "product": row.product, "h1": list(c.ext_dims),
                "pairs_per_c1": list(c.pair_counts), "printed_count": row.count,
                "stability": row.stability,
            })
        return rows
    if table == "appendix":
        rows = []
        for table_id in tables.DISTRIBUTIONS:
            for row, found in census.distribution_rows(table_id):
                rows.append({
                    "table": table_id, "value": row.value, "family": row.family,
                    "condition": row.condition, "printed_count": row.count,
                    "computed_count": found.get(row.value, 0),
                })
        return rows
    rows = []
    for spec in tables.MAPS:
        rep = census.fiber_check(spec.map_id)
        rows.append({
            "map": spec.map_id, "description": spec.description,
            "domain_size": rep.domain_size, "codomain_size": rep.codomain_size,
            "fiber_sizes": list(rep.fiber_sizes), "expected_fiber": rep.expected_fiber,
            "ok": rep.ok,
        })
    return rows


def cmd_census(args, out) -> int:
    rows = _census_rows(args.table)
    emit({"table": args.table, "rows": rows}, args.format, out, "rows",
         _CENSUS_COLUMNS[args.table])
    return 0


def cmd_orbit(args, out) -> int:
    d = _class_arg(args.expr)
    orb = sorted(weyl.orbit(d))
    payload = _describe(d)
    payload["size"] = len(orb)
    if args.list:
        payload["elements"] = [list(x) for x in orb]
    if args.format == "tsv" and args.list:
        rows = [{"class": format_class(x), "coords": list(x)} for x in orb]
        emit({"rows": rows}, "tsv", out, "rows", ("class", "coords"))
    else:
        emit(payload, args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    known = set(census.check_ids())
    unknown = [c for c in args.check or () if c not in known]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}; "
                         f"see 'verify --list' for the available ids")
    if args.list:
        emit({"checks": sorted(known)}, "json", out)
        return 0
    results = census.verify_all(args.check or None)
    checks = [{"id": r.check_id, "status": r.status, "detail": r.detail,
               "counterexample": r.counterexample} for r in results]
    failed = sum(not r.passed for r in results)
    payload = {"checks": checks, "total": len(results),
               "passed": len(results) - failed, "failed": failed}
    emit(payload, args.format, out, "checks", ("id", "status", "detail", "counterexample"))
    return 0 if failed == 0 else 1


# -- argument parsing ------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubicacm",
        description="Divisor classes and rank-two aCM bundles on a smooth cubic surface.",
        epilog="Quote expressions containing ^, [ or |, e.g. 'L^[2]'. "
               "Pass negative twist ranges as --twists=-2..2.")
    p.add_argument("--cache-dir", help="directory for the cached Weyl group closure")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.set_defaults(func=fn)
        return sp

    sp = command("info", cmd_info, "invariants, cohomology and positivity of a class")
    sp.add_argument("expr")
    sp = command("cohomology", cmd_cohomology, "(h0, h1, h2) over a range of twists")
    sp.add_argument("expr")
    sp.add_argument("--twists", default="0..0", help="inclusive range a..b (default 0..0)")
    sp = command("acm", cmd_acm, "whether the line bundle is aCM")
    sp.add_argument("expr")
    sp = command("classify", cmd_classify, "resolution type from Chern classes")
    sp.add_argument("--c1", required=True)
    sp.add_argument("--c2", required=True, type=int)
    sp = command("extension", cmd_extension, "profile of a nonsplit extension of N by M(t)")
    sp.add_argument("--m", required=True)
    sp.add_argument("--n", required=True)
    sp.add_argument("--t", type=int, default=0)
    sp = command("census", cmd_census, "dump a census table")
    sp.add_argument("--table", choices=tuple(_CENSUS_COLUMNS), default="families")
    sp = command("orbit", cmd_orbit, "Weyl group orbit of a class")
    sp.add_argument("expr")
    sp.add_argument("--list", action="store_true", help="include the orbit elements")
    sp = command("verify", cmd_verify, "run the verification checks")
    sp.add_argument("--check", action="append", metavar="ID",
                    help="run only this check (repeatable)")
    sp.add_argument("--list", action="store_true", help="list check ids and exit")
    return p


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
         err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.cache_dir:
        weyl.DEFAULT_CACHE_DIR = args.cache_dir
    try:
        return args.func(args, out)
    except (UsageError, weyl.DomainError) as exc:
        err.write(f"cubicacm {args.command}: {exc}\n")
        return 2


run = main

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
