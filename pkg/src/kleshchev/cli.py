"""Command-line front end.

    kleshchev crystal --e 3 --charge 0,1 --n 4 --format dot
    kleshchev decomp --e 2 --charge 0 --n 5 --format csv
    kleshchev verify --e 2 --charge 0 --n 6

Exit status: 0 when every check passes, 1 when violations were found, 2 on
usage or resource errors.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import export
from .branching import PROXY_NOTE, branch_simple
from .cache import CacheIntegrityError, cached_basis
from .canonical import ConsistencyError, decomposition_matrix
from .combinatorics import BOTTOM_UP, TOP_DOWN, Multicharge
from .crystal import ResourceCapExceeded, check_axioms, count_paths, generate_crystal, kleshchev_multipartitions
from .suites import run_all

SUBCOMMANDS = ("crystal", "canonical", "decomp", "branch", "verify", "paths")
FORMATS = ("json", "dot", "csv", "table")
DEFAULT_FORMAT = {"crystal": "dot", "canonical": "json", "decomp": "csv",
                  "branch": "table", "verify": "table", "paths": "table"}
N_LIMIT = 12
VERTEX_CAP = 10**6


class UsageError(ValueError):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


@dataclass(frozen=True)
class Invocation:
    subcommand: str
    e: int
    charge: tuple[int, ...]
    n_max: int
    format: str
    convention: str = BOTTOM_UP
    cache_dir: str | None = None
    vertex_cap: int = VERTEX_CAP
    output: str | None = None

    @property
    def multicharge(self) -> Multicharge:
        return Multicharge(self.e, self.charge, self.convention)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(self.prog, message)


def _parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kleshchev", description="Crystals, canonical bases and branching checks.")
    p.add_argument("subcommand", nargs="?", choices=SUBCOMMANDS, default="verify")
    p.add_argument("--e", type=str, default="2")
    p.add_argument("--charge", default="0", help="comma-separated multicharge, e.g. 0,1")
    p.add_argument("--n", "--n-max", dest="n", type=str, default="4")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--convention", choices=(BOTTOM_UP, TOP_DOWN), default=BOTTOM_UP)
    p.add_argument("--cache-dir")
    p.add_argument("--vertex-cap", type=str, default=str(VERTEX_CAP))
    p.add_argument("--n-limit", type=str, default=str(N_LIMIT), help="override the desk-scale size guard")
    p.add_argument("--output", "-o", help="write the artifact here instead of stdout")
    return p


def _int(flag: str, text: str, low: int) -> int:
    try:
        val = int(text)
    except ValueError:
        raise UsageError(flag, f"expected an integer, got {text!r}") from None
    if val < low:
        raise UsageError(flag, f"must be >= {low}, got {val}")
    return val


def parse_invocation(argv: list[str]) -> Invocation:
    ns = _parser().parse_args(argv)
    e = _int("--e", ns.e, 2)
    try:
        raw = tuple(int(x) for x in ns.charge.split(","))
    except ValueError:
        raise UsageError("--charge", f"expected comma-separated integers, got {ns.charge!r}") from None
    n = _int("--n", ns.n, 0)
    limit = _int("--n-limit", ns.n_limit, 0)
    if n > limit:
        raise UsageError("--n", f"{n} exceeds the size guard {limit} (raise it with --n-limit)")
    cap = _int("--vertex-cap", ns.vertex_cap, 1)
    return Invocation(ns.subcommand, e, tuple(g % e for g in raw), n,
                      ns.format or DEFAULT_FORMAT[ns.subcommand], ns.convention, ns.cache_dir, cap, ns.output)


def _emit_rows(inv: Invocation, rows: list[dict], extra: dict | None = None) -> str:
    charge = inv.multicharge
    if inv.format == "csv":
        return export.csv_text(rows, header=export.provenance_line(charge))
    if inv.format == "json":
        return export.dumps({"provenance": export.provenance(charge), **(extra or {}), "rows": rows})
    return f"# {export.provenance_line(charge)}\n" + export.table(rows)


def _run_crystal(inv: Invocation) -> tuple[str, int]:
    graph = generate_crystal(inv.multicharge, inv.n_max, inv.vertex_cap)
    bad = check_axioms(graph)
    if inv.format == "dot":
        text = export.crystal_dot(graph)
    else:
        rows = export.crystal_listing(graph)
        if inv.format in ("table", "csv"):
            rows = [{k: (v if k in ("label", "size") else ",".join(map(str, v))) for k, v in r.items()
                     if k != "vertex"} for r in rows]
        text = _emit_rows(inv, rows, {"violations": [v.to_json() for v in bad]})
    return text, 1 if bad else 0


def _run_canonical(inv: Invocation) -> tuple[str, int]:
    charge = inv.multicharge
    basis = cached_basis(charge, inv.n_max, inv.cache_dir)
    bad = decomposition_matrix(charge, inv.n_max).violations()
    if inv.format == "json":
        return export.dumps(export.basis_json(charge, inv.n_max, basis)), 1 if bad else 0
    rows = [{"label": str(el.label), "G": str(el.vector)} for el in basis]
    return _emit_rows(inv, rows), 1 if bad else 0


def _run_decomp(inv: Invocation) -> tuple[str, int]:
    charge = inv.multicharge
    cached_basis(charge, inv.n_max, inv.cache_dir)
    mat = decomposition_matrix(charge, inv.n_max)
    bad = mat.violations()
    if inv.format == "json":
        text = export.dumps(export.decomposition_json(mat))
    elif inv.format == "csv":
        text = export.decomposition_csv(mat)
    else:
        columns, rows = export.decomposition_rows(mat)
        text = f"# {export.provenance_line(charge)} n={mat.n}\n" + export.table(rows, columns)
    return text, 1 if bad else 0


def _run_branch(inv: Invocation) -> tuple[str, int]:
    charge = inv.multicharge
    for k in range(inv.n_max + 1):
        cached_basis(charge, k, inv.cache_dir)
    reports = [branch_simple(lam, i, charge)
               for lam in kleshchev_multipartitions(charge, inv.n_max) for i in range(charge.e)]
    rows = [r.row() for r in reports]
    failed = any(not r.passed for r in reports)
    return _emit_rows(inv, rows, {"note": PROXY_NOTE}), 1 if failed else 0


def _run_verify(inv: Invocation) -> tuple[str, int]:
    charge = inv.multicharge
    cached_basis(charge, inv.n_max, inv.cache_dir)
    results = run_all(charge, inv.n_max)
    rows = [r.row() for r in results]
    failed = [r for r in results if not r.passed]
    if inv.format == "json":
        extra = {"violations": {r.name: [v.to_json() for v in r.violations] for r in failed}}
        text = _emit_rows(inv, rows, extra)
    else:
        text = _emit_rows(inv, rows)
        if inv.format == "table":
            for r in failed:
                text += f"\n{r.name}:\n" + "".join(f"  {v}\n" for v in r.violations[:20])
            text += f"\n{len(results) - len(failed)}/{len(results)} suites pass\n"
    return text, 1 if failed else 0


def _run_paths(inv: Invocation) -> tuple[str, int]:
    graph = generate_crystal(inv.multicharge, inv.n_max, inv.vertex_cap)
    rows = [{"n": lam.size, "lambda": str(lam), "paths": count_paths(graph, lam)} for lam in graph.vertices]
    return _emit_rows(inv, rows), 0


RUNNERS = {"crystal": _run_crystal, "canonical": _run_canonical, "decomp": _run_decomp,
           "branch": _run_branch, "verify": _run_verify, "paths": _run_paths}


def run(inv: Invocation, out=None) -> int:
    out = out or sys.stdout
    err = sys.stderr
    if inv.format == "dot" and inv.subcommand != "crystal":
        print(f"--format: dot is only available for crystal", file=err)
        return 2
    try:
        text, status = RUNNERS[inv.subcommand](inv)
    except (ResourceCapExceeded, CacheIntegrityError, OSError) as exc:
        print(f"error: {exc}", file=err)
        return 2
    except ConsistencyError as exc:
        print(f"violation: {exc}", file=err)
        return 1
    if inv.output:
        with open(inv.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return status


def main(argv: list[str] | None = None) -> int:
    try:
        inv = parse_invocation(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    return run(inv)


if __name__ == "__main__":
    sys.exit(main())
