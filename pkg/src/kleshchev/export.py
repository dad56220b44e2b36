"""Text emitters: DOT, CSV, JSON and plain tables."""
from __future__ import annotations

import csv
import io
import json

from . import __version__
from .canonical import CanonicalBasisElement, DecompositionMatrix
from .combinatorics import Multicharge
from .crystal import CrystalGraph


def provenance(charge: Multicharge) -> dict:
    return {
        "engine": f"kleshchev {__version__}",
        "e": charge.e,
        "charge": list(charge.gamma),
        "convention": charge.reading_direction,
    }


def provenance_line(charge: Multicharge) -> str:
    p = provenance(charge)
    return f"{p['engine']} e={p['e']} charge={','.join(map(str, p['charge']))} convention={p['convention']}"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def crystal_dot(graph: CrystalGraph) -> str:
    lines = [f"// {provenance_line(graph.charge)}", "digraph crystal {", "  rankdir=TB;"]
    ids = {lam: f"v{k}" for k, lam in enumerate(graph.vertices)}
    for lam in graph.vertices:
        lines.append(f'  {ids[lam]} [label="{lam}"];')
    for lam in graph.vertices:
        for i in range(graph.charge.e):
            mu = graph.edges.get((lam, i))
            if mu is not None:
                lines.append(f'  {ids[lam]} -> {ids[mu]} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def crystal_listing(graph: CrystalGraph) -> list[dict]:
    return [
        {
            "vertex": lam.to_json(),
            "label": str(lam),
            "size": lam.size,
            "alpha_coeffs": list(graph.weights[lam].alpha_coeffs),
            "wt_pairings": list(graph.weights[lam].pairings()),
            "epsilon": list(graph.eps[lam]),
            "phi": list(graph.phis[lam]),
        }
        for lam in graph.vertices
    ]


def table(rows: list[dict], columns: list[str] | None = None) -> str:
    if not rows:
        return "(no rows)\n"
    columns = columns or list(rows[0])
    cells = [[str(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[k]) for row in cells)) for k, c in enumerate(columns)]
    fmt = lambda vals: "  ".join(v.ljust(w) for v, w in zip(vals, widths)).rstrip()
    out = [fmt(columns), fmt(["-" * w for w in widths])]
    out.extend(fmt(row) for row in cells)
    return "\n".join(out) + "\n"


def csv_text(rows: list[dict], columns: list[str] | None = None, header: str | None = None) -> str:
    buf = io.StringIO()
    if header:
        buf.write(f"# {header}\n")
    columns = columns or (list(rows[0]) if rows else [])
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for r in rows:
        writer.writerow({c: r.get(c, "") for c in columns})
    return buf.getvalue()


def decomposition_rows(mat: DecompositionMatrix, at_one: bool = False) -> tuple[list[str], list[dict]]:
    columns = ["mu"] + [str(lam) for lam in mat.columns]
    rows = []
    for mu in mat.rows:
        row = {"mu": str(mu)}
        for lam in mat.columns:
            row[str(lam)] = mat.at_v1(mu, lam) if at_one else str(mat.entry(mu, lam))
        rows.append(row)
    return columns, rows


def decomposition_csv(mat: DecompositionMatrix) -> str:
    columns, rows = decomposition_rows(mat)
    return csv_text(rows, columns, provenance_line(mat.charge) + f" n={mat.n}")


def decomposition_json(mat: DecompositionMatrix) -> dict:
    return {
        "provenance": provenance(mat.charge),
        "n": mat.n,
        "rows": [mu.to_json() for mu in mat.rows],
        "columns": [lam.to_json() for lam in mat.columns],
        "entries": [[str(mat.entry(mu, lam)) for lam in mat.columns] for mu in mat.rows],
        "entries_at_v1": [[mat.at_v1(mu, lam) for lam in mat.columns] for mu in mat.rows],
    }


def basis_json(charge: Multicharge, n: int, elements: tuple[CanonicalBasisElement, ...]) -> dict:
    return {
        "provenance": provenance(charge),
        "n": n,
        "elements": [
            {"label": el.label.to_json(), "trace": [list(t) for t in el.monomial_trace], "vector": el.vector.to_json()}
            for el in elements
        ],
    }
