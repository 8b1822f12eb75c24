"""Report assembly, serialization, and result caching for the CLI.

Reports are plain dicts with a fixed construction order and a
``schema_version`` field; JSON output is byte-deterministic given the query,
seed, and limits (worker count never appears in a report).  CSV is available
for tabular bodies (anything carrying ``rows``), text is a readable summary.

The cache maps a content hash of (schema version, command, query, seed,
limits, format) to the exact serialized payload, so cache hits are
byte-identical to recomputation by construction; writes go through a
temporary file and an atomic rename.
"""
from __future__ import annotations

import csv
import hashlib
import io
import json
import os
import tempfile
from dataclasses import dataclass
from itertools import combinations_with_replacement
from pathlib import Path

from .class_metrics import ClassMetrics, MinWordResult, compute_class_metrics, stability_bound
from .constructions import ClaimReport
from .orbits import FiberSpec, ScanRow, SearchLimits, count_orbits_in_fiber, stable_length_scan
from .perms import CycleType, Perm, all_cycle_types, class_parity, format_cycle_type, validate_cycle_type
from .words import Factorization, TypeVector

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class RunConfig:
    """Per-invocation knobs; only seed and limits influence report content."""

    max_states: int = 10_000_000
    max_fiber: int = 10_000_000
    workers: int = 1
    cache_dir: str | None = None
    output_format: str = "json"
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_states < 1 or self.max_fiber < 1 or self.workers < 1:
            raise ValueError("limits and worker count must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise ValueError(f"unknown output format {self.output_format!r}")

    @property
    def limits(self) -> SearchLimits:
        return SearchLimits(max_states=self.max_states, max_fiber=self.max_fiber)


# -- serialization helpers -----------------------------------------------------

def word_to_list(word: Factorization) -> list[str]:
    return [str(f) for f in word.factors]


def moves_to_list(moves) -> list[str] | None:
    if moves is None:
        return None
    return [str(m) for m in moves]


def make_report(command: str, query: dict, cfg: RunConfig, body: dict) -> dict:
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "query": query,
        "seed": cfg.seed,
        "limits": {"max_states": cfg.max_states, "max_fiber": cfg.max_fiber},
    }
    report.update(body)
    return report


def to_json(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=True) + "\n"


def to_csv(report: dict) -> str:
    rows = report.get("rows")
    if not isinstance(rows, list) or not rows or not isinstance(rows[0], dict):
        raise ValueError("this report has no tabular rows; use --format json")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    return buf.getvalue()


def _text_value(value) -> str:
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def to_text(report: dict) -> str:
    lines = []
    rows = None
    for key, value in report.items():
        if key == "rows" and isinstance(value, list):
            rows = value
            continue
        if isinstance(value, dict):
            for k2, v2 in value.items():
                lines.append(f"{key}.{k2}: {_text_value(v2)}")
        else:
            lines.append(f"{key}: {_text_value(value)}")
    if rows is not None:
        for row in rows:
            lines.append("  " + "  ".join(f"{k}={_text_value(v)}" for k, v in row.items()))
    return "\n".join(lines) + "\n"


def emit(report: dict, cfg: RunConfig) -> str:
    if cfg.output_format == "json":
        return to_json(report)
    if cfg.output_format == "csv":
        return to_csv(report)
    return to_text(report)


# -- caching ---------------------------------------------------------------------

def cache_key(command: str, query: dict, cfg: RunConfig) -> str:
    material = json.dumps({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "query": query,
        "seed": cfg.seed,
        "limits": [cfg.max_states, cfg.max_fiber],
        "format": cfg.output_format,
    }, sort_keys=True)
    return hashlib.sha256(material.encode("utf-8")).hexdigest()


def cache_get(cfg: RunConfig, key: str) -> tuple[str, int] | None:
    if cfg.cache_dir is None:
        return None
    path = Path(cfg.cache_dir) / f"{key}.json"
    try:
        entry = json.loads(path.read_text(encoding="utf-8"))
        return entry["payload"], int(entry["exit_code"])
    except (OSError, ValueError, KeyError):
        return None


def cache_put(cfg: RunConfig, key: str, payload: str, exit_code: int) -> None:
    if cfg.cache_dir is None:
        return
    directory = Path(cfg.cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    data = json.dumps({"exit_code": exit_code, "payload": payload})
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(data)
        os.replace(tmp, directory / f"{key}.json")
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- class info -------------------------------------------------------------------

def _min_word_value(result: MinWordResult | None, not_applicable: str | None):
    if not_applicable is not None:
        return f"not applicable ({not_applicable})"
    assert result is not None
    if result.known:
        return result.length
    return f"unknown (limit {result.limit} reached)"


def class_info_body(metrics: ClassMetrics) -> dict:
    even = metrics.parity == "even"
    body = {
        "d": metrics.degree,
        "cycle_type": list(metrics.cycle_type),
        "n_C": metrics.order,
        "k_C": metrics.size,
        "f_C": metrics.fixed_points,
        "parity": metrics.parity,
        "generates_full_group": metrics.generates_full,
        "m_C": _min_word_value(metrics.min_word, "even class" if even else None),
        "m_C_constrained": _min_word_value(
            metrics.min_word_fixing,
            "even class" if even else (
                None if metrics.min_word_fixing is not None else "f_C < 2 or degree < 4")),
    }
    try:
        body["N_C_bound"] = stability_bound(metrics)
    except ValueError as exc:
        body["N_C_bound"] = f"not applicable ({exc})"
    witness = None
    if metrics.min_word_fixing is not None and metrics.min_word_fixing.known:
        witness = metrics.min_word_fixing.witness
    elif metrics.min_word is not None and metrics.min_word.known:
        witness = metrics.min_word.witness
    body["witness"] = [str(p) for p in witness] if witness is not None else None
    if metrics.m_values_differ:
        body["note"] = "m_C and its anchored variant differ; constructions use the anchored witness"
    return body


def class_info_exit_code(body: dict) -> int:
    unknown = any(isinstance(body[k], str) and body[k].startswith("unknown")
                  for k in ("m_C", "m_C_constrained"))
    return 2 if unknown else 0


# -- scans -----------------------------------------------------------------------

def scan_rows_to_dicts(rows: list[ScanRow]) -> list[dict]:
    return [{
        "n": r.n,
        "fiber_size": r.fiber_size,
        "orbits": r.orbit_count,
        "complete": r.complete,
    } for r in rows]


# -- claim reports -----------------------------------------------------------------

def claim_report_body(report: ClaimReport, include_certificates: bool = True) -> dict:
    rows = []
    for row in report.rows:
        entry = {
            "check": row.name,
            "expected": row.expected,
            "status": row.status,
            "certificate_moves": len(row.moves) if row.moves is not None else None,
            "detail": row.detail,
        }
        if include_certificates:
            entry["certificate"] = moves_to_list(row.moves)
        rows.append(entry)
    return {
        "claim": report.claim,
        "summary": report.summary,
        "falsified": report.falsified,
        "complete": report.complete,
        "rows": rows,
    }


def claim_exit_code(report: ClaimReport) -> int:
    if report.falsified:
        return 1
    if report.all_unknown:
        return 2
    return 0


# -- component counting --------------------------------------------------------------

@dataclass(frozen=True)
class ComponentQuery:
    """How to count irreducible pieces of the space of degree-d coverings with
    b branch points: words of length b with identity product, grouped by move
    orbits, optionally quotiented by simultaneous conjugation, optionally
    restricted to transitive or full-symmetric monodromy."""

    degree: int
    length: int
    type_vector: TypeVector | None = None
    galois_full: bool = False
    transitive_only: bool = True
    conjugation_quotient: bool = True

    def __post_init__(self) -> None:
        if self.degree < 2 or self.length < 1:
            raise ValueError("need degree >= 2 and length >= 1")
        if self.type_vector is not None:
            self.type_vector.check_degree(self.degree)
            if self.type_vector.total() != self.length:
                raise ValueError(
                    f"type vector totals {self.type_vector.total()}, expected length {self.length}")


def _all_type_vectors(degree: int, length: int) -> list[TypeVector]:
    classes = [ct for ct in all_cycle_types(degree) if ct != (1,) * degree]
    out = []
    for combo in combinations_with_replacement(classes, length):
        counts: dict[CycleType, int] = {}
        for ct in combo:
            counts[ct] = counts.get(ct, 0) + 1
        out.append(TypeVector.from_counts(counts))
    return sorted(out, key=str)


def count_components(query: ComponentQuery, limits: SearchLimits) -> dict:
    """Per-type component counts plus totals.

    With ``galois_full`` the count is of move orbits with full symmetric
    monodromy (no conjugation quotient unless asked); otherwise the default
    query quotients by conjugation, matching components of the full covering
    space.
    """
    if query.type_vector is not None:
        types = [query.type_vector]
    else:
        types = _all_type_vectors(query.degree, query.length)
    constraint = ("full_group" if query.galois_full
                  else "transitive" if query.transitive_only else "none")
    ident = Perm.identity(query.degree)
    rows = []
    total = 0
    any_complete = False
    all_unknown = True
    for tv in types:
        if sum(class_parity(ct) * n for ct, n in tv.counts) % 2 != 0:
            rows.append({"type": str(tv), "fiber_size": 0, "components": 0, "complete": True})
            any_complete = True
            all_unknown = False
            continue
        spec = FiberSpec(query.degree, tv, ident, constraint, query.conjugation_quotient)
        report = count_orbits_in_fiber(spec, limits)
        rows.append({
            "type": str(tv),
            "fiber_size": report.fiber_size if report.complete else None,
            "components": report.orbit_count,
            "complete": report.complete,
        })
        if report.complete:
            any_complete = True
            all_unknown = False
            total += report.orbit_count or 0
    body = {
        "convention": {
            "product": "identity",
            "constraint": constraint,
            "conjugation_quotient": query.conjugation_quotient,
        },
        "total_components": total if any_complete else None,
        "all_rows_unknown": all_unknown,
        "rows": rows,
    }
    return body


def components_exit_code(body: dict) -> int:
    return 2 if body["all_rows_unknown"] else 0


# -- stability report ----------------------------------------------------------------

def theorem_report(degree: int, cycle_type: CycleType, limits: SearchLimits,
                   scan_from: int = 2, scan_to: int = 8,
                   search_limit: int = 8) -> dict:
    """Class metrics, the stability bound, and an orbit-count scan; any
    complete scan row at or past the bound with more than one orbit is a
    falsification (none is expected)."""
    ct = validate_cycle_type(cycle_type, degree)
    metrics = compute_class_metrics(degree, ct, limit=search_limit)
    if metrics.parity != "odd":
        raise ValueError(f"class {format_cycle_type(ct)} is even; the stability bound needs an odd class")
    if metrics.fixed_points < 2:
        raise ValueError(f"class {format_cycle_type(ct)} has f_C = {metrics.fixed_points} < 2")
    bound = stability_bound(metrics)
    rows = stable_length_scan(degree, ct, Perm.identity(degree), scan_from, scan_to, limits)
    falsifications = [r.n for r in rows
                      if r.complete and r.n >= bound and (r.orbit_count or 0) > 1]
    body = {
        "metrics": class_info_body(metrics),
        "N_C_bound": bound,
        "scan": {"from": scan_from, "to": scan_to, "product": "()"},
        "falsifications": falsifications,
        "falsification_found": bool(falsifications),
        "all_rows_unknown": all(not r.complete for r in rows),
        "rows": scan_rows_to_dicts(rows),
    }
    return body


def theorem_exit_code(body: dict) -> int:
    if body["falsification_found"]:
        return 1
    if body["all_rows_unknown"]:
        return 2
    return 0
