"""Suite runner, JSON verification reports and the poset cache format.

Report layout (``schema_version`` 1)::

    {
      "schema_version": 1,
      "params": {"n": 3, "q": 2, "phi": "3/2"},
      "suite": "all",
      "checks": [{"id", "paper_anchor", "status", "witness", "certificates",
                  "assertions", "elapsed_ms"}, ...],
      "decomposition": {"endpoints": [{"r", "mult", "d", "leonard": {...}}]},
      "splits": {"DD": [dim U_0, ...], ...},
      "summary": {"pass": ..., "fail": ..., "elapsed_ms": ...}
    }

Non-integer rationals are written as "a/b" strings, integers as JSON ints;
no floats appear outside the ``elapsed_ms`` fields.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .geometry import DEFAULT_MAX_VERTICES, Subspace, SubspacePoset, VertexCapExceeded, count_vertices, enumerate_poset
from .gfq import FieldCtx, field_for_order
from .operators import OperatorSet
from .qscalar import Params, q_binomial
from .relcheck import CheckResult, check_qpoly, run_core
from .splitdec import run_splits
from .tmod import run_modules

SCHEMA_VERSION = 1
CACHE_VERSION = 1
SUITES = ("core", "qpoly", "modules", "splits", "all")
TIMING_KEYS = ("elapsed_ms",)


def to_json_value(x):
    """Exact JSON encoding: ints stay ints, other rationals become "a/b".

    Floats pass through unchanged; only timing fields carry them.
    """
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (int, float)):
        return x
    if isinstance(x, dict):
        return {k: to_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_json_value(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__} exactly")


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


# poset cache ------------------------------------------------------------------------


def poset_to_cache(poset: SubspacePoset) -> dict:
    f = poset.field
    return {
        "version": CACHE_VERSION,
        "p": f.p,
        "k": f.k,
        "modulus": list(f.modulus),
        "n": poset.n,
        "vertices": [{"dim": v.dim, "rows": [list(r) for r in v.rows]} for v in poset.vertices],
    }


def dump_cache(poset: SubspacePoset) -> str:
    data = poset_to_cache(poset)
    vertices = data.pop("vertices")
    head = json.dumps(data)[:-1]
    lines = [json.dumps(v, separators=(",", ":")) for v in vertices]
    return head + ', "vertices": [\n' + ",\n".join(lines) + "\n]}\n"


def save_cache(poset: SubspacePoset, path) -> None:
    Path(path).write_text(dump_cache(poset), encoding="utf-8")


def poset_from_cache(data: dict) -> SubspacePoset:
    if data.get("version") != CACHE_VERSION:
        raise ValueError(f"unsupported cache version {data.get('version')!r}")
    field_ctx = FieldCtx(data["p"], data["k"], data["modulus"])
    n = data["n"]
    vertices = [Subspace(v["dim"], tuple(tuple(r) for r in v["rows"])) for v in data["vertices"]]
    for v in vertices:
        if len(v.rows) != v.dim or any(len(r) != n for r in v.rows):
            raise ValueError(f"malformed cache vertex {v}")
    if len(vertices) != count_vertices(n, field_ctx.q):
        raise ValueError(f"cache lists {len(vertices)} vertices, expected {count_vertices(n, field_ctx.q)}")
    poset = SubspacePoset(n, field_ctx, vertices)
    for k in range(n + 1):
        if len(poset.dim_blocks[k]) != q_binomial(n, k, field_ctx.q):
            raise ValueError(f"cache has the wrong number of dimension-{k} vertices")
    return poset


def load_cache(path) -> SubspacePoset:
    return poset_from_cache(json.loads(Path(path).read_text(encoding="utf-8")))


def obtain_poset(n: int, q: int, cache: Optional[str] = None, max_vertices: int = DEFAULT_MAX_VERTICES) -> SubspacePoset:
    """Load the poset from ``cache`` when it exists, otherwise enumerate (and write it)."""
    if count_vertices(n, q) > max_vertices:
        raise VertexCapExceeded(f"L_{n}({q}) has {count_vertices(n, q)} vertices, cap is {max_vertices}")
    if cache and Path(cache).exists():
        poset = load_cache(cache)
        if (poset.n, poset.q) != (n, q):
            raise ValueError(f"cache {cache} holds L_{poset.n}({poset.q}), not L_{n}({q})")
        return poset
    poset = enumerate_poset(n, field_for_order(q), max_vertices)
    if cache:
        save_cache(poset, cache)
    return poset


# suites --------------------------------------------------------------------------


@dataclass
class SuiteRun:
    params: Params
    suite: str
    results: list[CheckResult] = field(default_factory=list)
    endpoints: list[dict] = field(default_factory=list)
    splits: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]


def run_suite(ops: OperatorSet, suite: str = "all") -> SuiteRun:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    run = SuiteRun(ops.params, suite)
    start = time.perf_counter()
    if suite in ("core", "all"):
        run.results += run_core(ops)
    if suite in ("qpoly", "all"):
        run.results.append(check_qpoly(ops))
    if suite in ("modules", "all"):
        _, records, results = run_modules(ops)
        run.results += results
        run.endpoints = [r.as_dict() for r in records]
    if suite in ("splits", "all"):
        decs, results = run_splits(ops)
        run.results += results
        run.splits = {v: [len(piece) for piece in d.pieces] for v, d in decs.items()}
    run.elapsed = time.perf_counter() - start
    return run


def build_report(run: SuiteRun) -> dict:
    p = run.params
    checks = [
        {
            "id": r.id,
            "paper_anchor": r.paper_anchor,
            "status": r.status,
            "witness": r.witness,
            "certificates": list(r.certificates),
            "assertions": r.assertions,
            "elapsed_ms": round(r.elapsed * 1000, 3),
        }
        for r in run.results
    ]
    n_pass = sum(r.passed for r in run.results)
    report = {
        "schema_version": SCHEMA_VERSION,
        "params": {"n": p.n, "q": p.q, "phi": p.phi},
        "suite": run.suite,
        "checks": checks,
        "decomposition": {"endpoints": run.endpoints},
        "splits": run.splits,
        "summary": {"pass": n_pass, "fail": len(run.results) - n_pass, "elapsed_ms": round(run.elapsed * 1000, 3)},
    }
    return to_json_value(report)


def dumps_report(report: dict) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def strip_timing(report):
    """Copy of a report with every timing field removed."""
    if isinstance(report, dict):
        return {k: strip_timing(v) for k, v in report.items() if k not in TIMING_KEYS}
    if isinstance(report, list):
        return [strip_timing(v) for v in report]
    return report


def verify(n: int, q: int, phi, suite: str = "all", cache=None, max_vertices=DEFAULT_MAX_VERTICES) -> dict:
    """Enumerate (or load), build operators, run a suite and return its report."""
    params = Params(n, q, parse_rational(phi))
    poset = obtain_poset(n, q, cache, max_vertices)
    ops = OperatorSet(poset, params)
    return build_report(run_suite(ops, suite))
