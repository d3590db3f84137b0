"""Seeded domain sampling and batch verification of the identity registry."""

from __future__ import annotations

import ast
import csv
import fnmatch
import json
import math
import operator
import os
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from datetime import datetime, timezone
from functools import lru_cache
from importlib import resources

import numpy as np

from .errors import DomainError, DomainTooThinError, NonConvergedError
from .identities import (
    DEFAULT_THRESHOLD,
    QUAD_THRESHOLD,
    Identity,
    ParamPoint,
    VerificationRecord,
    check,
    registry,
)

REJECTION_FACTOR = 10_000


@dataclass(frozen=True)
class RunConfig:
    seed: int = 42
    samples_per_identity: int | None = None
    series_tol: float = 1e-12
    quad_tol: float = 1e-10
    pass_threshold: float = DEFAULT_THRESHOLD
    quad_threshold: float = QUAD_THRESHOLD
    identity_filter: str | None = None

    def __post_init__(self):
        for name in ("series_tol", "quad_tol", "pass_threshold", "quad_threshold"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.samples_per_identity is not None and self.samples_per_identity < 1:
            raise ValueError("samples_per_identity must be at least 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


# ---------------------------------------------------------------------------
# sampling boxes

_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}
_FUNCS = {"abs": abs, "min": min, "max": max}


def _eval_bound(expr, env: dict) -> float:
    """Evaluate a numeric bound such as ``"a+0.2"`` or ``"-v*c"``."""
    if isinstance(expr, (int, float)):
        return float(expr)

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in env:
            return env[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
            return _FUNCS[node.func.id](*(ev(arg) for arg in node.args))
        raise ValueError(f"unsupported bound expression {expr!r}")

    return ev(ast.parse(expr, mode="eval"))


@lru_cache(maxsize=None)
def load_boxes() -> dict:
    text = resources.files("hypersum").joinpath("data/boxes.json").read_text()
    return json.loads(text)


def box_for(identity_id: str) -> dict:
    try:
        return load_boxes()["identities"][identity_id]
    except KeyError:
        raise KeyError(f"no sampling box configured for {identity_id!r}") from None


def default_samples(identity_id: str) -> int:
    cfg = load_boxes()
    return box_for(identity_id).get("samples", cfg["default_samples"])


def _draw(box: dict, rng: np.random.Generator) -> ParamPoint:
    env: dict = {}
    for name, spec in box.items():
        if isinstance(spec, dict):
            choices = spec["choices"]
            env[name] = float(choices[int(rng.integers(len(choices)))])
        else:
            lo, hi = (_eval_bound(s, env) for s in spec)
            env[name] = float(rng.uniform(lo, hi))
    return ParamPoint(**env)


def _stream(seed: int, identity_id: str, index: int) -> np.random.Generator:
    key = np.random.SeedSequence(seed, spawn_key=(zlib.crc32(identity_id.encode()), index))
    return np.random.Generator(np.random.Philox(key))


@dataclass
class SampleStats:
    rejected: int = 0
    conditional_excluded: int = 0


def sample_domain(identity: Identity, seed: int, n: int, stats: SampleStats | None = None) -> list:
    """Draw ``n`` admissible points for ``identity``.

    Point ``i`` comes from its own Philox stream keyed by (seed, id, i), so
    any subset of indices can be regenerated independently.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    stats = stats if stats is not None else SampleStats()
    box = box_for(identity.id)["box"]
    limit = REJECTION_FACTOR * n
    points = []
    for index in range(n):
        rng = _stream(seed, identity.id, index)
        while True:
            p = _draw(box, rng)
            if identity.domain(p):
                if identity.exclude_conditional and identity.conditional_at(p):
                    stats.conditional_excluded += 1
                else:
                    points.append(p)
                    break
            stats.rejected += 1
            if stats.rejected > limit:
                raise DomainTooThinError(
                    f"{identity.id}: {stats.rejected} rejections before {n} points were accepted"
                )
    return points


# ---------------------------------------------------------------------------
# running


@lru_cache(maxsize=1)
def _by_id() -> dict:
    return {i.id: i for i in registry()}


def select(pattern: str | None) -> list:
    ids = sorted(_by_id())
    if pattern:
        ids = [i for i in ids if fnmatch.fnmatchcase(i, pattern)]
    return [_by_id()[i] for i in ids]


def _task(args) -> VerificationRecord:
    identity_id, index, point, cfg = args
    identity = _by_id()[identity_id]
    p = ParamPoint(**point)
    try:
        return check(
            identity, p, series_tol=cfg.series_tol, quad_tol=cfg.quad_tol,
            pass_threshold=cfg.pass_threshold, quad_threshold=cfg.quad_threshold, index=index,
        )
    except NonConvergedError as exc:
        return _skipped(identity_id, index, point, "skipped_nonconverged", str(exc), exc.terms_used)
    except DomainError as exc:
        return _skipped(identity_id, index, point, "skipped_domain", str(exc))


def _skipped(identity_id, index, point, status, message, terms=None) -> VerificationRecord:
    nan = math.nan
    return VerificationRecord(
        identity_id, index, point, nan, nan, None, nan, nan, None, int(terms or 0), status, message
    )


def worker_count() -> int:
    raw = os.environ.get("HYPERSUM_THREADS")
    if raw is None:
        return 0
    n = int(raw)
    if n < 0:
        raise ValueError("HYPERSUM_THREADS must be >= 0")
    return n


@dataclass
class RunResult:
    config: RunConfig
    records: list
    summary: dict

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.records)


def run(config: RunConfig, workers: int | None = None) -> RunResult:
    """Sample every selected identity, check each point, and summarize."""
    workers = worker_count() if workers is None else workers
    tasks = []
    sampling = {}
    for identity in select(config.identity_filter):
        n = config.samples_per_identity or default_samples(identity.id)
        stats = SampleStats()
        points = sample_domain(identity, config.seed, n, stats)
        conj = sum(_has_conjugate_pair(identity, p) for p in points)
        sampling[identity.id] = {
            "requested": n,
            "rejected": stats.rejected,
            "conditional_excluded": stats.conditional_excluded,
            "conjugate_pair_points": conj,
        }
        tasks.extend((identity.id, i, p.as_dict(), config) for i, p in enumerate(points))
    if workers > 0:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_task, tasks, chunksize=4))
    else:
        records = [_task(t) for t in tasks]
    records.sort(key=lambda r: (r.identity_id, r.index))
    return RunResult(config, records, summarize(records, sampling))


def _has_conjugate_pair(identity: Identity, p: ParamPoint) -> bool:
    from .specfun import ConjugatePair

    if identity.lhs_spec is None:
        return False
    spec = identity.lhs_spec(p)
    return any(isinstance(x, ConjugatePair) for x in spec.numerators + spec.denominators)


def _nanmax(values) -> float | None:
    vals = [v for v in values if v is not None and not math.isnan(v)]
    return max(vals) if vals else None


def summarize(records: list, sampling: dict) -> dict:
    per = {}
    for iid in sorted({r.identity_id for r in records}):
        rs = [r for r in records if r.identity_id == iid]
        counts = {}
        for r in rs:
            counts[r.status] = counts.get(r.status, 0) + 1
        per[iid] = {
            "points": len(rs),
            "max_rel_residual": _nanmax(r.rel_residual for r in rs),
            "max_abs_residual": _nanmax(r.abs_residual for r in rs),
            "max_integral_residual": _nanmax(r.integral_residual for r in rs),
            "status_counts": counts,
            "passed": counts.get("fail", 0) == 0,
            **sampling.get(iid, {}),
        }
    failed = sorted(i for i, s in per.items() if not s["passed"])
    return {
        "identities": len(per),
        "records": len(records),
        "failed_identities": failed,
        "conditional_excluded": sum(s.get("conditional_excluded", 0) for s in per.values()),
        "passed": not failed,
        "per_identity": per,
    }


# ---------------------------------------------------------------------------
# reports


def _fmt(x):
    """17-significant-digit decimal for floats; recurse into containers."""
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return None
        return _Raw(format(x, ".17g"))
    if isinstance(x, dict):
        return {k: _fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_fmt(v) for v in x]
    return x


class _Raw(str):
    """Pre-formatted number text, written unquoted."""


def _dumps(obj) -> str:
    def walk(x, indent):
        pad = "  " * indent
        if isinstance(x, _Raw):
            return str(x)
        if isinstance(x, dict):
            if not x:
                return "{}"
            items = [f'{pad}  {json.dumps(k)}: {walk(v, indent + 1)}' for k, v in x.items()]
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(x, list):
            if not x:
                return "[]"
            items = [f"{pad}  {walk(v, indent + 1)}" for v in x]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        return json.dumps(x)

    return walk(obj, 0) + "\n"


def report_dict(result: RunResult, timestamp: str | None = None) -> dict:
    if timestamp is None:
        timestamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return {
        "timestamp": timestamp,
        "config": asdict(result.config),
        "records": [asdict(r) for r in result.records],
        "summary": result.summary,
    }


def to_json(result: RunResult, timestamp: str | None = None) -> str:
    return _dumps(_fmt(report_dict(result, timestamp)))


def write_json(result: RunResult, path: str, timestamp: str | None = None) -> None:
    with open(path, "w") as fh:
        fh.write(to_json(result, timestamp))


CSV_FIELDS = [f.name for f in fields(VerificationRecord)]


def write_csv(result: RunResult, path: str) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_FIELDS)
        for r in result.records:
            row = []
            for name in CSV_FIELDS:
                val = getattr(r, name)
                if isinstance(val, float):
                    val = format(val, ".17g")
                elif isinstance(val, dict):
                    val = ";".join(f"{k}={v:.17g}" for k, v in val.items())
                elif val is None:
                    val = ""
                row.append(val)
            writer.writerow(row)
