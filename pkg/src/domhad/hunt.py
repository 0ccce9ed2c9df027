"""Counterexample campaigns over alpha <= 2 graphs.

Graphs come from the internal generator (complements of triangle-free
graphs) or from a graph6 file. Evaluation is spread over worker processes
but results are merged in input order, and the checkpoint stores only the
number of graphs already merged, so the final report does not depend on the
worker count or on interruptions.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing as mp
import os
import tempfile
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator

from .generate import MAX_GENERATED_N, STRETCH_N, triangle_free_graphs
from .graph import Graph, complement, vertex_connectivity
from .graph6 import Graph6Error, from_graph6, to_graph6
from .invariants import alpha_le_2, max_clique, min_degree
from .minors import DEFAULT_BUDGET
from .pattern import find_induced
from .catalog import catalog
from .theorems import BUDGET, FAIL, NOT_APPLICABLE, PASS, check_target, check_theorem, is_known_theorem

REPORT_SCHEMA = "domhad.hunt-report/1"
CHECKPOINT_SCHEMA = "domhad.hunt-checkpoint/1"
WORKERS_ENV = "DOMHAD_WORKERS"
RAW_TARGETS = ("target:chi", "target:half")


class HuntError(RuntimeError):
    pass


class IngestError(ValueError):
    def __init__(self, path: str, line: int, detail: str):
        self.path = path
        self.line = line
        super().__init__(f"{path}:{line}: {detail}")


# --- graph sources --------------------------------------------------------------


def enumerate_alpha2(n: int, allow_stretch: bool = False) -> Iterator[Graph]:
    """Every alpha <= 2 graph on ``n`` vertices once up to isomorphism, in a fixed order."""
    limit = STRETCH_N if allow_stretch else MAX_GENERATED_N
    if not 1 <= n <= limit:
        raise ValueError(f"internal enumeration covers 1 <= n <= {limit}; use a graph6 file beyond that")
    for tf in triangle_free_graphs(n, allow_stretch=allow_stretch):
        yield complement(tf)


class Ingest:
    """Stream graphs from a graph6 file.

    With ``complement`` each record is replaced by its complement (for
    files of triangle-free graphs). With ``require_alpha2`` graphs with
    alpha > 2 are skipped and counted in ``rejected``. Blank lines are ignored.
    """

    def __init__(self, path: str | os.PathLike, require_alpha2: bool = True, complement: bool = False):
        self.path = str(path)
        self.require_alpha2 = require_alpha2
        self.complement = complement
        self.rejected = 0
        self.read = 0

    def __iter__(self) -> Iterator[Graph]:
        with open(self.path, "rb") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line:
                    continue
                try:
                    g = from_graph6(line)
                except Graph6Error as exc:
                    raise IngestError(self.path, lineno, str(exc)) from None
                self.read += 1
                if self.complement:
                    g = complement(g)
                if self.require_alpha2 and not alpha_le_2(g):
                    self.rejected += 1
                    continue
                yield g


def ingest(path: str | os.PathLike, require_alpha2: bool = True, complement: bool = False) -> Ingest:
    return Ingest(path, require_alpha2, complement)


# --- configuration ------------------------------------------------------------------


@dataclass
class HuntConfig:
    n_min: int = 1
    n_max: int = 7
    predicate: str = "small-n"
    free_of: list[str] = field(default_factory=list)
    omega_range: list[int] | None = None  # inclusive [lo, hi]
    delta_range: list[int] | None = None
    kappa_range: list[int] | None = None
    budget: int = DEFAULT_BUDGET
    input: str | None = None  # graph6 file instead of the generator
    input_complement: bool = False
    allow_stretch: bool = False
    # run settings: not part of the work definition
    workers: int = 1
    checkpoint: str | None = None
    output: str | None = None
    retry: str | None = None
    checkpoint_every: int = 500

    _RUN_FIELDS = ("workers", "checkpoint", "output", "retry", "checkpoint_every")

    def validate(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise HuntError(f"bad n range [{self.n_min}, {self.n_max}]")
        if self.predicate not in RAW_TARGETS and not is_known_theorem(self.predicate):
            raise HuntError(f"unknown predicate {self.predicate!r}")
        for name in self.free_of:
            catalog(name)
        for key in ("omega_range", "delta_range", "kappa_range"):
            r = getattr(self, key)
            if r is not None and (len(r) != 2 or r[0] > r[1]):
                raise HuntError(f"{key} must be [lo, hi] with lo <= hi")
        if self.budget <= 0 or self.workers <= 0 or self.checkpoint_every <= 0:
            raise HuntError("budget, workers and checkpoint_every must be positive")
        if self.input is None:
            limit = STRETCH_N if self.allow_stretch else MAX_GENERATED_N
            if self.n_max > limit:
                raise HuntError(f"n_max={self.n_max} exceeds the internal generator range (<= {limit})")

    def work(self) -> dict:
        """The fields that determine the results."""
        d = asdict(self)
        for k in self._RUN_FIELDS:
            d.pop(k)
        return d

    def hash(self) -> str:
        blob = json.dumps(self.work(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self) -> dict:
        return asdict(self)

    @classmethod
    def from_json(cls, data: dict) -> "HuntConfig":
        known = set(cls.__dataclass_fields__)
        extra = set(data) - known
        if extra:
            raise HuntError(f"unknown config keys: {', '.join(sorted(extra))}")
        return cls(**data)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "HuntConfig":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


# --- evaluation -------------------------------------------------------------------


def _in_range(value: int, r: list[int] | None) -> bool:
    return r is None or r[0] <= value <= r[1]


def _evaluate(job: tuple) -> dict:
    """Worker entry point: filter then judge one graph (given as graph6)."""
    g6, predicate, free_of, omega_r, delta_r, kappa_r, budget = job
    g = from_graph6(g6)
    out = {"graph6": g6, "n": g.n, "filtered": False}
    if not _in_range(max_clique(g).bit_count(), omega_r) or not _in_range(min_degree(g), delta_r):
        return out
    if kappa_r is not None and not _in_range(vertex_connectivity(g), kappa_r):
        return out
    for name in free_of:
        if find_induced(g, catalog(name)) is not None:
            return out
    if predicate in RAW_TARGETS:
        v = check_target(g, predicate.split(":")[1], budget)
    else:
        v = check_theorem(g, predicate, budget)
    out.update(filtered=True, status=v.status)
    if v.status == FAIL:
        out["verdict"] = v.to_json()
    return out


def _empty_counts() -> dict:
    return {"enumerated": 0, "filtered_in": 0, PASS: 0, NOT_APPLICABLE: 0, BUDGET: 0, FAIL: 0}


@dataclass
class SearchReport:
    config: dict
    config_hash: str
    counts: dict[str, dict]  # str(n) -> counts
    violations: list[dict]
    retries: list[dict]
    cursor: int  # graphs merged so far, in input order
    complete: bool
    run: dict = field(default_factory=dict)  # timing and worker count; excluded from comparisons
    ingest_rejected: int = 0

    def total(self, key: str) -> int:
        return sum(c[key] for c in self.counts.values())

    def to_json(self, with_run: bool = True) -> dict:
        d = {
            "schema": REPORT_SCHEMA,
            "config": self.config,
            "config_hash": self.config_hash,
            "counts": self.counts,
            "violations": self.violations,
            "retries": self.retries,
            "cursor": self.cursor,
            "complete": self.complete,
            "ingest_rejected": self.ingest_rejected,
        }
        if with_run:
            d["run"] = self.run
        return d

    def dumps(self, with_run: bool = True) -> str:
        return json.dumps(self.to_json(with_run), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def strip_run(report_text: str) -> str:
    """Report JSON with the timing/worker section removed, for comparisons."""
    d = json.loads(report_text)
    d.pop("run", None)
    return json.dumps(d, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _atomic_write(path: str, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=target.parent, prefix=target.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _source(cfg: HuntConfig) -> tuple[Iterator[Graph], Ingest | None]:
    if cfg.input is not None:
        src = ingest(cfg.input, require_alpha2=True, complement=cfg.input_complement)
        stream = (g for g in src if cfg.n_min <= g.n <= cfg.n_max)
        return stream, src
    stream = (g for n in range(cfg.n_min, cfg.n_max + 1) for g in enumerate_alpha2(n, cfg.allow_stretch))
    return stream, None


class HuntInterrupted(Exception):
    def __init__(self, cursor: int):
        self.cursor = cursor
        super().__init__(f"halted after checkpoint at {cursor} graphs")


def worker_count(cfg: HuntConfig) -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        try:
            w = int(env)
        except ValueError:
            raise HuntError(f"{WORKERS_ENV} must be an integer, got {env!r}") from None
        if w <= 0:
            raise HuntError(f"{WORKERS_ENV} must be positive")
        return w
    return cfg.workers


def run_hunt(cfg: HuntConfig, resume: bool = False, halt_after: int | None = None) -> SearchReport:
    """Run (or resume) a campaign and return its report.

    ``halt_after`` stops right after the first checkpoint written at or past
    that many merged graphs by raising ``HuntInterrupted``; it exists to
    exercise resumption.
    """
    cfg.validate()
    h = cfg.hash()
    start_wall = time.perf_counter()
    start_cpu = time.process_time()

    counts: dict[str, dict] = {str(n): _empty_counts() for n in range(cfg.n_min, cfg.n_max + 1)}
    violations: list[dict] = []
    retries: list[dict] = []
    cursor = 0
    resumed = False
    if resume:
        if not cfg.checkpoint:
            raise HuntError("--resume needs a checkpoint path in the config")
        if os.path.exists(cfg.checkpoint):
            with open(cfg.checkpoint) as fh:
                ck = json.load(fh)
            if ck.get("config_hash") != h:
                raise HuntError("checkpoint was written for a different configuration")
            counts, violations, retries, cursor = ck["counts"], ck["violations"], ck["retries"], ck["cursor"]
            resumed = True

    stream, src = _source(cfg)
    index = 0

    def jobs() -> Iterator[tuple]:
        nonlocal index
        for g in stream:
            index += 1
            if index <= cursor:
                continue
            yield (to_graph6(g), cfg.predicate, cfg.free_of, cfg.omega_range, cfg.delta_range,
                   cfg.kappa_range, cfg.budget)

    def checkpoint() -> None:
        if cfg.checkpoint:
            state = {
                "schema": CHECKPOINT_SCHEMA,
                "config_hash": h,
                "cursor": cursor,
                "counts": counts,
                "violations": violations,
                "retries": retries,
            }
            _atomic_write(cfg.checkpoint, json.dumps(state, sort_keys=True) + "\n")

    workers = worker_count(cfg)
    pool = mp.Pool(workers) if workers > 1 else None
    try:
        results = pool.imap(_evaluate, jobs(), chunksize=4) if pool else map(_evaluate, jobs())
        since = 0
        for res in results:
            cursor += 1
            c = counts[str(res["n"])]
            c["enumerated"] += 1
            if res["filtered"]:
                c["filtered_in"] += 1
                c[res["status"]] += 1
                if res["status"] == FAIL:
                    violations.append({"position": cursor, "n": res["n"], "graph6": res["graph6"],
                                       "verdict": res["verdict"]})
                elif res["status"] == BUDGET:
                    retries.append({"position": cursor, "n": res["n"], "graph6": res["graph6"]})
            since += 1
            if since >= cfg.checkpoint_every:
                since = 0
                checkpoint()
                if halt_after is not None and cursor >= halt_after:
                    raise HuntInterrupted(cursor)
    finally:
        if pool is not None:
            pool.terminate()
            pool.join()

    report = SearchReport(
        config=cfg.work(),
        config_hash=h,
        counts=counts,
        violations=violations,
        retries=retries,
        cursor=cursor,
        complete=True,
        run={
            "workers": workers,
            "resumed": resumed,
            "wall_seconds": round(time.perf_counter() - start_wall, 3),
            "cpu_seconds": round(time.process_time() - start_cpu, 3),
        },
        ingest_rejected=src.rejected if src is not None else 0,
    )
    checkpoint()
    if cfg.retry:
        _atomic_write(cfg.retry, "".join(r["graph6"] + "\n" for r in retries))
    if cfg.output:
        _atomic_write(cfg.output, report.dumps())
    return report
