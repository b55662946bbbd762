"""Benchmark harness and CLI around the online ordering algorithms.

A run replays one insertion sequence through one algorithm, times the
insertions with a monotonic clock (generation and validation excluded),
validates the maintained order, and emits one record per repetition.  The
scaling helper fits a log-log slope of a work proxy against n: bucket
operations plus collected elements for the bucketed algorithm, visited
nodes for the baselines.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, replace

import numpy as np

from .baselines import BASELINES
from .core import ACCEPTED, CYCLE, BucketGraph
from .generators import (
    GENERATOR_ID,
    EdgeSequence,
    hard_sequence,
    random_sequence,
    read_sequence,
)
from .oracle import first_violation

CSV_HEADER = (
    "algo,backend,n,m,t,seed,rep,wall_ns,reorder_calls,swaps,sum_ab,"
    "sum_swap_dist,bucket_inserts,bucket_deletes,elements_collected,"
    "visited_nodes,final_valid"
)

ALGOS = ("afm", "pk", "mnr", "naive")


class BenchError(Exception):
    """Configuration problem, validation failure, or algorithm bug."""


@dataclass
class RunConfig:
    algo: str
    n: int = 0
    m: int | None = None
    backend: str = "bitarray"
    t: int | None = None
    seed: int = 0
    instance: str = "random"  # random | hard | file
    path: str | None = None
    validate_every: int = 0
    reps: int = 1


@dataclass
class RunRecord:
    algo: str
    backend: str
    n: int
    m: int
    t: int
    seed: int
    rep: int
    wall_ns: int
    reorder_calls: int
    swaps: int
    sum_ab: int
    sum_swap_dist: int
    bucket_inserts: int
    bucket_deletes: int
    elements_collected: int
    visited_nodes: int
    final_valid: bool

    def cost_proxy(self) -> int:
        if self.algo == "afm":
            return self.bucket_inserts + self.bucket_deletes + self.elements_collected
        return self.visited_nodes


def build_sequence(cfg: RunConfig) -> EdgeSequence:
    if cfg.instance == "random":
        return random_sequence(cfg.n, cfg.m, cfg.seed)
    if cfg.instance == "hard":
        return hard_sequence(cfg.n)
    if cfg.instance == "file":
        if not cfg.path:
            raise BenchError("file instance needs a path")
        return read_sequence(cfg.path)
    raise BenchError(f"unknown instance kind {cfg.instance!r}")


def _new_graph(cfg: RunConfig, n: int):
    if cfg.algo == "afm":
        return BucketGraph(n, cfg.t, cfg.backend)
    if cfg.algo in BASELINES:
        return BASELINES[cfg.algo](n)
    raise BenchError(f"unknown algo {cfg.algo!r}")


def run(cfg: RunConfig) -> list[RunRecord]:
    """Replay the configured sequence cfg.reps times, one record each."""
    seq = build_sequence(cfg)
    n = seq.n
    cycles_are_bugs = cfg.instance != "file"
    records = []
    for rep in range(cfg.reps):
        graph = _new_graph(cfg, n)
        wall, valid = _replay(graph, seq, cfg.validate_every, cycles_are_bugs)
        if cfg.algo == "afm":
            c = graph.counters
            records.append(
                RunRecord(
                    cfg.algo, cfg.backend, n, seq.m, graph.t, cfg.seed, rep,
                    wall, c.reorder_calls, c.swaps, c.sum_ab, c.sum_swap_dist,
                    c.bucket_inserts, c.bucket_deletes, c.elements_collected,
                    0, valid,
                )
            )
        else:
            records.append(
                RunRecord(
                    cfg.algo, "-", n, seq.m, 0, cfg.seed, rep,
                    wall, 0, 0, 0, 0, 0, 0, 0, graph.visited_nodes, valid,
                )
            )
    return records


def _replay(graph, seq: EdgeSequence, validate_every: int, cycles_are_bugs: bool):
    """Insert every edge, timing only the insert calls; return (ns, valid)."""
    ops = seq.ops
    us = np.empty(len(ops), dtype=np.int64)
    vs = np.empty(len(ops), dtype=np.int64)
    stored = 0
    clock = time.perf_counter_ns
    wall = 0

    if validate_every <= 0:
        t0 = clock()
        for u, v in ops:
            result = graph.insert(u, v)
            if result.status != ACCEPTED:
                if cycles_are_bugs:
                    _abort_on_result(u, v, result)
                continue
            us[stored] = u
            vs[stored] = v
            stored += 1
        wall = clock() - t0
    else:
        since = 0
        for u, v in ops:
            t0 = clock()
            result = graph.insert(u, v)
            wall += clock() - t0
            if result.status != ACCEPTED:
                if cycles_are_bugs:
                    _abort_on_result(u, v, result)
                continue
            us[stored] = u
            vs[stored] = v
            stored += 1
            since += 1
            if since == validate_every:
                since = 0
                _validate_now(graph, us[:stored], vs[:stored], stored)

    _validate_now(graph, us[:stored], vs[:stored], stored)
    return wall, True


def _abort_on_result(u, v, result):
    if result.status == CYCLE:
        raise BenchError(
            f"algorithm bug: cycle reported on an acyclic instance at edge ({u}, {v})"
        )
    raise BenchError(f"duplicate edge ({u}, {v}) in generated sequence")


def _validate_now(graph, us, vs, stored):
    pos = np.array(graph.order_map._pos, dtype=np.int64)
    bad = first_violation(pos, us, vs)
    if bad >= 0:
        raise BenchError(
            f"order invalid after {stored} insertions: "
            f"edge ({int(us[bad])}, {int(vs[bad])}) violated"
        )


# ---- scaling fits ----------------------------------------------------------


@dataclass
class ScalingResult:
    algo: str
    sizes: list[int]
    proxies: list[float]
    slope: float
    records: list[RunRecord]


def scaling(cfg: RunConfig, sizes: list[int]) -> ScalingResult:
    """Run cfg at each size and fit log(cost proxy) against log(n)."""
    if len(sizes) < 2:
        raise BenchError("scaling needs at least two sizes")
    all_records: list[RunRecord] = []
    proxies: list[float] = []
    for n in sizes:
        records = run(replace(cfg, n=n))
        all_records.extend(records)
        proxies.append(float(np.mean([r.cost_proxy() for r in records])))
    if any(p <= 0 for p in proxies):
        raise BenchError("cost proxy must be positive to fit a slope")
    slope = float(np.polyfit(np.log(sizes), np.log(proxies), 1)[0])
    return ScalingResult(cfg.algo, list(sizes), proxies, slope, all_records)


# ---- CSV -------------------------------------------------------------------


def write_csv(path: str, records: list[RunRecord], meta: dict | None = None) -> None:
    """Write records under the fixed header; meta goes into # comment lines."""
    with open(path, "w", encoding="ascii") as fh:
        if meta:
            for key, value in meta.items():
                fh.write(f"# {key}={value}\n")
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(
                f"{r.algo},{r.backend},{r.n},{r.m},{r.t},{r.seed},{r.rep},"
                f"{r.wall_ns},{r.reorder_calls},{r.swaps},{r.sum_ab},"
                f"{r.sum_swap_dist},{r.bucket_inserts},{r.bucket_deletes},"
                f"{r.elements_collected},{r.visited_nodes},"
                f"{'true' if r.final_valid else 'false'}\n"
            )


def read_csv(path: str) -> list[RunRecord]:
    """Read back a file produced by write_csv; comment lines are skipped."""
    records: list[RunRecord] = []
    with open(path, "r", encoding="ascii") as fh:
        header = None
        for line in fh:
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            if header is None:
                if line != CSV_HEADER:
                    raise BenchError(f"unexpected header {line!r}")
                header = line
                continue
            parts = line.split(",")
            if len(parts) != 17:
                raise BenchError(f"bad row {line!r}")
            records.append(
                RunRecord(
                    parts[0], parts[1],
                    *(int(x) for x in parts[2:16]),
                    parts[16] == "true",
                )
            )
    return records


# ---- CLI -------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="dagorder-bench",
        description="Replay edge-insertion sequences through online "
        "topological-ordering algorithms and report work counters.",
    )
    p.add_argument("--algo", choices=ALGOS, default="afm")
    p.add_argument("--backend", choices=("tree", "bitarray", "hash"), default="bitarray",
                   help="bucket container for --algo afm")
    p.add_argument("--t", type=int, default=None, help="bucket width (default: rule of thumb)")
    p.add_argument("--gen", choices=("random", "hard", "file"), default="random")
    p.add_argument("--n", type=int, default=0, help="node count for generated instances")
    p.add_argument("--m", type=int, default=None, help="edge count for random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--file", dest="path", default=None, help="sequence file for --gen file")
    p.add_argument("--validate-every", type=int, default=0, metavar="K",
                   help="validate after every K accepted insertions (0: only at the end)")
    p.add_argument("--reps", type=int, default=1)
    p.add_argument("--csv", default=None, help="write records to this CSV file")
    p.add_argument("--scaling", default=None, metavar="N1,N2,...",
                   help="run at each size and fit a log-log slope of the cost proxy")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    cfg = RunConfig(
        algo=args.algo,
        n=args.n,
        m=args.m,
        backend=args.backend,
        t=args.t,
        seed=args.seed,
        instance=args.gen,
        path=args.path,
        validate_every=args.validate_every,
        reps=args.reps,
    )
    meta = {"instance": cfg.instance, "validate_every": cfg.validate_every}
    if cfg.instance in ("random", "hard"):
        meta["generator"] = GENERATOR_ID
    try:
        if args.scaling:
            try:
                sizes = [int(x) for x in args.scaling.split(",") if x.strip()]
            except ValueError:
                raise BenchError(f"bad --scaling list {args.scaling!r}") from None
            result = scaling(cfg, sizes)
            records = result.records
            for n, proxy in zip(result.sizes, result.proxies):
                print(f"n={n} proxy={proxy:.0f}")
            print(f"slope algo={cfg.algo} {result.slope:.3f}")
        else:
            if cfg.instance != "file" and cfg.n < 1:
                raise BenchError("generated instances need --n >= 1")
            records = run(cfg)
            for r in records:
                print(
                    f"algo={r.algo} backend={r.backend} n={r.n} m={r.m} t={r.t} "
                    f"seed={r.seed} rep={r.rep} wall_ms={r.wall_ns / 1e6:.2f} "
                    f"proxy={r.cost_proxy()} final_valid={'true' if r.final_valid else 'false'}"
                )
    except BenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.csv:
        write_csv(args.csv, records, meta)
    return 0


if __name__ == "__main__":
    sys.exit(main())
