"""Sweep harness: cartesian experiment grid, CSV plus JSON-lines output.

The CSV is byte-deterministic for a fixed config (rows sorted by spec, no
timing column); the JSONL mirror carries timings and per-residual weights.
Failed rows keep the sweep alive and land with an ``error`` field.
"""

import csv
import io
import json
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import numpy as np

try:
    import tomllib
except ImportError:  # python < 3.11
    import tomli as tomllib

from .errors import ConfigError, ResourceRefusal, TwfragError
from .generators import GeneratorSpec, generate, random_weights
from .graph import Graph
from .oracle import brute_force_opt
from .scheme import SchemeConfig, run_scheme
from .solvers import problem_by_name

CSV_COLUMNS = [
    "instance", "family", "n", "m_edges", "seed", "problem", "r", "c", "k",
    "h", "k_inflated", "m_sets", "max_outdegree", "max_width",
    "value", "opt", "ratio", "error",
]

SUMMARY_COLUMNS = ["family", "problem", "k", "rows", "with_oracle", "min_ratio", "mean_ratio"]


@dataclass(frozen=True)
class RowSpec:
    gen: GeneratorSpec
    weights_mode: str
    problem_name: str
    problem_r: Optional[int]
    pattern: str
    k: int

    def sort_key(self):
        return (self.gen.family, self.gen.params, self.gen.seed,
                self.problem_name, self.problem_r or 0, self.pattern, self.k)


def parse_sweep_config(text: str) -> dict:
    try:
        cfg = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise ConfigError(f"bad sweep config: {e}") from None
    cfg.setdefault("oracle_limit", 18)
    cfg.setdefault("jobs", 1)
    cfg.setdefault("instances", [])
    cfg.setdefault("runs", [])
    return cfg


def expand_rows(cfg: dict) -> List[RowSpec]:
    rows = []
    for inst in cfg["instances"]:
        family = inst.get("family")
        if not family:
            raise ConfigError("instance entry missing 'family'")
        seeds = inst.get("seeds", [0])
        weights_mode = inst.get("weights", "unit")
        if weights_mode not in ("unit", "random"):
            raise ConfigError(f"weights must be 'unit' or 'random', got {weights_mode!r}")
        params = {k: v for k, v in inst.items()
                  if k not in ("family", "seeds", "weights")}
        for seed in seeds:
            gen = GeneratorSpec.make(family, seed=seed, **params)
            for run in cfg["runs"]:
                pname = run.get("problem")
                if not pname:
                    raise ConfigError("run entry missing 'problem'")
                ks = run.get("k", [2])
                if isinstance(ks, int):
                    ks = [ks]
                for k in ks:
                    rows.append(RowSpec(
                        gen=gen,
                        weights_mode=weights_mode,
                        problem_name=pname,
                        problem_r=run.get("r"),
                        pattern=run.get("pattern", "k2"),
                        k=int(k),
                    ))
    rows.sort(key=lambda rs: rs.sort_key())
    return rows


def _graph_for(spec: RowSpec) -> Graph:
    g = generate(spec.gen)
    if spec.weights_mode == "random":
        w = random_weights(g.n, seed=spec.gen.seed ^ 0xA5A5A5A5)
        g = Graph(g.n, g.indptr, g.indices, np.asarray(w, dtype=np.int64))
    return g


def run_row(spec: RowSpec, oracle_limit: int) -> dict:
    label = spec.gen.label()
    base = {
        "instance": label,
        "family": spec.gen.family,
        "seed": spec.gen.seed,
        "problem": spec.problem_name if spec.problem_r is None
        else f"{spec.problem_name}(r={spec.problem_r})",
        "k": spec.k,
        "error": "",
    }
    try:
        g = _graph_for(spec)
        problem = problem_by_name(spec.problem_name, spec.problem_r, spec.pattern)
        outcome = run_scheme(g, SchemeConfig(k=spec.k, problem=problem, instance=label))
        opt = None
        if g.n <= oracle_limit:
            try:
                opt = int(brute_force_opt(g, problem).weight)
            except ResourceRefusal:
                opt = None
        d = outcome.to_json_dict(opt)
        d.update(base)
        d["r"] = problem.r
        d["c"] = problem.c
        return d
    except TwfragError as e:
        d = {c: None for c in CSV_COLUMNS}
        d.update(base)
        d["error"] = f"{type(e).__name__}: {e}"
        d["per_i_weights"] = None
        d["time_ms"] = None
        return d


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def rows_to_csv(rows: List[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow([_fmt(row.get(c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def summarize(rows: List[dict]) -> str:
    cells = {}
    for row in rows:
        key = (row.get("family"), row.get("problem"), row.get("k"))
        cells.setdefault(key, []).append(row)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_COLUMNS)
    for key in sorted(cells, key=lambda t: tuple(str(x) for x in t)):
        group = cells[key]
        ratios = [r["ratio"] for r in group if r.get("ratio") is not None]
        w.writerow([
            _fmt(key[0]), _fmt(key[1]), _fmt(key[2]), len(group), len(ratios),
            _fmt(min(ratios) if ratios else None),
            _fmt(sum(ratios) / len(ratios) if ratios else None),
        ])
    return buf.getvalue()


def bench_sweep(config_text: str, out_dir, jobs: int = None) -> dict:
    """Run the sweep; writes rows.csv, rows.jsonl and summary.csv."""
    cfg = parse_sweep_config(config_text)
    specs = expand_rows(cfg)
    oracle_limit = int(cfg["oracle_limit"])
    jobs = int(cfg["jobs"]) if jobs is None else jobs

    if jobs > 1 and specs:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_row_worker, [(s, oracle_limit) for s in specs]))
    else:
        results = [run_row(s, oracle_limit) for s in specs]

    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    csv_text = rows_to_csv(results)
    (out / "rows.csv").write_text(csv_text, encoding="utf-8")
    with (out / "rows.jsonl").open("w", encoding="utf-8") as fh:
        for row in results:
            fh.write(json.dumps(row, sort_keys=True) + "\n")
    (out / "summary.csv").write_text(summarize(results), encoding="utf-8")
    return {"rows": len(results), "csv": str(out / "rows.csv")}


def _row_worker(args):
    spec, oracle_limit = args
    return run_row(spec, oracle_limit)
