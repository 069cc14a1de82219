"""Command-line interface.

Subcommands: orient, cover, solve, verify, bench.
Exit codes: 0 success, 1 verification failure, 2 input error, 3 refusal.
"""

import argparse
import json
import sys
from pathlib import Path

from .bench import bench_sweep
from .decompose import COVER_PROVIDERS
from .errors import InputError, ResourceRefusal, TwfragError
from .graph import parse_graph
from .oracle import brute_force_opt
from .orient import build_distance_orientation, verify_representation
from .scheme import SchemeConfig, run_scheme
from .solvers import problem_by_name

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2
EXIT_REFUSAL = 3


def _load_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None
    return parse_graph(text)


def cmd_orient(args) -> int:
    g = _load_graph(args.input)
    o = build_distance_orientation(g, args.r)
    if args.dump:
        sys.stdout.write(o.dump())
    stats = {
        "n": g.n,
        "m_edges": g.m,
        "r": o.r,
        "max_outdegree": o.max_outdegree,
        "arc_count": o.stats.get("arc_count"),
        "stage_outdegrees": o.stats.get("stage_outdegrees"),
        "back_steps": o.stats.get("back_steps"),
    }
    print(json.dumps(stats, indent=2))
    return EXIT_OK


def cmd_cover(args) -> int:
    g = _load_graph(args.input)
    provider = COVER_PROVIDERS.get(args.provider)
    if provider is None:
        raise InputError(f"unknown provider {args.provider!r}")
    cover = provider(g, args.k)
    print(f"provider={cover.provider} m={cover.m} k={cover.k_param} "
          f"max_width={cover.width_bound} bound_ok={cover.membership_bound_holds()}")
    for i, x in enumerate(cover.sets):
        print(f"X_{i + 1}: " + " ".join(str(v) for v in x))
    for i, res in enumerate(cover.residuals):
        print(f"# residual {i + 1} (original vertex ids)")
        bags = res.bags_in_original_ids()
        print(f"bags={len(bags)} width={res.td.width}")
        for bag in bags:
            print(" ".join(str(v) for v in bag))
        for a, b in res.td.tree_edges:
            print(f"{a} {b}")
    return EXIT_OK


def cmd_solve(args) -> int:
    g = _load_graph(args.input)
    problem = problem_by_name(args.problem, args.r, args.pattern)
    cfg = SchemeConfig(k=args.k, problem=problem, cover_provider=args.provider,
                       instance=Path(args.input).name)
    outcome = run_scheme(g, cfg)
    opt = None
    if args.oracle:
        opt = int(brute_force_opt(g, problem).weight)
    doc = outcome.to_json_dict(opt)
    doc["chosen"] = list(outcome.chosen)
    print(json.dumps(doc, indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    o = build_distance_orientation(g, args.r)
    report = verify_representation(g, o, pairs=args.pairs)
    print(report.summary())
    for u, v, want, got in report.violations[:20]:
        print(f"  pair ({u}, {v}): expected {want}, orientation answered {got}")
    if g.n <= 60:
        from .augment import fraternal_augment
        from .walkcheck import stage_lengths_sound

        seq = fraternal_augment(g, max(args.r - 1, 0), args.r)
        sound = all(stage_lengths_sound(g, st) for st in seq.stages)
        print(f"length-set soundness (n<=60 extra check): {'ok' if sound else 'VIOLATED'}")
        if not sound:
            return EXIT_VERIFY
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_bench(args) -> int:
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"cannot read {args.config}: {e}") from None
    info = bench_sweep(text, args.out, jobs=args.jobs)
    print(json.dumps(info, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twfrag",
                                description="approximation schemes on treewidth-fragile graphs")
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("orient", help="build a distance orientation")
    sp.add_argument("--input", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--dump", action="store_true")
    sp.set_defaults(fn=cmd_orient)

    sp = sub.add_parser("cover", help="build a fragility cover")
    sp.add_argument("--input", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--provider", default="baker", choices=sorted(COVER_PROVIDERS))
    sp.set_defaults(fn=cmd_cover)

    sp = sub.add_parser("solve", help="run the approximation scheme")
    sp.add_argument("--input", required=True)
    sp.add_argument("--problem", required=True, choices=["mis", "ris", "forest", "frmatch"])
    sp.add_argument("--r", type=int, default=None)
    sp.add_argument("--pattern", default="k2", choices=["k2", "p3", "k3"])
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--provider", default="baker", choices=sorted(COVER_PROVIDERS))
    sp.add_argument("--oracle", action="store_true")
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("verify", help="check distance representation")
    sp.add_argument("--input", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--pairs", type=int, default=None)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("bench", help="run a sweep config")
    sp.add_argument("--config", required=True)
    sp.add_argument("--out", required=True)
    sp.add_argument("--jobs", type=int, default=None)
    sp.set_defaults(fn=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ResourceRefusal as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSAL
    except InputError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except TwfragError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
