"""Command-line surface: solve, kernelize, oracle, enum-mvc, gen, bench,
verify, analyze.

Exit codes: 0 = yes/success, 1 = no/infeasible, 2 = error.  The env var
MSVC_THREADS provides the default for --threads.  Reports are emitted as
newline-delimited JSON with an optional CSV projection.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time
from typing import Optional

from .analysis import (
    AnalysisGuardError,
    BoundDomainError,
    lemma1_bound,
    min_max_cost_over_optima,
    structural_audit,
    vc_number,
)
from .branching import solve
from .covers import enumerate_minimal_covers
from .generators import FAMILIES, GeneratorSpec, generate
from .graph import Instance, evaluate
from .instance_io import (
    ParseError,
    parse_ordering,
    read_instance,
    write_instance,
)
from .kernel import Kernel, Rule2Record, Rule4Record, TrivialNo, kernelize
from .oracles import (
    OracleGuardError,
    BRUTE_FORCE_GUARD,
    SUBSET_DP_GUARD,
    brute_force_optimal,
    regular_solve,
    subset_dp_optimal,
)

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _default_threads() -> int:
    env = os.environ.get("MSVC_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _ordering_json(ordering) -> list[int]:
    return [v + 1 for v in ordering.sequence]


def cmd_solve(args) -> int:
    inst = read_instance(args.instance)
    result = solve(
        inst,
        use_kernel=not args.no_kernel,
        prune=args.prune,
        threads=args.threads,
    )
    payload = {
        "decision": "yes" if result.decision else "no",
        "total_cost": result.best_cost,
        "max_cost": None,
        "ordering": None,
        "kernel": result.kernel_summary,
        "stats": {
            "covers_enumerated": result.stats.covers_enumerated,
            "mappings_tried": result.stats.mappings_tried,
            "branches": result.stats.branches,
            "elapsed": result.stats.elapsed,
        },
    }
    if result.best_ordering is not None:
        payload["max_cost"] = evaluate(inst.graph, result.best_ordering).max_cost
        payload["ordering"] = _ordering_json(result.best_ordering)
    print(json.dumps(payload))
    return EXIT_YES if result.decision else EXIT_NO


def cmd_kernelize(args) -> int:
    inst = read_instance(args.instance)
    outcome = kernelize(inst)
    if isinstance(outcome, TrivialNo):
        print(json.dumps({"trivial_no": outcome.rule}))
        return EXIT_NO
    assert isinstance(outcome, Kernel)
    text = write_instance(outcome.instance)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.trace:
        steps = []
        for step in outcome.trace.steps:
            if isinstance(step, Rule2Record):
                steps.append(
                    {
                        "rule": 2,
                        "t": step.t,
                        "delta": step.delta,
                        "w_delta": step.w_delta,
                        "removed_edges": [[u + 1, v + 1] for u, v in step.removed_edges],
                    }
                )
            elif isinstance(step, Rule4Record):
                steps.append(
                    {
                        "rule": 4,
                        "p": step.p,
                        "deleted_I": [v + 1 for v in step.deleted_vertices],
                        "added_x": len(step.added_synthetics),
                        "moved_edge_counts": {
                            str(v + 1): c for v, c in sorted(step.moved_edge_counts.items())
                        },
                    }
                )
        trace_payload = {
            "steps": steps,
            "w_offset": outcome.trace.w_offset,
            "vertex_map": [
                None if orig is None else orig + 1 for orig in outcome.trace.vertex_map
            ],
        }
        with open(args.trace, "w", encoding="utf-8") as fh:
            json.dump(trace_payload, fh)
            fh.write("\n")
    return EXIT_YES


def cmd_oracle(args) -> int:
    inst = read_instance(args.instance)
    g, k = inst.graph, inst.k
    if args.method == "brute":
        answer = brute_force_optimal(g, k)
    elif args.method == "dp":
        answer = subset_dp_optimal(g, k)
    else:
        answer = regular_solve(g, k)
    if answer is None:
        print(json.dumps({"feasible": False}))
        return EXIT_NO
    cost, ordering = answer
    print(
        json.dumps(
            {
                "feasible": True,
                "cost": cost,
                "within_budget": cost <= inst.w,
                "ordering": _ordering_json(ordering),
            }
        )
    )
    return EXIT_YES if cost <= inst.w else EXIT_NO


def cmd_enum_mvc(args) -> int:
    inst = read_instance(args.instance)
    for cover in enumerate_minimal_covers(inst.graph, inst.k):
        print(" ".join(str(v + 1) for v in cover.sorted()))
    return EXIT_YES


def cmd_gen(args) -> int:
    params = tuple(int(p) if float(p).is_integer() and "." not in p else float(p) for p in args.params)
    spec = GeneratorSpec(family=args.family, params=params, seed=args.seed)
    g = generate(spec)
    k = args.k if args.k is not None else g.n
    w = args.w if args.w is not None else min(k, g.n) * g.m
    inst = Instance(graph=g, w=w, k=k)
    text = write_instance(inst)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_YES


def _bench_corpus(args):
    rng_seed = args.seed
    sizes = range(args.n_min, args.n_max + 1)
    idx = 0
    for n in sizes:
        for rep in range(args.per_size):
            spec = GeneratorSpec(
                family="gnp", params=(n, args.p), seed=rng_seed + idx
            )
            yield idx, spec, generate(spec)
            idx += 1


def cmd_bench(args) -> int:
    rows = []
    for idx, spec, g in _bench_corpus(args):
        ks = range(0, g.n + 1) if args.k is None else [args.k]
        for k in ks:
            w = k * g.m
            inst = Instance(graph=g, w=w, k=k)
            t0 = time.perf_counter()
            result = solve(inst, use_kernel=not args.no_kernel, threads=args.threads)
            elapsed_ms = (time.perf_counter() - t0) * 1000.0
            row = {
                "id": f"{spec.family}-{idx}-k{k}",
                "n": g.n,
                "m": g.m,
                "k": k,
                "kernel_n": (result.kernel_summary or {}).get("n"),
                "kernel_m": (result.kernel_summary or {}).get("m"),
                "covers_enumerated": result.stats.covers_enumerated,
                "branches": result.stats.branches,
                "time_ms": round(elapsed_ms, 3),
                "decision": "yes" if result.decision else "no",
                "cost": result.best_cost,
                "oracle_cost": None,
            }
            if g.n <= BRUTE_FORCE_GUARD:
                oracle = brute_force_optimal(g, k)
                row["oracle_cost"] = None if oracle is None else oracle[0]
            rows.append(row)
    for row in rows:
        print(json.dumps(row))
    if args.csv:
        _write_csv(args.csv, rows)
    return EXIT_YES


def _write_csv(path: str, rows: list[dict]) -> None:
    if not rows:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("")
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)


def cmd_verify(args) -> int:
    inst = read_instance(args.instance)
    with open(args.ordering, "r", encoding="utf-8") as fh:
        ordering = parse_ordering(fh.read(), inst.graph.n)
    report = evaluate(inst.graph, ordering)
    feasible = report.max_cost <= inst.k and report.total <= inst.w
    payload = {
        "total_cost": report.total,
        "max_cost": report.max_cost,
        "k": inst.k,
        "w": inst.w,
        "feasible": feasible,
    }
    if report.max_cost <= inst.k:
        audit = structural_audit(inst.graph, inst.k, ordering, is_optimal=False)
        payload["audit"] = {"prop1": audit.prop1.passed}
    print(json.dumps(payload))
    return EXIT_YES if feasible else EXIT_NO


def cmd_analyze(args) -> int:
    rows = []
    idx = 0
    for n in range(args.n_min, args.n_max + 1):
        for rep in range(args.per_size):
            spec = GeneratorSpec(family="gnp", params=(n, args.p), seed=args.seed + idx)
            g = generate(spec)
            idx += 1
            row = {
                "graph_id": f"gnp-{n}-{spec.seed}",
                "n": g.n,
                "m": g.m,
            }
            try:
                tau = vc_number(g)
                opt_cost, min_max = min_max_cost_over_optima(g)
            except AnalysisGuardError as exc:
                row["error"] = str(exc)
                rows.append(row)
                continue
            row.update(tau=tau, opt_cost=opt_cost, min_max_cost=min_max)
            row["gap_to_tau"] = min_max - tau
            try:
                bound = lemma1_bound(g.m, tau) if g.m else 0.0
                row["bound"] = bound
                row["bound_holds"] = min_max <= bound
            except BoundDomainError:
                row["bound"] = None
                row["bound_holds"] = None
            if g.n <= SUBSET_DP_GUARD:
                answer = subset_dp_optimal(g, g.n)
                if answer is not None:
                    audit = structural_audit(
                        g, g.n, answer[1], is_optimal=True, tau=tau
                    )
                    row["audit_prop1"] = audit.prop1.passed
                    row["audit_lemma2i"] = audit.lemma2i.passed
                    row["audit_lemma2ii"] = audit.lemma2ii.passed
                    row["audit_lemma4"] = audit.lemma4.passed
                    row["replacement_warning"] = audit.replacement_window.passed is False
            rows.append(row)
    for row in rows:
        print(json.dumps(row))
    if args.csv:
        _write_csv(args.csv, rows)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="msvc",
        description="Minimum sum vertex cover toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="decide an instance and print a witness")
    p_solve.add_argument("instance")
    p_solve.add_argument("--no-kernel", action="store_true")
    p_solve.add_argument("--prune", action="store_true")
    p_solve.add_argument("--threads", type=int, default=_default_threads())
    p_solve.add_argument("--seed", type=int, default=0, help="reserved; no effect on solving")
    p_solve.set_defaults(func=cmd_solve)

    p_kern = sub.add_parser("kernelize", help="reduce an instance and dump the trace")
    p_kern.add_argument("instance")
    p_kern.add_argument("--out", default=None)
    p_kern.add_argument("--trace", default=None)
    p_kern.set_defaults(func=cmd_kernelize)

    p_oracle = sub.add_parser("oracle", help="exact reference solvers")
    p_oracle.add_argument("instance")
    p_oracle.add_argument("--method", choices=("brute", "dp", "regular"), default="dp")
    p_oracle.set_defaults(func=cmd_oracle)

    p_enum = sub.add_parser("enum-mvc", help="list minimal vertex covers of size <= k")
    p_enum.add_argument("instance")
    p_enum.set_defaults(func=cmd_enum_mvc)

    p_gen = sub.add_parser("gen", help="generate an instance from a family")
    p_gen.add_argument("family", choices=FAMILIES)
    p_gen.add_argument("params", nargs="*", help="family parameters, e.g. 'gnp 8 0.5'")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--k", type=int, default=None)
    p_gen.add_argument("--w", type=int, default=None)
    p_gen.add_argument("--out", default=None)
    p_gen.set_defaults(func=cmd_gen)

    p_bench = sub.add_parser("bench", help="solve a generated corpus, emit NDJSON rows")
    p_bench.add_argument("--n-min", type=int, default=4)
    p_bench.add_argument("--n-max", type=int, default=8)
    p_bench.add_argument("--per-size", type=int, default=5)
    p_bench.add_argument("--p", type=float, default=0.4)
    p_bench.add_argument("--k", type=int, default=None, help="fixed k; default sweeps 0..n")
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--no-kernel", action="store_true")
    p_bench.add_argument("--threads", type=int, default=_default_threads())
    p_bench.add_argument("--csv", default=None)
    p_bench.set_defaults(func=cmd_bench)

    p_verify = sub.add_parser("verify", help="cost and feasibility of an ordering file")
    p_verify.add_argument("instance")
    p_verify.add_argument("ordering")
    p_verify.set_defaults(func=cmd_verify)

    p_an = sub.add_parser("analyze", help="structural reports over a generated corpus")
    p_an.add_argument("--n-min", type=int, default=4)
    p_an.add_argument("--n-max", type=int, default=8)
    p_an.add_argument("--per-size", type=int, default=5)
    p_an.add_argument("--p", type=float, default=0.4)
    p_an.add_argument("--seed", type=int, default=1)
    p_an.add_argument("--csv", default=None)
    p_an.set_defaults(func=cmd_analyze)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OracleGuardError, AnalysisGuardError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
