"""Command-line front end.

Subcommands: check, sort, witness, minimal, basis, verify, oracle, bench.
Exit codes: 0 sortable / verified, 1 unsortable (a successful negative
decision), 2 usage or parse errors, 3 internal contract violations.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
import time
from typing import Optional

from .basis import basis_up_to_length, find_basis_witness, infinite_basis_element
from .oracle import is_minimally_unsortable, oracle_witness
from .orderings import (
    Ordering,
    ParseError,
    format_color,
    format_ordering,
    parse_ordering,
    read_corpus,
)
from .sorter import SortReport, _greedy, full_sort
from .states import ContractError, SortState, _move
from .verify import (
    cross_check,
    load_cache,
    save_cache,
    verify_inf_unsort,
    verify_theorem,
)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _sequence_text(sequence) -> str:
    return "(" + ",".join(format_color(c) for c in sequence) + ")"


def _move_trace_lines(ordering: Ordering, sequence) -> list:
    """Step log of replaying sequence on ordering, with 1-based input indices."""
    lines = []
    state = SortState((), ordering)
    for color in sequence:
        offset = len(ordering) - len(state.remaining)
        state, _, steps = _move(state, color)
        for step in steps:
            if step[0] == "push":
                _, i, c = step
                lines.append(f"push {offset + i + 1}:{format_color(c)}")
            else:
                lines.append(f"pop:{format_color(step[1])}")
    return lines


def _gather_inputs(args) -> list:
    inputs = [parse_ordering(text, args.tokens) for text in args.ordering]
    if args.file:
        inputs.extend(read_corpus(args.file, args.tokens))
    if not inputs:
        raise SystemExit(2)
    return inputs


def _cmd_check(args) -> int:
    worst = 0
    for ordering in _gather_inputs(args):
        report = full_sort(ordering)
        if report.is_sorted:
            if args.json:
                _emit_json(
                    {
                        "sortable": True,
                        "sequence": [format_color(c) for c in report.sequence],
                        "output": format_ordering(report.output_word),
                    }
                )
            else:
                print(
                    f"sortable, sequence={_sequence_text(report.sequence)}, "
                    f"output={format_ordering(report.output_word)}"
                )
                if args.trace:
                    for line in _move_trace_lines(ordering, report.sequence):
                        print(line)
        else:
            worst = 1
            hit = find_basis_witness(ordering)
            if args.json:
                payload = {"sortable": False}
                if hit is not None:
                    element, embedding = hit
                    payload["witness"] = {
                        "class": element.label,
                        "positions": [p + 1 for p in embedding.positions],
                    }
                _emit_json(payload)
            else:
                if hit is None:
                    print("unsortable")
                else:
                    element, embedding = hit
                    positions = ",".join(str(p + 1) for p in embedding.positions)
                    print(f"unsortable, witness={element.label}, positions=({positions})")
    return worst


def _cmd_sort(args) -> int:
    worst = 0
    for ordering in _gather_inputs(args):
        report = full_sort(ordering)
        if report.is_sorted:
            trace = _move_trace_lines(ordering, report.sequence)
            if args.json:
                _emit_json(
                    {
                        "sortable": True,
                        "sequence": [format_color(c) for c in report.sequence],
                        "output": format_ordering(report.output_word),
                        "steps": trace,
                    }
                )
            else:
                print(
                    f"sortable, sequence={_sequence_text(report.sequence)}, "
                    f"output={format_ordering(report.output_word)}"
                )
                for line in trace:
                    print(line)
        else:
            worst = 1
            theta, state, _ = _greedy(ordering)
            trace = _move_trace_lines(ordering, theta)
            if args.json:
                _emit_json(
                    {
                        "sortable": False,
                        "stuck_stack": format_ordering(state.stack),
                        "stuck_remaining": format_ordering(state.remaining),
                        "steps": trace,
                    }
                )
            else:
                print(f"unsortable, greedy stalls at {state}")
                for line in trace:
                    print(line)
    return worst


def _cmd_witness(args) -> int:
    worst = 0
    for ordering in _gather_inputs(args):
        hit = find_basis_witness(ordering)
        if hit is None:
            if args.json:
                _emit_json({"sortable": True})
            else:
                print("no basis witness (sortable)")
        else:
            worst = 1
            element, embedding = hit
            if args.json:
                _emit_json(
                    {
                        "sortable": False,
                        "witness": {
                            "class": element.label,
                            "pattern": element.display(),
                            "positions": [p + 1 for p in embedding.positions],
                        },
                    }
                )
            else:
                positions = ",".join(str(p + 1) for p in embedding.positions)
                print(
                    f"witness={element.label}, pattern={element.display()}, "
                    f"positions=({positions})"
                )
    return worst


def _cmd_minimal(args) -> int:
    worst = 0
    for ordering in _gather_inputs(args):
        minimal = is_minimally_unsortable(ordering)
        if not minimal:
            worst = 1
        if args.json:
            _emit_json({"minimal": minimal})
        else:
            print(f"minimally unsortable: {'yes' if minimal else 'no'}")
    return worst


def _cmd_oracle(args) -> int:
    worst = 0
    for ordering in _gather_inputs(args):
        witness = oracle_witness(ordering)
        if witness is None:
            worst = 1
            if args.json:
                _emit_json({"sortable": False})
            else:
                print("unsortable (oracle)")
        else:
            steps, output = witness
            if args.json:
                payload = {"sortable": True, "output": format_ordering(output)}
                if args.trace:
                    payload["steps"] = [
                        f"push {s[1] + 1}:{format_color(s[2])}"
                        if s[0] == "push"
                        else f"pop:{format_color(s[1])}"
                        for s in steps
                    ]
                _emit_json(payload)
            else:
                print(f"sortable (oracle), output={format_ordering(output)}")
                if args.trace:
                    for s in steps:
                        if s[0] == "push":
                            print(f"push {s[1] + 1}:{format_color(s[2])}")
                        else:
                            print(f"pop:{format_color(s[1])}")
    return worst


def _cmd_basis(args) -> int:
    if args.family is not None:
        if args.n is None:
            print("--family requires --n", file=sys.stderr)
            return 2
        elements = [infinite_basis_element(args.family, args.n)]
    else:
        elements = basis_up_to_length(args.max_len)
        if args.n is not None:
            print("--n requires --family", file=sys.stderr)
            return 2
    if args.json:
        _emit_json(
            {
                "elements": [
                    {
                        "label": e.label,
                        "ordering": e.display(),
                        "length": e.length,
                    }
                    for e in elements
                ]
            }
        )
    else:
        for e in elements:
            print(f"{e.label}\t{e.display()}")
    return 0


def _cmd_verify(args) -> int:
    cache = load_cache(args.cache) if args.cache else None
    theorem = verify_theorem(args.max_len, jobs=args.jobs, cache=cache)
    cross = cross_check(args.max_len, jobs=args.jobs)
    reports = {"theorem": theorem, "cross": cross}
    if args.obs_n is not None:
        reports["inf_unsort"] = verify_inf_unsort(args.obs_n)
    if args.cache and cache is not None:
        save_cache(args.cache, cache)
    if args.json:
        _emit_json({name: rep.to_dict() for name, rep in reports.items()})
    else:
        for name, rep in reports.items():
            print(f"== {name}")
            print(rep.to_text())
    return 0 if all(rep.ok for rep in reports.values()) else 1


def generate_bench_ordering(size: int, colors: int, seed: int) -> Ordering:
    """Reproducible pseudo-random ordering: colors drawn uniformly."""
    rng = random.Random(seed * 1_000_003 + size)
    return tuple(rng.randrange(colors) for _ in range(size))


def run_bench(sizes, colors: int, seed: int, repeats: int = 3) -> dict:
    """Time full_sort on pseudo-random inputs; report per-size medians and
    the log-log growth slope."""
    results = []
    for size in sizes:
        ordering = generate_bench_ordering(size, colors, seed)
        times = []
        verdict: Optional[SortReport] = None
        for _ in range(repeats):
            t0 = time.perf_counter()
            verdict = full_sort(ordering)
            times.append(time.perf_counter() - t0)
        times.sort()
        results.append(
            {
                "size": size,
                "seconds": times[len(times) // 2],
                "sortable": bool(verdict and verdict.is_sorted),
            }
        )
    slope = None
    if len(results) >= 2:
        xs = [math.log(r["size"]) for r in results]
        ys = [math.log(max(r["seconds"], 1e-9)) for r in results]
        mx = sum(xs) / len(xs)
        my = sum(ys) / len(ys)
        var = sum((x - mx) ** 2 for x in xs)
        cov = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
        slope = cov / var if var else 0.0
    return {"colors": colors, "seed": seed, "results": results, "slope": slope}


def _cmd_bench(args) -> int:
    sizes = [int(part) for part in args.sizes.split(",") if part]
    outcome = run_bench(sizes, args.colors, args.seed)
    if args.json:
        _emit_json(outcome)
    else:
        print(f"colors={args.colors} seed={args.seed}")
        print("size\tseconds\tsortable")
        for row in outcome["results"]:
            print(f"{row['size']}\t{row['seconds']:.6f}\t{row['sortable']}")
        if outcome["slope"] is not None:
            print(f"loglog slope={outcome['slope']:.3f}")
    return 0


def _add_input_args(sub) -> None:
    sub.add_argument("ordering", nargs="*", help="inline orderings")
    sub.add_argument("--file", help="newline-delimited corpus file")
    sub.add_argument("--tokens", action="store_true", help="comma-separated token input")
    sub.add_argument("--json", action="store_true", help="emit JSON")
    sub.add_argument("--trace", action="store_true", help="print step trace")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="socksort",
        description="Decide foot-sortability of sock orderings.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    for name, fn in (
        ("check", _cmd_check),
        ("sort", _cmd_sort),
        ("witness", _cmd_witness),
        ("minimal", _cmd_minimal),
        ("oracle", _cmd_oracle),
    ):
        sub = subparsers.add_parser(name)
        _add_input_args(sub)
        sub.set_defaults(fn=fn)

    sub = subparsers.add_parser("basis")
    sub.add_argument("--max-len", type=int, default=10)
    sub.add_argument("--family", type=int, choices=(1, 2, 3, 4, 5))
    sub.add_argument("--n", type=int)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_basis)

    sub = subparsers.add_parser("verify")
    sub.add_argument("--max-len", type=int, default=7)
    sub.add_argument("--obs-n", type=int)
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--cache", help="sortability cache file")
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_verify)

    sub = subparsers.add_parser("bench")
    sub.add_argument("--sizes", default="1000,2000,4000,8000")
    sub.add_argument("--colors", type=int, default=50)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(fn=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ContractError as exc:
        print(f"internal contract violation: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
