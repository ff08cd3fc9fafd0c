"""Exhaustive desk-scale verification against the brute-force oracle.

Enumeration is over restricted growth strings, i.e. canonical forms directly,
so each equivalence class is visited once (Bell(n) per length).  Sweeps are
partitioned into prefix blocks and may fan out over worker processes; merged
reports are identical for any worker count.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from multiprocessing import get_context
from typing import Iterator, Optional

from .basis import basis_up_to_length
from .orderings import (
    Ordering,
    canonicalize,
    contains_subordering,
    find_subpattern,
    format_ordering,
    interlace,
    parse_ordering,
)
from .oracle import oracle_is_sortable
from .sorter import _greedy, full_sort, is_grouped, replay
from .states import SortState


def bell_number(n: int) -> int:
    """Bell number via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def enumerate_canonical(length: int) -> Iterator[Ordering]:
    """All canonical orderings of exactly this length, lexicographically.

    Canonical forms are restricted growth strings: the first color is 0 and
    each color is at most one past the maximum so far.
    """
    if length < 0:
        raise ValueError("length must be non-negative")
    if length == 0:
        yield ()
        return
    yield from _extend_rgs((0,), length)


def _extend_rgs(prefix: Ordering, length: int) -> Iterator[Ordering]:
    if len(prefix) == length:
        yield prefix
        return
    top = max(prefix) + 2
    for c in range(top):
        yield from _extend_rgs(prefix + (c,), length)


_PREFIX_DEPTH = 5


def _rgs_prefixes(length: int, depth: int = _PREFIX_DEPTH) -> list:
    if length == 0:
        return [()]
    d = min(length, max(1, depth))
    return list(enumerate_canonical(d)) if d == length else list(_extend_rgs((0,), d))


@dataclass
class VerifyReport:
    """Machine-readable sweep outcome; success means no mismatches."""

    scope: dict
    counts: list = field(default_factory=list)
    mismatches: list = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "scope": self.scope,
            "counts": self.counts,
            "mismatches": self.mismatches,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_text(self) -> str:
        lines = [f"scope: {self.scope}"]
        for row in self.counts:
            lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        if self.mismatches:
            lines.append(f"MISMATCHES ({len(self.mismatches)}):")
            for record in self.mismatches:
                lines.append(f"  {record}")
        else:
            lines.append("no mismatches")
        lines.append(f"elapsed: {self.elapsed_ms:.0f} ms")
        return "\n".join(lines)


def validate_mismatch(record: dict) -> bool:
    """Recompute both sides of a mismatch record; True iff the disagreement
    is genuine.  Reports are self-validating through this hook."""
    word = parse_ordering(record["ordering"])
    sortable = oracle_is_sortable(SortState((), word))
    if record["kind"] == "theorem":
        witnessed = any(
            find_subpattern(word, e.realization) is not None
            for e in basis_up_to_length(len(word))
        )
        return (not sortable) != witnessed
    if record["kind"] == "verdict":
        return full_sort(word).is_sorted != sortable
    raise ValueError(f"unknown mismatch kind: {record['kind']}")


# ---------------------------------------------------------------------------
# sortability cache (optional; purely an optimization)


def load_cache(path: str) -> dict:
    """Load canonical-string<TAB>verdict lines; lengths whose totals do not
    match the Bell number are dropped."""
    verdicts: dict = {}
    per_length: dict[int, int] = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                text, verdict = line.split("\t")
                word = parse_ordering(text)
                verdicts[word] = verdict == "unsortable"
                per_length[len(word)] = per_length.get(len(word), 0) + 1
    except FileNotFoundError:
        return {}
    good = {n for n, total in per_length.items() if total == bell_number(n)}
    return {w: v for w, v in verdicts.items() if len(w) in good}


def save_cache(path: str, verdicts: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for word in sorted(verdicts, key=lambda w: (len(w), w)):
            verdict = "unsortable" if verdicts[word] else "sortable"
            handle.write(f"{format_ordering(word)}\t{verdict}\n")


# ---------------------------------------------------------------------------
# worker tasks (module level so they pickle)


def _theorem_task(args) -> list:
    length, prefix, skip_oracle = args
    patterns = [e.realization for e in basis_up_to_length(length)]
    rows = []
    words = (prefix,) if len(prefix) == length else _extend_rgs(prefix, length)
    for word in words:
        unsortable = None
        if not skip_oracle:
            unsortable = not oracle_is_sortable(SortState((), word))
        witnessed = any(find_subpattern(word, p) is not None for p in patterns)
        rows.append((word, unsortable, witnessed))
    return rows


def _cross_task(args) -> tuple:
    length, prefix = args
    checked = 0
    stalls = 0
    stall_example = None
    mismatches = []
    words = (prefix,) if len(prefix) == length else _extend_rgs(prefix, length)
    for word in words:
        checked += 1
        report = full_sort(word)
        sortable = oracle_is_sortable(SortState((), word))
        text = format_ordering(word)
        if report.is_sorted != sortable:
            mismatches.append(
                {
                    "kind": "verdict",
                    "ordering": text,
                    "oracle_sortable": sortable,
                    "full_sort_sorted": report.is_sorted,
                }
            )
        elif report.is_sorted:
            state, output = replay(word, report.sequence)
            if state != ((), ()) or not is_grouped(output):
                mismatches.append(
                    {
                        "kind": "replay",
                        "ordering": text,
                        "sequence": list(report.sequence),
                    }
                )
            _, greedy_state, _ = _greedy(word)
            if greedy_state.remaining:
                stalls += 1
                if stall_example is None:
                    stall_example = text
        else:
            witness = report.witness_ordering
            if not contains_subordering(word, witness):
                mismatches.append(
                    {
                        "kind": "witness-not-contained",
                        "ordering": text,
                        "witness": format_ordering(witness),
                    }
                )
            witness_unsortable = (
                not sortable
                if witness == word
                else not oracle_is_sortable(SortState((), witness))
            )
            if not witness_unsortable:
                mismatches.append(
                    {
                        "kind": "witness-sortable",
                        "ordering": text,
                        "witness": format_ordering(witness),
                    }
                )
    return checked, stalls, stall_example, mismatches


def _run_tasks(task_fn, tasks, jobs: int):
    if jobs <= 1 or len(tasks) <= 1:
        for task in tasks:
            yield task_fn(task)
        return
    ctx = get_context("fork")
    with ctx.Pool(processes=jobs) as pool:
        yield from pool.imap(task_fn, tasks, chunksize=1)


def verify_theorem(
    max_len: int, jobs: int = 1, cache: Optional[dict] = None
) -> VerifyReport:
    """Check both halves of the basis theorem for every canonical ordering of
    length <= max_len: oracle-unsortable iff some basis element embeds, and
    the minimally unsortable classes are exactly the basis realizations up to
    that length."""
    start = time.perf_counter()
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    cache = {} if cache is None else cache
    report = VerifyReport(scope={"check": "theorem", "max_len": max_len})
    verdicts: dict = {}
    cache_hits = 0
    counts_by_len = {}
    for length in range(1, max_len + 1):
        # load_cache only keeps fully covered lengths, so one probe suffices
        skip_oracle = tuple([0] * length) in cache
        tasks = [
            (length, prefix, skip_oracle) for prefix in _rgs_prefixes(length)
        ]
        enumerated = 0
        unsortable_count = 0
        for rows in _run_tasks(_theorem_task, tasks, jobs):
            for word, unsortable, witnessed in rows:
                enumerated += 1
                if unsortable is None:
                    cached = cache.get(word)
                    if cached is None:
                        cached = not oracle_is_sortable(SortState((), word))
                    else:
                        cache_hits += 1
                    unsortable = cached
                verdicts[word] = unsortable
                if unsortable:
                    unsortable_count += 1
                if unsortable != witnessed:
                    report.mismatches.append(
                        {
                            "kind": "theorem",
                            "ordering": format_ordering(word),
                            "oracle_unsortable": unsortable,
                            "basis_witness": witnessed,
                        }
                    )
        counts_by_len[length] = {
            "length": length,
            "enumerated": enumerated,
            "sortable": enumerated - unsortable_count,
            "unsortable": unsortable_count,
            "minimal": 0,
        }
    # minimality pass: every single-sock deletion must be sortable; deletions
    # are one sock shorter, so their verdicts are already in hand
    minimal_found: set = set()
    for word, unsortable in verdicts.items():
        if unsortable and all(
            not verdicts[canonicalize(word[:i] + word[i + 1 :])]
            for i in range(len(word))
        ):
            minimal_found.add(word)
            counts_by_len[len(word)]["minimal"] += 1
    expected = {e.realization for e in basis_up_to_length(max_len)}
    for word in sorted(minimal_found - expected):
        report.mismatches.append(
            {"kind": "minimal-not-in-basis", "ordering": format_ordering(word)}
        )
    for word in sorted(expected - minimal_found):
        report.mismatches.append(
            {"kind": "basis-not-minimal", "ordering": format_ordering(word)}
        )
    report.counts = [counts_by_len[n] for n in sorted(counts_by_len)]
    report.scope["cache_hits"] = cache_hits
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    cache.update(verdicts)
    return report


def cross_check(max_len: int, jobs: int = 1) -> VerifyReport:
    """full_sort verdict == oracle verdict on every canonical ordering of
    length <= max_len; successes replay to grouped output, failures carry an
    oracle-confirmed unsortable witness."""
    start = time.perf_counter()
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    report = VerifyReport(scope={"check": "cross", "max_len": max_len})
    for length in range(1, max_len + 1):
        tasks = [(length, p) for p in _rgs_prefixes(length)]
        enumerated = 0
        stalls = 0
        stall_example = None
        for checked, task_stalls, example, mismatches in _run_tasks(
            _cross_task, tasks, jobs
        ):
            enumerated += checked
            stalls += task_stalls
            if stall_example is None and example is not None:
                stall_example = example
            report.mismatches.extend(mismatches)
        row = {
            "length": length,
            "enumerated": enumerated,
            "greedy_stalled_sorted": stalls,
        }
        if stall_example is not None:
            row["stall_example"] = stall_example
        report.counts.append(row)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_inf_unsort(n_max: int) -> VerifyReport:
    """Check the interlace-state observation: (abt_i, I(t_i..t_n) a t_n) is
    unsortable for all 0 <= i <= n <= n_max, and every proper sub-pair of it
    is sortable."""
    start = time.perf_counter()
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    report = VerifyReport(scope={"check": "inf-unsort", "n_max": n_max})
    for n in range(n_max + 1):
        for i in range(n + 1):
            a, b = 0, 1
            ts = tuple(range(2, 2 + (n - i) + 1))  # t_i .. t_n
            stack = (a, b, ts[0])
            rem = interlace(ts) + (a, ts[-1])
            label = f"n={n},i={i}"
            if oracle_is_sortable(SortState(stack, rem)):
                report.mismatches.append(
                    {"kind": "full-state-sortable", "state": label}
                )
            seen = set()
            substates = 0
            for s_bits in range(2 ** len(stack)):
                s_sub = tuple(c for j, c in enumerate(stack) if (s_bits >> j) & 1)
                full_s = len(s_sub) == len(stack)
                for r_bits in range(2 ** len(rem)):
                    r_sub = tuple(c for j, c in enumerate(rem) if (r_bits >> j) & 1)
                    if full_s and len(r_sub) == len(rem):
                        continue
                    key = (s_sub, r_sub)
                    if key in seen:
                        continue
                    seen.add(key)
                    substates += 1
                    if not oracle_is_sortable(SortState(s_sub, r_sub)):
                        report.mismatches.append(
                            {
                                "kind": "substate-unsortable",
                                "state": label,
                                "stack": format_ordering(s_sub),
                                "remaining": format_ordering(r_sub),
                            }
                        )
            report.counts.append({"n": n, "i": i, "substates_checked": substates})
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
