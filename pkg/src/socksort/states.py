"""The stage calculus: sandwiches, sortable colors, terminal states, moves.

A stage (S, R) holds the stack bottom-to-top and the remaining input.  Every
operation here is a pure function; produced stacks are always sandwich-free,
which for a string means each color's socks form one contiguous block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .orderings import Ordering, format_ordering


class ContractError(RuntimeError):
    """An internal guarantee failed; never expected on valid inputs."""


class SortState(NamedTuple):
    stack: Ordering
    remaining: Ordering

    def __str__(self) -> str:
        s = format_ordering(self.stack) or "∅"
        r = format_ordering(self.remaining) or "∅"
        return f"({s} | {r})"


class Sandwich(NamedTuple):
    outer: int
    inner: int
    positions: tuple  # (i, j, k) indices of outer, inner, outer in the host


class Stopped(NamedTuple):
    """Greedy selection halted: the chosen color is in the stop set."""

    color: int


@dataclass(frozen=True)
class MoveTrace:
    """Step-level record of one move: ("push", i, color) / ("pop", color).

    Push indices count into the remaining input as it stood when the move
    began.
    """

    color: int
    steps: tuple


def stack_blocks(stack: Ordering) -> list:
    """Colors of the stack bottom-to-top, one entry per contiguous block."""
    blocks = []
    for c in stack:
        if not blocks or blocks[-1] != c:
            blocks.append(c)
    return blocks


def is_block_stack(stack: Ordering) -> bool:
    """Sandwich-freeness for a stack: every color is one contiguous block."""
    blocks = stack_blocks(stack)
    return len(blocks) == len(set(blocks))


def _blocked_colors(word: Ordering) -> set:
    """Colors a for which some sandwich xyx (x, y != a) completes before the
    final a in word.

    One left-to-right scan; O(len * colors).
    """
    last: dict[int, int] = {}
    for i, c in enumerate(word):
        last[c] = i
    first: dict[int, int] = {}
    inner: dict[int, set] = {}
    blocked: set = set()
    pending = set(last)
    for k, c in enumerate(word):
        if not pending:
            break
        for u in inner:
            if u != c:
                inner[u].add(c)
        if c in first:
            inners = inner[c]
            if inners:
                # this completion blocks every a except c itself and, when the
                # inner choice is unique, that single inner color
                single = next(iter(inners)) if len(inners) == 1 else None
                newly = [
                    a
                    for a in pending
                    if last[a] > k and a != c and (single is None or a != single)
                ]
                for a in newly:
                    blocked.add(a)
                    pending.discard(a)
        else:
            first[c] = k
            inner[c] = set()
    return blocked


def first_blocking_sandwich(word: Ordering, a: int) -> Optional[Sandwich]:
    """The earliest sandwich xyx (x, y != a) with an a after its completing x.

    Sandwich occurrences order by completing position, then middle position
    (ties happen only when the completing sock is shared), then first
    position.  None when a is unblocked in word.
    """
    if a not in word:
        raise ValueError(f"color {a} does not appear")
    best: Optional[tuple] = None
    last_a = len(word) - 1 - word[::-1].index(a)
    first: dict[int, int] = {}
    for k, c in enumerate(word):
        if k >= last_a:
            break
        if c == a:
            continue
        if c in first:
            i = first[c]
            for j in range(i + 1, k):
                if word[j] != c and word[j] != a:
                    cand = (k, j, i)
                    if best is None or cand < best:
                        best = cand
                    break
        else:
            first[c] = k
    if best is None:
        return None
    k, j, i = best
    return Sandwich(word[i], word[j], (i, j, k))


def sortable_colors(state: SortState) -> set:
    """The set of sortable colors at (S, R)."""
    stack, remaining = state
    word = stack + remaining
    colors = set(word)
    out: set = set()
    blocks = stack_blocks(stack)
    buried = set(blocks[:-1])
    rem_colors = set(remaining)
    blocked = _blocked_colors(word) if rem_colors else set()
    for a in colors:
        if a in buried:
            continue
        if a in rem_colors and a in blocked:
            continue
        out.add(a)
    return out


def is_color_sortable(state: SortState, a: int) -> bool:
    """True iff a is top-of-stack only (if stacked) and, when a remains in R,
    no sandwich of two other colors blocks it in S·R."""
    if a not in state.stack and a not in state.remaining:
        raise ValueError(f"color {a} does not appear in the state")
    return a in sortable_colors(state)


def is_terminal(state: SortState) -> bool:
    """True iff no color is sortable; the empty state reports False."""
    if not state.stack and not state.remaining:
        return False
    return not sortable_colors(state)


def _move(state: SortState, a: int):
    """Sort color a (no validation).  Returns (new state, emitted, steps)."""
    stack, remaining = state
    top = len(stack)
    while top and stack[top - 1] == a:
        top -= 1
    new_stack = list(stack[:top])
    steps = [("pop", a)] * (len(stack) - top)
    emitted = [a] * (len(stack) - top)
    if a in remaining:
        final = len(remaining) - 1 - remaining[::-1].index(a)
        for i in range(final + 1):
            c = remaining[i]
            steps.append(("push", i, c))
            if c == a:
                steps.append(("pop", a))
                emitted.append(a)
            else:
                new_stack.append(c)
        remaining = remaining[final + 1 :]
    result = SortState(tuple(new_stack), remaining)
    if not is_block_stack(result.stack):
        raise ContractError(
            f"move of {a} left a sandwich on the stack: {result}"
        )
    return result, emitted, steps


def apply_move(state: SortState, a: int):
    """Sort color a at a stage where it is sortable.

    Pops a's top block, then streams the remaining input up to a's final
    sock, stacking other colors and passing a through to the output.
    Returns the new state and a MoveTrace.
    """
    if not is_color_sortable(state, a):
        raise ContractError(f"color {a} is not sortable in {state}")
    result, _, steps = _move(state, a)
    return result, MoveTrace(a, tuple(steps))


def first_terminating_sortable(
    state: SortState, stop_colors: frozenset = frozenset()
) -> Union[int, Stopped, None]:
    """The sortable color whose final sock comes earliest in S·R.

    Returns Stopped(c) when that color is in stop_colors, None when nothing
    is sortable.  Final socks are distinct, so there are no ties.
    """
    candidates = sortable_colors(state)
    if not candidates:
        return None
    word = state.stack + state.remaining
    last: dict[int, int] = {}
    for i, c in enumerate(word):
        last[c] = i
    chosen = min(candidates, key=lambda c: last[c])
    if chosen in stop_colors:
        return Stopped(chosen)
    return chosen


def blocked_by_color_sandwich(word: Ordering, a: int, d: int) -> bool:
    """True iff a sandwich containing color d (as outer or inner) blocks a."""
    first: dict[int, int] = {}
    inner: dict[int, set] = {}
    if a not in word:
        return False
    last_a = len(word) - 1 - word[::-1].index(a)
    for k, c in enumerate(word):
        if k >= last_a:
            return False
        for u in inner:
            if u != c:
                inner[u].add(c)
        if c in first:
            if c != a:
                inners = inner[c]
                if c == d:
                    if any(v != a for v in inners):
                        return True
                elif d != a and d in inners:
                    return True
        else:
            first[c] = k
            inner[c] = set()
    return False
