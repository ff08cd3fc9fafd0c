"""The deterministic sorter: prescribed-order replay, greedy, and the
recursive decision procedure.

full_sort either fully sorts its input and reports the sequence actually
played plus the grouped output word, or reports an unsortable subordering as
a certificate.  Each recursion level removes one color, so the depth is at
most the number of distinct colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .orderings import Ordering, contains_subordering, remove_color
from .states import (
    ContractError,
    SortState,
    Stopped,
    _move,
    blocked_by_color_sandwich,
    first_terminating_sortable,
    is_color_sortable,
    is_terminal,
    stack_blocks,
)


@dataclass(frozen=True)
class SortReport:
    """Result of a sorting run.

    sequence is the list of colors actually sorted (auto-sorted top-of-stack
    colors included).  output_word is present exactly when the run fully
    sorted.  witness_ordering is a subordering of the input; for full_sort
    and sort_helper verdicts with nonempty remaining it is unsortable (for a
    stuck sort_colors replay it is just the input, which proves nothing).
    """

    sequence: tuple
    final_state: SortState
    witness_ordering: Ordering
    output_word: Optional[Ordering]

    @property
    def is_sorted(self) -> bool:
        return self.output_word is not None


def _greedy(ordering: Ordering, stop_colors: frozenset = frozenset()):
    """Greedy loop: repeatedly sort the first-terminating sortable color.

    Stops when nothing is sortable or the selected color is in stop_colors
    (that color is not sorted).  Returns (theta, state, emitted output).
    """
    state = SortState((), ordering)
    theta: list = []
    output: list = []
    while True:
        chosen = first_terminating_sortable(state, stop_colors)
        if chosen is None or isinstance(chosen, Stopped):
            return theta, state, output
        state, emitted, _ = _move(state, chosen)
        theta.append(chosen)
        output.extend(emitted)


def greedy(ordering: Ordering, stop_colors: frozenset = frozenset()):
    """Public greedy front: returns (sorting sequence, final state)."""
    theta, state, _ = _greedy(ordering, frozenset(stop_colors))
    return tuple(theta), state


def sort_colors(ordering: Ordering, sequence) -> SortReport:
    """Sort with a prescribed color order.

    Colors appearing only on top of the stack are sorted immediately; a
    prescribed color no longer present is skipped; the run stops when the
    next prescribed color is unsortable or the prescription runs out early.
    """
    state = SortState((), ordering)
    theta: list = []
    output: list = []
    queue = list(sequence)
    while state.stack or state.remaining:
        stack, remaining = state
        if stack and stack[-1] not in remaining:
            top = stack[-1]
            state, emitted, _ = _move(state, top)
            theta.append(top)
            output.extend(emitted)
            continue
        if not queue:
            return SortReport(tuple(theta), state, ordering, None)
        d = queue.pop(0)
        if d in stack or d in remaining:
            if not is_color_sortable(state, d):
                return SortReport(tuple(theta), state, ordering, None)
            state, emitted, _ = _move(state, d)
            theta.append(d)
            output.extend(emitted)
    return SortReport(tuple(theta), state, ordering, tuple(output))


def replay(ordering: Ordering, sequence):
    """Apply the moves of sequence literally from (∅, X).

    Raises ContractError if any move is illegal.  Returns the final state and
    the emitted output; used to validate reported sorting sequences.
    """
    state = SortState((), ordering)
    output: list = []
    for color in sequence:
        if not is_color_sortable(state, color):
            raise ContractError(f"replay: {color} not sortable in {state}")
        state, emitted, _ = _move(state, color)
        output.extend(emitted)
    return state, tuple(output)


def is_grouped(word: Ordering) -> bool:
    """True iff all socks of each color are consecutive."""
    seen: set = set()
    prev = None
    for c in word:
        if c != prev and c in seen:
            return False
        seen.add(c)
        prev = c
    return True


def full_sort(ordering: Ordering) -> SortReport:
    """Decide sortability and sort when possible.

    Runs greedy; on a stall, identifies a color d whose removal preserves
    sortability (backtracking the greedy run when needed), recurses on X - d,
    and replays the recursive sequence on X.  Unsortable verdicts carry an
    unsortable subordering as witness.
    """
    theta, state, output = _greedy(ordering)
    stack, remaining = state
    if not remaining:
        return SortReport(tuple(theta), state, ordering, tuple(output))
    if not stack:
        return SortReport(tuple(theta), state, ordering, None)
    blocks = stack_blocks(stack)
    for x in blocks:
        if is_terminal(SortState((x,), remaining)):
            witness = (x,) * stack.count(x) + remaining
            return SortReport(tuple(theta), state, witness, None)
    t = blocks[-1]
    b = blocks[-2]
    if not theta:
        raise ContractError("nonempty stack with no color sorted")
    d = theta[-1]
    if is_terminal(SortState((b, t), remaining)):
        return sort_helper(ordering, d, b)
    a = None
    for x in blocks[:-2]:
        if is_terminal(SortState((x, b, t), remaining)):
            a = x
            break
    if a is None:
        raise ContractError(
            f"terminal stall at {state} but no low color closes (a, {b}, {t})"
        )
    rem_colors = set(remaining)
    above_a = blocks[blocks.index(a) + 1 : -1]  # exclusive of a, inclusive of b
    z = next((x for x in above_a if x in rem_colors), None)
    if z is not None:
        if contains_subordering(remaining, (a, z, t)) or contains_subordering(
            remaining, (a, t, z)
        ):
            return sort_helper(ordering, d, a)
        return sort_helper(ordering, d, z)
    # backtrack: rerun greedy, stopping before any color after the final b
    last_b = len(ordering) - 1 - ordering[::-1].index(b)
    before, after = ordering[:last_b], ordering[last_b + 1 :]
    theta2, state2, _ = _greedy(ordering, frozenset(after))
    c = first_terminating_sortable(state2)
    if c is None or isinstance(c, Stopped):
        raise ContractError(f"backtracked state {state2} has nothing to sort")
    if contains_subordering(before, (c, a)):
        return SortReport(tuple(theta), state, ordering, None)
    blocks2 = stack_blocks(state2.stack)
    if not theta2 or len(blocks2) < 2:
        raise ContractError(f"backtracked state {state2} is too shallow")
    return sort_helper(ordering, theta2[-1], blocks2[-2])


def sort_helper(ordering: Ordering, d: int, a: int) -> SortReport:
    """Recursive helper: decide X via X - d unless a d-sandwich blocks a.

    A d-sandwich blocking a proves X unsortable outright.  Otherwise a
    sequence fully sorting X - d fully sorts X exactly when X is sortable,
    so the recursive answer transfers through one sort_colors replay.
    """
    if blocked_by_color_sandwich(ordering, a, d):
        theta, state, _ = _greedy(ordering)
        return SortReport(tuple(theta), state, ordering, None)
    inner = full_sort(remove_color(ordering, d))
    if inner.final_state.remaining:
        return inner
    return sort_colors(ordering, inner.sequence)
