"""Ground-truth brute force over raw foot-sorting steps.

The search pushes the next remaining sock or pops the stack top, pruning any
branch whose stack acquires a sandwich and any pop that would break output
grouping.  Grouping is tracked as (currently open color, finished colors);
a color finishing while socks of it remain is a dead branch, which keeps the
finished set out of the memo key entirely.
"""

from __future__ import annotations

from typing import Optional

from .orderings import Ordering, canonicalize
from .states import SortState, _move, is_block_stack, is_color_sortable


def _check_start(state: SortState) -> None:
    if not is_block_stack(state.stack):
        raise ValueError(f"start stack contains a sandwich: {state}")


def _suffix_masks(remaining: Ordering) -> list:
    masks = [0] * (len(remaining) + 1)
    for i in range(len(remaining) - 1, -1, -1):
        masks[i] = masks[i + 1] | (1 << remaining[i])
    return masks


def oracle_is_sortable(state: SortState) -> bool:
    """True iff some sequence of steps from state empties both components
    with all equal colors consecutive in the output."""
    _check_start(state)
    remaining = state.remaining
    n = len(remaining)
    suffix = _suffix_masks(remaining)
    counts: dict[int, int] = {}
    stack = list(state.stack)
    mask = 0
    for c in stack:
        counts[c] = counts.get(c, 0) + 1
        mask |= 1 << c
    memo: dict = {}

    def dfs(idx: int, open_color: Optional[int]) -> bool:
        nonlocal mask
        if idx == n and not stack:
            return True
        live = mask | suffix[idx]
        if open_color is not None and not (live >> open_color) & 1:
            open_color = None
        key = (tuple(stack), idx, open_color)
        cached = memo.get(key)
        if cached is not None:
            return cached
        memo[key] = False  # cycle-safe default; states form a dag anyway
        result = False
        if stack:
            c = stack[-1]
            if open_color is None or open_color == c:
                stack.pop()
                counts[c] -= 1
                if not counts[c]:
                    mask &= ~(1 << c)
                result = dfs(idx, c)
                stack.append(c)
                counts[c] += 1
                mask |= 1 << c
        if not result and idx < n:
            c = remaining[idx]
            if not (mask >> c) & 1 or stack[-1] == c:
                stack.append(c)
                counts[c] = counts.get(c, 0) + 1
                mask |= 1 << c
                result = dfs(idx + 1, open_color)
                stack.pop()
                counts[c] -= 1
                if not counts[c]:
                    mask &= ~(1 << c)
        memo[key] = result
        return result

    return dfs(0, None)


def oracle_witness(ordering: Ordering):
    """One full step sequence sorting the ordering, with its output word.

    Steps are ("push", input index, color) / ("pop", color); pops are tried
    before pushes, so the witness is reproducible.  None when unsortable.
    """
    state = SortState((), ordering)
    return oracle_state_witness(state)


def oracle_state_witness(state: SortState):
    """Witness search from an arbitrary sandwich-free start state."""
    _check_start(state)
    remaining = state.remaining
    n = len(remaining)
    suffix = _suffix_masks(remaining)
    counts: dict[int, int] = {}
    stack = list(state.stack)
    mask = 0
    for c in stack:
        counts[c] = counts.get(c, 0) + 1
        mask |= 1 << c
    dead: set = set()
    steps: list = []
    output: list = []

    def dfs(idx: int, open_color: Optional[int]) -> bool:
        nonlocal mask
        if idx == n and not stack:
            return True
        live = mask | suffix[idx]
        if open_color is not None and not (live >> open_color) & 1:
            open_color = None
        key = (tuple(stack), idx, open_color)
        if key in dead:
            return False
        if stack:
            c = stack[-1]
            if open_color is None or open_color == c:
                stack.pop()
                counts[c] -= 1
                if not counts[c]:
                    mask &= ~(1 << c)
                steps.append(("pop", c))
                output.append(c)
                if dfs(idx, c):
                    return True
                steps.pop()
                output.pop()
                stack.append(c)
                counts[c] += 1
                mask |= 1 << c
        if idx < n:
            c = remaining[idx]
            if not (mask >> c) & 1 or stack[-1] == c:
                stack.append(c)
                counts[c] = counts.get(c, 0) + 1
                mask |= 1 << c
                steps.append(("push", idx, c))
                if dfs(idx + 1, open_color):
                    return True
                steps.pop()
                stack.pop()
                counts[c] -= 1
                if not counts[c]:
                    mask &= ~(1 << c)
        dead.add(key)
        return False

    if dfs(0, None):
        return list(steps), tuple(output)
    return None


def is_good_sortable(state: SortState, a: int) -> bool:
    """Sortable now, and the state after sorting a stays foot-sortable."""
    if not is_color_sortable(state, a):  # raises if a is absent
        return False
    after, _, _ = _move(state, a)
    return oracle_is_sortable(after)


def is_minimally_unsortable(ordering: Ordering) -> bool:
    """Unsortable, with every single-sock deletion sortable.

    Single deletions suffice: sortability is closed under suborderings, so a
    smaller unsortable subordering forces an unsortable deletion.
    """
    if oracle_is_sortable(SortState((), ordering)):
        return False
    seen: set = set()
    for i in range(len(ordering)):
        smaller = canonicalize(ordering[:i] + ordering[i + 1 :])
        if smaller in seen:
            continue
        seen.add(smaller)
        if not oracle_is_sortable(SortState((), smaller)):
            return False
    return True
