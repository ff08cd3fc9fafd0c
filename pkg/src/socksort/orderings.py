"""Sock orderings: parsing, canonical forms, containment and pattern matching.

An ordering is a plain tuple of color ids (small non-negative ints).  Letter
text maps 'a'..'z' onto ids 0..25, so parse/format round-trip exactly; token
text ("red,blue,red") numbers tokens by first appearance.  Canonical form is
the first-occurrence relabeling, which makes equivalence a tuple equality.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

Ordering = tuple  # tuple[int, ...]


class ParseError(ValueError):
    """Raised on malformed ordering text; carries the byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def parse_ordering(text: str, token_mode: bool = False) -> Ordering:
    """Parse ordering text into a tuple of color ids.

    Letter mode accepts [a-z]* with 'a' -> 0 ... 'z' -> 25.  Token mode
    accepts comma-separated nonempty tokens, numbered by first appearance.
    """
    if token_mode:
        if text == "":
            return ()
        ids: dict[str, int] = {}
        socks = []
        offset = 0
        for token in text.split(","):
            if token == "":
                raise ParseError("empty token", offset)
            if token not in ids:
                ids[token] = len(ids)
            socks.append(ids[token])
            offset += len(token) + 1
        return tuple(socks)
    for i, ch in enumerate(text):
        if not "a" <= ch <= "z":
            raise ParseError(f"invalid character {ch!r}", i)
    return tuple(ord(ch) - 97 for ch in text)


def format_color(c: int) -> str:
    return chr(97 + c) if c < 26 else f"c{c}"


def format_ordering(x: Ordering) -> str:
    """Render an ordering as letters, or c0,c1,... once ids pass 'z'."""
    if all(c < 26 for c in x):
        return "".join(chr(97 + c) for c in x)
    return ",".join(f"c{c}" for c in x)


def read_corpus(path: str, token_mode: bool = False) -> list[Ordering]:
    """Read a newline-delimited corpus file; '#' comments and blanks ignored."""
    out = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            out.append(parse_ordering(line, token_mode))
    return out


def canonicalize(x: Ordering) -> Ordering:
    """Relabel colors by first appearance; the unique class representative."""
    ids: dict[int, int] = {}
    out = []
    for c in x:
        if c not in ids:
            ids[c] = len(ids)
        out.append(ids[c])
    return tuple(out)


def equivalent(x: Ordering, z: Ordering) -> bool:
    """True iff some bijective recoloring carries x onto z sock-by-sock."""
    return len(x) == len(z) and canonicalize(x) == canonicalize(z)


def contains_subordering(x: Ordering, y: Ordering) -> bool:
    """True iff y is a subsequence of x with literal color equality."""
    it = iter(x)
    return all(c in it for c in y)


def remove_color(x: Ordering, a: int) -> Ordering:
    """Delete every sock of color a, preserving the order of the rest."""
    return tuple(c for c in x if c != a)


def interlace(colors: Iterable[int]) -> Ordering:
    """The interleaving t1 t0 t2 t1 ... tn t(n-1) of n+1 distinct colors.

    Empty for a single color; length 2n in general.
    """
    seq = tuple(colors)
    if not seq:
        raise ValueError("interlace needs at least one color")
    if len(set(seq)) != len(seq):
        raise ValueError("interlace colors must be pairwise distinct")
    out: list[int] = []
    for i in range(1, len(seq)):
        out.append(seq[i])
        out.append(seq[i - 1])
    return tuple(out)


@dataclass(frozen=True)
class Embedding:
    """A witness that a pattern occurs in a host up to injective recoloring.

    positions are strictly increasing host indices; mapping sends pattern
    colors to host colors.  host[positions[i]] == mapping[pattern[i]].
    """

    positions: tuple
    mapping: dict

    def validates(self, host: Ordering, pattern: Ordering) -> bool:
        if len(self.positions) != len(pattern):
            return False
        if any(q <= p for p, q in zip(self.positions, self.positions[1:])):
            return False
        values = list(self.mapping.values())
        if len(set(values)) != len(values):
            return False
        return all(
            0 <= p < len(host) and host[p] == self.mapping.get(c)
            for p, c in zip(self.positions, pattern)
        )


def _count_profile_fits(host: Ordering, pattern: Ordering) -> bool:
    # necessary condition: k-th largest pattern color count <= k-th largest host count
    hc: dict[int, int] = {}
    for c in host:
        hc[c] = hc.get(c, 0) + 1
    pc: dict[int, int] = {}
    for c in pattern:
        pc[c] = pc.get(c, 0) + 1
    if len(pc) > len(hc):
        return False
    hs = sorted(hc.values(), reverse=True)
    ps = sorted(pc.values(), reverse=True)
    return all(p <= h for p, h in zip(ps, hs))


def find_subpattern(host: Ordering, pattern: Ordering) -> Optional[Embedding]:
    """Search for an embedding of pattern into host (subsequence + injective
    recoloring); None when host avoids the pattern.

    Backtracks over color assignments; positions extend greedy-leftmost, which
    is exchange-safe once a color is pinned.
    """
    n, m = len(host), len(pattern)
    if m == 0:
        return Embedding((), {})
    if m > n or not _count_profile_fits(host, pattern):
        return None

    occ: dict[int, list[int]] = {}
    for i, c in enumerate(host):
        occ.setdefault(c, []).append(i)

    mapping: dict[int, int] = {}
    used: set[int] = set()
    positions: list[int] = []

    def leftmost(color: int, start: int) -> Optional[int]:
        lst = occ[color]
        j = bisect_left(lst, start)
        return lst[j] if j < len(lst) else None

    def extend(p: int, start: int) -> bool:
        if p == m:
            return True
        if n - start < m - p:
            return False
        c = pattern[p]
        if c in mapping:
            k = leftmost(mapping[c], start)
            if k is None:
                return False
            positions.append(k)
            if extend(p + 1, k + 1):
                return True
            positions.pop()
            return False
        tried: set[int] = set()
        for k in range(start, n - (m - p) + 1):
            hc = host[k]
            if hc in tried or hc in used:
                continue
            tried.add(hc)
            mapping[c] = hc
            used.add(hc)
            positions.append(k)
            if extend(p + 1, k + 1):
                return True
            positions.pop()
            used.discard(hc)
            del mapping[c]
        return False

    if extend(0, 0):
        return Embedding(tuple(positions), dict(mapping))
    return None


def all_embeddings(host: Ordering, pattern: Ordering) -> Iterator[Embedding]:
    """Brute enumeration of every embedding (test oracle for find_subpattern)."""
    from itertools import combinations

    n, m = len(host), len(pattern)
    if m == 0:
        yield Embedding((), {})
        return
    for positions in combinations(range(n), m):
        mapping: dict[int, int] = {}
        ok = True
        for p, c in zip(positions, pattern):
            if mapping.setdefault(c, host[p]) != host[p]:
                ok = False
                break
        if ok and len(set(mapping.values())) == len(mapping):
            yield Embedding(tuple(positions), mapping)
