"""The basis of minimally unsortable orderings: three finite classes and five
infinite interlace families, plus the certificate search.

Every unsortable ordering contains some basis element as a subpattern, so a
failed search over all elements short enough to fit certifies sortability.
Realizations are stored canonically; the lettered forms below follow the
source tables and are what the CLI prints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .orderings import (
    Ordering,
    canonicalize,
    find_subpattern,
    format_ordering,
    interlace,
    parse_ordering,
)

# Finite classes, transcribed verbatim.  T groups the three- and four-color
# elements; C1 and C2 are named for how their socks behave under greedy
# sorting.  A checksum test pins this table against typos.
FINITE_TABLE = (
    ("T1", "abacaba"),
    ("T2", "abacbab"),
    ("T3", "abcabca"),
    ("T4", "abcacba"),
    ("T5", "abcabac"),
    ("T6", "abcbacb"),
    ("T7", "abcbabc"),
    ("T8", "abcadcab"),
    ("T9", "abacdcba"),
    ("T10", "abacdcab"),
    ("C1,1", "datdarat"),
    ("C1,2", "atdtarat"),
    ("C1,3", "atdatrat"),
    ("C1,4", "adtdarat"),
    ("C1,5", "atdedarat"),
    ("C1,6", "atdtrart"),
    ("C1,7", "datdrart"),
    ("C1,8", "adtdrart"),
    ("C1,9", "atdedrart"),
    ("C1,10", "atdtarbrt"),
    ("C1,11", "adtdarbrt"),
    ("C1,12", "datdarbrt"),
    ("C1,13", "atdedarbrt"),
    ("C2,1", "abtdatab"),
    ("C2,2", "abtdtatb"),
    ("C2,3", "adbtdabt"),
    ("C2,4", "adbtdatb"),
    ("C2,5", "abdtdatb"),
    ("C2,6", "abtdedabt"),
    ("C2,7", "abtdedatb"),
)

# Family prefixes; each element is prefix + E where E = interlace(T) a t_n
# over fresh colors t_0 .. t_n (t = t_0 appears in the prefix).
INFINITE_PREFIXES = {
    1: "dabtd",
    2: "adbtdb",
    3: "abdtdb",
    4: "abtdtb",
    5: "abtdedb",
}

# Lengths grow as base + 2n.
INFINITE_BASE_LENGTH = {1: 7, 2: 8, 3: 8, 4: 8, 5: 9}

# Letters for t_1, t_2, ... in lettered renderings (t_0 is always 't');
# skips the letters the prefixes use.
_T_LETTERS = "tuvwxyz" + "cfghijklmnopqrs"


@dataclass(frozen=True)
class BasisElement:
    label: str
    lettered: str  # table/constructed form in source letters ("" if too wide)
    realization: Ordering  # canonical

    @property
    def length(self) -> int:
        return len(self.realization)

    def display(self) -> str:
        return self.lettered or format_ordering(self.realization)


def finite_basis_elements() -> list:
    """The 30 finite basis elements, in table order."""
    return [
        BasisElement(label, text, canonicalize(parse_ordering(text)))
        for label, text in FINITE_TABLE
    ]


def infinite_basis_element(family: int, n: int) -> BasisElement:
    """Element n of infinite family 1..5."""
    if family not in INFINITE_PREFIXES:
        raise ValueError(f"family must be 1..5, got {family}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    prefix = INFINITE_PREFIXES[family]
    fixed = sorted(set(prefix))  # letters a, b, d (, e), t
    ids = {ch: i for i, ch in enumerate(fixed)}
    t_ids = [ids["t"]]
    t_ids.extend(range(len(ids), len(ids) + n))
    body = tuple(ids[ch] for ch in prefix)
    tail = interlace(t_ids) + (ids["a"], t_ids[-1])
    realization = canonicalize(body + tail)
    lettered = ""
    if n + 1 <= len(_T_LETTERS):
        letters = {ids["t"]: "t"}
        for i, tid in enumerate(t_ids):
            letters[tid] = _T_LETTERS[i]
        for ch, cid in ids.items():
            letters.setdefault(cid, ch)
        lettered = "".join(letters[c] for c in body + tail)
    return BasisElement(f"I{family},{n}", lettered, realization)


def basis_up_to_length(max_len: int) -> list:
    """Every basis element with realization length <= max_len.

    Ordered by length, finite classes before infinite families at equal
    length, then table/family order; no two elements are equivalent.
    """
    elements = []
    for rank, element in enumerate(finite_basis_elements()):
        if element.length <= max_len:
            elements.append(((element.length, 0, rank), element))
    for family in sorted(INFINITE_PREFIXES):
        n = 0
        while INFINITE_BASE_LENGTH[family] + 2 * n <= max_len:
            element = infinite_basis_element(family, n)
            elements.append(((element.length, 1, family, n), element))
            n += 1
    elements.sort(key=lambda pair: pair[0])
    return [element for _, element in elements]


def find_basis_witness(x: Ordering):
    """Smallest-first search for a basis element embedded in x.

    Returns (element, embedding) for the first hit, None when x avoids the
    whole basis, which certifies sortability.
    """
    for element in basis_up_to_length(len(x)):
        embedding = find_subpattern(x, element.realization)
        if embedding is not None:
            return element, embedding
    return None
