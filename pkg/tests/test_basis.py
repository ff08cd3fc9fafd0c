"""Basis tests: table transcription, family construction, witness search."""

from __future__ import annotations

import hashlib

import pytest

from socksort.basis import (
    FINITE_TABLE,
    basis_up_to_length,
    find_basis_witness,
    finite_basis_elements,
    infinite_basis_element,
)
from socksort.oracle import is_minimally_unsortable, oracle_is_sortable
from socksort.orderings import (
    canonicalize,
    contains_subordering,
    equivalent,
    parse_ordering,
)
from socksort.states import SortState

w = parse_ordering

# pins the literal transcription of the finite tables
TABLE_SHA256 = "915ae0fd43514e9494487374ce7a9d4ca673924baca357f8200789d189ab5186"


class TestFiniteTable:
    def test_checksum(self):
        joined = "|".join(f"{label}:{text}" for label, text in FINITE_TABLE)
        assert hashlib.sha256(joined.encode()).hexdigest() == TABLE_SHA256

    def test_count_is_thirty(self):
        elements = finite_basis_elements()
        assert len(elements) == 30
        labels = [e.label for e in elements]
        assert sum(1 for name in labels if name.startswith("T")) == 10
        assert sum(1 for name in labels if name.startswith("C1,")) == 13
        assert sum(1 for name in labels if name.startswith("C2,")) == 7

    def test_named_entries(self):
        by_label = {e.label: e for e in finite_basis_elements()}
        assert by_label["T1"].realization == canonicalize(w("abacaba"))
        assert by_label["C1,1"].realization == canonicalize(w("datdarat"))
        assert by_label["C2,7"].realization == canonicalize(w("abtdedatb"))

    def test_realizations_are_canonical(self):
        for element in finite_basis_elements():
            assert element.realization == canonicalize(element.realization)
            assert equivalent(element.realization, w(element.lettered))

    def test_c1_seed_suborderings(self):
        # every C1 row literally contains one of the three seed suborderings
        seeds = [w("atdarat"), w("atdrart"), w("atdarbrt")]
        for element in finite_basis_elements():
            if not element.label.startswith("C1"):
                continue
            host = w(element.lettered)
            assert any(contains_subordering(host, s) for s in seeds), element.label

    def test_c2_seed_suborderings(self):
        seeds = [w("abtdabt"), w("abtdatb")]
        for element in finite_basis_elements():
            if not element.label.startswith("C2"):
                continue
            host = w(element.lettered)
            assert any(contains_subordering(host, s) for s in seeds), element.label


class TestInfiniteFamilies:
    def test_family_one_base(self):
        assert infinite_basis_element(1, 0).lettered == "dabtdat"

    def test_family_one_next(self):
        assert infinite_basis_element(1, 1).lettered == "dabtdutau"

    def test_family_five_base(self):
        assert infinite_basis_element(5, 0).lettered == "abtdedbat"

    def test_lengths(self):
        bases = {1: 7, 2: 8, 3: 8, 4: 8, 5: 9}
        for family, base in bases.items():
            for n in range(5):
                element = infinite_basis_element(family, n)
                assert element.length == base + 2 * n

    def test_negative_n_rejected(self):
        with pytest.raises(ValueError):
            infinite_basis_element(1, -1)

    def test_bad_family_rejected(self):
        with pytest.raises(ValueError):
            infinite_basis_element(6, 0)

    def test_realizations_canonical(self):
        for family in (1, 2, 3, 4, 5):
            element = infinite_basis_element(family, 2)
            assert element.realization == canonicalize(element.realization)
            assert equivalent(element.realization, w(element.lettered))


class TestBasisUpToLength:
    def test_below_shortest(self):
        assert basis_up_to_length(6) == []

    def test_length_seven_slice(self):
        labels = [e.label for e in basis_up_to_length(7)]
        assert labels == ["T1", "T2", "T3", "T4", "T5", "T6", "T7", "I1,0"]

    def test_length_ten(self):
        elements = basis_up_to_length(10)
        labels = {e.label for e in elements}
        assert len(elements) == 39
        assert {"I5,0", "I2,1", "I3,1", "I4,1", "C1,13", "I1,1"} <= labels
        assert all(e.length <= 10 for e in elements)

    def test_sorted_by_length_finite_first(self):
        elements = basis_up_to_length(10)
        lengths = [e.length for e in elements]
        assert lengths == sorted(lengths)
        for left, right in zip(elements, elements[1:]):
            if left.length == right.length and left.label.startswith("I"):
                assert right.label.startswith("I")

    def test_pairwise_inequivalent_up_to_13(self):
        elements = basis_up_to_length(13)
        realizations = [e.realization for e in elements]
        assert len(set(realizations)) == len(realizations)


class TestMinimality:
    def test_every_element_minimally_unsortable(self):
        for element in finite_basis_elements():
            assert is_minimally_unsortable(element.realization), element.label
        for family in (1, 2, 3, 4, 5):
            for n in range(4):
                element = infinite_basis_element(family, n)
                assert is_minimally_unsortable(element.realization), element.label


class TestFindWitness:
    def test_identity_embedding(self):
        element, embedding = find_basis_witness(w("abacaba"))
        assert element.label == "T1"
        assert embedding.positions == (0, 1, 2, 3, 4, 5, 6)

    def test_padded_host(self):
        element, embedding = find_basis_witness(w("aabacaba"))
        assert element.label == "T1"
        assert embedding.validates(w("aabacaba"), element.realization)

    def test_sortable_host(self):
        assert find_basis_witness(w("abcabc")) is None

    def test_agrees_with_oracle_on_small_hosts(self):
        from socksort.verify import enumerate_canonical

        for n in range(1, 9):
            for word in enumerate_canonical(n):
                witnessed = find_basis_witness(word) is not None
                unsortable = not oracle_is_sortable(SortState((), word))
                assert witnessed == unsortable, word
