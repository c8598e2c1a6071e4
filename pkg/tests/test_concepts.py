import json

import pytest
from hypothesis import given, settings, strategies as st

from dowkerlab.concepts import (
    FormalConcept,
    brute_force_concepts,
    concepts_to_json,
    derive_down,
    derive_up,
    enumerate_concepts,
    lattice_leq,
)
from dowkerlab.errors import TooLarge, UnknownLabel
from dowkerlab.relation import make_relation, random_relation, transpose

from .conftest import relations


def C(extent, intent):
    return FormalConcept(frozenset(extent), frozenset(intent))


TOY_PROPER = {
    C("a", "24"), C("b", "12"), C("c", "14"), C("d", "13"),
    C("ab", "2"), C("ac", "4"), C("bcd", "1"),
}


def test_derivations_toy(toy):
    assert derive_up(toy, "bcd") == {"1"}
    assert derive_up(toy, "a") == {"2", "4"}
    assert derive_up(toy, []) == set("1234")
    assert derive_down(toy, "1") == {"b", "c", "d"}
    assert derive_down(toy, ["2", "4"]) == {"a"}
    assert derive_down(toy, []) == set("abcd")


def test_derivation_unknown_label(toy):
    with pytest.raises(UnknownLabel):
        derive_up(toy, ["zz"])
    with pytest.raises(UnknownLabel):
        derive_down(toy, ["zz"])


def test_enumerate_toy(toy):
    cs = enumerate_concepts(toy)
    assert len(cs) == 9
    assert {c for c in cs if c.is_proper()} == TOY_PROPER
    assert C("", "1234") in cs and C("abcd", "") in cs


def test_enumerate_toy_lectic_order(toy):
    extents = ["".join(sorted(c.extent)) for c in enumerate_concepts(toy)]
    assert extents == ["", "d", "c", "b", "bcd", "a", "ac", "ab", "abcd"]


def test_enumerate_matches_brute_force_toy(toy):
    assert enumerate_concepts(toy) == brute_force_concepts(toy)


def test_empty_and_full_relations():
    empty = make_relation("ab", "12", [])
    assert set(enumerate_concepts(empty)) == {C("", "12"), C("ab", "")}
    full = make_relation("ab", "12", [(x, y) for x in "ab" for y in "12"])
    assert enumerate_concepts(full) == [C("ab", "12")]


def test_brute_force_small_cases():
    assert set(brute_force_concepts(make_relation("ab", "12", []))) == {C("", "12"), C("ab", "")}
    assert brute_force_concepts(make_relation("a", "1", [("a", "1")])) == [C("a", "1")]


def test_brute_force_guard():
    R = make_relation([f"x{i}" for i in range(21)], ["y"], [])
    with pytest.raises(TooLarge):
        brute_force_concepts(R)


def test_lattice_leq():
    assert lattice_leq(C("a", "24"), C("ab", "2"))
    assert lattice_leq(C("a", "24"), C("a", "24"))
    assert not lattice_leq(C("b", "12"), C("c", "14"))
    assert not lattice_leq(C("c", "14"), C("b", "12"))


@given(relations(max_x=6, max_y=6))
def test_enumerate_equals_brute_force(R):
    assert set(enumerate_concepts(R)) == set(brute_force_concepts(R))
    assert len(enumerate_concepts(R)) == len(set(enumerate_concepts(R)))


@given(relations(max_x=5, max_y=5), st.data())
def test_galois_connection(R, data):
    U = data.draw(st.sets(st.sampled_from(R.x_labels))) if R.x_labels else set()
    V = data.draw(st.sets(st.sampled_from(R.y_labels))) if R.y_labels else set()
    assert (U <= derive_down(R, V)) == (V <= derive_up(R, U))
    assert derive_up(R, derive_down(R, derive_up(R, U))) == derive_up(R, U)
    assert derive_down(R, derive_up(R, derive_down(R, V))) == derive_down(R, V)


@given(relations(max_x=5, max_y=5))
def test_concepts_are_closed_and_maximal(R):
    for c in enumerate_concepts(R):
        assert derive_up(R, c.extent) == c.intent
        assert derive_down(R, c.intent) == c.extent
        assert all((x, y) in R.pairs for x in c.extent for y in c.intent)


@given(relations(max_x=5, max_y=5))
def test_transpose_swaps_concepts(R):
    ours = {(c.extent, c.intent) for c in enumerate_concepts(R)}
    theirs = {(c.intent, c.extent) for c in enumerate_concepts(transpose(R))}
    assert ours == theirs


@given(relations(max_x=5, max_y=5))
def test_leq_is_dual_on_intents(R):
    cs = enumerate_concepts(R)
    for a in cs:
        for b in cs:
            assert lattice_leq(a, b) == (a.intent >= b.intent)


def test_json(toy):
    doc = json.loads(concepts_to_json(enumerate_concepts(toy)))
    assert doc[0] == {"extent": [], "intent": ["1", "2", "3", "4"]}
    assert {"extent": ["b", "c", "d"], "intent": ["1"]} in doc


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_random_medium_relations(seed):
    R = random_relation(8, 8, 0.5, seed=seed)
    assert set(enumerate_concepts(R)) == set(brute_force_concepts(R))
