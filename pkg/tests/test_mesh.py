from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from meshlab.mesh import (CATALOG, SYMMETRIES, MeshPattern, PatternParseError, apply_symmetry,
                          catalog, count_many, count_occurrences, is_occurrence, occurrences,
                          parse_pattern, transform_pattern)
from meshlab.perm import all_statistics, identity, iter_all

import oracles
from oracles import perms


@st.composite
def patterns(draw, max_k=3):
    k = draw(st.integers(0, max_k))
    tau = tuple(draw(st.permutations(list(range(1, k + 1)))))
    boxes = [(a, b) for a in range(k + 1) for b in range(k + 1)]
    shaded = draw(st.sets(st.sampled_from(boxes))) if boxes else set()
    return MeshPattern(tau, frozenset(shaded))


def test_parse():
    p = parse_pattern("231|1,2;2,1")
    assert p.tau == (2, 3, 1) and p.shaded == {(1, 2), (2, 1)}
    assert parse_pattern("12|").shaded == frozenset()
    assert parse_pattern("|0,0").k == 0
    assert str(parse_pattern("12|1,2;0,0")) == "12|0,0;1,2"


@pytest.mark.parametrize("text, position", [
    ("21|3,0", 3),
    ("21|0,0;0,0", 7),
    ("21|0,0;x", 7),
    ("21", 2),
    ("21| 0,0", 3),
    ("22|", 0),
])
def test_parse_errors_carry_position(text, position):
    with pytest.raises(PatternParseError) as err:
        parse_pattern(text)
    assert err.value.position == position


@given(patterns())
def test_dsl_round_trip(p):
    assert parse_pattern(str(p)) == p


def test_occurrence_examples():
    p = "231|1,2;2,1"
    assert is_occurrence("346512", p, (2, 3, 6))
    assert not is_occurrence("346512", p, (1, 3, 5))
    assert is_occurrence("2413", "12|", (1, 2))
    assert (2, 3, 6) in occurrences("346512", p)
    assert occurrences(identity(5), "21|") == []
    assert occurrences("21", "21|") == [(1, 2)]
    with pytest.raises(ValueError):
        is_occurrence("123", "12|", (2, 1))
    with pytest.raises(ValueError):
        is_occurrence("123", "12|", (1, 4))


@settings(max_examples=300)
@given(perms(0, 7), patterns())
def test_counting_matches_pointwise_oracle(w, p):
    assert occurrences(w, p) == oracles.occurrences(w, p.tau, p.shaded)


@given(perms(0, 8))
def test_named_patterns_count_statistics(w):
    s = all_statistics(w)
    assert count_occurrences(w, "21|") == s["inv"]
    assert count_occurrences(w, catalog("Nr14")) == s["succ"]
    assert count_occurrences(w, catalog("REC")) == s["rec"]
    assert count_occurrences(w, catalog("AREC")) == s["arec"]
    assert count_occurrences(w, catalog("RAR")) == s["rar"]


def test_catalog_examples():
    assert str(catalog("Nr3")) == "12|0,0;0,1;1,2"
    assert str(catalog("Star1")) == "21|1,0;2,0;2,2"
    assert str(catalog("RAR")) == "1|0,1;1,0"
    assert count_occurrences(identity(6), catalog("Nr14")) == 5
    assert count_occurrences("257189463", catalog("EREC1")) == 5
    with pytest.raises(KeyError):
        catalog("Nr999")


def test_small_distributions():
    assert Counter(count_occurrences(p, "Nr3") for p in iter_all(2)) == {0: 1, 1: 1}
    assert Counter(count_occurrences(p, "Nr3") for p in iter_all(3)) == {0: 1, 1: 4, 2: 1}
    assert Counter(count_occurrences(p, "21|") for p in iter_all(3)) == {0: 1, 1: 2, 2: 2, 3: 1}


def test_transform_examples():
    assert str(transform_pattern(catalog("Nr3"), "complement")) == "21|0,1;0,2;1,0"
    assert str(transform_pattern(catalog("Nr3"), "inverse")) == "12|0,0;1,0;2,1"
    with pytest.raises(ValueError):
        transform_pattern("12|", "rotate")
    with pytest.raises(ValueError):
        apply_symmetry("12", "rotate")


@given(patterns(), st.sampled_from(SYMMETRIES))
def test_transform_is_involution(p, s):
    assert transform_pattern(transform_pattern(p, s), s) == p


@settings(max_examples=200)
@given(perms(0, 7), patterns(), st.sampled_from(SYMMETRIES))
def test_symmetry_compatibility(w, p, s):
    assert count_occurrences(w, p) == count_occurrences(apply_symmetry(w, s), transform_pattern(p, s))


@given(perms(0, 6), st.sampled_from(sorted(CATALOG)), st.data())
def test_adding_a_box_never_increases_count(w, name, data):
    p = CATALOG[name]
    free = [(a, b) for a in range(p.k + 1) for b in range(p.k + 1) if (a, b) not in p.shaded]
    if not free:
        return
    box = data.draw(st.sampled_from(free))
    q = MeshPattern(p.tau, p.shaded | {box})
    assert count_occurrences(w, q) <= count_occurrences(w, p)


def test_count_many_matches_single_counts():
    names = ["Nr3", "Nr48", "Nr53"]
    for p in iter_all(5):
        assert count_many(p, [CATALOG[x] for x in names]) == tuple(count_occurrences(p, CATALOG[x]) for x in names)
