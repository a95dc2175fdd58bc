import math

import pytest
from hypothesis import given

from meshlab.perm import (EnumerationCapError, Permutation, PermutationError, all_statistics,
                          arec_positions, complement, identity, inverse, iter_all, iter_range,
                          max_n, parse_perm, rank, reverse, statistic, unrank, word_complement)

import oracles
from oracles import perms

PI = (2, 5, 7, 1, 8, 9, 4, 6, 3)


def test_construction_and_errors():
    assert Permutation(PI).n == 9
    assert Permutation(()).n == 0
    with pytest.raises(PermutationError, match="index 2: duplicate value 1"):
        Permutation((1, 1))
    with pytest.raises(PermutationError, match="out of range"):
        Permutation((0, 1))
    with pytest.raises(PermutationError):
        parse_perm("12a")


def test_parse_and_format():
    assert parse_perm("257189463").word == PI
    p = parse_perm("10,1,2,3,4,5,6,7,8,9")
    assert str(p) == "10,1,2,3,4,5,6,7,8,9"
    assert p(1) == 10
    with pytest.raises(IndexError):
        p(11)


def test_symmetry_examples():
    assert inverse((2, 3, 1)).word == (3, 1, 2)
    assert reverse((2, 3, 1)).word == (1, 3, 2)
    assert reverse(identity(2)).word == (2, 1)
    assert complement((3, 5, 9, 1, 4, 7, 2, 8, 6)).word == (7, 5, 1, 9, 6, 3, 8, 2, 4)
    assert complement((1,)).word == (1,)


@given(perms())
def test_symmetries_are_involutions(w):
    for f in (inverse, reverse, complement):
        assert f(f(w)).word == w
    # reverse and complement commute; inverse conjugates one into the other
    assert reverse(complement(w)) == complement(reverse(w))
    assert inverse(reverse(w)) == complement(inverse(w))


def test_word_complement():
    assert word_complement([5, 7, 8, 9, 4, 6]) == (8, 6, 5, 4, 9, 7)
    assert word_complement([2, 6, 8]) == (8, 6, 2)
    assert word_complement([4]) == (4,)
    assert word_complement([]) == ()
    with pytest.raises(ValueError):
        word_complement([1, 1])


@given(perms())
def test_word_complement_involution_and_order(w):
    c = word_complement(w)
    assert word_complement(c) == w
    assert sorted(c) == sorted(w)
    assert all((c[i] < c[j]) == (w[i] > w[j]) for i in range(len(w)) for j in range(len(w)))


def test_statistics_examples():
    assert all_statistics(identity(5)) == {"exc": 0, "inv": 0, "rec": 5, "arec": 5,
                                           "erec": 0, "earec": 0, "rar": 5, "succ": 4}
    assert statistic(PI, "arec") == 2
    assert statistic(PI, "erec") == 5
    with pytest.raises(ValueError):
        statistic(PI, "des")


@given(perms(0, 8))
def test_statistics_match_definitions(w):
    assert all_statistics(w) == oracles.statistics(w)


def test_arec_positions():
    assert arec_positions(PI) == (4, 9)
    assert arec_positions((9, 3, 1, 5, 8, 2, 6, 7, 4)) == (3, 6, 9)
    assert arec_positions(identity(6)) == (1, 2, 3, 4, 5, 6)
    assert arec_positions(()) == ()


def test_enumeration_order():
    assert [p.word for p in iter_all(0)] == [()]
    s3 = [p.word for p in iter_all(3)]
    assert len(s3) == 6 and s3[0] == (1, 2, 3) and s3[-1] == (3, 2, 1)
    assert len({p.word for p in iter_all(4)}) == 24
    assert list(iter_range(4, 5, 9)) == [p.word for p in list(iter_all(4))[5:9]]


def test_rank_unrank():
    assert unrank(3, 0).word == (1, 2, 3)
    assert unrank(3, 5).word == (3, 2, 1)
    assert unrank(4, 23).word == (4, 3, 2, 1)
    for r, p in enumerate(iter_all(5)):
        assert rank(p) == r and unrank(5, r) == p
    with pytest.raises(ValueError):
        unrank(3, 6)


def test_enumeration_cap(monkeypatch):
    monkeypatch.delenv("MESHLAB_MAX_N", raising=False)
    assert max_n() == 10
    with pytest.raises(EnumerationCapError, match="MESHLAB_MAX_N"):
        next(iter_all(11))
    monkeypatch.setenv("MESHLAB_MAX_N", "3")
    with pytest.raises(EnumerationCapError):
        list(iter_range(4, 0, 1))
    assert sum(1 for _ in iter_all(3)) == math.factorial(3)
    monkeypatch.setenv("MESHLAB_MAX_N", "many")
    with pytest.raises(EnumerationCapError):
        max_n()
