"""Permutations in one-line notation, their symmetries and classical statistics.

Positions and values are 1-based, as in ``pi = pi(1) pi(2) ... pi(n)``.

>>> p = parse_perm("257189463")
>>> arec_positions(p)
(4, 9)
>>> str(complement(parse_perm("359147286")))
'751963824'
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import islice, permutations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "PermutationError", "EnumerationCapError", "STATISTICS",
    "from_word", "parse_perm", "identity", "inverse", "reverse", "complement",
    "word_complement", "statistic", "all_statistics", "arec_positions",
    "max_n", "iter_all", "iter_range", "unrank", "rank",
]

DEFAULT_MAX_N = 10

STATISTICS = ("exc", "inv", "rec", "arec", "erec", "earec", "rar", "succ")


class PermutationError(ValueError):
    pass


class EnumerationCapError(ValueError):
    pass


def _check_word(word: Sequence[int]) -> None:
    n = len(word)
    seen = set()
    for i, v in enumerate(word, start=1):
        if not isinstance(v, int) or isinstance(v, bool):
            raise PermutationError(f"index {i}: {v!r} is not an integer")
        if v < 1 or v > n:
            raise PermutationError(f"index {i}: value {v} out of range 1..{n}")
        if v in seen:
            raise PermutationError(f"index {i}: duplicate value {v}")
        seen.add(v)


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``{1..n}`` stored as its one-line word."""

    word: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.word, tuple):
            object.__setattr__(self, "word", tuple(self.word))
        _check_word(self.word)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self):
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __call__(self, i: int) -> int:
        """Value at 1-based position ``i``."""
        if not 1 <= i <= len(self.word):
            raise IndexError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    def __str__(self):
        if len(self.word) <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __repr__(self):
        return f"Permutation({str(self)!r})"


def from_word(values: Iterable[int]) -> Permutation:
    return Permutation(tuple(values))


def parse_perm(text: str) -> Permutation:
    """Parse ``"257189463"`` or ``"10,3,1,..."``; commas are required for n >= 10."""
    text = text.strip()
    if not text:
        return Permutation(())
    try:
        if "," in text:
            values = [int(tok) for tok in text.split(",")]
        else:
            values = [int(ch) for ch in text]
    except ValueError:
        raise PermutationError(f"cannot parse permutation {text!r}") from None
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def _word(p) -> tuple[int, ...]:
    if isinstance(p, Permutation):
        return p.word
    if isinstance(p, str):
        return parse_perm(p).word
    return tuple(p)


def inverse(p: Permutation) -> Permutation:
    w = _word(p)
    inv = [0] * len(w)
    for i, v in enumerate(w, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def reverse(p: Permutation) -> Permutation:
    return Permutation(_word(p)[::-1])


def complement(p: Permutation) -> Permutation:
    w = _word(p)
    m = len(w) + 1
    return Permutation(tuple(m - v for v in w))


def word_complement(w: Sequence[int]) -> tuple[int, ...]:
    """Swap the j-th smallest and j-th largest letters of ``w`` for every j.

    >>> word_complement([5, 7, 8, 9, 4, 6])
    (8, 6, 5, 4, 9, 7)
    """
    letters = sorted(w)
    if len(set(letters)) != len(letters):
        raise ValueError(f"word {tuple(w)} has repeated letters")
    swap = dict(zip(letters, reversed(letters)))
    return tuple(swap[a] for a in w)


def _records(w: Sequence[int]) -> list[bool]:
    out = []
    best = 0
    for v in w:
        out.append(v > best)
        best = max(best, v)
    return out


def _antirecords(w: Sequence[int]) -> list[bool]:
    out = [False] * len(w)
    low = len(w) + 1
    for i in range(len(w) - 1, -1, -1):
        if w[i] < low:
            out[i] = True
            low = w[i]
    return out


def all_statistics(p) -> dict[str, int]:
    """All eight statistics of ``p`` in one pass, keyed by name."""
    w = _word(p)
    n = len(w)
    rec = _records(w)
    arec = _antirecords(w)
    both = sum(1 for a, b in zip(rec, arec) if a and b)
    inv = sum(1 for i in range(n) for j in range(i) if w[j] > w[i])
    return {
        "exc": sum(1 for i, v in enumerate(w, start=1) if v > i),
        "inv": inv,
        "rec": sum(rec),
        "arec": sum(arec),
        "erec": sum(rec) - both,
        "earec": sum(arec) - both,
        "rar": both,
        "succ": sum(1 for i in range(1, n) if w[i] == w[i - 1] + 1),
    }


def statistic(p, kind: str) -> int:
    if kind not in STATISTICS:
        raise ValueError(f"unknown statistic {kind!r}; expected one of {STATISTICS}")
    return all_statistics(p)[kind]


def arec_positions(p) -> tuple[int, ...]:
    """Increasing positions ``i`` with ``pi(j) > pi(i)`` for every ``j > i``."""
    return tuple(i for i, a in enumerate(_antirecords(_word(p)), start=1) if a)


def max_n() -> int:
    """Enumeration cap; ``MESHLAB_MAX_N`` overrides the default of 10."""
    raw = os.environ.get("MESHLAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise EnumerationCapError(f"MESHLAB_MAX_N={raw!r} is not an integer") from None


def _check_cap(n: int, cap: int | None) -> None:
    cap = max_n() if cap is None else cap
    if n < 0:
        raise ValueError(f"length must be nonnegative, got {n}")
    if n > cap:
        raise EnumerationCapError(
            f"refusing to enumerate S_{n} ({math.factorial(n)} permutations): "
            f"cap is n <= {cap}; raise it with MESHLAB_MAX_N"
        )


def iter_all(n: int, cap: int | None = None) -> Iterator[Permutation]:
    """Every permutation of length ``n`` in lexicographic order."""
    _check_cap(n, cap)
    for w in permutations(range(1, n + 1)):
        yield Permutation(w)


def iter_range(n: int, start: int, stop: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Raw words with lexicographic rank in ``[start, stop)``."""
    _check_cap(n, cap)
    return islice(permutations(range(1, n + 1)), start, stop)


def unrank(n: int, r: int) -> Permutation:
    total = math.factorial(n)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range 0..{total - 1}")
    pool = list(range(1, n + 1))
    out = []
    for i in range(n, 0, -1):
        f = math.factorial(i - 1)
        d, r = divmod(r, f)
        out.append(pool.pop(d))
    return Permutation(tuple(out))


def rank(p) -> int:
    w = _word(p)
    pool = sorted(w)
    r = 0
    for i, v in enumerate(w):
        d = pool.index(v)
        r += d * math.factorial(len(w) - 1 - i)
        pool.pop(d)
    return r
