"""Mesh patterns: parsing, occurrence counting, symmetries and the named catalog.

A mesh pattern is a word ``tau`` of length k together with a set of shaded
boxes ``(a, b)``, ``0 <= a, b <= k``.  Relative to an occurrence at indices
``i_1 < ... < i_k`` with sorted values ``v_1 < ... < v_k`` (and sentinels
``i_0 = v_0 = 0``, ``i_{k+1} = v_{k+1} = n + 1``), box ``(a, b)`` is the open
rectangle ``i_a < m < i_{a+1}``, ``v_b < pi(m) < v_{b+1}``; an occurrence
must leave every shaded rectangle empty.

>>> (2, 3, 6) in occurrences(parse_perm("346512"), parse_pattern("231|1,2;2,1"))
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .perm import Permutation, PermutationError, _word, complement, inverse, parse_perm, reverse

__all__ = [
    "MeshPattern", "PatternParseError", "parse_pattern", "is_occurrence",
    "occurrences", "count_occurrences", "count_many", "transform_pattern",
    "catalog", "CATALOG", "SYMMETRIES", "apply_symmetry",
]

SYMMETRIES = ("reverse", "complement", "inverse")


class PatternParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True)
class MeshPattern:
    tau: tuple[int, ...]
    shaded: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "tau", _word(self.tau))
        object.__setattr__(self, "shaded", frozenset(self.shaded))
        Permutation(self.tau)
        k = len(self.tau)
        for a, b in self.shaded:
            if not (0 <= a <= k and 0 <= b <= k):
                raise ValueError(f"box ({a},{b}) out of range for pattern length {k}")

    @property
    def k(self) -> int:
        return len(self.tau)

    def boxes(self) -> list[tuple[int, int]]:
        return sorted(self.shaded)

    def __str__(self):
        return str(Permutation(self.tau)) + "|" + ";".join(f"{a},{b}" for a, b in self.boxes())

    def __repr__(self):
        return f"MeshPattern({str(self)!r})"


_BOX_RE = re.compile(r"(\d+),(\d+)")


def parse_pattern(text: str) -> MeshPattern:
    """Parse the ``<tau>|<a>,<b>;<a>,<b>...`` notation, e.g. ``"231|1,2;2,1"``."""
    if any(ch.isspace() for ch in text):
        raise PatternParseError("whitespace is not allowed", next(i for i, c in enumerate(text) if c.isspace()))
    bar = text.find("|")
    if bar < 0:
        raise PatternParseError("missing '|' separator", len(text))
    try:
        tau = parse_perm(text[:bar]).word
    except PermutationError as exc:
        raise PatternParseError(f"malformed pattern word: {exc}", 0) from None
    k = len(tau)
    boxes: list[tuple[int, int]] = []
    rest = text[bar + 1:]
    pos = bar + 1
    if rest:
        for chunk in rest.split(";"):
            m = _BOX_RE.fullmatch(chunk)
            if m is None:
                raise PatternParseError(f"malformed box {chunk!r}", pos)
            box = (int(m.group(1)), int(m.group(2)))
            if not (box[0] <= k and box[1] <= k):
                raise PatternParseError(f"box {box} out of range for k={k}", pos)
            if box in boxes:
                raise PatternParseError(f"duplicate box {box}", pos)
            boxes.append(box)
            pos += len(chunk) + 1
    return MeshPattern(tau, frozenset(boxes))


_parse_cached = lru_cache(maxsize=1024)(parse_pattern)


def _as_pattern(p) -> MeshPattern:
    """A MeshPattern, pattern text, or a catalog name such as ``"Nr3"``."""
    if isinstance(p, MeshPattern):
        return p
    if "|" not in p and p in CATALOG:
        return CATALOG[p]
    return _parse_cached(p)


@lru_cache(maxsize=512)
def _prefix_table(word: tuple[int, ...]) -> tuple[int, list[int]]:
    """Row-major ``P[x*(n+2)+y]`` = #points with position <= x and value <= y."""
    n = len(word)
    size = n + 2
    table = [0] * (size * size)
    for x in range(1, size):
        v = word[x - 1] if x <= n else None
        row, prev = x * size, (x - 1) * size
        hit = 0
        for y in range(size):
            if v is not None and v == y:
                hit = 1
            table[row + y] = table[prev + y] + hit
    return size, table


def _rect_empty(size: int, table: list[int], x1: int, x2: int, y1: int, y2: int) -> bool:
    # open rectangle x1 < pos < x2, y1 < val < y2
    if x2 - x1 < 2 or y2 - y1 < 2:
        return True
    hx, hy = x2 - 1, y2 - 1
    return (table[hx * size + hy] - table[x1 * size + hy]
            - table[hx * size + y1] + table[x1 * size + y1]) == 0


def _boxes_empty(word, pattern: MeshPattern, idx: Sequence[int]) -> bool:
    n = len(word)
    size, table = _prefix_table(word)
    xs = (0, *idx, n + 1)
    ys = (0, *sorted(word[i - 1] for i in idx), n + 1)
    for a, b in pattern.shaded:
        if not _rect_empty(size, table, xs[a], xs[a + 1], ys[b], ys[b + 1]):
            return False
    return True


def _order_isomorphic(values: Sequence[int], tau: Sequence[int]) -> bool:
    ranked = sorted(range(len(values)), key=values.__getitem__)
    return all(tau[j] == r + 1 for r, j in enumerate(ranked))


def is_occurrence(perm, pattern, occ: Sequence[int]) -> bool:
    """Whether the 1-based index tuple ``occ`` is an occurrence of ``pattern``."""
    word = _word(perm)
    pattern = _as_pattern(pattern)
    occ = tuple(occ)
    if len(occ) != pattern.k or any(not 1 <= i <= len(word) for i in occ):
        raise ValueError(f"occurrence {occ} malformed for pattern length {pattern.k} and n={len(word)}")
    if any(a >= b for a, b in zip(occ, occ[1:])):
        raise ValueError(f"occurrence {occ} is not strictly increasing")
    if not _order_isomorphic([word[i - 1] for i in occ], pattern.tau):
        return False
    return _boxes_empty(word, pattern, occ)


def _iter_occurrences(word, pattern: MeshPattern):
    n, k, tau = len(word), pattern.k, pattern.tau
    if k == 0:
        if _boxes_empty(word, pattern, ()):
            yield ()
        return
    if k == 1:
        for i in range(1, n + 1):
            if _boxes_empty(word, pattern, (i,)):
                yield (i,)
        return
    if k == 2:
        up = tau[0] < tau[1]
        for i in range(1, n):
            a = word[i - 1]
            for j in range(i + 1, n + 1):
                if (a < word[j - 1]) == up and _boxes_empty(word, pattern, (i, j)):
                    yield (i, j)
        return
    for occ in combinations(range(1, n + 1), k):
        if _order_isomorphic([word[i - 1] for i in occ], tau) and _boxes_empty(word, pattern, occ):
            yield occ


def occurrences(perm, pattern) -> list[tuple[int, ...]]:
    """All occurrences as 1-based index tuples, in lexicographic order."""
    return list(_iter_occurrences(_word(perm), _as_pattern(pattern)))


def count_occurrences(perm, pattern) -> int:
    return sum(1 for _ in _iter_occurrences(_word(perm), _as_pattern(pattern)))


def count_many(perm, patterns: Iterable) -> tuple[int, ...]:
    word = _word(perm)
    return tuple(sum(1 for _ in _iter_occurrences(word, _as_pattern(p))) for p in patterns)


def transform_pattern(pattern, symmetry: str) -> MeshPattern:
    """The pattern ``q`` with ``count(pi, pattern) == count(s(pi), q)``.

    Boxes move as ``(a, b) -> (k-a, b)`` under reverse, ``(a, k-b)`` under
    complement and ``(b, a)`` under inverse.
    """
    p = _as_pattern(pattern)
    k = p.k
    if symmetry == "reverse":
        return MeshPattern(reverse(p.tau).word, frozenset((k - a, b) for a, b in p.shaded))
    if symmetry == "complement":
        return MeshPattern(complement(p.tau).word, frozenset((a, k - b) for a, b in p.shaded))
    if symmetry == "inverse":
        return MeshPattern(inverse(p.tau).word, frozenset((b, a) for a, b in p.shaded))
    raise ValueError(f"unknown symmetry {symmetry!r}; expected one of {SYMMETRIES}")


def apply_symmetry(perm, symmetry: str) -> Permutation:
    try:
        return {"reverse": reverse, "complement": complement, "inverse": inverse}[symmetry](perm)
    except KeyError:
        raise ValueError(f"unknown symmetry {symmetry!r}; expected one of {SYMMETRIES}") from None


# "Nr" numbers index the length-two mesh patterns in their customary enumeration.
_CATALOG_TEXT = {
    "Nr3": "12|0,0;0,1;1,2",
    "Nr14": "12|0,1;1,0;1,1;1,2;2,1",
    "Nr23": "12|0,0;0,2;1,0;1,1;1,2",
    "Nr24": "12|0,0;0,1;1,0;1,1;1,2",
    "Nr48": "12|0,0;0,1;1,2;2,1;2,2",
    "Nr49": "12|0,0;0,1;1,1;1,2;2,0",
    "Nr50": "12|0,0;0,1;1,1;1,2;2,2",
    "Nr53": "12|0,0;0,1;1,2;2,1",
    "Nr54": "12|0,0;0,1;1,1;2,2",
    "Nr57": "12|0,1;1,1;1,2;2,0",
    "Nr58": "12|0,1;1,0;1,1;2,2",
    "Nr61": "12|0,0;0,1;1,2;2,0",
    "Nr62": "12|0,0;0,1;1,0;2,2",
    "Star1": "21|1,0;2,0;2,2",
    "Star2": "21|1,0;2,0;2,1",
    "Star3": "21|1,0;1,1;2,0;2,2",
    "Star4": "21|1,0;1,2;2,0;2,1",
    # highest / lowest / farthest / nearest witness for an exclusive record
    "EREC1": "21|0,2;1,0;2,0",
    "EREC2": "21|0,2;1,1;2,1",
    "EREC3": "21|0,2;2,0;2,1",
    "EREC4": "21|0,2;1,0;1,1",
    "EAREC1": "21|0,2;1,2;2,0",
    "EAREC2": "21|0,1;1,1;2,0",
    "EAREC3": "21|0,1;0,2;2,0",
    "EAREC4": "21|1,1;1,2;2,0",
    "REC": "1|0,1",
    "AREC": "1|1,0",
    "RAR": "1|0,1;1,0",
    "INV21": "21|",
}

CATALOG: dict[str, MeshPattern] = {name: parse_pattern(text) for name, text in _CATALOG_TEXT.items()}


def catalog(name: str) -> MeshPattern:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown pattern name {name!r}") from None
