"""Joint distributions of pattern counts over S_n and equidistribution checks."""

from __future__ import annotations

import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .involutions import PHI_LEFT, PHI_RIGHT, PSI_LEFT, PSI_RIGHT, Phi, Psi
from .mesh import MeshPattern, _as_pattern, _iter_occurrences, catalog, transform_pattern
from .perm import Permutation, _word, inverse, iter_range, rank, reverse
from .sweep import run_sweep

__all__ = [
    "JointDistribution", "EquidistReport", "BijectionReport", "TableEntry",
    "joint_distribution", "equidistributed", "verify_bijection", "table_suite",
    "TableCheck", "BIJECTIONS", "TABLE_CHECKS", "TRANSPORTED_TRIPLES", "EREC_CONJUGATED",
]


def _counts(word, patterns: Sequence[MeshPattern]) -> tuple[int, ...]:
    return tuple(sum(1 for _ in _iter_occurrences(word, p)) for p in patterns)


@dataclass(frozen=True)
class JointDistribution:
    n: int
    patterns: tuple[MeshPattern, ...]
    counts: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.counts.values())

    def rows(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.counts.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "patterns": [str(p) for p in self.patterns],
            "counts": [{"vector": list(vec), "count": c} for vec, c in self.rows()],
            "total": self.total(),
        }

    def to_tsv(self) -> str:
        return "\n".join("\t".join(map(str, (*vec, c))) for vec, c in self.rows())


def _joint_worker(n: int, start: int, stop: int, patterns) -> Counter:
    tally: Counter = Counter()
    for w in iter_range(n, start, stop):
        tally[_counts(w, patterns)] += 1
    return tally


def _sweep_counts(n: int, patterns: tuple[MeshPattern, ...], jobs: int) -> dict:
    total: Counter = Counter()
    for part in run_sweep(_joint_worker, n, (patterns,), jobs=jobs):
        total.update(part)
    return dict(total)


def joint_distribution(n: int, patterns: Sequence, jobs: int = 1) -> JointDistribution:
    pats = tuple(_as_pattern(p) for p in patterns)
    return JointDistribution(n, pats, _sweep_counts(n, pats, jobs))


@dataclass(frozen=True)
class EquidistReport:
    n: int
    left: tuple[MeshPattern, ...]
    right: tuple[MeshPattern, ...]
    equal: bool
    witness: tuple[tuple[int, ...], int, int] | None = None
    elapsed_ms: float = 0.0

    @property
    def verdict(self) -> str:
        return "equal" if self.equal else "different"

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "left": [str(p) for p in self.left],
            "right": [str(p) for p in self.right],
            "verdict": self.verdict,
        }
        if self.witness is not None:
            vec, a, b = self.witness
            out["witness"] = {"vector": list(vec), "left": a, "right": b}
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _compare(n, left, right, dl: dict, dr: dict, elapsed_ms=0.0) -> EquidistReport:
    if dl == dr:
        return EquidistReport(n, left, right, True, None, elapsed_ms)
    for vec in sorted(set(dl) | set(dr)):
        a, b = dl.get(vec, 0), dr.get(vec, 0)
        if a != b:
            return EquidistReport(n, left, right, False, (vec, a, b), elapsed_ms)
    raise AssertionError("unreachable: distributions differ but no differing vector")


def equidistributed(n: int, left: Sequence, right: Sequence, jobs: int = 1) -> EquidistReport:
    """Compare joint distributions; on inequality the witness is the smallest differing vector."""
    if len(left) != len(right):
        raise ValueError(f"arity mismatch: {len(left)} vs {len(right)} patterns")
    start = time.perf_counter()
    lp = tuple(_as_pattern(p) for p in left)
    rp = tuple(_as_pattern(p) for p in right)
    dist = _sweep_counts(n, lp + rp, jobs)
    dl: Counter = Counter()
    dr: Counter = Counter()
    k = len(lp)
    for vec, c in dist.items():
        dl[vec[:k]] += c
        dr[vec[k:]] += c
    return _compare(n, lp, rp, dict(dl), dict(dr), (time.perf_counter() - start) * 1000)


def _phi_conjugated(word):
    # s = reverse . inverse, image is s^-1(Phi(s(pi)))
    return inverse(reverse(Phi(reverse(inverse(word)))))


BIJECTIONS: dict[str, Callable] = {
    "Phi": Phi,
    "Psi": Psi,
    "PhiConjugated": _phi_conjugated,
}

# erec transported along pi -> (pi^-1)^r; pairs with (Nr3, Nr48, Nr53) under PhiConjugated
EREC_CONJUGATED = transform_pattern(transform_pattern("21|0,2;1,0;2,0", "reverse"), "inverse")


@dataclass(frozen=True)
class BijectionReport:
    n: int
    map: str
    left: tuple[MeshPattern, ...]
    right: tuple[MeshPattern, ...]
    checked: int
    pointwise: bool
    bijective: bool
    witness: dict | None = None

    @property
    def ok(self) -> bool:
        return self.pointwise and self.bijective

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "map": self.map,
            "left": [str(p) for p in self.left],
            "right": [str(p) for p in self.right],
            "checked": self.checked,
            "pointwise": self.pointwise,
            "bijective": self.bijective,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def _bijection_worker(n, start, stop, map_name, left, right):
    fn = BIJECTIONS[map_name]
    images = set()
    witness = None
    checked = 0
    for w in iter_range(n, start, stop):
        img = _word(fn(w))
        images.add(rank(img))
        checked += 1
        if witness is None:
            a, b = _counts(w, left), _counts(img, right)
            if a != b:
                witness = {"perm": str(Permutation(w)), "image": str(Permutation(img)),
                           "left": list(a), "right": list(b)}
    return checked, images, witness


def verify_bijection(n: int, map_name: str, left: Sequence, right: Sequence, jobs: int = 1) -> BijectionReport:
    """Check ``left(pi) == right(map(pi))`` for every pi in S_n, and that the map is onto S_n."""
    if map_name not in BIJECTIONS:
        raise ValueError(f"unknown map {map_name!r}; expected one of {sorted(BIJECTIONS)}")
    if len(left) != len(right):
        raise ValueError(f"arity mismatch: {len(left)} vs {len(right)} patterns")
    lp = tuple(_as_pattern(p) for p in left)
    rp = tuple(_as_pattern(p) for p in right)
    checked, images, witness = 0, set(), None
    for c, imgs, wit in run_sweep(_bijection_worker, n, (map_name, lp, rp), jobs=jobs):
        checked += c
        images |= imgs
        if witness is None:
            witness = wit
    return BijectionReport(n, map_name, lp, rp, checked, witness is None,
                           len(images) == math.factorial(n), witness)


@dataclass(frozen=True)
class TableCheck:
    name: str
    groups: tuple[tuple[str, ...], ...]
    asserted: bool = True


# Each check: every group of pattern tuples must share one joint distribution.
TABLE_CHECKS: tuple[TableCheck, ...] = (
    TableCheck("Nr23~Nr24", (("Nr23",), ("Nr24",))),
    TableCheck("Nr48~Nr49~Nr50", (("Nr48",), ("Nr49",), ("Nr50",))),
    TableCheck("(Nr3,Nr48,Nr53)~(EREC1,Nr50,Nr54)", (("Nr3", "Nr48", "Nr53"), ("EREC1", "Nr50", "Nr54"))),
    TableCheck("Star1~Star2", (("Star1",), ("Star2",))),
    TableCheck("Star3~Star4", (("Star3",), ("Star4",))),
    TableCheck("Nr57~Nr58", (("Nr57",), ("Nr58",)), asserted=False),
    TableCheck("Nr61~Nr62", (("Nr61",), ("Nr62",)), asserted=False),
)


@dataclass
class TableEntry:
    name: str
    n: int
    asserted: bool
    reports: list[EquidistReport] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return all(r.equal for r in self.reports)

    @property
    def status(self) -> str:
        if self.equal:
            return "pass"
        return "fail" if self.asserted else "divergence-observed"

    def to_json(self, timing: bool = False) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "asserted": self.asserted,
            "status": self.status,
            "comparisons": [r.to_json(timing=timing) for r in self.reports],
        }


def table_suite(n: int, jobs: int = 1, checks: Sequence[TableCheck] = TABLE_CHECKS) -> list[TableEntry]:
    """Run every table check at length ``n`` from a single sweep over S_n."""
    names: list[str] = []
    for check in checks:
        for group in check.groups:
            for name in group:
                if name not in names:
                    names.append(name)
    pats = tuple(catalog(nm) for nm in names)
    dist = _sweep_counts(n, pats, jobs)
    slot = {nm: i for i, nm in enumerate(names)}

    def project(group):
        out: Counter = Counter()
        for vec, c in dist.items():
            out[tuple(vec[slot[nm]] for nm in group)] += c
        return dict(out)

    entries = []
    for check in checks:
        entry = TableEntry(check.name, n, check.asserted)
        first = check.groups[0]
        base = project(first)
        for other in check.groups[1:]:
            entry.reports.append(_compare(n, tuple(catalog(x) for x in first),
                                          tuple(catalog(x) for x in other), base, project(other)))
        entries.append(entry)
    return entries


TRANSPORTED_TRIPLES = {
    "Phi": (PHI_LEFT, PHI_RIGHT),
    "Psi": (PSI_LEFT, PSI_RIGHT),
}
