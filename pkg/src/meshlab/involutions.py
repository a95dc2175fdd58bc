"""The antirecord involutions Phi and Psi and their elementary steps.

Both maps act gap by gap along ``AREC(pi) = (i_1, ..., i_l)``.  Each
elementary map picks the letters greater than ``pi(i_k)`` inside some
window of positions and replaces that subword by its word complement.

======  ==============================================
map     window for antirecord rank k
======  ==============================================
phi1    positions ``< i_k``
phi2    positions ``< i_{k-1}`` (identity for k = 1)
psi1    positions ``> i_{k-1}`` (all positions for k = 1)
psi2    positions ``> i_k``
======  ==============================================

``Phi`` applies ``phi2 . phi1`` for k = l down to 1, ``Psi`` applies
``psi2 . psi1`` for k = 1 up to l.  The elementary maps take an explicit
``positions`` argument because ``psi1`` alone may move antirecords; a
composite step always uses the positions of its own input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .mesh import MeshPattern, _as_pattern, _iter_occurrences
from .perm import Permutation, _word, arec_positions, word_complement

__all__ = [
    "TraceStep", "InvolutionTrace", "phi1", "phi2", "phi_step", "Phi",
    "psi1", "psi2", "psi_step", "Psi", "count_in_gap", "gap_counts",
    "PHI_LEFT", "PHI_RIGHT", "PSI_LEFT", "PSI_RIGHT",
]

# Pointwise triples: LEFT(pi) == RIGHT(Phi(pi)) and LEFT(pi) == RIGHT(Psi(pi)).
PHI_LEFT = ("21|0,1;1,0;2,0", "21|0,1;0,2;1,0;1,2;2,0", "21|0,1;1,0;1,2;2,0")
PHI_RIGHT = ("21|0,2;1,0;2,0", "21|0,1;0,2;1,0;1,1;2,0", "21|0,2;1,0;1,1;2,0")
PSI_LEFT = ("21|1,0;2,0;2,2", "21|1,0;1,1;2,0;2,2", "21|1,0;1,1;1,2;2,0;2,2")
PSI_RIGHT = ("21|1,0;2,0;2,1", "21|1,0;1,2;2,0;2,1", "21|1,0;1,1;1,2;2,0;2,1")


@dataclass(frozen=True)
class TraceStep:
    map: str
    rank: int
    position: int
    subword_before: tuple[int, ...]
    subword_after: tuple[int, ...]
    before: Permutation
    after: Permutation

    def to_json(self) -> dict:
        return {
            "map": self.map,
            "rank": self.rank,
            "position": self.position,
            "before": str(self.before),
            "after": str(self.after),
        }


@dataclass
class InvolutionTrace:
    steps: list[TraceStep] = field(default_factory=list)

    def panels(self) -> list[Permutation]:
        """Input followed by every intermediate that differs from its predecessor."""
        if not self.steps:
            return []
        out = [self.steps[0].before]
        for s in self.steps:
            if s.after != out[-1]:
                out.append(s.after)
        return out

    def to_json(self) -> str:
        return json.dumps([s.to_json() for s in self.steps])


def _check_rank(positions: Sequence[int], k: int) -> None:
    if not 1 <= k <= len(positions):
        raise ValueError(f"antirecord rank {k} out of range 1..{len(positions)}")


def _complement_window(word: tuple[int, ...], threshold: int, lo: int, hi: int):
    """Complement the letters > threshold at 1-based positions lo..hi (inclusive)."""
    idx = [i for i in range(max(lo, 1), min(hi, len(word)) + 1) if word[i - 1] > threshold]
    before = tuple(word[i - 1] for i in idx)
    after = word_complement(before)
    out = list(word)
    for i, v in zip(idx, after):
        out[i - 1] = v
    return tuple(out), before, after


def _phi1(word, positions, k):
    ik = positions[k - 1]
    return _complement_window(word, word[ik - 1], 1, ik - 1)


def _phi2(word, positions, k):
    if k == 1:
        return word, (), ()
    ik, prev = positions[k - 1], positions[k - 2]
    return _complement_window(word, word[ik - 1], 1, prev - 1)


def _psi1(word, positions, k):
    ik = positions[k - 1]
    prev = positions[k - 2] if k > 1 else 0
    return _complement_window(word, word[ik - 1], prev + 1, len(word))


def _psi2(word, positions, k):
    ik = positions[k - 1]
    return _complement_window(word, word[ik - 1], ik + 1, len(word))


def _elementary(fn, p, k, positions):
    word = _word(p)
    positions = arec_positions(word) if positions is None else tuple(positions)
    _check_rank(positions, k)
    return Permutation(fn(word, positions, k)[0])


def phi1(p, k: int, positions: Sequence[int] | None = None) -> Permutation:
    return _elementary(_phi1, p, k, positions)


def phi2(p, k: int, positions: Sequence[int] | None = None) -> Permutation:
    return _elementary(_phi2, p, k, positions)


def psi1(p, k: int, positions: Sequence[int] | None = None) -> Permutation:
    return _elementary(_psi1, p, k, positions)


def psi2(p, k: int, positions: Sequence[int] | None = None) -> Permutation:
    return _elementary(_psi2, p, k, positions)


def _run(word, positions, plan, trace):
    for label, fn, k in plan:
        if label == "phi2" and k == 1:
            continue
        new, w_before, w_after = fn(word, positions, k)
        if trace is not None:
            trace.steps.append(TraceStep(label, k, positions[k - 1], w_before, w_after,
                                         Permutation(word), Permutation(new)))
        word = new
    return word


def phi_step(p, k: int) -> Permutation:
    word = _word(p)
    positions = arec_positions(word)
    _check_rank(positions, k)
    return Permutation(_run(word, positions, [("phi1", _phi1, k), ("phi2", _phi2, k)], None))


def psi_step(p, k: int) -> Permutation:
    word = _word(p)
    positions = arec_positions(word)
    _check_rank(positions, k)
    return Permutation(_run(word, positions, [("psi1", _psi1, k), ("psi2", _psi2, k)], None))


def Phi(p, trace: InvolutionTrace | None = None) -> Permutation:
    """Apply ``phi^(i_1) . ... . phi^(i_l)``, i.e. the rightmost antirecord first.

    >>> str(Phi("257189463"))
    '862154973'
    """
    word = _word(p)
    positions = arec_positions(word)
    plan = []
    for k in range(len(positions), 0, -1):
        plan += [("phi1", _phi1, k), ("phi2", _phi2, k)]
    return Permutation(_run(word, positions, plan, trace))


def Psi(p, trace: InvolutionTrace | None = None) -> Permutation:
    """Apply ``psi^(i_l) . ... . psi^(i_1)``, i.e. the leftmost antirecord first.

    >>> str(Psi("931582674"))
    '281743965'
    """
    word = _word(p)
    positions = arec_positions(word)
    plan = []
    for k in range(1, len(positions) + 1):
        plan += [("psi1", _psi1, k), ("psi2", _psi2, k)]
    return Permutation(_run(word, positions, plan, trace))


def _check_gap_pattern(pattern: MeshPattern) -> None:
    # (1,0) and (2,0) force the lower point of a 21 to be an antirecord
    if pattern.tau != (2, 1) or not {(1, 0), (2, 0)} <= pattern.shaded:
        raise ValueError(f"gap counting needs a 21 pattern shading (1,0) and (2,0); got {pattern}")


def count_in_gap(p, pattern, k: int) -> int:
    """Occurrences of ``pattern`` whose second point sits at the k-th antirecord."""
    pattern = _as_pattern(pattern)
    _check_gap_pattern(pattern)
    word = _word(p)
    positions = arec_positions(word)
    _check_rank(positions, k)
    target = positions[k - 1]
    return sum(1 for occ in _iter_occurrences(word, pattern) if occ[1] == target)


def gap_counts(p, pattern) -> tuple[int, ...]:
    """``count_in_gap`` for every rank k = 1..l at once."""
    pattern = _as_pattern(pattern)
    _check_gap_pattern(pattern)
    word = _word(p)
    positions = arec_positions(word)
    slot = {pos: r for r, pos in enumerate(positions)}
    out = [0] * len(positions)
    for occ in _iter_occurrences(word, pattern):
        out[slot[occ[1]]] += 1
    return tuple(out)
