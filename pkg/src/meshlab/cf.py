"""Continued-fraction generating functions and their brute-force counterparts.

The five-variable generating function weighs each permutation by
``x^arec y^erec z^rar v^exc q^inv``.  Its ``z = 1`` specialization is the
S-fraction with the coefficients of :func:`dkz_alpha`, and general ``z`` is
recovered by :func:`apply_z_correction`.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Callable

from .mesh import _as_pattern, _iter_occurrences, catalog
from .perm import all_statistics, iter_range
from .poly import MultiPoly, TruncatedSeries, const, var
from .sweep import run_sweep

__all__ = [
    "CoefficientRule", "dkz_alpha", "nr3_alpha", "sfraction_series",
    "apply_z_correction", "contract_s_to_j", "jfraction_series", "brute_force_F",
    "brute_force_pattern_series", "rising_product_series", "succession_polys",
    "ogf_series", "ogf_check", "egf_check",
]

CoefficientRule = Callable[[int], MultiPoly]

X, Y, Z, V, Q = (var(n) for n in "xyzvq")


def _geometric(start: int, stop: int) -> MultiPoly:
    """``q^start + ... + q^(stop-1)``."""
    return sum((var("q", e) for e in range(start, stop)), const(0))


def dkz_alpha() -> CoefficientRule:
    """``alpha_{2k-1} = q^(k-1) (x + q + ... + q^(k-1))``, ``alpha_{2k} = q^k v (y + q + ... + q^(k-1))``."""

    def alpha(j: int) -> MultiPoly:
        if j < 1:
            raise ValueError(f"coefficient index must be >= 1, got {j}")
        k = (j + 1) // 2
        if j % 2:
            return var("q", k - 1) * (X + _geometric(1, k))
        return var("q", k) * V * (Y + _geometric(1, k))

    return alpha


def nr3_alpha() -> CoefficientRule:
    """``alpha_{2k-1} = k``, ``alpha_{2k} = y + k - 1``."""

    def alpha(j: int) -> MultiPoly:
        if j < 1:
            raise ValueError(f"coefficient index must be >= 1, got {j}")
        k = (j + 1) // 2
        return const(k) if j % 2 else Y + (k - 1)

    return alpha


def sfraction_series(rule: CoefficientRule, N: int, depth: int | None = None) -> TruncatedSeries:
    """``1/(1 - a1 t/(1 - a2 t/(1 - ...)))`` through ``t^N``.

    ``alpha_j`` first reaches ``t^j``, so depth ``N`` is exact.
    """
    depth = N if depth is None else depth
    level = TruncatedSeries.one(N)
    one = TruncatedSeries.one(N)
    for j in range(depth, 0, -1):
        level = (one - level.shift(1).scale(rule(j))).reciprocal()
    return level


def apply_z_correction(F1: TruncatedSeries, N: int | None = None) -> TruncatedSeries:
    """``F1 / (1 + x(1-z) t F1)``."""
    if N is not None:
        F1 = F1.truncate(N)
    head = X * (const(1) - Z)
    return F1 / (TruncatedSeries.one(F1.order) + F1.shift(1).scale(head))


def contract_s_to_j(rule: CoefficientRule, gamma0: MultiPoly | None = None):
    """Even contraction: ``gamma_0 = alpha_1``, ``gamma_n = alpha_2n + alpha_2n+1``, ``beta_n = alpha_2n-1 alpha_2n``.

    Passing ``gamma0`` replaces the head coefficient, e.g. ``x z`` to fold in
    the ``z`` correction of the five-variable function.
    """

    def gamma(n: int) -> MultiPoly:
        if n == 0:
            return rule(1) if gamma0 is None else gamma0
        return rule(2 * n) + rule(2 * n + 1)

    def beta(n: int) -> MultiPoly:
        if n < 1:
            raise ValueError(f"beta index must be >= 1, got {n}")
        return rule(2 * n - 1) * rule(2 * n)

    return gamma, beta


def jfraction_series(gamma: CoefficientRule, beta: CoefficientRule, N: int,
                     depth: int | None = None) -> TruncatedSeries:
    """``1/(1 - g0 t - b1 t^2/(1 - g1 t - b2 t^2/(...)))`` through ``t^N``."""
    depth = (N + 1) // 2 + 1 if depth is None else depth
    one = TruncatedSeries.one(N)
    level = one
    for j in range(depth - 1, -1, -1):
        denom = one - one.shift(1).scale(gamma(j)) - level.shift(2).scale(beta(j + 1))
        level = denom.reciprocal()
    return level


def _stats_worker(n: int, start: int, stop: int) -> Counter:
    tally: Counter = Counter()
    for w in iter_range(n, start, stop):
        s = all_statistics(w)
        tally[(s["arec"], s["erec"], s["rar"], s["exc"], s["inv"])] += 1
    return tally


def _pattern_worker(n: int, start: int, stop: int, pattern) -> Counter:
    tally: Counter = Counter()
    for w in iter_range(n, start, stop):
        tally[sum(1 for _ in _iter_occurrences(w, pattern))] += 1
    return tally


def _merge(parts) -> Counter:
    total: Counter = Counter()
    for part in parts:
        total.update(part)
    return total


def brute_force_F(N: int, jobs: int = 1) -> TruncatedSeries:
    """Coefficients ``sum over S_n of x^arec y^erec z^rar v^exc q^inv``, n = 0..N."""
    coeffs = []
    for n in range(N + 1):
        tally = _merge(run_sweep(_stats_worker, n, jobs=jobs))
        coeffs.append(MultiPoly(tally))
    return TruncatedSeries(coeffs)


def brute_force_pattern_series(pattern, N: int, jobs: int = 1) -> TruncatedSeries:
    """Coefficients ``sum over S_n of y^(occurrences of pattern)``."""
    pattern = _as_pattern(pattern)
    coeffs = []
    for n in range(N + 1):
        tally = _merge(run_sweep(_pattern_worker, n, (pattern,), jobs=jobs))
        coeffs.append(sum((var("y", c) * m for c, m in tally.items()), const(0)))
    return TruncatedSeries(coeffs)


def rising_product_series(N: int) -> TruncatedSeries:
    """``sum_n x(x+q)...(x+q+...+q^(n-1)) t^n``."""
    coeffs = [const(1)]
    for n in range(1, N + 1):
        coeffs.append(coeffs[-1] * (X + _geometric(1, n)))
    return TruncatedSeries(coeffs)


def _in_x(p: MultiPoly) -> MultiPoly:
    """Rename the ``y`` marker of a pattern series to ``x``."""
    return MultiPoly({(e[1], 0, 0, 0, 0): c for e, c in p.terms.items()})


def succession_polys(N: int, jobs: int = 1) -> list[MultiPoly]:
    """``S_n(x) = sum over S_n of x^(occurrences of Nr14)`` for n = 0..N."""
    series = brute_force_pattern_series(catalog("Nr14"), N, jobs=jobs)
    return [_in_x(c) for c in series.coeffs]


def ogf_series(N: int) -> TruncatedSeries:
    """``sum_m m! t^m / (1 - (x-1) t)^m`` through ``t^N``."""
    one = TruncatedSeries.one(N)
    step = (one - one.shift(1).scale(X - 1)).reciprocal().shift(1)
    total = one
    power = one
    for m in range(1, N + 1):
        power = power * step
        total = total + power.scale(math.factorial(m))
    return total


def ogf_check(N: int, polys: list[MultiPoly] | None = None) -> bool:
    polys = succession_polys(N) if polys is None else polys[: N + 1]
    return ogf_series(N).coeffs == list(polys)


def egf_check(N: int, polys: list[MultiPoly] | None = None) -> bool:
    """``n! [t^n] e^((x-1)t)/(1-t)^2 == S_(n+1)`` for n + 1 <= N.

    ``n! [t^n]`` is ``sum_j n!/j! (n-j+1) (x-1)^j``, integral term by term.
    """
    polys = succession_polys(N) if polys is None else polys[: N + 1]
    for n in range(N):
        rhs = sum(((X - 1) ** j * (math.factorial(n) // math.factorial(j) * (n - j + 1))
                   for j in range(n + 1)), const(0))
        if rhs != polys[n + 1]:
            return False
    return True
