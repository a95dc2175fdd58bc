"""Slow reference implementations written straight from the definitions."""

from itertools import combinations

from hypothesis import strategies as st


def perms(min_n=0, max_n=7):
    """Hypothesis strategy for permutation words of length min_n..max_n."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)


def occurrences(word, tau, shaded):
    """Every index tuple, checked point by point: a point lands in box (a, b)
    where a counts chosen positions left of it and b counts chosen values below it."""
    n, k = len(word), len(tau)
    out = []
    for occ in combinations(range(n), k):
        vals = [word[i] for i in occ]
        if any((vals[x] < vals[y]) != (tau[x] < tau[y]) for x in range(k) for y in range(k)):
            continue
        chosen = set(occ)
        ok = True
        for m in range(n):
            if m in chosen:
                continue
            a = sum(1 for i in occ if i < m)
            b = sum(1 for v in vals if v < word[m])
            if (a, b) in shaded:
                ok = False
                break
        if ok:
            out.append(tuple(i + 1 for i in occ))
    return out


def statistics(word):
    n = len(word)
    rec = [all(word[j] < word[i] for j in range(i)) for i in range(n)]
    arec = [all(word[j] > word[i] for j in range(i + 1, n)) for i in range(n)]
    return {
        "exc": sum(word[i] > i + 1 for i in range(n)),
        "inv": sum(word[i] > word[j] for i in range(n) for j in range(i + 1, n)),
        "rec": sum(rec),
        "arec": sum(arec),
        "erec": sum(r and not a for r, a in zip(rec, arec)),
        "earec": sum(a and not r for r, a in zip(rec, arec)),
        "rar": sum(r and a for r, a in zip(rec, arec)),
        "succ": sum(word[i] == word[i - 1] + 1 for i in range(1, n)),
    }
