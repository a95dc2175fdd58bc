"""Exact integer polynomials in x, y, z, v, q and truncated power series in t."""

from __future__ import annotations

from typing import Mapping, Sequence

__all__ = ["VARIABLES", "MultiPoly", "TruncatedSeries", "var", "const"]

VARIABLES = ("x", "y", "z", "v", "q")
_NVARS = len(VARIABLES)
_ZERO_EXP = (0,) * _NVARS


class MultiPoly:
    """Sparse polynomial with integer coefficients; immutable by convention."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None):
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != _NVARS or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp}")
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def __eq__(self, other):
        if isinstance(other, int):
            other = const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return MultiPoly._raw({})
            return MultiPoly._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def subs(self, **values: int) -> "MultiPoly":
        """Substitute integers for some variables, e.g. ``p.subs(z=1)``."""
        idx = {VARIABLES.index(name): val for name, val in values.items()}
        out: dict = {}
        for e, c in self.terms.items():
            factor = c
            new = list(e)
            for i, val in idx.items():
                factor *= val ** e[i]
                new[i] = 0
            key = tuple(new)
            out[key] = out.get(key, 0) + factor
        return MultiPoly._raw({e: c for e, c in out.items() if c})

    def evaluate(self, **values: int) -> int:
        """Integer value with every variable substituted (missing ones default to 1)."""
        full = {name: values.get(name, 1) for name in VARIABLES}
        return self.subs(**full).terms.get(_ZERO_EXP, 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms in graded-lex order over (x, y, z, v, q), constant first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), tuple(-e for e in t[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(VARIABLES, exp) if e]
            mag = abs(c)
            body = "·".join(([str(mag)] if mag != 1 or not factors else []) + factors)
            parts.append(("-" if c < 0 else "+", body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({str(self)!r})"

    def to_json(self) -> list:
        return [[list(e), c] for e, c in self.sorted_terms()]


def const(c: int) -> MultiPoly:
    return MultiPoly._raw({_ZERO_EXP: c} if c else {})


def var(name: str, power: int = 1) -> MultiPoly:
    exp = [0] * _NVARS
    exp[VARIABLES.index(name)] = power
    return MultiPoly._raw({tuple(exp): 1})


class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N`` with polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[MultiPoly | int], order: int | None = None):
        cs = [c if isinstance(c, MultiPoly) else const(c) for c in coeffs]
        if order is not None:
            cs = (cs + [const(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        self.coeffs = cs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([const(1)], order)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "TruncatedSeries"):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries"):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def scale(self, c: MultiPoly | int) -> "TruncatedSeries":
        return TruncatedSeries([a * c for a in self.coeffs])

    def shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by ``t^k``, dropping what falls past the order."""
        zero = const(0)
        return TruncatedSeries([zero] * k + self.coeffs[: max(0, len(self.coeffs) - k)], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, MultiPoly)):
            return self.scale(other)
        self._check(other)
        N = self.order
        out = []
        for n in range(N + 1):
            acc = const(0)
            for j in range(n + 1):
                a, b = self.coeffs[j], other.coeffs[n - j]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(out)

    def reciprocal(self) -> "TruncatedSeries":
        if self.coeffs[0] != const(1):
            raise ZeroDivisionError(
                f"reciprocal needs constant term 1, got {self.coeffs[0]}")
        out = [const(1)]
        for n in range(1, self.order + 1):
            acc = const(0)
            for j in range(1, n + 1):
                a = self.coeffs[j]
                if a:
                    acc = acc + a * out[n - j]
            out.append(-acc)
        return TruncatedSeries(out)

    def __truediv__(self, other: "TruncatedSeries"):
        return self * other.reciprocal()

    def subs(self, **values: int) -> "TruncatedSeries":
        return TruncatedSeries([c.subs(**values) for c in self.coeffs])

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self.coeffs, order)

    def to_text(self) -> str:
        return "\n".join(f"t^{n}: {c}" for n, c in enumerate(self.coeffs))

    def to_json(self) -> dict:
        return {"order": self.order, "variables": list(VARIABLES),
                "coeffs": [c.to_json() for c in self.coeffs]}

    def __repr__(self):
        return f"TruncatedSeries(order={self.order})"
