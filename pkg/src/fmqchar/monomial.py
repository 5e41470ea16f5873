"""Laurent monomials in the variables Y[i,k] = Y_{i, q^k}.

Spectral parameters live on the single lattice ``a = q**k`` and are stored as
the integer ``k``.  Text form: ``"Y[1,4] Y[2,1]^2 Y[3,-2]^-1"``; the empty
string is the unit monomial.
"""
from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Mapping

from .cartan import AlgebraSpec


class MonomialParseError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class _Laurent:
    """Shared canonical-form storage: sorted tuple of (key, nonzero exponent)."""

    __slots__ = ("_items", "_hash")

    def __init__(self, exps: Mapping | Iterable = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict = {}
        for key, e in items:
            acc[key] = acc.get(key, 0) + e
        self._items = tuple(sorted((k, e) for k, e in acc.items() if e != 0))
        self._hash = hash(self._items)

    @classmethod
    def _raw(cls, items):
        obj = cls.__new__(cls)
        obj._items = items
        obj._hash = hash(items)
        return obj

    @property
    def exps(self) -> dict:
        return dict(self._items)

    def items(self):
        return self._items

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return type(other) is type(self) and self._items == other._items

    def __lt__(self, other):
        return self._items < other._items

    def __bool__(self):
        # the unit is falsy, like an empty container
        return bool(self._items)

    def __len__(self):
        return len(self._items)

    def __mul__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self._items)
        for k, e in other._items:
            v = acc.get(k, 0) + e
            if v:
                acc[k] = v
            else:
                del acc[k]
        return self._raw(tuple(sorted(acc.items())))

    def __invert__(self):
        return self._raw(tuple((k, -e) for k, e in self._items))

    def __truediv__(self, other):
        return self * ~other

    def __pow__(self, e: int):
        if e == 0:
            return self._raw(())
        return self._raw(tuple((k, v * e) for k, v in self._items))

    def is_dominant(self) -> bool:
        return all(e > 0 for _, e in self._items)


class YMonomial(_Laurent):
    """Monomial in Y_{i,q^k}; keys are ``(i, k)``."""

    __slots__ = ()

    @classmethod
    def unit(cls) -> "YMonomial":
        return cls._raw(())

    @classmethod
    def var(cls, i: int, k: int, e: int = 1) -> "YMonomial":
        return cls({(i, k): e})

    def is_i_dominant(self, i: int) -> bool:
        return all(e > 0 for (j, _), e in self._items if j == i)

    def nodes(self) -> set[int]:
        return {j for (j, _), _ in self._items}

    def project(self, i: int) -> "SL2Monomial":
        return SL2Monomial._raw(tuple((k, e) for (j, k), e in self._items if j == i))

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"YMonomial({render(self)!r})"


class SL2Monomial(_Laurent):
    """Monomial in Y_{q^k} for a single node; keys are ``k``."""

    __slots__ = ()

    def support(self) -> Counter:
        if not self.is_dominant():
            raise ValueError(f"{self!r} is not dominant")
        return Counter(dict(self._items))

    def __repr__(self):
        return "SL2Monomial(" + " ".join(f"Y[{k}]" + (f"^{e}" if e != 1 else "") for k, e in self._items) + ")"


def mul(m: YMonomial, n: YMonomial) -> YMonomial:
    return m * n


def inv(m: YMonomial) -> YMonomial:
    return ~m


def pow(m: YMonomial, e: int) -> YMonomial:  # noqa: A001 - mirrors the algebra's vocabulary
    return m ** e


def is_dominant(m: YMonomial) -> bool:
    return m.is_dominant()


def is_i_dominant(m: YMonomial, i: int) -> bool:
    return m.is_i_dominant(i)


def project_to_node(m: YMonomial, i: int) -> SL2Monomial:
    return m.project(i)


def weight(spec: AlgebraSpec, m: YMonomial) -> tuple[int, ...]:
    """Classical weight: net exponent of each node's variables."""
    w = [0] * spec.rank
    for (i, _), e in m.items():
        w[i - 1] += e
    return tuple(w)


def a_monomial_inverse(spec: AlgebraSpec, i: int, k: int) -> YMonomial:
    """A_{i,q^k}^{-1}."""
    spec.check_node(i)
    return _a_inverse_cached(spec, i, k)


_A_CACHE: dict = {}


def _a_inverse_cached(spec, i, k):
    key = (spec, i, k)
    m = _A_CACHE.get(key)
    if m is None:
        di = spec.d(i)
        exps = Counter({(i, k - di): -1})
        exps[(i, k + di)] -= 1
        for j in spec.nodes:
            c = spec.C(j, i)
            if j == i or c == 0:
                continue
            # C_ji = -1, -2, -3 -> 1, 2, 3 factors centred at k
            for s in range(c + 1, -c, 2):
                exps[(j, k + s)] += 1
        m = YMonomial(exps)
        if len(_A_CACHE) > 200_000:
            _A_CACHE.clear()
        _A_CACHE[key] = m
    return m


def a_monomial(spec: AlgebraSpec, i: int, k: int) -> YMonomial:
    return ~a_monomial_inverse(spec, i, k)


def apply_a_inverses(spec: AlgebraSpec, m: YMonomial, factors: Mapping | Iterable) -> YMonomial:
    """``m * prod A^{-1}_{i,k}`` over ``{(i,k): count}`` or an iterable of ``(i,k)``."""
    items = factors.items() if isinstance(factors, Mapping) else ((f, 1) for f in factors)
    for (i, k), c in items:
        m = m * a_monomial_inverse(spec, i, k) ** c
    return m


def solve_a_factorization(spec: AlgebraSpec, m_plus: YMonomial, m: YMonomial) -> dict | None:
    """Exponents ``c`` with ``m = m_plus * prod A_{i,k}^{-c[(i,k)]}``, or None.

    The A_{i,k} are algebraically independent, so the solution is unique when
    it exists.  Peels the variable with the largest spectral exponent: it can
    only be the top factor ``Y_{i,k+d_i}`` of ``A_{i,k}``.
    """
    r = m / m_plus
    if not r:
        return {}
    floor = min(k for (_, k), _ in r.items())
    out: dict = {}
    while r:
        top = max(k for (_, k), _ in r.items())
        for (i, k), e in [(key, e) for key, e in r.items() if key[1] == top]:
            base = k - spec.d(i)
            if base - spec.d(i) < floor:
                return None
            # r contains Y_{i,top}^e, and A^{-c} contributes Y_{i,top}^{-c}
            c = -e
            out[(i, base)] = out.get((i, base), 0) + c
            r = r * a_monomial_inverse(spec, i, base) ** (-c)
    return {key: c for key, c in sorted(out.items()) if c}


_FACTOR = re.compile(r"Y\[\s*(\d+)\s*,\s*(-?\d+)\s*\](?:\^\s*(-?\d+))?")


def parse(text: str) -> YMonomial:
    """Parse the ``Y[i,k]^e`` grammar; factors are whitespace separated."""
    pos = 0
    n = len(text)
    exps: Counter = Counter()
    while True:
        while pos < n and text[pos].isspace():
            pos += 1
        if pos >= n:
            break
        mt = _FACTOR.match(text, pos)
        if mt is None:
            raise MonomialParseError(text, pos, "expected factor Y[i,k] or Y[i,k]^e")
        i, k = int(mt.group(1)), int(mt.group(2))
        e = int(mt.group(3)) if mt.group(3) is not None else 1
        if i < 1:
            raise MonomialParseError(text, pos, "node index must be >= 1")
        if e == 0:
            raise MonomialParseError(text, mt.start(3), "zero exponent")
        exps[(i, k)] += e
        pos = mt.end()
        if pos < n and not text[pos].isspace():
            raise MonomialParseError(text, pos, "factors must be separated by whitespace")
    return YMonomial(exps)


def render(m: YMonomial) -> str:
    return " ".join(f"Y[{i},{k}]" + (f"^{e}" if e != 1 else "") for (i, k), e in m.items())
