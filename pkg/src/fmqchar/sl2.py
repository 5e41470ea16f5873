"""Closed-form q-characters of U_{q_i}(sl2) via q-string factorization."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .monomial import SL2Monomial


class GeneralPositionError(RuntimeError):
    """The greedy factorization produced strings not in general position."""


@dataclass(frozen=True, order=True)
class QString:
    """Spectral exponents ``center + step*(length - 2k + 1)``, k = 1..length."""

    center: int
    length: int
    step: int = 1

    def __post_init__(self):
        if self.length < 0 or self.step < 1:
            raise ValueError(f"invalid q-string {self}")

    @classmethod
    def from_range(cls, lo: int, hi: int, step: int) -> "QString":
        r = (hi - lo) // (2 * step) + 1
        return cls((lo + hi) // 2, r, step)

    def exponents(self) -> list[int]:
        return [self.center + self.step * (self.length - 2 * k + 1) for k in range(1, self.length + 1)]

    def as_set(self) -> frozenset[int]:
        return frozenset(self.exponents())


def _is_string(points: frozenset[int], step: int) -> bool:
    if not points:
        return True
    lo, hi = min(points), max(points)
    if (hi - lo) % (2 * step):
        return False
    return points == frozenset(range(lo, hi + 1, 2 * step))


def in_general_position(s: QString, t: QString) -> bool:
    a, b = s.as_set(), t.as_set()
    return a <= b or b <= a or not _is_string(a | b, s.step)


def factor_q_strings(m: SL2Monomial, step: int = 1) -> list[QString]:
    """Split a dominant sl2 monomial into q-strings in general position.

    Longest-first greedy (ties: smallest center), then the pairwise
    general-position condition is checked explicitly.
    """
    remaining = m.support()
    strings = []
    while remaining:
        best = None
        for lo in sorted(remaining):
            hi = lo
            while remaining.get(hi + 2 * step, 0) > 0:
                hi += 2 * step
            cand = QString.from_range(lo, hi, step)
            if best is None or (cand.length, -cand.center) > (best.length, -best.center):
                best = cand
        for x in best.exponents():
            remaining[x] -= 1
            if remaining[x] == 0:
                del remaining[x]
        strings.append(best)
    strings.sort(key=lambda s: (-s.length, s.center))
    for a in range(len(strings)):
        for b in range(a + 1, len(strings)):
            if not in_general_position(strings[a], strings[b]):
                raise GeneralPositionError(f"{strings[a]} and {strings[b]} are not in general position")
    return strings


def string_expansion(s: QString) -> list[tuple[int, ...]]:
    """A^{-1} positions for each of the ``length + 1`` terms of W_r(a)."""
    r, c, d = s.length, s.center, s.step
    return [tuple(sorted(c + d * (r - 2 * j + 2) for j in range(1, i + 1))) for i in range(r + 1)]


def sl2_expansion(m: SL2Monomial, step: int = 1) -> list[tuple[tuple[int, ...], int]]:
    """Terms ``(positions, coefficient)`` of chi(V(m)) / m as products of A^{-1}.

    The empty tuple (the highest term itself) always comes first.
    """
    strings = factor_q_strings(m, step)
    acc: Counter = Counter()
    for combo in product(*(string_expansion(s) for s in strings)):
        acc[tuple(sorted(x for part in combo for x in part))] += 1
    return sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0]))
