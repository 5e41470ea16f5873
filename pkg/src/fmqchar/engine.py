"""The Frenkel-Mukhin iteration on colored polynomials.

A colored polynomial maps each monomial to its coefficient ``s`` and a
coloring ``(s_1, ..., s_n)`` with ``0 <= s_i <= s``; ``s_i`` counts how much
of the coefficient is already explained by node-i expansions.  Weights are
visited in order of height below the highest weight (ties broken
lexicographically on simple-root coordinates), which refines the dominance
order.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .cartan import AlgebraSpec
from .monomial import YMonomial, a_monomial_inverse, render, weight
from .sl2 import sl2_expansion


class EngineError(RuntimeError):
    pass


class NotAdmissibleError(EngineError):
    pass


class LimitExceeded(EngineError):
    """A height or size cap was hit; unrelated to the algorithm failing."""


@dataclass
class FMLimits:
    max_height: int = 64
    max_terms: int = 1_000_000
    max_injections: int = 8
    depth_limit: int = 4


class ColoredPolynomial:
    def __init__(self, rank: int):
        self.rank = rank
        self.terms: dict[YMonomial, tuple[int, tuple[int, ...]]] = {}

    @classmethod
    def from_monomial(cls, rank: int, m: YMonomial, coeff: int = 1) -> "ColoredPolynomial":
        chi = cls(rank)
        chi.set(m, coeff, (0,) * rank)
        return chi

    def copy(self) -> "ColoredPolynomial":
        new = ColoredPolynomial(self.rank)
        new.terms = dict(self.terms)
        return new

    def set(self, m: YMonomial, coeff: int, coloring) -> None:
        coloring = tuple(coloring)
        if len(coloring) != self.rank:
            raise ValueError("coloring length does not match rank")
        if coeff <= 0 or any(not 0 <= c <= coeff for c in coloring):
            raise ValueError(f"invalid coefficient/coloring {coeff}, {coloring} for {m}")
        self.terms[m] = (coeff, coloring)

    def __contains__(self, m):
        return m in self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def coefficient(self, m: YMonomial) -> int:
        return self.terms[m][0] if m in self.terms else 0

    def coloring(self, m: YMonomial) -> tuple[int, ...]:
        return self.terms[m][1]

    def deficient_nodes(self, m: YMonomial) -> list[int]:
        """Nodes that make ``m`` non-admissible: ``s_i < s`` and not i-dominant."""
        s, col = self.terms[m]
        return [i for i in range(1, self.rank + 1) if col[i - 1] < s and not m.is_i_dominant(i)]

    def is_admissible(self, m: YMonomial) -> bool:
        return not self.deficient_nodes(m)

    def is_saturated(self) -> bool:
        return all(all(c == s for c in col) for s, col in self.terms.values())

    def total(self) -> int:
        return sum(s for s, _ in self.terms.values())

    def __repr__(self):
        return f"ColoredPolynomial({len(self)} terms, total {self.total()})"


def mu_terms(spec: AlgebraSpec, m: YMonomial, i: int) -> list[tuple[YMonomial, int]]:
    """``m (1 + sum_p M_p)``: the node-i sl2 character lifted to all nodes."""
    out = []
    for positions, t in sl2_expansion(m.project(i), spec.d(i)):
        n = m
        for k in positions:
            n = n * a_monomial_inverse(spec, i, k)
        out.append((n, t))
    return out


def _i_expand_inplace(chi: ColoredPolynomial, m: YMonomial, i: int, spec: AlgebraSpec):
    s, col = chi.terms[m]
    si = col[i - 1]
    if si == s:
        return []
    added = []
    for n, t in mu_terms(spec, m, i):
        inc = t * (s - si)
        if n in chi.terms:
            r, rc = chi.terms[n]
            ri = rc[i - 1] + inc
            chi.terms[n] = (max(r, ri), rc[: i - 1] + (ri,) + rc[i:])
        else:
            chi.terms[n] = (inc, tuple(inc if j == i else 0 for j in range(1, chi.rank + 1)))
        added.append((n, inc))
    return added


def i_expand(chi: ColoredPolynomial, m: YMonomial, i: int, spec: AlgebraSpec) -> ColoredPolynomial:
    """The i-expansion of ``chi`` with respect to ``m``; returns a new polynomial."""
    spec.check_node(i)
    if m not in chi:
        raise EngineError(f"{m} does not occur in the polynomial")
    if not chi.is_admissible(m):
        raise NotAdmissibleError(f"{m} is not admissible (nodes {chi.deficient_nodes(m)})")
    new = chi.copy()
    _i_expand_inplace(new, m, i, spec)
    return new


@dataclass(frozen=True)
class TraceEntry:
    weight: tuple[int, ...]
    monomial: YMonomial
    node: int
    added: tuple[tuple[YMonomial, int], ...]


@dataclass(frozen=True)
class Offender:
    monomial: YMonomial
    coeff: int
    coloring: tuple[int, ...]
    deficient: tuple[int, ...]


@dataclass
class FailureReport:
    weight: tuple[int, ...]
    offenders: list[Offender]
    partial: ColoredPolynomial
    trace: list[TraceEntry]
    injections: list = field(default_factory=list)

    def offender_monomials(self) -> list[YMonomial]:
        return [o.monomial for o in self.offenders]


@dataclass
class QCharacter:
    algebra: AlgebraSpec
    highest: YMonomial
    terms: dict[YMonomial, int]
    trace: list[TraceEntry] = field(default_factory=list, repr=False)
    injections: list = field(default_factory=list)

    def __post_init__(self):
        if self.terms.get(self.highest) != 1:
            raise EngineError("highest monomial must have coefficient 1")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def coefficient(self, m: YMonomial) -> int:
        return self.terms.get(m, 0)

    def total(self) -> int:
        return sum(self.terms.values())

    def items(self):
        return [(m, self.terms[m]) for m in sorted(self.terms)]

    def dominant_monomials(self) -> list[tuple[YMonomial, int]]:
        return dominant_monomials(self)

    def specialize(self) -> dict[tuple[int, ...], int]:
        return specialize_classical(self)

    def __str__(self):
        return " + ".join((f"{c}*" if c != 1 else "") + f"({render(m) or '1'})" for m, c in self.items())


def specialize_classical(qchar: QCharacter) -> dict[tuple[int, ...], int]:
    """Sum coefficients by classical weight."""
    out: Counter = Counter()
    for m, c in qchar.terms.items():
        out[weight(qchar.algebra, m)] += c
    return dict(sorted(out.items()))


def dominant_monomials(qchar: QCharacter) -> list[tuple[YMonomial, int]]:
    return [(m, c) for m, c in qchar.items() if m.is_dominant()]


class FMRun:
    """Mutable state of one run; ``run_fm`` and the trace-back driver share it."""

    def __init__(self, spec: AlgebraSpec, m_plus: YMonomial, limits: FMLimits | None = None,
                 rng: random.Random | None = None, record_trace: bool = True):
        if not m_plus or not m_plus.is_dominant():
            raise ValueError(f"highest monomial must be a nonempty dominant monomial, got {m_plus!r}")
        for j in m_plus.nodes():
            spec.check_node(j)
        self.spec = spec
        self.m_plus = m_plus
        self.top = weight(spec, m_plus)
        self.limits = limits or FMLimits()
        self.rng = rng
        self.record_trace = record_trace
        self.chi = ColoredPolynomial.from_monomial(spec.rank, m_plus)
        self.trace: list[TraceEntry] = []
        self._key: dict[YMonomial, tuple] = {}
        self.by_key: dict[tuple, set[YMonomial]] = {}
        self._register(m_plus)

    def key_of(self, m: YMonomial) -> tuple:
        """Position of ``weight(m)`` in the total order: (height, root coordinates)."""
        key = self._key.get(m)
        if key is None:
            a = self.spec.root_coordinates(tuple(t - w for t, w in zip(self.top, weight(self.spec, m))))
            if any(x < 0 or x.denominator != 1 for x in a):
                raise EngineError(f"{m} has weight outside the cone below the highest weight")
            a = tuple(int(x) for x in a)
            key = (sum(a), a)
            self._key[m] = key
        return key

    def _register(self, m: YMonomial) -> None:
        self.by_key.setdefault(self.key_of(m), set()).add(m)

    def weight_of_key(self, key) -> tuple[int, ...]:
        w = list(self.top)
        for i, a in enumerate(key[1], start=1):
            for j in range(self.spec.rank):
                w[j] -= a * self.spec.C(j + 1, i)
        return tuple(w)

    def inject(self, m: YMonomial) -> None:
        """Add ``m`` with coefficient 1 (or bump an existing coefficient) and zero coloring."""
        if m in self.chi:
            s, col = self.chi.terms[m]
            self.chi.terms[m] = (s + 1, col)
        else:
            self.chi.set(m, 1, (0,) * self.spec.rank)
            self._register(m)

    def run(self, start_key=None) -> FailureReport | None:
        """Process weights with key >= ``start_key``; returns a report on failure."""
        cursor = start_key
        inclusive = True
        while True:
            pending = [k for k in self.by_key if cursor is None or k > cursor or (inclusive and k == cursor)]
            if not pending:
                return None
            key = min(pending)
            cursor, inclusive = key, False
            if key[0] > self.limits.max_height:
                raise LimitExceeded(f"height {key[0]} exceeds max_height={self.limits.max_height}")
            report = self._process(key)
            if report is not None:
                return report

    def _process(self, key) -> FailureReport | None:
        ms = sorted(self.by_key[key])
        nodes = list(self.spec.nodes)
        if self.rng is not None:
            self.rng.shuffle(ms)
            self.rng.shuffle(nodes)
        offenders = []
        for m in ms:
            bad = self.chi.deficient_nodes(m)
            if bad:
                s, col = self.chi.terms[m]
                offenders.append(Offender(m, s, col, tuple(bad)))
        lam = self.weight_of_key(key)
        if offenders:
            offenders.sort(key=lambda o: o.monomial)
            return FailureReport(lam, offenders, self.chi.copy(), list(self.trace))
        for m in ms:
            for i in nodes:
                added = _i_expand_inplace(self.chi, m, i, self.spec)
                if not added:
                    continue
                for n, _ in added:
                    self._register(n)
                if self.record_trace:
                    self.trace.append(TraceEntry(lam, m, i, tuple(added)))
                if len(self.chi) > self.limits.max_terms:
                    raise LimitExceeded(f"more than max_terms={self.limits.max_terms} monomials")
        return None

    def result(self) -> QCharacter:
        if not self.chi.is_saturated():
            raise EngineError("run finished with unsaturated colorings")
        return QCharacter(self.spec, self.m_plus, {m: s for m, (s, _) in self.chi.terms.items()},
                          trace=self.trace)


def run_fm(spec: AlgebraSpec, m_plus: YMonomial, limits: FMLimits | None = None, *,
           rng: random.Random | None = None, record_trace: bool = True,
           seed: list[YMonomial] = ()) -> QCharacter | FailureReport:
    """Run the FM algorithm from ``m_plus``.

    Returns the completed character, or a :class:`FailureReport` when some
    monomial is not admissible at the moment its weight is reached.  ``seed``
    monomials are added to the initial polynomial with zero coloring; ``rng``
    shuffles the within-weight processing order.
    """
    state = FMRun(spec, m_plus, limits, rng, record_trace)
    for m in seed:
        state.inject(m)
    report = state.run()
    if report is not None:
        return report
    return state.result()


def height_of(spec: AlgebraSpec, m_plus: YMonomial, m: YMonomial) -> Fraction:
    a = spec.root_coordinates(tuple(t - w for t, w in zip(weight(spec, m_plus), weight(spec, m))))
    return sum(a, Fraction(0))
