"""Trace-back modification of the FM iteration.

When a monomial is found non-admissible at node i, the missing i-dominant
"ancestor" whose node-i expansion would have produced it is searched among
``offender * prod A_{i,k}``.  A unique minimal-degree ancestor is injected with
zero coloring and the iteration resumes from the ancestor's weight.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

from .cartan import AlgebraSpec
from .engine import EngineError, FailureReport, FMLimits, FMRun, LimitExceeded, QCharacter
from .monomial import YMonomial, a_monomial, solve_a_factorization
from .sl2 import sl2_expansion


class AmbiguityError(EngineError):
    def __init__(self, offender, node, candidates):
        super().__init__(f"ancestor of {offender} at node {node} is not unique: "
                         + ", ".join(str(c) for c in candidates))
        self.offender = offender
        self.node = node
        self.candidates = candidates


@dataclass(frozen=True)
class InjectionRecord:
    offender: YMonomial
    node: int
    injected: YMonomial
    ancestor_weight: tuple[int, ...]
    candidates_considered: tuple[YMonomial, ...] = field(default=())


def _generates(spec: AlgebraSpec, n: YMonomial, i: int, positions: tuple[int, ...]) -> bool:
    return any(p == positions for p, _ in sl2_expansion(n.project(i), spec.d(i)))


def find_ancestors(spec: AlgebraSpec, offender: YMonomial, i: int, depth_limit: int = 4,
                   considered: list | None = None) -> list[YMonomial]:
    """i-dominant ``n = offender * prod A_{i,k}`` whose node-i expansion contains ``offender``.

    Spectral positions ``k`` are restricted to ``k' +- d_i`` for the negative
    node-i variables ``Y_{i,k'}`` of the offender.  Sorted by A-degree.
    """
    spec.check_node(i)
    if offender.is_i_dominant(i):
        raise ValueError(f"{offender} is already {i}-dominant")
    di = spec.d(i)
    ks = sorted({k + s for (j, k), e in offender.items() if j == i and e < 0 for s in (-di, di)})
    survivors = []
    for degree in range(1, depth_limit + 1):
        for positions in combinations_with_replacement(ks, degree):
            n = offender
            for k in positions:
                n = n * a_monomial(spec, i, k)
            if considered is not None:
                considered.append(n)
            if n.is_i_dominant(i) and _generates(spec, n, i, positions):
                survivors.append((degree, n))
    return [n for _, n in sorted(survivors)]


def run_fm_modified(spec: AlgebraSpec, m_plus: YMonomial, limits: FMLimits | None = None,
                    **kwargs) -> QCharacter | FailureReport:
    """FM iteration with trace-back injections.

    Returns the completed character (``.injections`` lists what was added) or
    a :class:`FailureReport` when an offender has no ancestor.  Raises
    :class:`AmbiguityError` on ties and :class:`LimitExceeded` on caps.
    """
    limits = limits or FMLimits()
    state = FMRun(spec, m_plus, limits, **kwargs)
    injections: list[InjectionRecord] = []
    start = None
    while True:
        report = state.run(start)
        if report is None:
            q = state.result()
            q.injections = injections
            return q
        offender = report.offenders[0]
        i = offender.deficient[0]
        considered: list[YMonomial] = []
        found = find_ancestors(spec, offender.monomial, i, limits.depth_limit, considered)
        # the ancestor must sit below the highest weight
        found = [n for n in found if _below_top(state, n)]
        if not found:
            report.injections = injections
            return report
        deg = _a_degree(spec, offender.monomial, found[0])
        minimal = [n for n in found if _a_degree(spec, offender.monomial, n) == deg]
        if len(minimal) > 1:
            raise AmbiguityError(offender.monomial, i, minimal)
        if len(injections) >= limits.max_injections:
            raise LimitExceeded(f"more than max_injections={limits.max_injections} injections")
        ancestor = minimal[0]
        state.inject(ancestor)
        start = state.key_of(ancestor)
        injections.append(InjectionRecord(offender.monomial, i, ancestor, state.weight_of_key(start),
                                          tuple(considered)))


def _below_top(state: FMRun, n: YMonomial) -> bool:
    try:
        state.key_of(n)
    except EngineError:
        return False
    return True


def _a_degree(spec, offender, n) -> int:
    return sum(solve_a_factorization(spec, n, offender).values())
