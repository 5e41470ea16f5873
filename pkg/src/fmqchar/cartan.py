"""Root-system data for the simple Lie algebras.

Nodes are numbered 1..n as in Bourbaki.  The Cartan matrix follows
``C[i][j] = 2 (a_i, a_j) / (a_i, a_i)``, so for C_n the last node is the
long root and ``C[n-1][n] = -2``.  Symmetrizers ``d_i`` give ``q_i = q**d_i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

FAMILIES = "ABCDEFG"


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    symmetrizers: tuple[int, ...]

    def __post_init__(self):
        n = self.rank
        C = self.cartan
        if len(C) != n or any(len(row) != n for row in C) or len(self.symmetrizers) != n:
            raise AlgebraError("Cartan matrix / symmetrizer shape does not match rank")
        for i in range(n):
            if C[i][i] != 2:
                raise AlgebraError(f"diagonal entry C[{i + 1}][{i + 1}] != 2")
            for j in range(n):
                if i == j:
                    continue
                if C[i][j] not in (0, -1, -2, -3):
                    raise AlgebraError(f"bad off-diagonal entry C[{i + 1}][{j + 1}]={C[i][j]}")
                if (C[i][j] == 0) != (C[j][i] == 0):
                    raise AlgebraError("Cartan matrix zero pattern is not symmetric")
                if self.symmetrizers[i] * C[i][j] != self.symmetrizers[j] * C[j][i]:
                    raise AlgebraError("symmetrizers do not symmetrize the Cartan matrix")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def C(self, i: int, j: int) -> int:
        """Cartan entry with 1-based node indices."""
        return self.cartan[i - 1][j - 1]

    def d(self, i: int) -> int:
        return self.symmetrizers[i - 1]

    def check_node(self, i: int) -> None:
        if not isinstance(i, int) or not 1 <= i <= self.rank:
            raise AlgebraError(f"node index {i!r} out of range for {self.name}")

    @cached_property
    def _root_solver(self) -> tuple[tuple[Fraction, ...], ...]:
        # alpha_i is column i of C, so root coordinates are C^{-1} v
        return _inverse([[Fraction(x) for x in row] for row in self.cartan])

    def root_coordinates(self, v) -> tuple[Fraction, ...]:
        """Coordinates ``a`` with ``v = sum_i a_i alpha_i`` (exact rationals)."""
        inv = self._root_solver
        return tuple(sum((inv[r][c] * v[c] for c in range(self.rank)), Fraction(0)) for r in range(self.rank))

    def __str__(self):
        return self.name


def _inverse(M):
    n = len(M)
    A = [list(row) + [Fraction(int(r == c)) for c in range(n)] for r, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if A[r][col] != 0)
        A[col], A[piv] = A[piv], A[col]
        p = A[col][col]
        A[col] = [x / p for x in A[col]]
        for r in range(n):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(tuple(row[n:]) for row in A)


def _dynkin(family: str, n: int):
    """Return (edges, half squared root lengths) for a valid type."""
    chain = [(i, i + 1) for i in range(1, n)]
    if family == "A" and n >= 1:
        return chain, [1] * n
    if family == "B" and n >= 2:
        return chain, [2] * (n - 1) + [1]
    if family == "C" and n >= 2:
        return chain, [1] * (n - 1) + [2]
    if family == "D" and n >= 4:
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)], [1] * n
    if family == "E" and n in (6, 7, 8):
        return [(1, 3), (3, 4), (4, 5), (2, 4)] + [(i, i + 1) for i in range(5, n)], [1] * n
    if family == "F" and n == 4:
        return chain, [2, 2, 1, 1]
    if family == "G" and n == 2:
        return chain, [1, 3]
    raise AlgebraError(f"no simple Lie algebra of type {family}{n}")


def make_algebra(family: str, rank: int | None = None) -> AlgebraSpec:
    """Build the spec for ``family``/``rank``; ``make_algebra("C3")`` also works."""
    if rank is None:
        family, rank = parse_algebra_name(family)
    family = family.upper()
    if family not in FAMILIES or not isinstance(rank, int):
        raise AlgebraError(f"no simple Lie algebra of type {family}{rank}")
    edges, d = _dynkin(family, rank)
    # symmetric form (a_i, a_j) with short roots normalised to length^2 = 2
    B = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        B[i][i] = 2 * d[i]
    for i, j in edges:
        b = -max(d[i - 1], d[j - 1])
        B[i - 1][j - 1] = B[j - 1][i - 1] = b
    cartan = tuple(tuple(B[i][j] // d[i] for j in range(rank)) for i in range(rank))
    return AlgebraSpec(family, rank, cartan, tuple(d))


def parse_algebra_name(text: str) -> tuple[str, int]:
    text = text.strip()
    if len(text) < 2 or text[0].upper() not in FAMILIES or not text[1:].isdigit():
        raise AlgebraError(f"cannot parse algebra name {text!r}")
    return text[0].upper(), int(text[1:])


def simple_root(spec: AlgebraSpec, i: int) -> tuple[int, ...]:
    """Simple root alpha_i in the fundamental-weight basis: column i of C."""
    spec.check_node(i)
    return tuple(spec.C(j, i) for j in spec.nodes)


def weight_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def weight_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def root_expansion(spec: AlgebraSpec, lam, mu) -> tuple[Fraction, ...]:
    """Coefficients ``a`` with ``mu - lam = sum a_i alpha_i``."""
    return spec.root_coordinates(weight_sub(mu, lam))


def leq_natural(spec: AlgebraSpec, lam, mu) -> bool:
    """True iff ``lam <= mu`` in the dominance order."""
    a = root_expansion(spec, lam, mu)
    return all(x >= 0 and x.denominator == 1 for x in a)
