"""Young-tableau realization of monomials for types A_n and C_n.

Letters are ints: ``a`` for the unbarred letter and ``-a`` for the barred
letter a-bar (type C only).  Alphabet order is ``1 < ... < n+1`` for A_n and
``1 < ... < n < n-bar < ... < 1-bar`` for C_n.  Text form writes a-bar as
``"ab"``, rows separated by ``/``: ``"1 1 / 2b 1b"``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .cartan import make_algebra
from .monomial import YMonomial, render, solve_a_factorization


class TableauError(ValueError):
    pass


def _check_family(family: str, rank: int) -> None:
    if family not in ("A", "C"):
        raise TableauError(f"tableaux are implemented for types A and C only, not {family}")
    if rank < 1 or (family == "C" and rank < 2):
        raise TableauError(f"invalid rank {rank} for type {family}")


def alphabet(family: str, rank: int) -> list[int]:
    _check_family(family, rank)
    if family == "A":
        return list(range(1, rank + 2))
    return list(range(1, rank + 1)) + [-a for a in range(rank, 0, -1)]


def letter_rank(family: str, rank: int, letter: int) -> int:
    """Position of ``letter`` in the alphabet order (0-based)."""
    try:
        return alphabet(family, rank).index(letter)
    except ValueError:
        raise TableauError(f"letter {format_letter(letter)} not in the {family}{rank} alphabet") from None


def format_letter(letter: int) -> str:
    return f"{-letter}b" if letter < 0 else str(letter)


def parse_letter(text: str) -> int:
    text = text.strip()
    if text.endswith("b") and text[:-1].isdigit():
        return -int(text[:-1])
    if text.isdigit():
        return int(text)
    raise TableauError(f"bad letter {text!r}")


@dataclass(frozen=True)
class Shape:
    rows: tuple[int, ...]

    def __post_init__(self):
        if not self.rows or any(r <= 0 for r in self.rows) or any(
                a < b for a, b in zip(self.rows, self.rows[1:])):
            raise TableauError(f"not a partition: {self.rows}")

    @classmethod
    def parse(cls, text: str) -> "Shape":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").strip("()").split(",") if x))
        except ValueError:
            raise TableauError(f"cannot parse shape {text!r}") from None

    def cells(self):
        for i, length in enumerate(self.rows, start=1):
            for j in range(1, length + 1):
                yield i, j

    def __str__(self):
        return "(" + ",".join(map(str, self.rows)) + ")"


@dataclass(frozen=True)
class Tableau:
    rows: tuple[tuple[int, ...], ...]
    shape: Shape = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "shape", Shape(tuple(len(r) for r in self.rows)))

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]]) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        rows = [r.split() for r in text.split("/")]
        if any(not r for r in rows):
            raise TableauError(f"empty row in tableau {text!r}")
        return cls.of([parse_letter(x) for x in r] for r in rows)

    def cells(self):
        for i, row in enumerate(self.rows, start=1):
            for j, letter in enumerate(row, start=1):
                yield i, j, letter

    def is_semistandard(self, family: str, rank: int) -> bool:
        pos = {}
        for i, j, a in self.cells():
            pos[i, j] = letter_rank(family, rank, a)
        for (i, j), p in pos.items():
            if (i, j + 1) in pos and pos[i, j + 1] < p:
                return False
            if (i + 1, j) in pos and pos[i + 1, j] <= p:
                return False
        return True

    def __str__(self):
        return " / ".join(" ".join(format_letter(a) for a in row) for row in self.rows)


def box_monomial(family: str, rank: int, letter: int, i: int, j: int) -> YMonomial:
    """Monomial of ``letter`` in row ``i``, column ``j``."""
    letter_rank(family, rank, letter)
    k = -2 * i + 2 * j
    exps = Counter()
    if letter > 0:
        a = letter
        if a <= rank:
            exps[(a, k + a - 1)] += 1
        if a >= 2:
            exps[(a - 1, k + a)] -= 1
    else:
        a, n = -letter, rank
        if a >= 2:
            exps[(a - 1, k + 2 * n - a + 2)] += 1
        exps[(a, k + 2 * n - a + 3)] -= 1
    return YMonomial(exps)


def tableau_monomial(family: str, rank: int, T: Tableau) -> YMonomial:
    m = YMonomial.unit()
    for i, j, a in T.cells():
        m = m * box_monomial(family, rank, a, i, j)
    return m


def next_letter(family: str, rank: int, letter: int) -> int:
    letters = alphabet(family, rank)
    p = letter_rank(family, rank, letter)
    if p + 1 >= len(letters):
        raise TableauError(f"letter {format_letter(letter)} has no successor")
    return letters[p + 1]


def letter_action_check(family: str, rank: int, letter: int, i: int, j: int) -> tuple[tuple[int, int], int]:
    """``((node, k), next)`` with ``box(letter) * A^{-1}_{node,k} == box(next)``.

    The A-factor is recovered by an exact lattice solve, so a wrong box
    formula surfaces as a :class:`TableauError`.
    """
    nxt = next_letter(family, rank, letter)
    spec = make_algebra(family, rank)
    sol = solve_a_factorization(spec, box_monomial(family, rank, letter, i, j),
                                box_monomial(family, rank, nxt, i, j))
    if sol is None or list(sol.values()) != [1]:
        raise TableauError(f"box({format_letter(letter)}) -> box({format_letter(nxt)}) "
                           f"at ({i},{j}) is not a single A^-1 step: {sol}")
    (node_k,) = sol
    return node_k, nxt


def enumerate_semistandard(family: str, rank: int, shape: Shape | Sequence[int]) -> list[Tableau]:
    """Rows weakly increasing, columns strictly increasing, in the alphabet order."""
    if not isinstance(shape, Shape):
        shape = Shape(tuple(shape))
    letters = alphabet(family, rank)
    cells = list(shape.cells())
    grid: dict = {}
    out = []

    def fill(idx):
        if idx == len(cells):
            out.append(Tableau.of([[letters[grid[i, j]] for j in range(1, r + 1)]
                                   for i, r in enumerate(shape.rows, start=1)]))
            return
        i, j = cells[idx]
        lo = 0
        if (i, j - 1) in grid:
            lo = grid[i, j - 1]
        if (i - 1, j) in grid:
            lo = max(lo, grid[i - 1, j] + 1)
        for p in range(lo, len(letters)):
            grid[i, j] = p
            fill(idx + 1)
        grid.pop((i, j), None)

    fill(0)
    return out


@dataclass
class MatchResult:
    matched: bool
    realization: dict[YMonomial, list[Tableau]]
    # monomial -> (coefficient in character, number of tableaux)
    mismatches: dict[YMonomial, tuple[int, int]]

    @property
    def n_tableaux(self) -> int:
        return sum(len(v) for v in self.realization.values())

    def describe(self) -> str:
        if self.matched:
            return f"match: {self.n_tableaux} tableaux realize {len(self.realization)} monomials"
        lines = [f"mismatch on {len(self.mismatches)} monomials (coefficient vs tableaux):"]
        for m, (c, t) in sorted(self.mismatches.items()):
            lines.append(f"  {render(m) or '1'}: {c} vs {t}")
        return "\n".join(lines)


def match_character(qchar, family: str, rank: int, shape: Shape | None = None,
                    candidate_tableaux: Iterable[Tableau] | None = None) -> MatchResult:
    """Compare character coefficients with tableau counts per monomial.

    ``candidate_tableaux`` defaults to the semistandard tableaux of ``shape``.
    """
    if candidate_tableaux is None:
        if shape is None:
            raise TableauError("need a shape or candidate tableaux")
        candidate_tableaux = enumerate_semistandard(family, rank, shape)
    groups: dict[YMonomial, list[Tableau]] = {}
    for T in candidate_tableaux:
        if shape is not None and T.shape != shape:
            raise TableauError(f"tableau {T} does not have shape {shape}")
        groups.setdefault(tableau_monomial(family, rank, T), []).append(T)
    terms = dict(qchar.terms) if hasattr(qchar, "terms") else dict(qchar)
    mismatches = {}
    for m in set(terms) | set(groups):
        c, t = terms.get(m, 0), len(groups.get(m, ()))
        if c != t:
            mismatches[m] = (c, t)
    return MatchResult(not mismatches, dict(sorted(groups.items())), mismatches)


def read_tableaux(path) -> list[Tableau]:
    """One tableau per line; blank lines and ``#`` comments ignored."""
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(Tableau.parse(line))
    return out


def c2_square_tableaux() -> list[Tableau]:
    """The 25 shape-(2,2) C2 tableaux realizing chi(Y[2,-1] Y[2,1])."""
    return read_tableaux(Path(__file__).with_name("data") / "c2_square_tableaux.txt")
