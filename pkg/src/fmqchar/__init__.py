"""Exact q-characters of quantum affine algebras by the Frenkel-Mukhin algorithm."""
from .cartan import AlgebraSpec, leq_natural, make_algebra, simple_root
from .engine import (ColoredPolynomial, FailureReport, FMLimits, LimitExceeded, QCharacter,
                     dominant_monomials, i_expand, run_fm, specialize_classical)
from .monomial import YMonomial, a_monomial_inverse, parse, render, solve_a_factorization, weight
from .trace_back import AmbiguityError, InjectionRecord, find_ancestors, run_fm_modified

__all__ = [
    "AlgebraSpec", "AmbiguityError", "ColoredPolynomial", "FMLimits", "FailureReport", "InjectionRecord",
    "LimitExceeded", "QCharacter", "YMonomial", "a_monomial_inverse", "dominant_monomials", "find_ancestors",
    "i_expand", "leq_natural", "make_algebra", "parse", "render", "run_fm", "run_fm_modified",
    "simple_root", "solve_a_factorization", "specialize_classical", "weight",
]
