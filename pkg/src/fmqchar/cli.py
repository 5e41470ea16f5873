"""Command-line front end.

Exit codes: 0 completed, 1 usage error, 2 algorithm failure, 3 ambiguous
trace-back, 4 limit exceeded, 5 tableaux mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .cartan import AlgebraError, make_algebra
from .engine import FailureReport, FMLimits, LimitExceeded, QCharacter, run_fm
from .monomial import MonomialParseError, parse, render
from .tableaux import Shape, TableauError, match_character, read_tableaux
from .trace_back import AmbiguityError, run_fm_modified

SCHEMA_VERSION = 1

EXIT_OK, EXIT_USAGE, EXIT_FAILURE, EXIT_AMBIGUOUS, EXIT_LIMIT, EXIT_MISMATCH = range(6)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    algebra: str
    highest: str
    mode: str = "plain"
    max_height: int = 64
    max_terms: int = 1_000_000
    max_injections: int = 8
    output: str = "text"
    emit_trace: bool = False
    tableaux_shape: str | None = None
    candidates: str | None = None

    def __post_init__(self):
        if self.mode not in ("plain", "modified"):
            raise UsageError(f"unknown mode {self.mode!r}")
        if self.output not in ("text", "json"):
            raise UsageError(f"unknown output format {self.output!r}")
        if min(self.max_height, self.max_terms, self.max_injections) <= 0:
            raise UsageError("limits must be positive")

    def limits(self) -> FMLimits:
        return FMLimits(self.max_height, self.max_terms, self.max_injections)


def _mono(m) -> str:
    return render(m)


def _weight_list(spec, q: QCharacter):
    return [{"weight": list(w), "multiplicity": c} for w, c in q.specialize().items()]


def _trace_json(trace):
    return [{"weight": list(t.weight), "monomial": _mono(t.monomial), "node": t.node,
             "added": [[_mono(n), c] for n, c in t.added]} for t in trace]


def _injections_json(records):
    return [{"offender": _mono(r.offender), "node": r.node, "injected": _mono(r.injected),
             "ancestor_weight": list(r.ancestor_weight),
             "candidates_considered": len(r.candidates_considered)} for r in records]


def compute(cfg: RunConfig):
    """Run the configured algorithm; returns (spec, outcome)."""
    try:
        spec = make_algebra(cfg.algebra)
        m_plus = parse(cfg.highest)
    except (AlgebraError, MonomialParseError) as exc:
        raise UsageError(str(exc)) from exc
    if not m_plus or not m_plus.is_dominant():
        raise UsageError(f"highest monomial must be nonempty and dominant: {cfg.highest!r}")
    if any(j > spec.rank for j in m_plus.nodes()):
        raise UsageError(f"monomial uses nodes outside {spec.name}")
    if cfg.mode == "plain":
        return spec, run_fm(spec, m_plus, cfg.limits(), record_trace=cfg.emit_trace)
    return spec, run_fm_modified(spec, m_plus, cfg.limits(), record_trace=cfg.emit_trace)


def report_dict(cfg: RunConfig, spec, outcome) -> dict:
    out = {"schema": SCHEMA_VERSION, "algebra": spec.name, "highest": _mono(parse(cfg.highest)),
           "mode": cfg.mode}
    if isinstance(outcome, QCharacter):
        out.update({
            "status": "complete",
            "terms": [[_mono(m), c] for m, c in outcome.items()],
            "n_terms": len(outcome),
            "total": outcome.total(),
            "dominant": [[_mono(m), c] for m, c in outcome.dominant_monomials()],
            "weights": _weight_list(spec, outcome),
        })
    else:
        out.update({
            "status": "failure",
            "failure": {
                "weight": list(outcome.weight),
                "offenders": [{"monomial": _mono(o.monomial), "coefficient": o.coeff,
                               "coloring": list(o.coloring), "deficient_nodes": list(o.deficient)}
                              for o in outcome.offenders],
                "partial_terms": [[_mono(m), outcome.partial.coefficient(m), list(outcome.partial.coloring(m))]
                                  for m in outcome.partial],
            },
        })
    if cfg.mode == "modified":
        out["injections"] = _injections_json(outcome.injections)
    if cfg.emit_trace:
        out["trace"] = _trace_json(outcome.trace)
    return out


def _text_report(d: dict) -> str:
    lines = [f"algebra {d['algebra']}  highest {d['highest']}  mode {d['mode']}"]
    for rec in d.get("injections", []):
        lines.append(f"injected {rec['injected']} (node {rec['node']} ancestor of {rec['offender']})")
    if d["status"] == "complete":
        lines.append(f"completed: {d['n_terms']} monomials, total coefficient {d['total']}")
        for m, c in d["terms"]:
            lines.append(f"  {c:>3}  {m}")
        lines.append("dominant: " + ", ".join(f"{m} ({c})" for m, c in d["dominant"]))
    else:
        f = d["failure"]
        lines.append(f"FAILED at weight {tuple(f['weight'])}")
        for o in f["offenders"]:
            lines.append(f"  offender {o['monomial']}  coefficient {o['coefficient']}  "
                         f"coloring {tuple(o['coloring'])}  deficient nodes {o['deficient_nodes']}")
    for t in d.get("trace", []):
        lines.append(f"  [{t['node']}-expansion of {t['monomial']} at {tuple(t['weight'])}] +"
                     + ", ".join(f"{m}" + (f" x{c}" if c != 1 else "") for m, c in t["added"]))
    return "\n".join(lines)


def _emit(cfg: RunConfig, d: dict, out) -> None:
    if cfg.output == "json":
        out.write(json.dumps(d, sort_keys=True, indent=1) + "\n")
    else:
        out.write(_text_report(d) + "\n")


def cmd_run(cfg: RunConfig, out=sys.stdout) -> int:
    try:
        spec, outcome = compute(cfg)
    except AmbiguityError as exc:
        return _error(cfg, out, "ambiguous", str(exc), EXIT_AMBIGUOUS)
    except LimitExceeded as exc:
        return _error(cfg, out, "limit", str(exc), EXIT_LIMIT)
    _emit(cfg, report_dict(cfg, spec, outcome), out)
    return EXIT_OK if isinstance(outcome, QCharacter) else EXIT_FAILURE


def cmd_tableaux(cfg: RunConfig, out=sys.stdout) -> int:
    if cfg.tableaux_shape is None:
        raise UsageError("--shape is required")
    try:
        shape = Shape.parse(cfg.tableaux_shape)
        spec = make_algebra(cfg.algebra)
        if spec.family not in ("A", "C"):
            raise UsageError(f"tableaux are supported for types A and C, not {spec.name}")
        candidates = read_tableaux(cfg.candidates) if cfg.candidates else None
    except (TableauError, AlgebraError, OSError) as exc:
        raise UsageError(str(exc)) from exc
    try:
        spec, outcome = compute(cfg)
    except AmbiguityError as exc:
        return _error(cfg, out, "ambiguous", str(exc), EXIT_AMBIGUOUS)
    except LimitExceeded as exc:
        return _error(cfg, out, "limit", str(exc), EXIT_LIMIT)
    if isinstance(outcome, FailureReport):
        _emit(cfg, report_dict(cfg, spec, outcome), out)
        return EXIT_FAILURE
    try:
        res = match_character(outcome, spec.family, spec.rank, shape, candidates)
    except TableauError as exc:
        raise UsageError(str(exc)) from exc
    d = {"schema": SCHEMA_VERSION, "algebra": spec.name, "highest": _mono(outcome.highest),
         "shape": list(shape.rows), "status": "match" if res.matched else "mismatch",
         "n_tableaux": res.n_tableaux, "total": outcome.total(),
         "realization": [[_mono(m), [str(t) for t in ts]] for m, ts in res.realization.items()],
         "mismatches": [[_mono(m), c, t] for m, (c, t) in sorted(res.mismatches.items())]}
    if cfg.output == "json":
        out.write(json.dumps(d, sort_keys=True, indent=1) + "\n")
    else:
        out.write(res.describe() + "\n")
        for m, ts in res.realization.items():
            out.write(f"  {_mono(m)}: " + " | ".join(str(t) for t in ts) + "\n")
    return EXIT_OK if res.matched else EXIT_MISMATCH


def _error(cfg, out, status, message, code) -> int:
    if cfg.output == "json":
        out.write(json.dumps({"schema": SCHEMA_VERSION, "status": status, "error": message}, sort_keys=True) + "\n")
    else:
        out.write(f"{status}: {message}\n")
    return code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fmqchar", description="q-characters by the Frenkel-Mukhin algorithm")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--algebra", required=True, help="e.g. A2, C3, D4")
        sp.add_argument("--highest", required=True, help='highest monomial, e.g. "Y[1,4] Y[2,1] Y[3,-2]"')
        sp.add_argument("--mode", choices=("plain", "modified"), default="plain")
        sp.add_argument("--max-height", type=int, default=64)
        sp.add_argument("--max-terms", type=int, default=1_000_000)
        sp.add_argument("--max-injections", type=int, default=8)
        sp.add_argument("--format", dest="output", choices=("text", "json"), default="text")
        sp.add_argument("--trace", dest="emit_trace", action="store_true")

    run = sub.add_parser("run", help="compute a q-character")
    common(run)
    tab = sub.add_parser("tableaux", help="match a q-character against tableaux")
    common(tab)
    tab.add_argument("--shape", dest="tableaux_shape", required=True, help="e.g. 2,1")
    tab.add_argument("--candidates", help="file with one tableau per line (default: semistandard)")
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = vars(build_parser().parse_args(argv))
    command = args.pop("command")
    try:
        cfg = RunConfig(**args)
        if command == "run":
            return cmd_run(cfg, out)
        return cmd_tableaux(cfg, out)
    except UsageError as exc:
        sys.stderr.write(f"fmqchar: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
