"""Run the C3 and D4 failures, then their trace-back completions."""
import argparse
import time

from fmqchar import FailureReport, make_algebra, parse, run_fm
from fmqchar.trace_back import run_fm_modified

CASES = [("C3", "Y[1,4] Y[2,1] Y[3,-2]"), ("D4", "Y[1,2] Y[3,-2] Y[4,-2]")]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--show-partial", action="store_true", help="print the partial state at failure")
    args = ap.parse_args()
    for name, h in CASES:
        spec = make_algebra(name)
        r = run_fm(spec, parse(h))
        assert isinstance(r, FailureReport)
        print(f"{name} {h}: fails at weight {r.weight}")
        for o in r.offenders:
            print(f"  offender {o.monomial}  coefficient {o.coeff}  coloring {o.coloring}  nodes {o.deficient}")
        if args.show_partial:
            for m in r.partial:
                print(f"    {r.partial.coefficient(m):>2} {r.partial.coloring(m)}  {m}")
        t0 = time.perf_counter()
        q = run_fm_modified(spec, parse(h))
        dt = time.perf_counter() - t0
        for rec in q.injections:
            print(f"  injected {rec.injected} at weight {rec.ancestor_weight} "
                  f"({len(rec.candidates_considered)} candidates considered)")
        print(f"  modified run: {len(q)} monomials, total {q.total()}, "
              f"dominant {[str(m) for m, _ in q.dominant_monomials()]}  [{dt:.2f}s]")


if __name__ == "__main__":
    main()
