"""Run every fundamental Y_{i,0} over a range of types and report specialness."""
import argparse
import time

from fmqchar import YMonomial, make_algebra, run_fm
from fmqchar.engine import FailureReport, FMLimits, LimitExceeded

DEFAULT = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "C4", "D4", "G2"]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("algebras", nargs="*", default=DEFAULT)
    ap.add_argument("--max-terms", type=int, default=200_000)
    args = ap.parse_args()
    limits = FMLimits(max_terms=args.max_terms)
    print(f"{'type':<5}{'node':>5}{'terms':>8}{'dim':>8}{'dominant':>10}{'sec':>8}")
    for name in args.algebras:
        spec = make_algebra(name)
        for i in spec.nodes:
            t0 = time.perf_counter()
            try:
                q = run_fm(spec, YMonomial.var(i, 0), limits, record_trace=False)
            except LimitExceeded:
                print(f"{name:<5}{i:>5}  limit exceeded")
                continue
            dt = time.perf_counter() - t0
            if isinstance(q, FailureReport):
                print(f"{name:<5}{i:>5}  FAILED at {q.weight}")
                continue
            print(f"{name:<5}{i:>5}{len(q):>8}{q.total():>8}{len(q.dominant_monomials()):>10}{dt:>8.2f}")


if __name__ == "__main__":
    main()
