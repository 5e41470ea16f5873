"""Compute the worked A2 and C2 examples and print their characters."""
import argparse

from fmqchar import make_algebra, parse, run_fm
from fmqchar.tableaux import Shape, c2_square_tableaux, match_character

EXAMPLES = [
    ("A2", "Y[1,2] Y[2,-1]"),
    ("C2", "Y[2,-1]"),
    ("C2", "Y[2,1]"),
    ("C2", "Y[2,-1] Y[2,1]"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--weights", action="store_true", help="also print classical weight multiplicities")
    args = ap.parse_args()
    for name, h in EXAMPLES:
        q = run_fm(make_algebra(name), parse(h))
        print(f"{name}  {h}: {len(q)} monomials, total {q.total()}")
        for m, c in q.items():
            print(f"  {c:>2}  {m}")
        if args.weights:
            for w, c in q.specialize().items():
                print(f"    weight {w}: {c}")
    a2 = run_fm(make_algebra("A2"), parse("Y[1,2] Y[2,-1]"))
    print(match_character(a2, "A", 2, Shape((2, 1))).describe())
    c2 = run_fm(make_algebra("C2"), parse("Y[2,-1] Y[2,1]"))
    print(match_character(c2, "C", 2, Shape((2, 2)), c2_square_tableaux()).describe())


if __name__ == "__main__":
    main()
