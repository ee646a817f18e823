"""Scan small rational generating-function triples for handle negligibility.

Every triple p_alpha/q, p_beta/q, p_gamma/q with small integer numerators
over a fixed q is tested; the script reports how often the handle relation
is negligible, split by whether the degree condition holds.
"""

import argparse
from itertools import product

from skein.cobordism import SkeinContext, handle_sigma, is_negligible
from skein.sequences import RationalGF, SequenceTriple, satisfies_degree_condition


def numerators(max_deg, coeffs):
    for d in range(max_deg + 1):
        for cs in product(coeffs, repeat=d + 1):
            if cs[-1]:
                yield cs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", default="1,-1,-1", help="denominator coefficients, constant first")
    ap.add_argument("--max-deg", type=int, default=2)
    ap.add_argument("--coeffs", default="-1,1,2")
    args = ap.parse_args()
    q = tuple(int(x) for x in args.q.split(","))
    coeffs = [int(x) for x in args.coeffs.split(",")]

    alpha = RationalGF((1, 1) if len(q) > 2 else (1,), q)
    tally = {}
    for pb in numerators(args.max_deg, coeffs):
        for pg in numerators(args.max_deg, coeffs):
            seqs = SequenceTriple(alpha, RationalGF(pb, q), RationalGF(pg, q))
            ctx = SkeinContext(seqs)
            key = (satisfies_degree_condition(seqs), is_negligible(handle_sigma(ctx), ctx, ctx.K + 3))
            tally[key] = tally.get(key, 0) + 1
    print("q =", q)
    for (deg_ok, negl), n in sorted(tally.items()):
        print("degree condition %-5s  negligible %-5s  %d triples" % (deg_ok, negl, n))


if __name__ == "__main__":
    main()
