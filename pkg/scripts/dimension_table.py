"""Print spanning-family sizes next to the ranks actually achieved.

For each m the table shows |S_m|, the Gram rank of S_m at a random point
with lambda*a0 off the even integers, the F_A image rank, |T_m|, and the
Gram and image ranks for T_m.
"""

import argparse

from skein.checks import orientable_point
from skein.cobordism import socob_context, sucob_context
from skein.functor import OCOB, SUCOB, rank_of_images, target_hom_dim
from skein.gram import generic_point, gram_matrix, numeric_rank
from skein.scalar import seeded_rng
from skein.spanning import dim_counts, spanning_S, spanning_T


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-s", type=int, default=4)
    ap.add_argument("--max-t", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = seeded_rng(args.seed)

    print("%2s %6s %8s %8s | %6s %8s %8s %8s" % ("m", "|S_m|", "gram", "F_A", "|T_m|", "target", "gram", "F"))
    for m in range(1, max(args.max_s, args.max_t) + 1):
        dc = dim_counts(m)
        cols = [m, dc.stirling_sum, "-", "-", dc.t_size, target_hom_dim(m), "-", "-"]
        if m <= args.max_s:
            fam = spanning_S(m)
            cols[2] = numeric_rank(gram_matrix(fam, socob_context()), orientable_point(rng))
            cols[3] = rank_of_images(fam, OCOB)
        if m <= args.max_t:
            fam = spanning_T(m)
            cols[6] = numeric_rank(gram_matrix(fam, sucob_context()), generic_point(rng))
            cols[7] = rank_of_images(fam, SUCOB, point={"s": 3})
        print("%2s %6s %8s %8s | %6s %8s %8s %8s" % tuple(cols))


if __name__ == "__main__":
    main()
