"""Factor the T_m Gram determinants and estimate factor orders for T_3.

    python scripts/conjecture_report.py --max-m 3 --samples 10 --seed 0
"""

import argparse
import json
import math
import time

from skein.gram import conjecture_check
from skein.scalar import seeded_rng


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--samples", type=int, default=10)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="dump the full reports")
    args = ap.parse_args()

    rng = seeded_rng(args.seed)
    for m in range(1, args.max_m + 1):
        t0 = time.perf_counter()
        rep = conjecture_check(m, "symbolic", samples=args.samples, rng=rng)
        secs = time.perf_counter() - t0
        print("T_%d  %dx%d  mode=%s  %.1fs" % (m, rep.matrix.rows, rep.matrix.cols, rep.mode, secs))
        if rep.mode == "symbolic":
            print("  det =", rep.factor_string())
        else:
            print("  nonzero samples: %d/%d" % (rep.nonzero_samples(), len(rep.samples)))
            for f, est in rep.order_estimates:
                shown = "inf" if not math.isfinite(est) else "%.2f" % est
                print("  order of %-22s ~ %s" % (f, shown))
        if args.json:
            print(json.dumps(rep.to_json(), sort_keys=True))


if __name__ == "__main__":
    main()
