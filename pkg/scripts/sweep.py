"""Scalability and cost sweep over all families up to a maximum radix.

    python3 scripts/sweep.py --rmax 64 --out results/sweep.csv
"""

import argparse
import time
from pathlib import Path

from projnet.design import PRESETS, SWEEP_FAMILIES, scalability_sweep, sweep_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--rmax", type=int, default=48)
    ap.add_argument("--families", default=",".join(SWEEP_FAMILIES))
    ap.add_argument("--preset", choices=sorted(PRESETS), default="ref-10k")
    ap.add_argument("--exact-cap", type=int, default=2000,
                    help="largest router count analyzed exactly when no closed form exists")
    ap.add_argument("--threads", type=int, default=4)
    ap.add_argument("--out", default="results/sweep.csv")
    args = ap.parse_args()

    families = tuple(f.strip() for f in args.families.split(",") if f.strip())
    t0 = time.perf_counter()
    rows = scalability_sweep(args.rmax, families, exact_cap=args.exact_cap, threads=args.threads,
                             config=PRESETS[args.preset])
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(sweep_csv(rows))
    print(f"{len(rows)} rows -> {out} ({time.perf_counter() - t0:.1f} s)")


if __name__ == "__main__":
    main()
