"""Exact link utilization of MMS graphs as q grows.

Prints u, kbar and kbar/u per prime power q, for comparing against the
asymptote 8/9.

    python3 scripts/mms_convergence.py --qmax 29
"""

import argparse
import time
from fractions import Fraction

from projnet.field import prime_power
from projnet.metrics import analyze
from projnet.topology import build


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--qmin", type=int, default=3)
    ap.add_argument("--qmax", type=int, default=25)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    limit = Fraction(8, 9)
    print("q,eps,N,u,kbar,kbar_over_u,u_minus_limit,seconds")
    for q in range(args.qmin, args.qmax + 1):
        if prime_power(q) is None or q % 4 == 2:
            continue
        G = build("mms", q=q)
        t0 = time.perf_counter()
        rep = analyze(G, threads=args.threads)
        eps = (q % 4 + 1) % 4 - 1 if q % 2 else 0  # q = 4w + eps
        print(f"{q},{eps},{G.N},{float(rep.u):.5f},{float(rep.kbar):.5f},{float(rep.kbar_over_u):.5f},"
              f"{float(rep.u - limit):+.5f},{time.perf_counter() - t0:.2f}", flush=True)


if __name__ == "__main__":
    main()
