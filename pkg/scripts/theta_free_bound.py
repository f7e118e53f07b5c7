"""Exhaustive check of the theta_{1,2,3}-free bound (1 + sqrt(4m - 3)) / 2.

    python scripts/theta_free_bound.py --m 8:11
"""
import argparse
import math

from spectral_turan import families as fam
from spectral_turan.graph import canonical_form
from spectral_turan.pattern import THETA123
from spectral_turan.search import extremal_search


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", default="8:11", help="inclusive range A:B")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.m.split(":"))
    print(f"{'m':>3} {'classes':>8} {'max rho':>18} {'bound':>18} {'gap':>10}  argmax")
    for m in range(lo, hi + 1):
        rep = extremal_search(m, THETA123, threads=args.threads)
        bound = (1 + math.sqrt(4 * m - 3)) / 2
        tag = ""
        if m % 2 and rep.argmax == [canonical_form(fam.split_star((m + 3) // 2, 2)).decode()]:
            tag = " (split star)"
        print(f"{m:>3} {rep.enumerated:>8} {rep.max_rho:>18.12f} {bound:>18.12f} "
              f"{bound - rep.max_rho:>10.2e}  {','.join(rep.argmax)}{tag}  [{rep.runtime_ms} ms]")


if __name__ == "__main__":
    main()
