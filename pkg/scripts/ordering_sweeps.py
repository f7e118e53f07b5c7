"""Margin sweeps for the polynomial orderings, written as CSV.

    python scripts/ordering_sweeps.py --claim sec3 --m 18:150 > sec3.csv
    python scripts/ordering_sweeps.py --claim lemma43 --m 22:60 > lemma43.csv
"""
import argparse
import csv
import sys

from spectral_turan import verify as vf


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--claim", choices=("sec3", "lemma43"), default="sec3")
    ap.add_argument("--m", default="18:150")
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.m.split(":"))
    w = csv.writer(sys.stdout)
    if args.claim == "sec3":
        w.writerow(["m", "rho_S_m1", "margin_double_star", "margin_S_m-1_2", "margin_H", "above_sqrt_m-1", "status"])
        for m in range(lo, hi + 1):
            v = vf.check_sec3_orderings(m)
            d = v.details
            w.writerow([m, f"{d['rho_S_m^1']['eig']:.15g}",
                        *(f"{min(d[k]['margin_root'], d[k]['margin_eig']):.6e}"
                          for k in ("D_{m-2,1}", "S_{m-1}^2", "H")),
                        f"{d['rho_S_m^1_minus_sqrt(m-1)']:.6e}", v.status])
    else:
        w.writerow(["m", "base_t", "rho_base", "min_part_i_margin", "part_ii_margin", "f3_at_point", "status"])
        for m in range(lo, hi + 1):
            v = vf.check_lemma_4_3(m)
            d = v.details
            part_i = min(d["part_i_margins"].values()) if d["part_i_margins"] else float("nan")
            w.writerow([m, d["base_t"], f"{d['rho_base']['eig']:.15g}", f"{part_i:.6e}",
                        f"{d['part_ii_margin']:.6e}", f"{d['f3_at_point']:.6g}", v.status])


if __name__ == "__main__":
    main()
