"""Hill-climb probe of theta_{1,2,3}-free graphs beyond enumeration reach.

Compares the best local optimum against F_{m,1} (even m) or F_{m,2} (odd m,
split star excluded).

    python scripts/hill_climb_probe.py --m 22 23 31 --restarts 50
"""
import argparse

from spectral_turan import families as fam
from spectral_turan.pattern import THETA123
from spectral_turan.search import hill_climb, improving_move
from spectral_turan.spectral import spectral_radius


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, nargs="+", default=[22, 23])
    ap.add_argument("--restarts", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for m in args.m:
        t = 1 if m % 2 == 0 else 2
        target = fam.family_F(m, t)
        excl = [fam.split_star((m + 3) // 2, 2)] if m % 2 else []
        rep = hill_climb(m, THETA123, excl, restarts=args.restarts, seed=args.seed)
        r_target = spectral_radius(target).rho
        local = improving_move(target, THETA123, excl) is None
        print(f"m={m}: best {rep.max_rho:.12f}  rho(F_{{{m},{t}}}) {r_target:.12f}  "
              f"excess {rep.max_rho - r_target:+.2e}  optima {rep.enumerated}  "
              f"F locally maximal: {local}  [{rep.runtime_ms} ms]")
        for code in rep.argmax:
            print(f"    argmax {code}")


if __name__ == "__main__":
    main()
