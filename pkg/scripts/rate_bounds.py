"""Rate bounds against R_p for a few protocol lengths.

Shows where the general bound becomes valid (1 - 8 eps~ > 0) and how fast
the modified PLOB bound collapses onto -log2(1 - eta).
"""

import argparse

import numpy as np

from holoqi.plob_bounds import ProtocolParams, build_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--eta", type=float, default=0.5)
    ap.add_argument("--epsilon", type=float, default=0.0)
    ap.add_argument("--uses", type=int, nargs="+", default=[1, 10, 100])
    args = ap.parse_args()

    print(f"{'N':>5} {'R_p':>5} {'eps~':>10} {'general':>12} {'modified':>12} {'PLOB':>8} {'cap':>10}")
    for n in args.uses:
        for rp in np.arange(1.0, 5.01, 0.5):
            r = build_report(ProtocolParams(n, args.epsilon, args.eta, float(rp)))
            gen = f"{r.rate_general:.6g}" if r.rate_general is not None else r.errors["rate_general"]["error"]
            print(f"{n:>5} {rp:>5.1f} {r.eps_tilde:>10.3e} {gen:>12} {r.rate_modified_plob:>12.6g} "
                  f"{r.plob_classic:>8.4g} {r.rate_spherical_cap:>10.4g}")
        print()


if __name__ == "__main__":
    main()
