"""Diamond-distance bounds at xi_min(R_p), with the leading-order forms alongside.

Columns ``lead_*`` are the e^{-pi R^2} asymptotes; ``ratio_*`` shows they
undershoot the exact bounds by e and sqrt(e) at large radius.
"""

import argparse
import csv
import math
import sys

import numpy as np

from holoqi.channels import diamond_bounds_at_radius, leading_lower_asymptote, leading_upper_asymptote


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--eta", type=float, default=0.5)
    ap.add_argument("--rmax", type=float, default=20.0)
    ap.add_argument("--points", type=int, default=40)
    args = ap.parse_args()

    w = csv.writer(sys.stdout)
    w.writerow(["radius_planck", "ln_lower", "ln_upper", "ln_lead_lower", "ln_lead_upper",
                "ratio_lower", "ratio_upper", "asymptotic_branch"])
    for rp in np.linspace(0.5, args.rmax, args.points):
        b = diamond_bounds_at_radius(args.eta, rp)
        lo = leading_lower_asymptote(args.eta, rp).ln
        up = leading_upper_asymptote(args.eta, rp).ln
        w.writerow([repr(float(rp)), repr(b.ln_lower), repr(b.ln_upper), repr(lo), repr(up),
                    repr(math.exp(b.ln_lower - lo)), repr(math.exp(b.ln_upper - up)), b.asymptotic_branch])


if __name__ == "__main__":
    main()
