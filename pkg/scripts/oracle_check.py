"""Run the Fock-space cross-checks and print one line each.

    python scripts/oracle_check.py full
"""

import sys
import time

from holoqi import verify


def main():
    level = sys.argv[1] if len(sys.argv) > 1 else "fast"
    t0 = time.perf_counter()
    rows = verify.run(level)
    for r in rows:
        extra = f" (doubled-dim change {r['doubled_dim_change']:.1e})" if "doubled_dim_change" in r else ""
        print(f"{'PASS' if r['pass'] else 'FAIL'} {r['check']}: |d|={r['abs_delta']:.2e} tol={r['tolerance']:g}{extra}")
    print(f"{level}: {sum(r['pass'] for r in rows)}/{len(rows)} in {time.perf_counter() - t0:.1f} s")
    raise SystemExit(0 if all(r["pass"] for r in rows) else 1)


if __name__ == "__main__":
    main()
