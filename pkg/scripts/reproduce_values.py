"""Print every reference value next to its recomputation."""

from holoqi.golden import reproduce


def main():
    rows = reproduce()
    width = max(len(r["name"]) for r in rows)
    for r in rows:
        mark = "ok  " if r["pass"] else "FAIL"
        print(f"{mark} {r['name']:<{width}}  printed {r['printed']:<10g} computed {r['computed']:.10g} "
              f"{r['unit']:<7} |d|={r['abs_delta']:.2e}  [{r['tolerance']}]")
    raise SystemExit(0 if all(r["pass"] for r in rows) else 1)


if __name__ == "__main__":
    main()
