"""Print the best-bound tables for d = 3..6 and flag cells that differ from the published ones."""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from bimoore import bounds as B  # noqa: E402
from reference_tables import TABLES  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, nargs="*", default=[3, 4, 5, 6])
    ap.add_argument("--csv", action="store_true")
    args = ap.parse_args()
    for d in args.d:
        published = TABLES.get(d, {})
        rmax = max((r for r, _ in published), default=10)
        table = B.emit_bound_table(d, range(2, rmax + 1))
        print(table.render_csv() if args.csv else table.render_text())
        for (r, s), (value, _) in sorted(published.items()):
            if table.value(r, s) != value:
                print(f"  [{r},{s};{d}] computed {table.value(r, s)}, published {value}")
        print()


if __name__ == "__main__":
    main()
