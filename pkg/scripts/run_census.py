"""Run the small-order census rows and print them next to the published counts."""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from bimoore.enumerate import EnumSpec, enumerate_spec  # noqa: E402
from reference_tables import CENSUS  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-generated", type=int, default=15000,
                    help="skip rows whose published count exceeds this")
    ap.add_argument("--limit", type=int, default=None, help="work limit per row")
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    print(f"{'params':>10} {'n':>3} {'generated':>10} {'diam':>5}  published")
    for (r, s, d), rows in CENSUS.items():
        for n, n1, n2, gen, diam in rows:
            if gen is None or gen > args.max_generated:
                print(f"{f'[{r},{s};{d}]':>10} {n:>3} {'skipped':>10} {'':>5}  {gen}/{diam}")
                continue
            t0 = time.perf_counter()
            rep = enumerate_spec(EnumSpec(n1, n2, r, s, d), args.limit, args.threads)
            flag = "" if (rep.generated, rep.with_diameter) == (gen, diam) else "  MISMATCH"
            if not rep.complete:
                flag = "  INCOMPLETE"
            print(f"{f'[{r},{s};{d}]':>10} {n:>3} {rep.generated:>10} {rep.with_diameter:>5}  "
                  f"{gen}/{diam}{flag}  [{time.perf_counter() - t0:.1f}s]")


if __name__ == "__main__":
    main()
