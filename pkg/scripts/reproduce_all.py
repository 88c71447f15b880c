"""Run the full reproduction set and print verdicts; CSVs land in --out (default results/)."""

import argparse
import sys
from pathlib import Path

from sectlab import experiments as ex


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=Path("results"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--plots", action="store_true", help="emit gnuplot scripts")
    args = p.parse_args()
    results = []
    for cfg in ex.all_configs(args.out, args.seed, args.plots):
        res, path = ex.run_and_write(cfg)
        results.append(res)
        status = "ok" if res.passed else "FAIL"
        fits = ", ".join(f"{k}={v.slope:.3f}" for k, v in res.fits.items())
        print(f"{res.name:10s} {status:4s} {path.name}  {fits}")
        for name, good in res.verdicts.items():
            if not good:
                print(f"    failed: {name}")
    return ex.exit_code(results)


if __name__ == "__main__":
    sys.exit(main())
