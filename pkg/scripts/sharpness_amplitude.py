"""Lower pairing across delta at a fixed eps: exponent fits and the 1/delta amplitude trend."""

import argparse

import numpy as np

from sectlab import schauder
from sectlab.experiments import fit_log_exponent


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--eps", type=float, default=1e-6)
    p.add_argument("--deltas", type=float, nargs="+", default=[0.125, 0.25, 0.4, 0.49])
    args = p.parse_args()
    grid = np.logspace(-8, -2, 25)
    print("delta   beta     lower(eps)   delta*lower  exponent  target")
    for d in args.deltas:
        spec = schauder.BasisSpec(0.5 - d / 4, "TwoSidedWeight", 8)
        lb = schauder.pairing_lower_bound(spec, args.eps)
        fit = fit_log_exponent([(e, schauder.pairing_lower_bound(spec, e)) for e in grid], "loglog_inv_eps")
        print(f"{d:5.3f}  {spec.beta:.4f}  {lb:11.4f}  {d * lb:11.4f}  {fit.slope:8.4f}  {1 - d:6.3f}")


if __name__ == "__main__":
    main()
