"""Local log-slope of the square-function pairing as eps shrinks.

The fitted exponent only approaches 1/2 - delta for very small eps; this
prints the slope over sliding decades to show how slowly it converges.
"""

import argparse

import numpy as np

from sectlab import schauder


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--delta", type=float, default=0.3)
    p.add_argument("--min-exp", type=int, default=-300)
    args = p.parse_args()
    spec = schauder.BasisSpec(0.5 - args.delta / 3, "PureWeight", 8)
    exps = np.arange(-2, args.min_exp - 1, -2)
    eps = 10.0 ** exps.astype(float)
    vals = np.array([schauder.sqf_sharpness_pairing(spec, e) for e in eps])
    x = np.log(np.log(1 / eps))
    slope = np.gradient(np.log(vals), x)
    print(f"target exponent {0.5 - args.delta:.3f}")
    for e, v, s in list(zip(eps, vals, slope))[::5]:
        print(f"eps={e:9.1e}  pairing={v:10.4f}  local slope={s:7.4f}")


if __name__ == "__main__":
    main()
