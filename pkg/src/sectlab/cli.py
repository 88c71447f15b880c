"""Command line entry point: ``sectlab <experiment> [flags]``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import experiments as ex
from .errors import ConfigError, SectlabError

log = logging.getLogger("sectlab")

# flag name -> (config key, type)
_FLAGS = {
    "delta": ("delta", float),
    "beta": ("beta", float),
    "c": ("c", float),
    "phi": ("phi", float),
    "kappa": ("kappa", float),
    "eps-min": ("eps_min", float),
    "eps-max": ("eps_max", float),
    "eps-count": ("eps_count", int),
    "n-basis": ("N", int),
    "grid": ("grid", int),
    "seed": ("seed", int),
    "out": ("output_dir", Path),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sectlab", description="Run reproducible functional-calculus experiments.")
    p.add_argument("experiment", choices=[*ex.EXPERIMENTS, "all"])
    p.add_argument("--config", type=Path, help="flat key=value file; flags override it")
    for flag, (_, typ) in _FLAGS.items():
        p.add_argument(f"--{flag}", type=str if typ is Path else typ, default=None)
    p.add_argument("--emit-plot-script", action="store_true", default=None, help="write a gnuplot script next to each CSV")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def read_config_file(path: Path) -> dict:
    """Parse ``key = value`` lines; keys may use flag spelling (eps-min) or config spelling (eps_min)."""
    by_name = {**{f: spec for f, spec in _FLAGS.items()}, **{k: (k, t) for k, t in _FLAGS.values()}}
    by_name["emit-plot-script"] = by_name["emit_plot_script"] = ("emit_plot_script", bool)
    out = {}
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in by_name:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        name, typ = by_name[key]
        try:
            if typ is bool:
                out[name] = value.lower() in ("1", "true", "yes", "on")
            else:
                out[name] = typ(value)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key}: {value!r}") from exc
    return out


def resolve_overrides(args: argparse.Namespace) -> dict:
    values = read_config_file(args.config) if args.config else {}
    for flag, (name, typ) in _FLAGS.items():
        v = getattr(args, flag.replace("-", "_"))
        if v is not None:
            values[name] = typ(v)
    if args.emit_plot_script:
        values["emit_plot_script"] = True
    return values


def _report(result: ex.ExperimentResult, path: Path) -> None:
    for name, ok in result.verdicts.items():
        print(f"{result.name}: {name}: {'PASS' if ok else 'FAIL'}")
    for name, fit in result.fits.items():
        print(f"{result.name}: fit {name}: slope={fit.slope:.6g} stderr={fit.stderr:.3g}")
    if result.unstable:
        print(f"{result.name}: numerical stability flag raised")
    print(f"{result.name}: wrote {path}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        values = resolve_overrides(args)
        if args.experiment == "all":
            base = {k: values[k] for k in ("output_dir", "seed", "emit_plot_script") if k in values}
            cfgs = ex.all_configs(base.get("output_dir", Path("results")), base.get("seed", 0), base.get("emit_plot_script", False))
        else:
            cfgs = [ex.ExperimentConfig.for_experiment(args.experiment, **values)]
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 3
    results = []
    try:
        for cfg in cfgs:
            result, path = ex.run_and_write(cfg)
            _report(result, path)
            results.append(result)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 3
    except SectlabError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4
    return ex.exit_code(results)
