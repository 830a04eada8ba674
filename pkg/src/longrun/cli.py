"""Command-line interface.

Subcommands mirror the report sections (`summary`, `corr`, `unitroot`,
`lagselect`, `johansen`, `granger`), `pipeline` runs everything, and `synth`
writes seeded demo datasets so the whole tool can be exercised without any
external data.  Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ConfigError, LongrunError
from .report import (
    PipelineConfig,
    Report,
    correlation_section,
    granger_section,
    johansen_sections,
    lag_selection_section,
    load_inputs,
    render,
    run_pipeline,
    summary_section,
    unit_root_section,
)
from .synth import ProcessSpec, generate
from .unitroot import CASES
from .varmodel import select_lag

_DEFAULTS = {
    "date_format": "%Y-%m-%d",
    "max_lag": 5,
    "alpha": 0.05,
    "case": "constant",
    "levels": True,
    "format": "text",
    "out": None,
}


class _Parser(argparse.ArgumentParser):
    """argparse parser that exits 1 (not 2) on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--input", action="append", metavar="NAME=PATH",
                   help="named input series (repeat for each variable)")
    p.add_argument("--config", metavar="PATH",
                   help="key = value config file; explicit flags win")
    p.add_argument("--date-format", dest="date_format")
    p.add_argument("--max-lag", dest="max_lag", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--case", choices=CASES,
                   help="deterministic case for the unit-root regressions")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--levels", dest="levels", action="store_true", default=None,
                      help="run the Granger test on levels (default)")
    mode.add_argument("--diffs", dest="levels", action="store_false", default=None,
                      help="run the Granger test on first differences")
    p.add_argument("--format", choices=("text", "csv", "json"))
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="longrun",
                     description="Long-run time-series econometrics toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, help_text in [
        ("summary", "summary statistics table"),
        ("corr", "correlation matrix"),
        ("unitroot", "ADF and Phillips-Perron tests at level and first difference"),
        ("lagselect", "VAR lag-order selection table"),
        ("johansen", "Johansen cointegration rank test"),
        ("granger", "pairwise Granger causality tests"),
        ("pipeline", "full report: all sections in order"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_common(p)
        if name == "johansen":
            p.add_argument("--lagged-diffs", dest="lagged_diffs", type=int,
                           help="override the selection-derived lagged-difference count")
        if name == "granger":
            p.add_argument("--lag", type=int,
                           help="override the selection-derived lag order")

    p = sub.add_parser("synth", help="write seeded demo datasets as CSV files")
    p.add_argument("--kind", required=True,
                   choices=("walks", "coint", "causal", "ar1", "noise"))
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--length", type=int, default=500)
    p.add_argument("--beta", type=float, default=2.0, help="cointegration slope (coint)")
    p.add_argument("--phi", type=float, default=0.5, help="AR(1) coefficient (ar1)")
    p.add_argument("--noise-scale", dest="noise_scale", type=float, default=1.0)
    p.add_argument("--out-dir", dest="out_dir", default=".")
    return parser


_CONFIG_KEYS = frozenset(
    ["input", "date_format", "max_lag", "alpha", "case", "levels", "format", "out"]
)


def _read_config_file(path: str) -> dict:
    values: dict = {"input": []}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip().replace("-", "_")
        value = value.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key == "input":
            values["input"].append(value)
        else:
            values[key] = value
    return values


def _effective(args) -> dict:
    """Merge flag values over config-file values over defaults."""
    cfg_file = _read_config_file(args.config) if args.config else {"input": []}
    inputs = list(args.input or []) or cfg_file["input"]

    def pick(flag_name, cfg_key, cast=None):
        flag = getattr(args, flag_name, None)
        if flag is not None:
            return flag
        if cfg_key in cfg_file:
            raw = cfg_file[cfg_key]
            return cast(raw) if cast else raw
        return _DEFAULTS[flag_name]

    def to_bool(raw: str) -> bool:
        low = raw.strip().lower()
        if low in ("true", "yes", "1", "levels"):
            return True
        if low in ("false", "no", "0", "diffs"):
            return False
        raise ConfigError(f"cannot interpret {raw!r} as a boolean")

    return {
        "inputs": inputs,
        "date_format": pick("date_format", "date_format"),
        "max_lag": pick("max_lag", "max_lag", int),
        "alpha": pick("alpha", "alpha", float),
        "case": pick("case", "case"),
        "levels": pick("levels", "levels", to_bool),
        "format": pick("format", "format"),
        "out": pick("out", "out"),
    }


def _parse_inputs(pairs) -> dict:
    inputs = {}
    for pair in pairs:
        name, sep, path = pair.partition("=")
        if not sep or not name.strip() or not path.strip():
            raise ConfigError(f"--input expects NAME=PATH, got {pair!r}")
        inputs[name.strip()] = path.strip()
    return inputs


def _build_config(eff: dict) -> PipelineConfig:
    return PipelineConfig(
        inputs=_parse_inputs(eff["inputs"]),
        date_format=eff["date_format"],
        max_lag=eff["max_lag"],
        deterministic_case=eff["case"],
        alpha=eff["alpha"],
        granger_on_levels=eff["levels"],
        output_format=eff["format"],
        output_path=eff["out"],
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_sections(args) -> int:
    eff = _effective(args)
    cfg = _build_config(eff)
    command = args.command
    if command == "pipeline":
        report = run_pipeline(cfg)
        _emit(render(report, cfg.output_format), cfg.output_path)
        return 0
    cfg.validate()
    panel = load_inputs(cfg)
    if command == "summary":
        sections = [summary_section(panel)]
    elif command == "corr":
        sections = [correlation_section(panel)]
    elif command == "unitroot":
        sections = [unit_root_section(panel, "adf", cfg.deterministic_case),
                    unit_root_section(panel, "pp", cfg.deterministic_case)]
    elif command == "lagselect":
        _, section = lag_selection_section(panel, cfg.max_lag)
        sections = [section]
    elif command == "johansen":
        lagged = getattr(args, "lagged_diffs", None)
        if lagged is None:
            chosen, _ = select_lag(panel, cfg.max_lag)
            lagged = max(chosen - 1, 0)
        _, trace_section, maxeig_section = johansen_sections(panel, lagged)
        sections = [trace_section, maxeig_section]
    else:  # granger
        lag = getattr(args, "lag", None)
        if lag is None:
            chosen, _ = select_lag(panel, cfg.max_lag)
            lag = max(chosen, 1)
        rank, _, _ = johansen_sections(panel, max(lag - 1, 0))
        sections = [granger_section(panel, lag, cfg.granger_on_levels, cfg.alpha, rank)]
    _emit(render(Report(sections), cfg.output_format), cfg.output_path)
    return 0


def _cmd_synth(args) -> int:
    kind_map = {
        "walks": ProcessSpec(kind="var", length=args.length, seed=args.seed,
                             coefficients=(((1.0, 0.0), (0.0, 1.0)),)),
        "coint": ProcessSpec(kind="cointegrated_pair", length=args.length, seed=args.seed,
                             beta=args.beta, noise_scale=args.noise_scale),
        "causal": ProcessSpec(kind="var", length=args.length, seed=args.seed,
                              coefficients=(((0.0, 0.0), (0.8, 0.0)),)),
        "ar1": ProcessSpec(kind="ar1", length=args.length, seed=args.seed, phi=args.phi),
        "noise": ProcessSpec(kind="white_noise", length=args.length, seed=args.seed),
    }
    result = generate(kind_map[args.kind])
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    if hasattr(result, "labels"):  # Panel
        for j, label in enumerate(result.labels):
            path = out_dir / f"{args.kind}_{label}.csv"
            _write_monthly_csv(path, result.periods, result.data[:, j])
            written.append(path)
    else:
        path = out_dir / f"{args.kind}.csv"
        start = result.start_index
        _write_monthly_csv(path, range(start, start + len(result)), result.values)
        written.append(path)
    for path in written:
        sys.stdout.write(f"{path}\n")
    return 0


def _write_monthly_csv(path: Path, periods, values) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        for idx, v in zip(periods, values):
            year, month = int(idx) // 12, int(idx) % 12 + 1
            fh.write(f"{year:04d}-{month:02d}-01,{v:.17g}\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "synth":
            return _cmd_synth(args)
        return _cmd_sections(args)
    except ConfigError as exc:
        sys.stderr.write(f"longrun: usage error: {exc}\n")
        return 1
    except LongrunError as exc:
        section = getattr(exc, "section", None)
        where = f" [{section}]" if section else ""
        sys.stderr.write(f"longrun: error{where}: {type(exc).__name__}: {exc}\n")
        return 2
    except OSError as exc:
        sys.stderr.write(f"longrun: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
