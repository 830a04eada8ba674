"""Pipeline orchestration and table rendering.

A Report is an ordered list of eight sections (summary statistics through
Granger causality).  Sections carry full-precision values plus per-column
format codes; the text renderer only rounds for display, the JSON renderer
emits the raw values, so every printed number is a rounding of a value that
is also available exactly.
"""

from __future__ import annotations

import contextlib
import csv
import io
import json
from dataclasses import dataclass, field

from . import descriptive, granger as granger_mod, johansen as johansen_mod
from . import unitroot as unitroot_mod, varmodel
from .errors import ConfigError, LongrunError
from .series import Panel, Series, aggregate_monthly, align, diff, load_csv

SCHEMA_VERSION = 1

SECTION_ORDER = (
    "summary_statistics",
    "correlation",
    "unit_root_adf",
    "unit_root_pp",
    "lag_selection",
    "johansen_trace",
    "johansen_maxeig",
    "granger",
)

# Column format codes: "stat" = 8-character significant display, "pval" =
# 4 decimals, None = text.  Integer cells always render as plain integers.
FMT_STAT = "stat"
FMT_PVAL = "pval"


@dataclass
class Section:
    name: str
    title: str
    columns: tuple = ()
    formats: tuple = ()
    rows: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    skipped: bool = False
    skip_reason: str | None = None


@dataclass
class Report:
    sections: list

    def section(self, name: str) -> Section:
        for s in self.sections:
            if s.name == name:
                return s
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "sections": [
                {
                    "name": s.name,
                    "title": s.title,
                    "columns": list(s.columns),
                    "formats": list(s.formats),
                    "rows": [list(r) for r in s.rows],
                    "notes": list(s.notes),
                    "skipped": s.skipped,
                    "skip_reason": s.skip_reason,
                }
                for s in self.sections
            ],
        }


@dataclass
class PipelineConfig:
    """Everything the pipeline needs: inputs, conventions, output shape."""

    inputs: dict  # name -> csv path, insertion-ordered
    date_format: str = "%Y-%m-%d"
    aggregation: str = "mean"
    max_lag: int = 5
    deterministic_case: str = "constant"
    alpha: float = 0.05
    granger_on_levels: bool = True
    output_format: str = "text"
    output_path: str | None = None

    def validate(self):
        if len(self.inputs) < 2:
            raise ConfigError("need at least 2 input series")
        if self.aggregation != "mean":
            raise ConfigError(f"unsupported aggregation {self.aggregation!r}")
        if self.max_lag < 0:
            raise ConfigError("max_lag must be >= 0")
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError("alpha must lie in (0, 1)")
        if self.output_format not in ("text", "csv", "json"):
            raise ConfigError(f"unsupported output format {self.output_format!r}")
        if self.deterministic_case not in unitroot_mod.CASES:
            raise ConfigError(f"unsupported deterministic case {self.deterministic_case!r}")


@contextlib.contextmanager
def _stage(section_name: str):
    """Tag any LongrunError escaping the block with the section it came from."""
    try:
        yield
    except LongrunError as exc:
        exc.section = section_name
        raise


def format_statistic(value: float) -> str:
    """Render a statistic into (up to) 8 significant characters, sign extra."""
    a = abs(value)
    if a >= 1e8 or (a != 0.0 and a < 1e-4):
        digits = f"{a:.2E}"
    else:
        digits = f"{a:.0f}"
        for d in range(6, 0, -1):
            cand = f"{a:.{d}f}"
            if len(cand) <= 8:
                digits = cand
                break
        if len(digits) > 8:  # rounding of .0f can spill past 1e8
            digits = f"{a:.2E}"
    return "-" + digits if value < 0 else digits


def format_cell(value, fmt) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if fmt == FMT_STAT:
        return format_statistic(value)
    if fmt == FMT_PVAL:
        return f"{value:.4f}"
    return str(value)


def _series_from_panel(panel: Panel, j: int) -> Series:
    start = int(panel.periods[0])
    return Series(panel.labels[j], (start // 12, start % 12 + 1), panel.data[:, j])


def summary_section(panel: Panel) -> Section:
    stats = [descriptive.summarize(_series_from_panel(panel, j)) for j in range(panel.m)]
    rows = [
        ["Mean", *(float(s.mean) for s in stats)],
        ["Median", *(float(s.median) for s in stats)],
        ["Maximum", *(float(s.maximum) for s in stats)],
        ["Minimum", *(float(s.minimum) for s in stats)],
        ["Std. Dev.", *(float(s.std_dev) for s in stats)],
        ["Skewness", *(float(s.skewness) for s in stats)],
        ["Kurtosis", *(float(s.kurtosis) for s in stats)],
        ["Jarque-Bera", *(float(s.jarque_bera) for s in stats)],
        ["Probability", *(float(s.jb_probability) for s in stats)],
        ["Sum", *(float(s.sum) for s in stats)],
        ["Sum Sq. Dev.", *(float(s.sum_sq_dev) for s in stats)],
        ["Observations", *(int(s.observations) for s in stats)],
    ]
    return Section(
        name="summary_statistics",
        title="Summary Statistics",
        columns=("Statistics", *panel.labels),
        formats=(None, *(FMT_STAT,) * panel.m),
        rows=rows,
    )


def correlation_section(panel: Panel) -> Section:
    corr = descriptive.correlation(panel)
    rows = [[label, *(float(v) for v in corr[i])] for i, label in enumerate(panel.labels)]
    return Section(
        name="correlation",
        title="Correlation Matrix",
        columns=("", *panel.labels),
        formats=(None, *(FMT_STAT,) * panel.m),
        rows=rows,
    )


def unit_root_section(panel: Panel, kind: str, case: str) -> Section:
    test_name = "Augmented Dickey Fuller" if kind == "adf" else "Phillips-Perron"
    rows = []
    level_results = []
    diff_results = []
    notes = []
    for j, label in enumerate(panel.labels):
        s = _series_from_panel(panel, j)
        if kind == "adf":
            level = unitroot_mod.adf_test(s, case=case)
            first = unitroot_mod.adf_test(diff(s), case=case)
        else:
            level = unitroot_mod.pp_test(s, case=case)
            first = unitroot_mod.pp_test(diff(s), case=case)
        level_results.append(level)
        diff_results.append(first)
        rows.append([label, float(level.statistic), float(level.p_value),
                     float(first.statistic), float(first.p_value)])
        unit = "lags" if kind == "adf" else "bandwidth"
        notes.append(
            f"{label}: level {unit} {level.lags_or_bandwidth} (obs {level.effective_obs}), "
            f"1st difference {unit} {first.lags_or_bandwidth} (obs {first.effective_obs})"
        )
    rows.append(["Critical Values", None, None, None, None])
    for lvl in unitroot_mod.LEVELS:
        rows.append([lvl, float(level_results[0].critical_values[lvl]), None,
                     float(diff_results[0].critical_values[lvl]), None])
    notes.append(f"Critical values shown for the {panel.labels[0]} regression samples.")
    return Section(
        name=f"unit_root_{kind}",
        title=f"Unit Root Analysis ({test_name} test)",
        columns=("", f"{test_name} (Level)", "p-value",
                 f"{test_name} (1st Difference)", "p-value"),
        formats=(None, FMT_STAT, FMT_PVAL, FMT_STAT, FMT_PVAL),
        rows=rows,
        notes=notes,
    )


def lag_selection_section(panel: Panel, max_lag: int):
    chosen, table = varmodel.select_lag(panel, max_lag)
    rows = [[int(r.lag), float(r.aic), float(r.sbc), "*" if r.lag == chosen else ""]
            for r in table]
    section = Section(
        name="lag_selection",
        title="VAR Lag Order Selection Criteria",
        columns=("Lag", "Akaike information criterion", "Schwarz criterion", ""),
        formats=(None, FMT_STAT, FMT_STAT, None),
        rows=rows,
        notes=[f"* Schwarz-criterion minimum: lag {chosen}"],
    )
    return chosen, section


def _hypothesized_label(r: int) -> str:
    return "None" if r == 0 else f"At most {r}"


def johansen_sections(panel: Panel, lagged_diffs: int):
    result = johansen_mod.johansen_test(panel, lagged_diffs=lagged_diffs)
    rank, remark = johansen_mod.rank_decision(result)
    m = panel.m
    note = (f"Effective observations: {result.effective_obs}; "
            f"lagged differences: {result.lagged_diffs}")
    trace_rows = []
    maxeig_rows = []
    for r in range(m):
        trace_rows.append([
            _hypothesized_label(r), float(result.eigenvalues[r]), float(result.trace_stats[r]),
            float(result.trace_crit_5pct[r]), float(result.trace_pvalues[r]),
            remark if r == 0 else "",
        ])
        maxeig_rows.append([
            _hypothesized_label(r), float(result.eigenvalues[r]),
            float(result.max_eigen_stats[r]), float(result.max_eigen_crit_5pct[r]),
            float(result.max_eigen_pvalues[r]), remark if r == 0 else "",
        ])
    trace_section = Section(
        name="johansen_trace",
        title="Bivariate Co Integration Analysis Trace Statistics" if m == 2
        else "Co Integration Analysis Trace Statistics",
        columns=("Hypothesized No. of CE(s)", "Eigenvalue", "Trace Statistic",
                 "0.05 Critical Value", "Prob.**", "Remarks"),
        formats=(None, FMT_STAT, FMT_STAT, FMT_STAT, FMT_PVAL, None),
        rows=trace_rows,
        notes=[note, "** p-values from a gamma approximation to the asymptotic distribution"],
    )
    maxeig_section = Section(
        name="johansen_maxeig",
        title="Bivariate Co Integration Analysis Max-Eigen Value Statistics" if m == 2
        else "Co Integration Analysis Max-Eigen Value Statistics",
        columns=("Hypothesized No. of CE(s)", "Eigenvalue", "Max-Eigen Statistic",
                 "0.05 Critical Value", "Prob.**", "Remarks"),
        formats=(None, FMT_STAT, FMT_STAT, FMT_STAT, FMT_PVAL, None),
        rows=maxeig_rows,
        notes=[note, "** p-values from a gamma approximation to the asymptotic distribution"],
    )
    return rank, trace_section, maxeig_section


def granger_section(panel: Panel, lag: int, on_levels: bool, alpha: float,
                     decided_rank: int) -> Section:
    forward, backward = granger_mod.granger_test(panel, lag=lag, on_levels=on_levels)
    verdict = granger_mod.hypothesis_verdict((forward, backward), alpha)
    rows = []
    for res in (backward, forward):  # EViews pair order: second column first
        cause, effect = res.direction
        rows.append([
            f"{cause} does not Granger Cause {effect}",
            int(res.obs_used), float(res.f_statistic), float(res.p_value),
        ])
    verdict_text = {
        granger_mod.VERDICT_H1: f"{panel.labels[0]} drives {panel.labels[1]}",
        granger_mod.VERDICT_H2: f"{panel.labels[1]} drives {panel.labels[0]}",
        granger_mod.VERDICT_H3: "bilateral causal relationship",
        granger_mod.VERDICT_NONE: "no causal relationship exists",
    }[verdict]
    notes = [
        f"Lag: {lag} ({'levels' if on_levels else 'first differences'}); "
        f"verdict at alpha={alpha:g}: {verdict} ({verdict_text})",
    ]
    if decided_rank == 0:
        notes.append(
            "Caveat: with no cointegration the Granger test cannot establish the "
            "direction of a long-run causal relationship; results are reported "
            "for completeness."
        )
    return Section(
        name="granger",
        title="Granger Causality Analysis",
        columns=("Null Hypothesis:", "Obs", "F-Statistic", "Prob."),
        formats=(None, None, FMT_STAT, FMT_PVAL),
        rows=rows,
        notes=notes,
    )


def load_inputs(cfg: PipelineConfig) -> Panel:
    """Ingest, aggregate to monthly means and align the configured inputs."""
    series = []
    with _stage("ingest"):
        for name, path in cfg.inputs.items():
            raw = load_csv(path, date_format=cfg.date_format, name=name)
            series.append(aggregate_monthly(raw))
    with _stage("align"):
        return align(*series)


def run_pipeline(cfg: PipelineConfig) -> Report:
    """Execute the full analysis and return all eight report sections.

    Order: ingest, monthly aggregation, alignment, summary statistics,
    correlation, ADF and PP at level and first difference, lag selection,
    Johansen (with the selected lag), Granger.  Errors raised inside a stage
    carry a ``section`` attribute naming it.
    """
    cfg.validate()
    panel = load_inputs(cfg)
    sections = []
    with _stage("summary_statistics"):
        sections.append(summary_section(panel))
    with _stage("correlation"):
        sections.append(correlation_section(panel))
    with _stage("unit_root_adf"):
        sections.append(unit_root_section(panel, "adf", cfg.deterministic_case))
    with _stage("unit_root_pp"):
        sections.append(unit_root_section(panel, "pp", cfg.deterministic_case))
    with _stage("lag_selection"):
        chosen, lag_section = lag_selection_section(panel, cfg.max_lag)
        sections.append(lag_section)
    with _stage("johansen_trace"):
        rank, trace_section, maxeig_section = johansen_sections(panel, max(chosen - 1, 0))
        sections.append(trace_section)
        sections.append(maxeig_section)
    if panel.m == 2:
        with _stage("granger"):
            sections.append(granger_section(panel, max(chosen, 1), cfg.granger_on_levels,
                                             cfg.alpha, rank))
    else:
        sections.append(Section(
            name="granger",
            title="Granger Causality Analysis",
            skipped=True,
            skip_reason=f"pairwise test needs exactly 2 series, panel has {panel.m}",
        ))
    return Report(sections)


def _render_text(report: Report) -> str:
    out = []
    for s in report.sections:
        out.append(s.title)
        out.append("=" * len(s.title))
        if s.skipped:
            out.append(f"skipped: {s.skip_reason}")
            out.append("")
            continue
        cells = [[format_cell(v, f) for v, f in zip(row, s.formats)] for row in s.rows]
        widths = [
            max(len(s.columns[j]), *(len(r[j]) for r in cells)) if cells else len(s.columns[j])
            for j in range(len(s.columns))
        ]
        header = "  ".join(s.columns[j].ljust(widths[j]) for j in range(len(s.columns)))
        out.append(header.rstrip())
        for r in cells:
            line = "  ".join(
                r[j].ljust(widths[j]) if s.formats[j] is None else r[j].rjust(widths[j])
                for j in range(len(s.columns))
            )
            out.append(line.rstrip())
        for note in s.notes:
            out.append(f"Note: {note}")
        out.append("")
    return "\n".join(out)


def _render_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for s in report.sections:
        buf.write(f"# section: {s.name}\n")
        if s.skipped:
            buf.write(f"# skipped: {s.skip_reason}\n")
            continue
        writer.writerow(s.columns)
        for row in s.rows:
            writer.writerow(["" if v is None else v for v in row])
        for note in s.notes:
            buf.write(f"# note: {note}\n")
    return buf.getvalue()


def render(report: Report, output_format: str = "text") -> str:
    """Serialize a report to text, CSV (one stream with section markers) or JSON."""
    if output_format == "text":
        return _render_text(report)
    if output_format == "csv":
        return _render_csv(report)
    if output_format == "json":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    raise ConfigError(f"unsupported output format {output_format!r}")
