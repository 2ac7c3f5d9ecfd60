"""Turn simulation results into plot-ready CSV tables.

Four views: supply vs demand per tick, unmet demand per tick, the
adjacent-quanta reordering count per tick, and a monetary cost breakdown
per link. merge_supply lines up the supply column of several runs over the
same trace for side-by-side policy comparison.

All CSV is comma-separated with '.' decimals and '\n' line endings so
identical runs serialize byte-identically.
"""

import csv
import io
from dataclasses import dataclass

from .errors import BadParameterError
from .traceio import _fmt

MBIT_PER_GB = 8000.0  # 1 GB = 8 Gbit, decimal SI


def supply_series(result) -> list:
    """(time_s, demand_mbps, supplied_mbps) per tick."""
    return [(r.t, r.demand, r.supplied_mbps) for r in result.records]


def supply_series_csv(result) -> str:
    return _csv(("time_s", "demand_mbps", "supplied_mbps"), supply_series(result))


def shortfall_series(result) -> list:
    """(time_s, unmet_mbps) per tick, unmet = max(0, demand - supplied)."""
    return [(r.t, max(0.0, r.demand - r.supplied_mbps)) for r in result.records]


def shortfall_series_csv(result) -> str:
    return _csv(("time_s", "unmet_mbps"), shortfall_series(result))


def reorder_indicator(result) -> list:
    """(time_s, reorder_events) per tick.

    reorder_events counts consecutive quanta within the tick that went to
    different links — exposure to out-of-order delivery, not a packet-level
    sequence analysis.
    """
    return [(r.t, r.reorder_events) for r in result.records]


def reorder_indicator_csv(result) -> str:
    return _csv(("time_s", "reorder_events"), reorder_indicator(result))


@dataclass
class CostReport:
    """Per-link transmitted volume and cost, with run totals.

    per_link rows are (link_id, transmitted_gb, cost_per_gb, cost).
    annual_cost extrapolates the run total as one representative day x 365.
    """

    per_link: list
    total_gb: float
    total_cost: float
    annual_cost: float


def cost_report(result, group=None) -> CostReport:
    """Price the transmitted volume of a run.

    cost_i = transmitted gigabytes on link i x its cost_per_gb; 1 GB is
    8000 megabits. group defaults to the one echoed in the result.
    """
    group = group if group is not None else result.group
    n = group.n
    mbit = [0.0] * n
    for r in result.records:
        tx = r.transmitted
        for i in range(n):
            mbit[i] += tx[i]
    per_link = []
    total_gb = 0.0
    total_cost = 0.0
    for i, link in enumerate(group.links):
        gb = mbit[i] / MBIT_PER_GB
        cost = gb * link.cost_per_gb
        per_link.append((link.id, gb, link.cost_per_gb, cost))
        total_gb += gb
        total_cost += cost
    return CostReport(per_link=per_link, total_gb=total_gb,
                      total_cost=total_cost, annual_cost=total_cost * 365.0)


def cost_report_csv(report: CostReport) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("link_id", "transmitted_gb", "cost_per_gb", "cost"))
    for link_id, gb, rate, cost in report.per_link:
        w.writerow((link_id, _fmt(gb), _fmt(rate), _fmt(cost)))
    w.writerow(("total", _fmt(report.total_gb), "", _fmt(report.total_cost)))
    w.writerow(("annual", "", "", _fmt(report.annual_cost)))
    return out.getvalue()


def merge_supply(labeled_results) -> tuple:
    """Join several runs of the same trace into one table.

    labeled_results is an ordered sequence of (label, SimulationResult).
    Returns (header, rows) where header is
    ("time_s", "demand_mbps", "supplied_<label>", ...) and each row carries
    every run's supplied_mbps for that tick.
    """
    labeled = list(labeled_results)
    if not labeled:
        raise BadParameterError("merge_supply needs at least one result")
    base = labeled[0][1].records
    for label, res in labeled[1:]:
        if len(res.records) != len(base):
            raise BadParameterError(
                f"result {label!r} has {len(res.records)} ticks, expected {len(base)}")
        for r, b in zip(res.records, base):
            if r.t != b.t or r.demand != b.demand:
                raise BadParameterError(
                    f"result {label!r} was not run over the same trace")
    header = ("time_s", "demand_mbps") + tuple(f"supplied_{label}" for label, _ in labeled)
    rows = []
    for idx, b in enumerate(base):
        rows.append((b.t, b.demand) + tuple(res.records[idx].supplied_mbps
                                            for _, res in labeled))
    return header, rows


def merge_supply_csv(labeled_results) -> str:
    header, rows = merge_supply(labeled_results)
    return _csv(header, rows)


def _csv(header, rows) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(x) for x in row])
    return out.getvalue()
