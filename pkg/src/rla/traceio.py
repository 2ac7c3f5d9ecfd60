"""CSV readers/writers for link groups, demand traces, and failure schedules.

All formats are plain comma-separated text with a fixed header row:

    links:    id,capacity_mbps,priority,cost_per_gb,threshold_mbit,buffer_cap_mbit
    demand:   time_s,demand_mbps
    failures: time_s,link_id,event        (event is "up" or "down")

Readers skip blank lines and lines starting with '#'. Writers always emit the
header and '\n' line endings, so a parse/serialize round trip is
byte-identical. synth_diurnal generates the triangular day-long demand shape
used by the bundled scenarios.
"""

import csv
import io
from dataclasses import dataclass, field

from .errors import (BadParameterError, BadWindowError, EmptyGroupError,
                     EmptyTraceError, ParseError)
from .links import Link

LINKS_HEADER = ("id", "capacity_mbps", "priority", "cost_per_gb",
                "threshold_mbit", "buffer_cap_mbit")
TRACE_HEADER = ("time_s", "demand_mbps")
FAILURES_HEADER = ("time_s", "link_id", "event")

DAY_S = 86400.0


@dataclass
class DemandTrace:
    """An ordered series of (time_s, demand_mbps) samples."""

    samples: list = field(default_factory=list)

    def __post_init__(self):
        if not self.samples:
            raise EmptyTraceError("demand trace has no samples")
        prev = None
        for t, d in self.samples:
            if prev is not None and t <= prev:
                raise BadParameterError(
                    f"trace times must be strictly increasing ({t} after {prev})")
            if d < 0:
                raise BadParameterError(f"demand at t={t} is negative ({d})")
            prev = t

    def __len__(self):
        return len(self.samples)

    def times(self):
        return [t for t, _ in self.samples]

    def demands(self):
        return [d for _, d in self.samples]


def _rows(text: str):
    """Yield (line_no, fields) for data rows; skips blanks and '#' comments."""
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield line_no, next(csv.reader([raw]))


def _is_header(fields, header) -> bool:
    return tuple(f.strip().lower() for f in fields) == header


def _float(fields, idx, line_no, what) -> float:
    try:
        return float(fields[idx].strip())
    except ValueError:
        raise ParseError(line_no, f"bad {what}: {fields[idx]!r}") from None


def parse_trace(text: str) -> DemandTrace:
    """Parse time_s,demand_mbps CSV into a DemandTrace."""
    samples = []
    first = True
    for line_no, fields in _rows(text):
        if first:
            first = False
            if _is_header(fields, TRACE_HEADER):
                continue
        if len(fields) != 2:
            raise ParseError(line_no, f"expected 2 fields, got {len(fields)}")
        t = _float(fields, 0, line_no, "time_s")
        d = _float(fields, 1, line_no, "demand_mbps")
        samples.append((t, d))
    if not samples:
        raise EmptyTraceError("demand trace has no samples")
    return DemandTrace(samples)


def trace_to_csv(trace: DemandTrace) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(TRACE_HEADER)
    for t, d in trace.samples:
        w.writerow([_fmt(t), _fmt(d)])
    return out.getvalue()


def parse_links(text: str) -> list:
    """Parse the links CSV into Link objects.

    threshold_mbit and buffer_cap_mbit may be left empty; validate_group
    fills the defaults (capacity x tick, and 4x threshold) later.
    """
    links = []
    first = True
    for line_no, fields in _rows(text):
        if first:
            first = False
            if _is_header(fields, LINKS_HEADER):
                continue
        if len(fields) != 6:
            raise ParseError(line_no, f"expected 6 fields, got {len(fields)}")
        link_id = fields[0].strip()
        if not link_id:
            raise ParseError(line_no, "empty link id")
        capacity = _float(fields, 1, line_no, "capacity_mbps")
        prio_raw = fields[2].strip()
        try:
            priority = int(prio_raw)
        except ValueError:
            raise ParseError(line_no, f"bad priority: {prio_raw!r}") from None
        cost = _float(fields, 3, line_no, "cost_per_gb")
        thr = fields[4].strip()
        cap = fields[5].strip()
        threshold = _float(fields, 4, line_no, "threshold_mbit") if thr else None
        buffer_cap = _float(fields, 5, line_no, "buffer_cap_mbit") if cap else None
        links.append(Link(id=link_id, capacity=capacity, priority=priority,
                          cost_per_gb=cost, threshold=threshold, buffer_cap=buffer_cap))
    if not links:
        raise EmptyGroupError("no link rows found")
    return links


def links_to_csv(links) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(LINKS_HEADER)
    for l in links:
        w.writerow([
            l.id, _fmt(l.capacity), l.priority, _fmt(l.cost_per_gb),
            "" if l.threshold is None else _fmt(l.threshold),
            "" if l.buffer_cap is None else _fmt(l.buffer_cap),
        ])
    return out.getvalue()


def parse_failures(text: str) -> list:
    """Parse time_s,link_id,event CSV into (time, link_id, event) tuples."""
    events = []
    first = True
    for line_no, fields in _rows(text):
        if first:
            first = False
            if _is_header(fields, FAILURES_HEADER):
                continue
        if len(fields) != 3:
            raise ParseError(line_no, f"expected 3 fields, got {len(fields)}")
        t = _float(fields, 0, line_no, "time_s")
        link_id = fields[1].strip()
        if not link_id:
            raise ParseError(line_no, "empty link_id")
        event = fields[2].strip().lower()
        if event not in ("up", "down"):
            raise ParseError(line_no, f"event must be 'up' or 'down', got {fields[2]!r}")
        events.append((t, link_id, event))
    return events


def failures_to_csv(events) -> str:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(FAILURES_HEADER)
    for t, link_id, event in events:
        w.writerow([_fmt(t), link_id, event])
    return out.getvalue()


def _fmt(x) -> str:
    """Render numbers without a trailing .0 so integers stay clean in CSV."""
    if isinstance(x, float) and x.is_integer():
        return str(int(x))
    return repr(x) if isinstance(x, float) else str(x)


def synth_diurnal(peak_start_s: float, peak_end_s: float, base_mbps: float,
                  peak_mbps: float, samples_per_hour: int) -> DemandTrace:
    """Triangular day profile: flat base, ramp up from peak_start to the
    window midpoint where demand hits peak_mbps, ramp back down to base at
    peak_end, flat base for the rest of the day.

    Samples are spaced 3600/samples_per_hour seconds apart over [0, 86400).
    """
    if not (0 <= peak_start_s < peak_end_s <= DAY_S):
        raise BadWindowError(
            f"peak window [{peak_start_s}, {peak_end_s}] must sit inside the day")
    if base_mbps < 0 or peak_mbps < base_mbps:
        raise BadWindowError(
            f"need 0 <= base <= peak, got base={base_mbps} peak={peak_mbps}")
    if samples_per_hour < 1 or int(samples_per_hour) != samples_per_hour:
        raise BadWindowError(f"samples_per_hour must be a positive integer, got {samples_per_hour}")
    n = int(24 * samples_per_hour)
    dt = 3600.0 / samples_per_hour
    mid = (peak_start_s + peak_end_s) / 2.0
    half = mid - peak_start_s
    rise = peak_mbps - base_mbps
    samples = []
    for i in range(n):
        t = i * dt
        if t <= peak_start_s or t >= peak_end_s:
            d = base_mbps
        elif t <= mid:
            d = base_mbps + rise * (t - peak_start_s) / half
        else:
            d = base_mbps + rise * (peak_end_s - t) / half
        samples.append((t, d))
    return DemandTrace(samples)
