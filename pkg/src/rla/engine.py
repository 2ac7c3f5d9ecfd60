"""Discrete-time simulation engine.

Each tick converts the demanded bandwidth into quantum-sized units, assigns
every quantum to a link through the active policy (buffers update between
quanta, so overflow cascades within the tick), then drains each link by up to
capacity x tick and records the result.

Per-link arithmetic is batched where the per-quantum outcome is predictable
(OLB fills links in scan order, the single-master baseline fills one link),
which keeps day-long second-resolution runs fast. Round robin and the
weighted fair queue rotate per quantum and are simulated quantum by quantum.
Batched and per-quantum paths produce identical results; the test suite
cross-checks both against an independent brute-force simulator.
"""

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .errors import BadParameterError, EmptyTraceError
from .links import AggregationGroup, validate_group
from .policies import (
    PolicyId,
    PolicyState,
    WfqDirection,
    rr_select,
    vrrp_select,
    wfq_select,
    wfq_weights,
)
from .traceio import DemandTrace


@dataclass
class EngineConfig:
    """Knobs for one simulation run.

    quantum is the assignment unit in megabits; it must not exceed any link
    threshold, so a single quantum can never jump an empty buffer past both
    threshold and cap at once. warmup_ticks marks leading ticks that
    steady-state assertions should skip; the engine records them like any
    other tick.
    """

    policy: PolicyId
    tick: float = 1.0
    quantum: float = 1.0
    wfq_direction: WfqDirection = WfqDirection.INVERSE_COST
    warmup_ticks: int = 1

    def __post_init__(self):
        if self.tick <= 0:
            raise BadParameterError(f"tick must be positive, got {self.tick}")
        if self.quantum <= 0:
            raise BadParameterError(f"quantum must be positive, got {self.quantum}")
        if self.warmup_ticks < 0:
            raise BadParameterError(f"warmup_ticks must be nonnegative, got {self.warmup_ticks}")


@dataclass(slots=True)
class TickRecord:
    """Everything that happened in one tick.

    assigned/transmitted/buffer_end are megabit amounts per link, in the
    group's priority order. dropped is the total megabits rejected at buffer
    caps. reorder_events counts adjacent quanta that were enqueued to
    different links, a proxy for out-of-order delivery exposure.
    """

    t: float
    demand: float
    assigned: tuple
    transmitted: tuple
    buffer_end: tuple
    dropped: float
    supplied_mbps: float
    reorder_events: int


@dataclass
class SimulationResult:
    """Config echo, group echo, and one TickRecord per trace sample."""

    config: EngineConfig
    group: AggregationGroup
    records: list = field(default_factory=list)


def _check_ready(group: AggregationGroup, quantum: float) -> None:
    for link in group.links:
        if link.threshold is None or link.buffer_cap is None:
            raise BadParameterError(
                f"link {link.id}: group must go through validate_group before simulation")
    min_thr = min(l.threshold for l in group.links)
    if quantum > min_thr:
        raise BadParameterError(
            f"quantum {quantum} exceeds smallest link threshold {min_thr}")


def _split_arrivals(arrivals: float, quantum: float):
    """Number of full quanta plus the trailing fractional quantum (0 if none)."""
    if arrivals <= 0:
        return 0, 0.0
    n_full = math.floor(arrivals / quantum)
    rem = arrivals - n_full * quantum
    if rem < 0:
        n_full -= 1
        rem = arrivals - n_full * quantum
    return n_full, (rem if rem > 0 else 0.0)


def _assign_olb(alive, bufs, thrs, bcaps, assigned, n_full, rem, quantum):
    """Scan-order batch fill. Returns (dropped, reorder_events).

    Mirrors the per-quantum rule exactly: each link in priority order absorbs
    quanta while its buffer is below threshold; once every buffer is at or
    above threshold the remainder lands on the last link; any quantum that
    would push its target past the buffer cap is dropped in full (the scan
    does not redirect it).
    """
    dropped = 0.0
    reorder = 0
    prev = -1
    full = n_full
    z = 0
    while full > 0 and z < len(alive):
        i = alive[z]
        b = bufs[i]
        if b >= thrs[i]:
            z += 1
            continue
        k_thr = math.ceil((thrs[i] - b) / quantum)
        k_cap = math.floor((bcaps[i] - b) / quantum)
        if k_cap < k_thr:
            # cap interferes before the threshold is reached: whatever fits
            # goes in, every further full quantum is dropped right here
            # (the link stays below threshold, so the scan keeps picking it)
            k = k_cap if k_cap < full else full
            if k > 0:
                amt = k * quantum
                bufs[i] = b + amt
                assigned[i] += amt
                if prev >= 0 and i != prev:
                    reorder += 1
                prev = i
                full -= k
            if full > 0:
                dropped += full * quantum
                full = 0
            break
        k = k_thr if k_thr < full else full
        amt = k * quantum
        bufs[i] = b + amt
        assigned[i] += amt
        if prev >= 0 and i != prev:
            reorder += 1
        prev = i
        full -= k
    if full > 0:
        # fallthrough: every link at/above threshold, remainder to the last
        i = alive[-1]
        k_cap = math.floor((bcaps[i] - bufs[i]) / quantum)
        k = k_cap if k_cap < full else full
        if k > 0:
            amt = k * quantum
            bufs[i] += amt
            assigned[i] += amt
            if prev >= 0 and i != prev:
                reorder += 1
            prev = i
            full -= k
        if full > 0:
            dropped += full * quantum
    if rem > 0:
        i = -1
        for j in alive:
            if bufs[j] < thrs[j]:
                i = j
                break
        if i < 0:
            i = alive[-1]
        if bufs[i] + rem > bcaps[i]:
            dropped += rem
        else:
            bufs[i] += rem
            assigned[i] += rem
            if prev >= 0 and i != prev:
                reorder += 1
    return dropped, reorder


def _assign_single(i, bufs, bcaps, assigned, n_full, rem, quantum):
    """Batch fill of one link (single-master baseline). Returns dropped."""
    dropped = 0.0
    if n_full > 0:
        k_cap = math.floor((bcaps[i] - bufs[i]) / quantum)
        k = k_cap if k_cap < n_full else n_full
        if k > 0:
            amt = k * quantum
            bufs[i] += amt
            assigned[i] += amt
        if n_full > k:
            dropped += (n_full - k) * quantum
    if rem > 0:
        if bufs[i] + rem > bcaps[i]:
            dropped += rem
        else:
            bufs[i] += rem
            assigned[i] += rem
    return dropped


def _assign_rotating(select, alive, bufs, bcaps, assigned, n_full, rem, quantum):
    """Quantum-by-quantum loop for cursor/deficit policies.

    select() returns an index into the alive list; drops still advance the
    policy state, matching a scheduler that has already committed the quantum
    when the buffer rejects it.
    """
    dropped = 0.0
    reorder = 0
    prev = -1
    for step_no in range(n_full + (1 if rem > 0 else 0)):
        q = quantum if step_no < n_full else rem
        i = alive[select()]
        if bufs[i] + q > bcaps[i]:
            dropped += q
        else:
            bufs[i] += q
            assigned[i] += q
            if prev >= 0 and i != prev:
                reorder += 1
            prev = i
    return dropped, reorder


class _Runner:
    """Shared per-tick machinery bound to one group and config."""

    def __init__(self, group: AggregationGroup, config: EngineConfig, state: PolicyState):
        _check_ready(group, config.quantum)
        self.group = group
        self.config = config
        self.state = state
        self.n = group.n
        self.bufs = [l.buffer for l in group.links]
        self.thrs = [l.threshold for l in group.links]
        self.bcaps = [l.buffer_cap for l in group.links]
        self.drain = [l.capacity * config.tick for l in group.links]
        self.ids = [l.id for l in group.links]
        self._sub_key = None
        self._sub = None
        self._weights = None

    def _subgroup(self, alive):
        key = tuple(alive)
        if key != self._sub_key:
            links = self.group.links
            self._sub = (self.group if len(alive) == self.n
                         else AggregationGroup(self.group.group_id, [links[i] for i in alive]))
            self._weights = (wfq_weights(self._sub, self.config.wfq_direction)
                             if self.config.policy is PolicyId.WFQ else None)
            self._sub_key = key
        return self._sub, self._weights

    def tick(self, t: float, demand: float, failed: frozenset) -> TickRecord:
        if demand < 0:
            raise BadParameterError(f"demand must be nonnegative, got {demand}")
        cfg = self.config
        bufs = self.bufs
        n = self.n
        alive = ([i for i in range(n) if self.ids[i] not in failed]
                 if failed else list(range(n)))
        assigned = [0.0] * n
        arrivals = demand * cfg.tick
        n_full, rem = _split_arrivals(arrivals, cfg.quantum)
        dropped = 0.0
        reorder = 0
        policy = cfg.policy
        if n_full or rem:
            if policy is PolicyId.VRRP:
                # raises AllLinksFailedError when nothing is up
                master = vrrp_select(self.group, self.state, failed)
                dropped = _assign_single(master, bufs, self.bcaps, assigned,
                                         n_full, rem, cfg.quantum)
            elif not alive:
                dropped = arrivals
            elif policy is PolicyId.OLB:
                dropped, reorder = _assign_olb(alive, bufs, self.thrs, self.bcaps,
                                               assigned, n_full, rem, cfg.quantum)
            elif policy is PolicyId.ROUND_ROBIN:
                sub, _ = self._subgroup(alive)
                state = self.state
                dropped, reorder = _assign_rotating(
                    lambda: rr_select(sub, state), alive, bufs, self.bcaps,
                    assigned, n_full, rem, cfg.quantum)
            elif policy is PolicyId.WFQ:
                sub, weights = self._subgroup(alive)
                state = self.state
                dropped, reorder = _assign_rotating(
                    lambda: wfq_select(sub, state, weights), alive, bufs, self.bcaps,
                    assigned, n_full, rem, cfg.quantum)
            else:  # pragma: no cover - PolicyId is a closed set
                raise BadParameterError(f"unhandled policy {policy}")
        elif policy is PolicyId.VRRP:
            vrrp_select(self.group, self.state, failed)

        transmitted = [0.0] * n
        supplied = 0.0
        for i in alive:
            tx = bufs[i]
            cap = self.drain[i]
            if tx > cap:
                tx = cap
            bufs[i] -= tx
            transmitted[i] = tx
            supplied += tx
        return TickRecord(
            t=t,
            demand=demand,
            assigned=tuple(assigned),
            transmitted=tuple(transmitted),
            buffer_end=tuple(bufs),
            dropped=dropped,
            supplied_mbps=supplied / cfg.tick,
            reorder_events=reorder,
        )

    def writeback(self):
        for link, b in zip(self.group.links, self.bufs):
            link.buffer = b


def step(group: AggregationGroup, policy_state: PolicyState, config: EngineConfig,
         demand_mbps: float, failed: frozenset = frozenset(), t: float = 0.0) -> TickRecord:
    """Advance one tick on a live group, mutating link buffers in place.

    Arrivals of demand x tick megabits are split into quanta, each assigned
    by the configured policy against live buffer state, then every non-failed
    link drains up to capacity x tick.
    """
    validate_group(group.group_id, group.links, config.tick)
    runner = _Runner(group, config, policy_state)
    record = runner.tick(t, demand_mbps, frozenset(failed))
    runner.writeback()
    return record


def _failure_timeline(group: AggregationGroup, failures) -> list:
    ids = set(group.link_ids())
    events = []
    for ev in failures or ():
        t, link_id, kind = float(ev[0]), str(ev[1]), str(ev[2])
        if link_id not in ids:
            raise BadParameterError(f"failure event for unknown link {link_id!r}")
        if kind not in ("up", "down"):
            raise BadParameterError(f"failure event must be 'up' or 'down', got {kind!r}")
        events.append((t, link_id, kind))
    events.sort(key=lambda e: e[0])
    return events


def run(group: AggregationGroup, config: EngineConfig, trace: DemandTrace,
        failures: Optional[Iterable[Sequence]] = None) -> SimulationResult:
    """Fold the engine over a demand trace.

    Starts from zero buffers and fresh policy state; the caller's group is
    left untouched. One TickRecord per trace sample. Failure events
    (time_s, link_id, "up"/"down") take effect on the first sample at or
    after their time. Deterministic: identical inputs give identical results.
    """
    if not trace.samples:
        raise EmptyTraceError("demand trace has no samples")
    pristine = validate_group(group.group_id, group.links, config.tick)
    work = AggregationGroup(pristine.group_id,
                            [replace(l, buffer=0.0) for l in pristine.links])
    events = _failure_timeline(work, failures)
    runner = _Runner(work, config, PolicyState())
    records = []
    failed = set()
    fsnap = frozenset()
    ei = 0
    ne = len(events)
    tick = runner.tick
    for t, demand in trace.samples:
        if ei < ne and events[ei][0] <= t:
            while ei < ne and events[ei][0] <= t:
                _, link_id, kind = events[ei]
                (failed.add if kind == "down" else failed.discard)(link_id)
                ei += 1
            fsnap = frozenset(failed)
        records.append(tick(t, demand, fsnap))
    return SimulationResult(config=config, group=pristine, records=records)
