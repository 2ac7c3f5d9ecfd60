"""Domain types for uplinks and aggregation groups.

A Link models one uplink of a bundle: how fast it drains (capacity), where it
sits in the activation order (priority), what it costs per gigabyte carried,
and the two buffer levels that drive scheduling: the activation threshold at
which the spillover scan moves past it, and the hard cap beyond which
arrivals are dropped.
"""

from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .errors import BadParameterError, DuplicatePriorityError, EmptyGroupError

# Applied when a link config leaves buffer_cap blank: cap = 4 x threshold.
# A finite cap bounds memory and defines when overload turns into drops.
DEFAULT_BUFFER_CAP_FACTOR = 4.0


@dataclass
class Link:
    """One uplink in an aggregation group.

    capacity is in Mbps; threshold, buffer_cap and buffer are occupancies in
    megabits. priority 1 is the primary link, 2 the secondary, and so on.
    threshold/buffer_cap may be left None and resolved by validate_group.
    """

    id: str
    capacity: float
    priority: int
    cost_per_gb: float = 0.0
    threshold: Optional[float] = None
    buffer_cap: Optional[float] = None
    buffer: float = 0.0


@dataclass
class AggregationGroup:
    """A validated, priority-ordered bundle of links.

    Instances should be produced by validate_group, which sorts links by
    ascending priority and checks every invariant. Links are held in scan
    order: links[0] is the primary.
    """

    group_id: str
    links: list

    @property
    def n(self) -> int:
        return len(self.links)

    def link_ids(self) -> list:
        return [l.id for l in self.links]


def default_threshold(link: Link, tick: float) -> float:
    """Default activation threshold: one tick's worth of drainable data.

    With this default a link saturates its threshold exactly when the load
    offered to it reaches its capacity, so the next link in the group starts
    carrying traffic exactly when cumulative demand exceeds the cumulative
    capacity of the links before it.
    """
    if tick <= 0:
        raise BadParameterError(f"tick must be positive, got {tick}")
    return link.capacity * tick


def validate_group(group_id: str, links: Iterable[Link], tick: float = 1.0) -> AggregationGroup:
    """Validate aggregation parameters and return a priority-sorted group.

    Resolves missing thresholds (capacity x tick) and buffer caps
    (4 x threshold), checks all link invariants, and enforces unique ids and
    priorities. Raises EmptyGroupError, DuplicatePriorityError, or
    BadParameterError. Validating an already-valid group returns an equal
    group.
    """
    resolved = []
    for link in links:
        if not link.id:
            raise BadParameterError("link id must be non-empty")
        if link.capacity <= 0:
            raise BadParameterError(f"link {link.id}: capacity must be positive, got {link.capacity}")
        if not isinstance(link.priority, int) or link.priority < 1:
            raise BadParameterError(f"link {link.id}: priority must be a positive integer, got {link.priority!r}")
        if link.cost_per_gb < 0:
            raise BadParameterError(f"link {link.id}: cost_per_gb must be nonnegative, got {link.cost_per_gb}")
        threshold = link.threshold if link.threshold is not None else default_threshold(link, tick)
        if threshold <= 0:
            raise BadParameterError(f"link {link.id}: threshold must be positive, got {threshold}")
        buffer_cap = link.buffer_cap if link.buffer_cap is not None else DEFAULT_BUFFER_CAP_FACTOR * threshold
        if buffer_cap < threshold:
            raise BadParameterError(
                f"link {link.id}: buffer_cap {buffer_cap} is below threshold {threshold}")
        if not 0 <= link.buffer <= buffer_cap:
            raise BadParameterError(
                f"link {link.id}: buffer {link.buffer} outside [0, {buffer_cap}]")
        resolved.append(replace(link, threshold=threshold, buffer_cap=buffer_cap))

    if not resolved:
        raise EmptyGroupError(f"group {group_id!r} has no links")

    seen_prio = {}
    seen_id = set()
    for link in resolved:
        if link.priority in seen_prio:
            raise DuplicatePriorityError(
                f"links {seen_prio[link.priority]} and {link.id} share priority {link.priority}")
        seen_prio[link.priority] = link.id
        if link.id in seen_id:
            raise BadParameterError(f"duplicate link id {link.id}")
        seen_id.add(link.id)

    resolved.sort(key=lambda l: l.priority)
    return AggregationGroup(group_id=group_id, links=resolved)
