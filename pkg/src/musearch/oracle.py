"""Brute-force reference for identity-submatrix counts.

Shares no enumeration logic with the search module: plain set lookups
and exhaustive tuple products, so agreement between the two is evidence
rather than tautology. Only usable on small instances.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .matrix import Grouping, ZeroPattern, check_consistent

__all__ = ["TUPLE_TEST_LIMIT", "OracleReport", "oracle_count", "oracle_maxima"]

# Keeps any guarded run at desk scale (well under a minute).
TUPLE_TEST_LIMIT = 10**8


@dataclass(frozen=True)
class OracleReport:
    """Exhaustive per-unit counts and per-group argmax sets.

    ``tuples`` lists every identity tuple (one unit per group, sorted by
    group label) up to ``tuple_limit``; ``truncated`` flags an overflow.
    Argmax sets are empty for groups whose best count is zero.
    """

    counts: tuple[int, ...]
    max_by_group: tuple[int, ...]
    argmax_by_group: tuple[tuple[int, ...], ...]
    tuples: tuple[tuple[int, ...], ...]
    truncated: bool


def _zero_sets(zero_pattern: ZeroPattern) -> list[set[int]]:
    return [set(zero_pattern.partners(i)) for i in range(zero_pattern.n)]


def _is_identity(units: tuple[int, ...], zero_sets: list[set[int]]) -> bool:
    return all(b in zero_sets[a] for a, b in itertools.combinations(units, 2))


def oracle_count(zero_pattern: ZeroPattern, grouping: Grouping, unit: int) -> int:
    """Exact count for one unit by testing every combination of one unit
    per other group, with no pre-filtering and no pruning."""
    check_consistent(zero_pattern, grouping)
    own = grouping.label(unit)
    others = [grouping.members(g) for g in range(grouping.k) if g != own]
    work = math.prod(len(m) for m in others)
    if work > TUPLE_TEST_LIMIT:
        raise ValueError(
            f"instance too large for the oracle: {work} tuple tests "
            f"exceed the {TUPLE_TEST_LIMIT} limit"
        )
    zero_sets = _zero_sets(zero_pattern)
    count = 0
    for combo in itertools.product(*others):
        if _is_identity((unit,) + combo, zero_sets):
            count += 1
    return count


def oracle_maxima(
    zero_pattern: ZeroPattern, grouping: Grouping, tuple_limit: int = 10_000
) -> OracleReport:
    """Exhaustive counts for every unit, via one pass over all tuples.

    Walks the full product of the groups (not candidate subsets), so the
    argmax sets are global per-group maxima.
    """
    check_consistent(zero_pattern, grouping)
    groups = [grouping.members(g) for g in range(grouping.k)]
    work = math.prod(len(m) for m in groups)
    if work > TUPLE_TEST_LIMIT:
        raise ValueError(
            f"instance too large for the oracle: {work} tuple tests "
            f"exceed the {TUPLE_TEST_LIMIT} limit"
        )
    zero_sets = _zero_sets(zero_pattern)
    counts = [0] * zero_pattern.n
    kept: list[tuple[int, ...]] = []
    truncated = False
    for combo in itertools.product(*groups):
        if _is_identity(combo, zero_sets):
            for u in combo:
                counts[u] += 1
            if len(kept) < tuple_limit:
                kept.append(combo)
            else:
                truncated = True
    max_by_group = []
    argmax_by_group = []
    for members in groups:
        best = max(counts[u] for u in members)
        max_by_group.append(best)
        if best > 0:
            argmax_by_group.append(tuple(u for u in members if counts[u] == best))
        else:
            argmax_by_group.append(())
    return OracleReport(
        counts=tuple(counts),
        max_by_group=tuple(max_by_group),
        argmax_by_group=tuple(argmax_by_group),
        tuples=tuple(kept),
        truncated=truncated,
    )
