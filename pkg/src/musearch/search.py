"""Maxima units search: pick one pivotal unit per group.

The search runs in three steps. For every group, take the units with the
most zeros toward the other groups (the candidate maxima, at most
``m_bar`` per group). For each candidate, count the distinct k-by-k
identity submatrices it participates in, built from one unit per other
group drawn among the candidate's cross-group zero partners; a submatrix
counts only if *all* off-diagonal pairs are zero, including pairs that do
not involve the candidate. Finally each group selects the candidate with
the largest count, ties going to the lowest unit index.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .matrix import Grouping, ZeroPattern, check_consistent

__all__ = [
    "Candidate",
    "CandidateSet",
    "PartnerGroups",
    "GroupOutcome",
    "PivotResult",
    "select_candidates",
    "group_partners",
    "count_identity_submatrices",
    "select_maxima",
    "verify_identity",
]


@dataclass(frozen=True)
class Candidate:
    unit: int
    cross_group_zeros: int


@dataclass(frozen=True)
class CandidateSet:
    """Per group, up to ``m_bar`` candidates ordered by cross-group zero
    count descending, ties by ascending unit index. Units with no
    cross-group zeros are excluded: they cannot appear in any identity
    submatrix."""

    m_bar: int
    per_group: tuple[tuple[Candidate, ...], ...]

    def units(self, group: int) -> tuple[int, ...]:
        return tuple(c.unit for c in self.per_group[group])


@dataclass(frozen=True)
class PartnerGroups:
    """Cross-group zero partners of one candidate, split by group.

    ``members_by_group`` maps every group label other than the
    candidate's own to the sorted tuple of its units that have a zero
    against the candidate (possibly empty).
    """

    candidate: int
    members_by_group: dict[int, tuple[int, ...]]


@dataclass(frozen=True)
class GroupOutcome:
    group: int
    selected: int | None
    count: int
    examined: tuple[tuple[int, int], ...]  # (unit, count) in candidate order

    @property
    def found(self) -> bool:
        return self.selected is not None


@dataclass(frozen=True)
class PivotResult:
    outcomes: tuple[GroupOutcome, ...]
    maxima: tuple[int, ...] | None
    identity_verified: bool

    @property
    def all_found(self) -> bool:
        return self.maxima is not None


def select_candidates(
    zero_pattern: ZeroPattern, grouping: Grouping, m_bar: int
) -> CandidateSet:
    """Step one: the top ``m_bar`` units of each group by cross-group zeros.

    Groups may yield fewer than ``m_bar`` candidates, or none at all.
    """
    check_consistent(zero_pattern, grouping)
    if m_bar < 1:
        raise ValueError(f"m_bar must be >= 1, got {m_bar}")
    per_group = []
    for group in range(grouping.k):
        own = grouping.member_mask(group)
        scored = []
        for unit in grouping.members(group):
            cross = (zero_pattern.mask(unit) & ~own).bit_count()
            if cross > 0:
                scored.append(Candidate(unit, cross))
        scored.sort(key=lambda c: (-c.cross_group_zeros, c.unit))
        per_group.append(tuple(scored[:m_bar]))
    return CandidateSet(m_bar=m_bar, per_group=tuple(per_group))


def group_partners(
    zero_pattern: ZeroPattern, grouping: Grouping, candidate: int
) -> PartnerGroups:
    """Step two, part one: the candidate's zero partners in every other group."""
    check_consistent(zero_pattern, grouping)
    own_label = grouping.label(candidate)
    zeros = zero_pattern.mask(candidate)
    members = {}
    for group in range(grouping.k):
        if group == own_label:
            continue
        mask = zeros & grouping.member_mask(group)
        members[group] = tuple(u for u in grouping.members(group) if (mask >> u) & 1)
    return PartnerGroups(candidate=candidate, members_by_group=members)


def count_identity_submatrices(
    zero_pattern: ZeroPattern, grouping: Grouping, partners: PartnerGroups
) -> int:
    """Step two, part two: exact identity-submatrix count for one candidate.

    Counts tuples of one unit per other group, drawn from ``partners``,
    such that every pair among them is zero (pairs with the candidate are
    zero already, by construction of the partner sets). Enumeration walks
    groups in ascending size order keeping the running constraint as a
    bitset intersection, and abandons a branch as soon as any remaining
    group has no compatible unit left.
    """
    check_consistent(zero_pattern, grouping)
    masks = []
    for units in partners.members_by_group.values():
        if not units:
            return 0
        masks.append(sum(1 << u for u in units))
    masks.sort(key=lambda m: m.bit_count())
    rows = [zero_pattern.mask(i) for i in range(zero_pattern.n)]
    full = (1 << zero_pattern.n) - 1
    return _count_tuples(masks, 0, full, rows)


def _count_tuples(masks: list[int], idx: int, allowed: int, rows: list[int]) -> int:
    if idx == len(masks) - 1:
        return (masks[idx] & allowed).bit_count()
    for later in masks[idx + 1 :]:
        if later & allowed == 0:
            return 0
    total = 0
    avail = masks[idx] & allowed
    while avail:
        low = avail & -avail
        unit = low.bit_length() - 1
        avail ^= low
        total += _count_tuples(masks, idx + 1, allowed & rows[unit], rows)
    return total


def select_maxima(
    zero_pattern: ZeroPattern, grouping: Grouping, m_bar: int
) -> PivotResult:
    """Run the full three-step search.

    A group whose best count is zero (or which produced no candidates)
    reports not-found rather than raising; the counts of every examined
    candidate are kept in the result.
    """
    candidates = select_candidates(zero_pattern, grouping, m_bar)
    outcomes = []
    for group, group_candidates in enumerate(candidates.per_group):
        examined = []
        best_unit: int | None = None
        best_count = 0
        for cand in group_candidates:
            partners = group_partners(zero_pattern, grouping, cand.unit)
            count = count_identity_submatrices(zero_pattern, grouping, partners)
            examined.append((cand.unit, count))
            if count >= 1 and (
                count > best_count or (count == best_count and cand.unit < best_unit)
            ):
                best_unit = cand.unit
                best_count = count
        outcomes.append(
            GroupOutcome(
                group=group,
                selected=best_unit,
                count=best_count,
                examined=tuple(examined),
            )
        )
    if all(o.found for o in outcomes):
        maxima = tuple(o.selected for o in outcomes)
        verified = verify_identity(zero_pattern, maxima, grouping)
    else:
        maxima = None
        verified = False
    return PivotResult(
        outcomes=tuple(outcomes), maxima=maxima, identity_verified=verified
    )


def verify_identity(
    zero_pattern: ZeroPattern,
    units: tuple[int, ...] | list[int],
    grouping: Grouping | None = None,
) -> bool:
    """True iff every unordered pair among ``units`` is a zero pair.

    With a grouping supplied, the units must also lie one per group.
    """
    units = tuple(units)
    if len(set(units)) != len(units):
        raise ValueError(f"duplicate units in {units}")
    if grouping is not None:
        labels = [grouping.label(u) for u in units]
        if len(set(labels)) != len(labels):
            raise ValueError(f"two of {units} share a group")
    return all(
        zero_pattern.has_zero(a, b) for a, b in itertools.combinations(units, 2)
    )
