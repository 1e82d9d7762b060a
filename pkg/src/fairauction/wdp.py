"""Winner determination: revenue-maximizing allocation of disjoint bids.

Two independent solvers share one canonical answer:

* solve_wdp - depth-first branch-and-bound over bids ordered by
  amount-per-resource, with a per-resource optimistic bound and tie-safe
  dominance pruning.
* solve_wdp_bruteforce - exhaustive enumeration of every set of pairwise
  disjoint bids, used as the oracle for the former.

Revenue ties between structurally different allocations are broken
deterministically: fewer winning bids first, then the lexicographically
smallest sequence of (bidder id, sorted item indices). Within a same-set,
same-amount tie this lands on the lowest bidder id, which is presentational
only - settlement replaces that winner-of-record with proportional division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (
    AuctionError,
    AuctionInstance,
    Bid,
    InternalInvariantViolation,
    Money,
)

__all__ = [
    "Allocation",
    "TieGroup",
    "EmptyAuction",
    "InstanceTooLarge",
    "solve_wdp",
    "solve_wdp_bruteforce",
    "detect_ties",
]

#: Brute-force refuses instances with more resources than this by default.
BRUTEFORCE_MAX_RESOURCES = 8


class EmptyAuction(AuctionError):
    """No positive-amount bid exists; there is nothing to allocate."""


class InstanceTooLarge(AuctionError):
    """Instance exceeds the brute-force enumeration cap."""


@dataclass(frozen=True)
class Allocation:
    """A feasible outcome: pairwise-disjoint winning bids and their revenue."""

    winning_bids: tuple[Bid, ...]
    revenue: Money

    def winners(self) -> tuple[str, ...]:
        return tuple(sorted({bid.bidder for bid in self.winning_bids}))


@dataclass(frozen=True)
class TieGroup:
    """Bidders who all bid `amount` on exactly `items`, one of whom won it."""

    items: frozenset[str]
    amount: Money
    contenders: tuple[str, ...]
    winner_of_record: str


@dataclass(frozen=True)
class _Entry:
    bid: Bid
    mask: int
    key: tuple[str, tuple[int, ...]]
    density: Fraction  # amount per resource, drives search order and bound


def _positive_bids(instance: AuctionInstance) -> list[Bid]:
    return [bid for bidder in instance.bidders for bid in bidder.bids if bid.amount > 0]


def _entries(instance: AuctionInstance, bids: list[Bid]) -> list[_Entry]:
    order = instance.resource_order()
    entries = []
    for bid in bids:
        idx = tuple(sorted(order[rid] for rid in bid.items))
        mask = 0
        for i in idx:
            mask |= 1 << i
        entries.append(
            _Entry(bid, mask, (bid.bidder, idx), bid.amount / len(bid.items))
        )
    return entries


def _prune_dominated(entries: list[_Entry]) -> list[_Entry]:
    """Drop bids that provably cannot appear in the canonical optimum.

    Safe rules only: (1) per item set keep the highest amount, breaking
    amount ties by lowest (bidder, items) key - the dropped bid can always
    be swapped for the kept one without losing revenue or canonical rank;
    (2) across item sets drop a bid when a strictly smaller subset carries a
    strictly larger amount - the swap strictly raises revenue. A>=-style rule
    over subsets would be unsafe: an equal-amount swap to a different item
    set can change the canonical key in either direction.
    """
    best_per_set: dict[frozenset[str], _Entry] = {}
    for e in entries:
        cur = best_per_set.get(e.bid.items)
        if (
            cur is None
            or e.bid.amount > cur.bid.amount
            or (e.bid.amount == cur.bid.amount and e.key < cur.key)
        ):
            best_per_set[e.bid.items] = e
    kept = list(best_per_set.values())
    return [
        e
        for e in kept
        if not any(
            other.bid.items < e.bid.items and other.bid.amount > e.bid.amount
            for other in kept
        )
    ]


def _allocation_key(chosen: list[_Entry]) -> tuple[tuple[str, tuple[int, ...]], ...]:
    return tuple(sorted(e.key for e in chosen))


class _Best:
    """Running best allocation under (revenue desc, count asc, key asc)."""

    def __init__(self) -> None:
        self.revenue: Money | None = None
        self.count = 0
        self.key: tuple = ()
        self.chosen: tuple[_Entry, ...] = ()

    def consider(self, chosen: list[_Entry], revenue: Money) -> None:
        if self.revenue is not None and revenue < self.revenue:
            return
        if self.revenue is None or revenue > self.revenue:
            self._take(chosen, revenue)
            return
        if len(chosen) > self.count:
            return
        key = _allocation_key(chosen)
        if len(chosen) < self.count or key < self.key:
            self._take(chosen, revenue, key)

    def _take(self, chosen, revenue, key=None):
        self.revenue = revenue
        self.count = len(chosen)
        self.key = _allocation_key(chosen) if key is None else key
        self.chosen = tuple(chosen)


def _search(entries: list[_Entry], num_resources: int, bound: bool) -> _Best:
    """Enumerate feasible bid sets; with `bound`, prune subtrees that cannot
    reach the best revenue seen so far."""
    n = len(entries)
    suffix: list[list[Fraction]] = [[Fraction(0)] * num_resources]
    if bound:
        # suffix[i][r]: best amount-per-resource among entries[i:] covering r
        for e in reversed(entries):
            row = suffix[-1][:]
            for r in range(num_resources):
                if e.mask >> r & 1 and e.density > row[r]:
                    row[r] = e.density
            suffix.append(row)
        suffix.reverse()

    best = _Best()
    chosen: list[_Entry] = []

    def optimistic(start: int, used: int) -> Fraction:
        row = suffix[start]
        return sum(
            (row[r] for r in range(num_resources) if not used >> r & 1), Fraction(0)
        )

    def recurse(start: int, used: int, revenue: Money) -> None:
        best.consider(chosen, revenue)
        for j in range(start, n):
            e = entries[j]
            if e.mask & used:
                continue
            if bound and best.revenue is not None:
                ceiling = revenue + e.bid.amount + optimistic(j + 1, used | e.mask)
                if ceiling < best.revenue:
                    continue
            chosen.append(e)
            recurse(j + 1, used | e.mask, revenue + e.bid.amount)
            chosen.pop()

    recurse(0, 0, Fraction(0))
    return best


def _finish(instance: AuctionInstance, best: _Best) -> Allocation:
    chosen = sorted(best.chosen, key=lambda e: e.key)
    used = 0
    for e in chosen:
        if e.mask & used:
            raise InternalInvariantViolation("winning bids overlap")
        used |= e.mask
    revenue = sum((e.bid.amount for e in chosen), Fraction(0))
    if revenue != best.revenue:
        raise InternalInvariantViolation("allocation revenue does not sum")
    return Allocation(tuple(e.bid for e in chosen), revenue)


def solve_wdp(instance: AuctionInstance) -> Allocation:
    """Return the revenue-maximal allocation of pairwise-disjoint bids.

    Branch-and-bound over bids in amount-per-resource order; dominated bids
    are removed first (see _prune_dominated). Resources may stay unsold
    (free disposal). Raises EmptyAuction when no positive bid exists.
    """
    bids = _positive_bids(instance)
    if not bids:
        raise EmptyAuction("no positive-amount bids in the instance")
    entries = _prune_dominated(_entries(instance, bids))
    entries.sort(key=lambda e: (-e.density, e.key))
    best = _search(entries, len(instance.resources), bound=True)
    return _finish(instance, best)


def solve_wdp_bruteforce(
    instance: AuctionInstance, max_resources: int = BRUTEFORCE_MAX_RESOURCES
) -> Allocation:
    """Exhaustive oracle: enumerate every set of pairwise-disjoint bids.

    No dominance pruning and no bounding - independent of solve_wdp's search
    logic - but the same deterministic tie-breaking. Refuses instances with
    more than `max_resources` resources.
    """
    if len(instance.resources) > max_resources:
        raise InstanceTooLarge(
            f"{len(instance.resources)} resources exceed the brute-force cap "
            f"of {max_resources}"
        )
    bids = _positive_bids(instance)
    if not bids:
        raise EmptyAuction("no positive-amount bids in the instance")
    entries = _entries(instance, bids)
    entries.sort(key=lambda e: e.key)
    best = _search(entries, len(instance.resources), bound=False)
    return _finish(instance, best)


def detect_ties(instance: AuctionInstance, alloc: Allocation) -> list[TieGroup]:
    """Find winning (items, amount) pairs that two or more bidders bid
    identically; returns one TieGroup per such pair."""
    groups = []
    for winning in alloc.winning_bids:
        contenders = sorted(
            bidder.id
            for bidder in instance.bidders
            if any(
                bid.items == winning.items and bid.amount == winning.amount
                for bid in bidder.bids
            )
        )
        if len(contenders) >= 2:
            groups.append(
                TieGroup(
                    items=winning.items,
                    amount=winning.amount,
                    contenders=tuple(contenders),
                    winner_of_record=winning.bidder,
                )
            )
    return groups
