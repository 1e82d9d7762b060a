"""Domain model for fairness-aware combinatorial auction settlement.

All monetary quantities are exact rationals (`fractions.Fraction`), so sums,
proportional splits and conservation identities hold to exact equality.
Rounding happens only when a value is rendered for display (2 decimals,
half-up). Instances are immutable after validation and every operation in
this package is a pure function, so values can be shared freely across
threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Money = Fraction

#: Owner sentinel used for the auctioneer's fairness matrix.
AUCTIONEER = "auctioneer"


class AuctionError(Exception):
    """Base class for every domain error raised by this package."""


class UnknownResource(AuctionError):
    """An operation referenced a resource the matrix/instance does not declare."""


class OverlappingSets(AuctionError):
    """A package's resource subsets are not pairwise disjoint."""


class InternalInvariantViolation(AuctionError):
    """A should-be-impossible state was reached; indicates a bug, not bad input."""


@dataclass(frozen=True)
class Violation:
    """One validation failure, naming the offending bidder/resource."""

    code: str
    message: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class InvalidInstance(AuctionError):
    """Raised by validate_instance with the full list of violations found."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__(
            "invalid auction instance: " + "; ".join(str(v) for v in self.violations)
        )


@dataclass(frozen=True)
class Resource:
    """A single auctioned resource: opaque id plus its ordinal position."""

    id: str
    index: int


@dataclass(frozen=True)
class Bid:
    """One atomic offer: a non-empty resource subset and an amount.

    Bidding is OR-semantics: a bidder may win any number of its atomic bids
    and pays the sum of their amounts. Zero-amount bids are legal (they mark
    sets the bidder does not want) but are never selected by the solver.
    """

    bidder: str
    items: frozenset[str]
    amount: Money


@dataclass(frozen=True)
class FairnessMatrix:
    """An agent's sealed per-resource fair valuations, unsealed at settlement.

    `owner` is a bidder id or the AUCTIONEER sentinel; `entries` maps every
    declared resource id to a non-negative amount.
    """

    owner: str
    entries: Mapping[str, Money]


@dataclass(frozen=True)
class Bidder:
    id: str
    fairness: FairnessMatrix
    bids: tuple[Bid, ...]


@dataclass(frozen=True)
class Package:
    """All resource subsets won by one bidder; subsets are pairwise disjoint."""

    owner: str
    sets: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class AuctionInstance:
    """A complete sealed auction: resources, bidders with bids and fairness
    matrices, and the auctioneer's fairness matrix."""

    resources: tuple[Resource, ...]
    bidders: tuple[Bidder, ...]
    auctioneer_fairness: FairnessMatrix

    def resource_ids(self) -> frozenset[str]:
        return frozenset(r.id for r in self.resources)

    def resource_order(self) -> dict[str, int]:
        """Mapping resource id -> ordinal, for canonical item ordering."""
        return {r.id: r.index for r in self.resources}

    def bidder_by_id(self, bidder_id: str) -> Bidder:
        for b in self.bidders:
            if b.id == bidder_id:
                return b
        raise KeyError(bidder_id)


def sorted_items(order: Mapping[str, int], items: Iterable[str]) -> tuple[str, ...]:
    """Resource ids sorted by their declared ordinal (canonical display order)."""
    return tuple(sorted(items, key=lambda rid: order[rid]))


def fair_value(matrix: FairnessMatrix, items: Iterable[str]) -> Money:
    """Sum of the matrix's per-resource valuations over `items` (0 for the
    empty set)."""
    total = Fraction(0)
    for rid in items:
        try:
            total += matrix.entries[rid]
        except KeyError:
            raise UnknownResource(
                f"matrix of {matrix.owner!r} has no entry for resource {rid!r}"
            ) from None
    return total


def package_fair_value(matrix: FairnessMatrix, pkg: Package) -> Money:
    """Fair value of a whole package: the sum of fair_value over its subsets.

    Raises OverlappingSets if the subsets are not pairwise disjoint.
    """
    seen: set[str] = set()
    for subset in pkg.sets:
        overlap = seen.intersection(subset)
        if overlap:
            raise OverlappingSets(
                f"package of {pkg.owner!r} repeats resource(s) {sorted(overlap)}"
            )
        seen.update(subset)
    return sum((fair_value(matrix, subset) for subset in pkg.sets), Fraction(0))


def _check_matrix(
    matrix: FairnessMatrix, resource_ids: frozenset[str], label: str
) -> list[Violation]:
    violations = []
    declared = frozenset(matrix.entries)
    missing = resource_ids - declared
    extra = declared - resource_ids
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing {sorted(missing)}")
        if extra:
            parts.append(f"undeclared {sorted(extra)}")
        violations.append(
            Violation(
                "matrix_resource_mismatch",
                f"fairness matrix of {label} does not cover the declared "
                f"resources exactly ({', '.join(parts)})",
            )
        )
    for rid, value in matrix.entries.items():
        if value < 0:
            violations.append(
                Violation(
                    "negative_amount",
                    f"fairness matrix of {label} values resource {rid!r} at {value}",
                )
            )
    return violations


def validate_instance(instance: AuctionInstance) -> AuctionInstance:
    """Check every type invariant; return the instance unchanged if all hold.

    Collects *all* violations before raising InvalidInstance, so a caller
    sees every problem in one pass. Validating an already-valid instance is
    a no-op (idempotent).
    """
    violations: list[Violation] = []

    ids_seen: set[str] = set()
    for res in instance.resources:
        if res.id in ids_seen:
            violations.append(
                Violation("duplicate_resource_id", f"resource id {res.id!r} repeats")
            )
        ids_seen.add(res.id)
    indices = sorted(r.index for r in instance.resources)
    if indices != list(range(len(instance.resources))):
        violations.append(
            Violation(
                "bad_resource_index",
                f"resource indices {indices} are not a bijection onto "
                f"0..{len(instance.resources) - 1}",
            )
        )

    resource_ids = instance.resource_ids()
    violations.extend(
        _check_matrix(instance.auctioneer_fairness, resource_ids, "the auctioneer")
    )

    bidder_ids: set[str] = set()
    for bidder in instance.bidders:
        if bidder.id in bidder_ids:
            violations.append(
                Violation("duplicate_bidder_id", f"bidder id {bidder.id!r} repeats")
            )
        bidder_ids.add(bidder.id)

        violations.extend(
            _check_matrix(bidder.fairness, resource_ids, f"bidder {bidder.id!r}")
        )

        sets_seen: set[frozenset[str]] = set()
        for bid in bidder.bids:
            if not bid.items:
                violations.append(
                    Violation(
                        "empty_bid_items",
                        f"bidder {bidder.id!r} submitted a bid on the empty set",
                    )
                )
                continue
            unknown = bid.items - resource_ids
            for rid in sorted(unknown):
                violations.append(
                    Violation(
                        "unknown_resource_in_bid",
                        f"bidder {bidder.id!r} bid on undeclared resource {rid!r}",
                    )
                )
            if bid.amount < 0:
                violations.append(
                    Violation(
                        "negative_amount",
                        f"bidder {bidder.id!r} bid {bid.amount} on "
                        f"{sorted(bid.items)}",
                    )
                )
            if bid.items in sets_seen:
                violations.append(
                    Violation(
                        "duplicate_bidder_bid",
                        f"bidder {bidder.id!r} bid more than once on "
                        f"{sorted(bid.items)}",
                    )
                )
            sets_seen.add(bid.items)

    if violations:
        raise InvalidInstance(violations)
    return instance


def _round_half_up(value: Fraction, digits: int = 2) -> int:
    """`value` scaled by 10**digits and rounded half-up to an integer."""
    scaled = value * 10**digits
    return (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)


def render_money(value: Money) -> str:
    """Exact rational -> decimal string with 2 places, half-up ("24.58")."""
    if value < 0:
        return "-" + render_money(-value)
    cents = _round_half_up(value)
    return f"{cents // 100}.{cents % 100:02d}"


def render_percent(share: Fraction) -> str:
    """Exact share in [0, 1] -> percentage with 2 places, half-up ("49.15%")."""
    return render_money(share * 100) + "%"


def money_json(value: Money) -> dict[str, str]:
    """Serialized form of one amount: exact rational plus rounded decimal."""
    return {"exact": str(value), "decimal": render_money(value)}
