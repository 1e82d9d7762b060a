"""Generalized Vickrey Auction payments.

A winner's discount is its marginal contribution to total revenue: the
optimal revenue with the winner present minus the optimal revenue after
removing *all* of that bidder's bids. Payment = sum of winning bid amounts
minus the discount, then split per winning subset in proportion to the bid
amounts, which is what downstream per-package settlement consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .model import (
    AuctionError,
    AuctionInstance,
    InternalInvariantViolation,
    Money,
)
from .wdp import Allocation, EmptyAuction, solve_wdp

__all__ = [
    "BidderPayment",
    "VcgResult",
    "NotAWinner",
    "ZeroBidApportionment",
    "vickrey_discount",
    "gva_payments",
    "apportion_payment",
]


class NotAWinner(AuctionError):
    """Asked for a discount of a bidder that wins nothing in the allocation."""


class ZeroBidApportionment(AuctionError):
    """Cannot split a positive payment across bids that sum to zero."""


@dataclass(frozen=True)
class BidderPayment:
    total_bid: Money
    discount: Money
    payment: Money


@dataclass(frozen=True)
class VcgResult:
    """Per-winner totals plus the per-subset split of each payment."""

    per_bidder: Mapping[str, BidderPayment]
    per_package_pay: Mapping[tuple[str, frozenset[str]], Money]


def _without_bidder(instance: AuctionInstance, bidder_id: str) -> AuctionInstance:
    bidders = tuple(
        replace(b, bids=()) if b.id == bidder_id else b for b in instance.bidders
    )
    return replace(instance, bidders=bidders)


def vickrey_discount(
    instance: AuctionInstance, alloc: Allocation, bidder_id: str
) -> Money:
    """Optimal revenue minus the optimal revenue without `bidder_id`'s bids.

    Always >= 0: removing bids can only shrink the feasible set. Raises
    NotAWinner if the bidder wins nothing in `alloc`.
    """
    if bidder_id not in alloc.winners():
        raise NotAWinner(f"bidder {bidder_id!r} wins nothing in this allocation")
    try:
        residual = solve_wdp(_without_bidder(instance, bidder_id)).revenue
    except EmptyAuction:
        residual = Fraction(0)
    return alloc.revenue - residual


def apportion_payment(
    bidder_payment: Money, winning_bids: Sequence[tuple[frozenset[str], Money]]
) -> dict[frozenset[str], Money]:
    """Split one bidder's payment across its winning subsets, proportionally
    to the bid amounts. Exact: the shares sum to the payment."""
    total = sum((amount for _, amount in winning_bids), Fraction(0))
    if total == 0:
        if bidder_payment != 0:
            raise ZeroBidApportionment(
                f"cannot apportion payment {bidder_payment} over zero-amount bids"
            )
        return {items: Fraction(0) for items, _ in winning_bids}
    return {
        items: bidder_payment * amount / total for items, amount in winning_bids
    }


def gva_payments(instance: AuctionInstance, alloc: Allocation) -> VcgResult:
    """GVA payments for every winner in `alloc`.

    payment(i) = (sum of i's winning bid amounts) - vickrey_discount(i),
    with the per-subset split from apportion_payment.
    """
    by_bidder: dict[str, list] = {}
    for bid in alloc.winning_bids:
        by_bidder.setdefault(bid.bidder, []).append(bid)

    per_bidder: dict[str, BidderPayment] = {}
    per_package: dict[tuple[str, frozenset[str]], Money] = {}
    for bidder_id in sorted(by_bidder):
        bids = by_bidder[bidder_id]
        total = sum((b.amount for b in bids), Fraction(0))
        discount = vickrey_discount(instance, alloc, bidder_id)
        payment = total - discount
        if payment < 0:
            # discount <= total bid always holds; a negative payment means
            # the solver returned a non-optimal allocation somewhere
            raise InternalInvariantViolation(
                f"negative GVA payment {payment} for bidder {bidder_id!r}"
            )
        per_bidder[bidder_id] = BidderPayment(total, discount, payment)
        split = apportion_payment(payment, [(b.items, b.amount) for b in bids])
        for items, share in split.items():
            per_package[(bidder_id, items)] = share
    return VcgResult(per_bidder=per_bidder, per_package_pay=per_package)
