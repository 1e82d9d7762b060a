"""Fairness-adjusted settlement on top of winner determination and GVA.

Per winning bidder, the GVA payment for its package is compared against two
fair values - the bidder's own and the auctioneer's - and adjusted by a
six-way case analysis. Case-1 surplus (payment above the auctioneer's fair
value) is redistributed among losing bidders who bid for the same package.
Tied winning sets bypass the case analysis entirely: the set and its full
bid amount are divided among the tied bidders in proportion to their
utilities (bid amount minus own fair value).

Every amount is an exact rational, so the module's conservation identities
(shares + retained = profit; tie payments sum to the tie amount; the
auctioneer receipt identity) hold to equality, not tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence

from .model import (
    AuctionError,
    AuctionInstance,
    FairnessMatrix,
    Money,
    Package,
    fair_value,
    package_fair_value,
    validate_instance,
)
from .vcg import VcgResult, gva_payments
from .wdp import Allocation, TieGroup, detect_ties, solve_wdp

__all__ = [
    "PaymentCase",
    "FinalPayment",
    "Redistribution",
    "TieSettlement",
    "SettlementReport",
    "ZeroAuctioneerValuation",
    "final_payment",
    "redistribute_profit",
    "resolve_tie",
    "settle",
]


class ZeroAuctioneerValuation(AuctionError):
    """Redistribution ratio is undefined when the auctioneer values the
    package at zero and there is profit to distribute."""


class PaymentCase(str, Enum):
    """Outcome label of the final-payment case analysis."""

    CASE1 = "case1"  # pay > auctioneer fair value: pay stands, profit shared
    CASE2 = "case2"  # pay = auctioneer fair value: pay stands
    CASE3I = "case3i"  # pay short, bidder values above auctioneer: pay theirs
    CASE3II = "case3ii"  # pay short, fair values agree: pay that value
    CASE3IIIA = "case3iiia"  # both fair values low, bidder's <= pay: pay stands
    CASE3IIIB = "case3iiib"  # both low but bidder's above pay: pay bidder's


@dataclass(frozen=True)
class FinalPayment:
    """Case-adjusted payment of one winner for its (non-tied) package."""

    bidder: str
    package: tuple[frozenset[str], ...]
    gva_pay: Money
    bidder_fair_value: Money
    auctioneer_fair_value: Money
    amount: Money
    case: PaymentCase


@dataclass(frozen=True)
class Redistribution:
    """Case-1 profit split among losing bidders who bid for the package."""

    package: tuple[frozenset[str], ...]
    profit: Money
    shares: Mapping[str, Money]
    retained: Money


@dataclass(frozen=True)
class TieSettlement:
    """Proportional division of one tied set among its equal bidders."""

    items: frozenset[str]
    amount: Money
    utilities: Mapping[str, Money]
    shares: Mapping[str, Fraction]
    payments: Mapping[str, Money]
    warning: str | None = None


@dataclass(frozen=True)
class SettlementReport:
    allocation: Allocation
    vcg: VcgResult
    final_payments: tuple[FinalPayment, ...]
    redistributions: tuple[Redistribution, ...]
    tie_settlements: tuple[TieSettlement, ...]
    auctioneer_receipt: Money
    warnings: tuple[str, ...] = ()


def final_payment(
    gva_pay: Money, bidder_fair_value: Money, auctioneer_fair_value: Money
) -> tuple[Money, PaymentCase]:
    """The six-way case analysis; returns (final amount, case label).

    Algebraically the result is max(gva_pay, min(bidder_fair_value,
    auctioneer_fair_value)), but the cases are kept literal so each branch
    carries its label; the closed form serves as the test oracle.
    """
    if gva_pay > auctioneer_fair_value:
        return gva_pay, PaymentCase.CASE1
    if gva_pay == auctioneer_fair_value:
        return gva_pay, PaymentCase.CASE2
    # gva_pay < auctioneer_fair_value: the auctioneer is short; recover from
    # whichever fair value is binding
    if bidder_fair_value > auctioneer_fair_value:
        return auctioneer_fair_value, PaymentCase.CASE3I
    if bidder_fair_value == auctioneer_fair_value:
        return bidder_fair_value, PaymentCase.CASE3II
    if bidder_fair_value <= gva_pay:
        return gva_pay, PaymentCase.CASE3IIIA
    return bidder_fair_value, PaymentCase.CASE3IIIB


def redistribute_profit(
    profit: Money,
    losers: Sequence[tuple[str, Money]],
    auctioneer_fair_value: Money,
    package: tuple[frozenset[str], ...] = (),
) -> Redistribution:
    """Split Case-1 profit among losers in the ratio of how far each loser's
    fair value exceeds the auctioneer's (negative excess clamps to zero).

    If no loser has positive weight the whole profit is retained. Raises
    ZeroAuctioneerValuation when the ratio's denominator is zero and there
    is profit at stake; the settlement pipeline catches that, retains the
    profit and records a warning.
    """
    if profit == 0:
        return Redistribution(
            package, Fraction(0), {bidder: Fraction(0) for bidder, _ in losers}, Fraction(0)
        )
    if auctioneer_fair_value == 0:
        raise ZeroAuctioneerValuation(
            "auctioneer fair value is 0; the redistribution ratio is undefined"
        )
    weights = {
        bidder: max(
            Fraction(0), (loser_value - auctioneer_fair_value) / auctioneer_fair_value
        )
        for bidder, loser_value in losers
    }
    total = sum(weights.values(), Fraction(0))
    if total == 0:
        return Redistribution(
            package, profit, {bidder: Fraction(0) for bidder in weights}, profit
        )
    shares = {bidder: profit * w / total for bidder, w in weights.items()}
    return Redistribution(package, profit, shares, Fraction(0))


def resolve_tie(
    tie: TieGroup, matrices: Mapping[str, FairnessMatrix]
) -> TieSettlement:
    """Divide a tied set among its contenders in proportion to utility
    (bid amount minus the contender's own fair value for the set).

    Negative utilities clamp to zero before the division; if every utility
    clamps to zero the split falls back to equal shares and the settlement
    carries a warning. Payments are exact: they sum to the tie amount.
    """
    utilities = {
        bidder: tie.amount - fair_value(matrices[bidder], tie.items)
        for bidder in tie.contenders
    }
    clamped = {bidder: max(Fraction(0), u) for bidder, u in utilities.items()}
    total = sum(clamped.values(), Fraction(0))
    warning = None
    if total == 0:
        shares = {
            bidder: Fraction(1, len(tie.contenders)) for bidder in tie.contenders
        }
        warning = (
            f"tie on {sorted(tie.items)}: no contender has positive utility; "
            "split equally"
        )
    else:
        shares = {bidder: u / total for bidder, u in clamped.items()}
    payments = {bidder: tie.amount * share for bidder, share in shares.items()}
    return TieSettlement(
        items=tie.items,
        amount=tie.amount,
        utilities=utilities,
        shares=shares,
        payments=payments,
        warning=warning,
    )


def _case1_losers(
    instance: AuctionInstance, winner: str, package: tuple[frozenset[str], ...]
) -> list[tuple[str, Money]]:
    """Bidders other than the winner holding a positive bid on every subset
    composing the package, with their fair value for the package."""
    losers = []
    for bidder in instance.bidders:
        if bidder.id == winner:
            continue
        positive_sets = {bid.items for bid in bidder.bids if bid.amount > 0}
        if all(subset in positive_sets for subset in package):
            losers.append(
                (
                    bidder.id,
                    package_fair_value(bidder.fairness, Package(bidder.id, package)),
                )
            )
    return losers


def settle(instance: AuctionInstance) -> SettlementReport:
    """Full settlement pipeline for one validated instance.

    solve -> detect ties -> proportional division for tied sets -> GVA then
    per-package case analysis for everything else -> Case-1 redistribution
    -> report with the exact auctioneer receipt.
    """
    validate_instance(instance)
    alloc = solve_wdp(instance)
    ties = detect_ties(instance, alloc)
    tied_sets = {(tie.items, tie.amount) for tie in ties}

    matrices = {bidder.id: bidder.fairness for bidder in instance.bidders}
    tie_settlements = tuple(resolve_tie(tie, matrices) for tie in ties)
    warnings = [ts.warning for ts in tie_settlements if ts.warning]

    # Winning bids outside any tie group go through GVA + case analysis.
    order = instance.resource_order()
    untied: dict[str, list[frozenset[str]]] = {}
    for bid in alloc.winning_bids:
        if (bid.items, bid.amount) not in tied_sets:
            untied.setdefault(bid.bidder, []).append(bid.items)

    if untied:
        vcg = gva_payments(instance, alloc)
    else:
        vcg = VcgResult(per_bidder={}, per_package_pay={})

    final_payments = []
    redistributions = []
    for bidder_id in sorted(untied):
        subsets = sorted(
            untied[bidder_id], key=lambda s: tuple(sorted(order[r] for r in s))
        )
        package = tuple(subsets)
        pay = sum(
            (vcg.per_package_pay[(bidder_id, s)] for s in package), Fraction(0)
        )
        own = package_fair_value(matrices[bidder_id], Package(bidder_id, package))
        theirs = package_fair_value(
            instance.auctioneer_fairness, Package(bidder_id, package)
        )
        amount, case = final_payment(pay, own, theirs)
        final_payments.append(
            FinalPayment(bidder_id, package, pay, own, theirs, amount, case)
        )
        if case is PaymentCase.CASE1:
            profit = pay - theirs
            losers = _case1_losers(instance, bidder_id, package)
            try:
                redistributions.append(
                    redistribute_profit(profit, losers, theirs, package)
                )
            except ZeroAuctioneerValuation:
                redistributions.append(
                    Redistribution(
                        package,
                        profit,
                        {bidder: Fraction(0) for bidder, _ in losers},
                        profit,
                    )
                )
                warnings.append(
                    f"package {[sorted(s) for s in package]} of {bidder_id!r}: "
                    "auctioneer fair value is 0, profit retained"
                )

    receipt = (
        sum((fp.amount for fp in final_payments), Fraction(0))
        + sum(
            (payment for ts in tie_settlements for payment in ts.payments.values()),
            Fraction(0),
        )
        - sum(
            (share for rd in redistributions for share in rd.shares.values()),
            Fraction(0),
        )
    )
    return SettlementReport(
        allocation=alloc,
        vcg=vcg,
        final_payments=tuple(final_payments),
        redistributions=tuple(redistributions),
        tie_settlements=tie_settlements,
        auctioneer_receipt=receipt,
        warnings=tuple(warnings),
    )
