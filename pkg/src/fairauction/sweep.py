"""Parameter-sweep harness: re-settle a base instance across a scaling grid.

The sweep *reports* how the auctioneer receipt and per-bidder surplus move
as fairness matrices or bids are rescaled; it asserts nothing (the
behavioral claims it probes concern rational agents, not mechanism
outputs). Settlement is pure, so every grid point is deterministic; the
seed is carried in the report metadata only.

Surplus definition (also embedded in the report): surplus = value of won
bids - final payment + redistributed shares received. A tied bidder's won
value is its proportional share of the tied amount.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Sequence

from .model import AuctionError, AuctionInstance, Bid, FairnessMatrix, Money
from .settlement import SettlementReport, settle

__all__ = ["SWEEP_AXES", "SweepSample", "SweepReport", "bidder_surplus", "sweep_propositions"]

SWEEP_AXES = ("auctioneer-scale", "bidder-scale", "bid-scale")

SURPLUS_DEFINITION = (
    "surplus = won bid value - final payment + redistributed shares received"
)


@dataclass(frozen=True)
class SweepSample:
    value: Fraction
    receipt: Money | None
    surplus: Mapping[str, Money] | None
    error: str | None = None


@dataclass(frozen=True)
class SweepReport:
    axis: str
    seed: int
    samples: tuple[SweepSample, ...]
    summary: Mapping[str, str]
    surplus_definition: str = SURPLUS_DEFINITION


def _scale_matrix(matrix: FairnessMatrix, factor: Fraction) -> FairnessMatrix:
    return FairnessMatrix(
        owner=matrix.owner,
        entries={rid: value * factor for rid, value in matrix.entries.items()},
    )


def _scaled(instance: AuctionInstance, axis: str, factor: Fraction) -> AuctionInstance:
    if axis == "auctioneer-scale":
        return replace(
            instance,
            auctioneer_fairness=_scale_matrix(instance.auctioneer_fairness, factor),
        )
    if axis == "bidder-scale":
        return replace(
            instance,
            bidders=tuple(
                replace(b, fairness=_scale_matrix(b.fairness, factor))
                for b in instance.bidders
            ),
        )
    if axis == "bid-scale":
        return replace(
            instance,
            bidders=tuple(
                replace(
                    b,
                    bids=tuple(
                        Bid(bid.bidder, bid.items, bid.amount * factor)
                        for bid in b.bids
                    ),
                )
                for b in instance.bidders
            ),
        )
    raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")


def bidder_surplus(
    instance: AuctionInstance, report: SettlementReport
) -> dict[str, Money]:
    """Per-bidder surplus of one settlement, for every bidder in the instance."""
    surplus = {bidder.id: Fraction(0) for bidder in instance.bidders}
    tied_sets = {(ts.items, ts.amount) for ts in report.tie_settlements}
    for bid in report.allocation.winning_bids:
        if (bid.items, bid.amount) not in tied_sets:
            surplus[bid.bidder] += bid.amount
    for fp in report.final_payments:
        surplus[fp.bidder] -= fp.amount
    for ts in report.tie_settlements:
        for bidder_id, share in ts.shares.items():
            surplus[bidder_id] += ts.amount * share
        for bidder_id, payment in ts.payments.items():
            surplus[bidder_id] -= payment
    for rd in report.redistributions:
        for bidder_id, share in rd.shares.items():
            surplus[bidder_id] += share
    return surplus


def _trend(values: Sequence[Fraction]) -> str:
    if len(values) < 2:
        return "single-point"
    ups = any(b > a for a, b in zip(values, values[1:]))
    downs = any(b < a for a, b in zip(values, values[1:]))
    if ups and downs:
        return "non-monotonic"
    if ups:
        return "increasing"
    if downs:
        return "decreasing"
    return "constant"


def sweep_propositions(
    instance: AuctionInstance,
    axis: str,
    grid: Sequence[Fraction],
    seed: int = 0,
) -> SweepReport:
    """Settle the instance once per grid point along `axis`.

    Settlement errors at a grid point (e.g. all bids scaled to zero) are
    recorded in that sample, not raised.
    """
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")
    samples = []
    for factor in grid:
        factor = Fraction(factor)
        try:
            scaled = _scaled(instance, axis, factor)
            report = settle(scaled)
        except AuctionError as exc:
            samples.append(
                SweepSample(factor, None, None, f"{type(exc).__name__}: {exc}")
            )
            continue
        samples.append(
            SweepSample(
                factor,
                report.auctioneer_receipt,
                bidder_surplus(scaled, report),
            )
        )

    receipts = [s.receipt for s in samples if s.receipt is not None]
    summary = {
        "receipt_trend": _trend(receipts),
        "grid_points": str(len(samples)),
        "errors": str(sum(1 for s in samples if s.error)),
    }
    return SweepReport(axis=axis, seed=seed, samples=tuple(samples), summary=summary)
