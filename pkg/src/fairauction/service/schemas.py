"""Pydantic request/response models for the HTTP service.

Requests mirror the instance file layout (integer amounts in, see
fairauction.instance_io); responses mirror the CLI's JSON reports, with
every monetary value carried as an exact rational string plus a rounded
decimal so conservation stays checkable on the wire.
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class BidPayload(BaseModel):
    items: list[str]
    amount: int


class BidderPayload(BaseModel):
    id: str
    fairness: dict[str, int]
    bids: list[BidPayload]


class InstancePayload(BaseModel):
    resources: list[str]
    auctioneer_fairness: dict[str, int]
    bidders: list[BidderPayload]


class SolveRequest(BaseModel):
    instance: InstancePayload
    oracle: bool = False


class GenerateRequest(BaseModel):
    seed: int
    resources: int = Field(ge=1)
    bidders: int = Field(ge=1)
    max_amount: int = Field(ge=1)


class SweepRequest(BaseModel):
    instance: InstancePayload
    axis: str
    grid: list[str]
    seed: int = 0


class MoneyPayload(BaseModel):
    exact: str
    decimal: str


class SharePayload(BaseModel):
    exact: str
    percent: str


class WinningBidPayload(BaseModel):
    bidder: str
    items: list[str]
    amount: MoneyPayload


class AllocationPayload(BaseModel):
    winning_bids: list[WinningBidPayload]
    revenue: MoneyPayload


class VcgEntryPayload(BaseModel):
    total_bid: MoneyPayload
    discount: MoneyPayload
    payment: MoneyPayload


class PackagePayPayload(BaseModel):
    bidder: str
    items: list[str]
    payment: MoneyPayload


class VcgPayload(BaseModel):
    per_bidder: dict[str, VcgEntryPayload]
    per_package_pay: list[PackagePayPayload]


class FinalPaymentPayload(BaseModel):
    bidder: str
    package: list[list[str]]
    gva_pay: MoneyPayload
    bidder_fair_value: MoneyPayload
    auctioneer_fair_value: MoneyPayload
    amount: MoneyPayload
    case: str


class RedistributionPayload(BaseModel):
    package: list[list[str]]
    profit: MoneyPayload
    shares: dict[str, MoneyPayload]
    retained: MoneyPayload


class TieSettlementPayload(BaseModel):
    items: list[str]
    amount: MoneyPayload
    contenders: list[str]
    utilities: dict[str, MoneyPayload]
    shares: dict[str, SharePayload]
    payments: dict[str, MoneyPayload]


class SettlementReportPayload(BaseModel):
    allocation: AllocationPayload
    vcg: VcgPayload
    final_payments: list[FinalPaymentPayload]
    redistributions: list[RedistributionPayload]
    tie_settlements: list[TieSettlementPayload]
    auctioneer_receipt: MoneyPayload
    warnings: list[str]


class SweepSamplePayload(BaseModel):
    value: str
    receipt: MoneyPayload | None
    surplus: dict[str, MoneyPayload] | None
    error: str | None


class SweepReportPayload(BaseModel):
    axis: str
    seed: int
    surplus_definition: str
    samples: list[SweepSamplePayload]
    summary: dict[str, str]


class HealthPayload(BaseModel):
    status: str
