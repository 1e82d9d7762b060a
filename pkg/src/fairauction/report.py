"""Rendering settlements and sweeps: deterministic JSON and a text layout
that mirrors the walkthrough tables (fair valuations, bids, winning
allocation, case-labeled payments, tie division).

Monetary values serialize as {"exact": "p/q", "decimal": "x.xx"} so that
conservation identities stay machine-checkable after serialization.
"""

from __future__ import annotations

import json

from .model import (
    AuctionInstance,
    money_json,
    render_money,
    render_percent,
    sorted_items,
)
from .settlement import SettlementReport
from .sweep import SweepReport

__all__ = [
    "report_to_dict",
    "render_report_json",
    "render_report_text",
    "sweep_to_dict",
    "render_sweep_json",
]


def _items_list(instance: AuctionInstance, items) -> list[str]:
    return list(sorted_items(instance.resource_order(), items))


def report_to_dict(instance: AuctionInstance, report: SettlementReport) -> dict:
    """Plain-data settlement report; key order is fixed and bidder-keyed
    maps are emitted in sorted order, so dumps are byte-stable."""
    alloc = report.allocation
    return {
        "allocation": {
            "winning_bids": [
                {
                    "bidder": bid.bidder,
                    "items": _items_list(instance, bid.items),
                    "amount": money_json(bid.amount),
                }
                for bid in alloc.winning_bids
            ],
            "revenue": money_json(alloc.revenue),
        },
        "vcg": {
            "per_bidder": {
                bidder: {
                    "total_bid": money_json(entry.total_bid),
                    "discount": money_json(entry.discount),
                    "payment": money_json(entry.payment),
                }
                for bidder, entry in sorted(report.vcg.per_bidder.items())
            },
            "per_package_pay": [
                {
                    "bidder": bidder,
                    "items": _items_list(instance, items),
                    "payment": money_json(payment),
                }
                for (bidder, items), payment in sorted(
                    report.vcg.per_package_pay.items(),
                    key=lambda kv: (kv[0][0], _items_list(instance, kv[0][1])),
                )
            ],
        },
        "final_payments": [
            {
                "bidder": fp.bidder,
                "package": [_items_list(instance, s) for s in fp.package],
                "gva_pay": money_json(fp.gva_pay),
                "bidder_fair_value": money_json(fp.bidder_fair_value),
                "auctioneer_fair_value": money_json(fp.auctioneer_fair_value),
                "amount": money_json(fp.amount),
                "case": fp.case.value,
            }
            for fp in report.final_payments
        ],
        "redistributions": [
            {
                "package": [_items_list(instance, s) for s in rd.package],
                "profit": money_json(rd.profit),
                "shares": {
                    bidder: money_json(share)
                    for bidder, share in sorted(rd.shares.items())
                },
                "retained": money_json(rd.retained),
            }
            for rd in report.redistributions
        ],
        "tie_settlements": [
            {
                "items": _items_list(instance, ts.items),
                "amount": money_json(ts.amount),
                "contenders": sorted(ts.shares),
                "utilities": {
                    bidder: money_json(u) for bidder, u in sorted(ts.utilities.items())
                },
                "shares": {
                    bidder: {"exact": str(share), "percent": render_percent(share)}
                    for bidder, share in sorted(ts.shares.items())
                },
                "payments": {
                    bidder: money_json(payment)
                    for bidder, payment in sorted(ts.payments.items())
                },
            }
            for ts in report.tie_settlements
        ],
        "auctioneer_receipt": money_json(report.auctioneer_receipt),
        "warnings": list(report.warnings),
    }


def render_report_json(instance: AuctionInstance, report: SettlementReport) -> str:
    return json.dumps(report_to_dict(instance, report), indent=2) + "\n"


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [
        max(len(str(cell)) for cell in col) for col in zip(header, *rows)
    ]
    lines = ["  ".join(str(c).rjust(w) for c, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(str(c).rjust(w) for c, w in zip(row, widths)) for row in rows)
    return lines


def render_report_text(instance: AuctionInstance, report: SettlementReport) -> str:
    order = instance.resource_order()
    resource_ids = [r.id for r in sorted(instance.resources, key=lambda r: r.index)]
    lines: list[str] = []

    lines.append("Fair valuations")
    rows = [
        [bidder.id] + [render_money(bidder.fairness.entries[rid]) for rid in resource_ids]
        for bidder in instance.bidders
    ]
    rows.append(
        ["auctioneer"]
        + [render_money(instance.auctioneer_fairness.entries[rid]) for rid in resource_ids]
    )
    lines.extend(_table([""] + resource_ids, rows))

    lines.append("")
    lines.append("Bids")
    bid_rows = [
        [
            bidder.id,
            "{" + ",".join(sorted_items(order, bid.items)) + "}",
            render_money(bid.amount),
        ]
        for bidder in instance.bidders
        for bid in bidder.bids
    ]
    lines.extend(_table(["bidder", "items", "amount"], bid_rows))

    lines.append("")
    lines.append(f"Winning allocation (revenue {render_money(report.allocation.revenue)})")
    for bid in report.allocation.winning_bids:
        lines.append(
            f"  {bid.bidder} wins {{{','.join(sorted_items(order, bid.items))}}}"
            f" at {render_money(bid.amount)}"
        )

    if report.vcg.per_bidder:
        lines.append("")
        lines.append("GVA payments")
        lines.extend(
            _table(
                ["bidder", "total bid", "discount", "payment"],
                [
                    [
                        bidder,
                        render_money(entry.total_bid),
                        render_money(entry.discount),
                        render_money(entry.payment),
                    ]
                    for bidder, entry in sorted(report.vcg.per_bidder.items())
                ],
            )
        )

    if report.final_payments:
        lines.append("")
        lines.append("Final payments")
        lines.extend(
            _table(
                ["bidder", "package", "gva", "own fair", "auct fair", "pays", "case"],
                [
                    [
                        fp.bidder,
                        " ".join(
                            "{" + ",".join(sorted_items(order, s)) + "}"
                            for s in fp.package
                        ),
                        render_money(fp.gva_pay),
                        render_money(fp.bidder_fair_value),
                        render_money(fp.auctioneer_fair_value),
                        render_money(fp.amount),
                        fp.case.value,
                    ]
                    for fp in report.final_payments
                ],
            )
        )

    for rd in report.redistributions:
        lines.append("")
        pkg = " ".join("{" + ",".join(sorted_items(order, s)) + "}" for s in rd.package)
        lines.append(f"Redistribution of {render_money(rd.profit)} profit on {pkg}")
        for bidder, share in sorted(rd.shares.items()):
            lines.append(f"  {bidder} receives {render_money(share)}")
        if rd.retained:
            lines.append(f"  auctioneer retains {render_money(rd.retained)}")

    for ts in report.tie_settlements:
        lines.append("")
        lines.append(
            f"Tie on {{{','.join(sorted_items(order, ts.items))}}}"
            f" at {render_money(ts.amount)}"
        )
        lines.extend(
            _table(
                ["bidder", "utility", "share", "pays"],
                [
                    [
                        bidder,
                        render_money(ts.utilities[bidder]),
                        render_percent(share),
                        render_money(ts.payments[bidder]),
                    ]
                    for bidder, share in sorted(ts.shares.items())
                ],
            )
        )

    lines.append("")
    lines.append(f"Auctioneer receipt: {render_money(report.auctioneer_receipt)}")
    for warning in report.warnings:
        lines.append(f"Warning: {warning}")
    return "\n".join(lines) + "\n"


def sweep_to_dict(sweep: SweepReport) -> dict:
    return {
        "axis": sweep.axis,
        "seed": sweep.seed,
        "surplus_definition": sweep.surplus_definition,
        "samples": [
            {
                "value": str(sample.value),
                "receipt": money_json(sample.receipt)
                if sample.receipt is not None
                else None,
                "surplus": {
                    bidder: money_json(s) for bidder, s in sorted(sample.surplus.items())
                }
                if sample.surplus is not None
                else None,
                "error": sample.error,
            }
            for sample in sweep.samples
        ],
        "summary": dict(sorted(sweep.summary.items())),
    }


def render_sweep_json(sweep: SweepReport) -> str:
    return json.dumps(sweep_to_dict(sweep), indent=2) + "\n"
