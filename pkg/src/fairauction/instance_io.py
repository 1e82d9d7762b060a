"""Reading and writing auction instance files (JSON).

File layout::

    {
      "resources": ["r0", "r1"],
      "auctioneer_fairness": {"r0": 8, "r1": 10},
      "bidders": [
        {"id": "b0",
         "fairness": {"r0": 5, "r1": 8},
         "bids": [{"items": ["r0", "r1"], "amount": 20}]}
      ]
    }

Submitted amounts must be non-negative integers (whole currency units);
internally they become exact rationals. Serialization is deterministic:
same instance, same bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .model import (
    AuctionError,
    AuctionInstance,
    Bid,
    Bidder,
    FairnessMatrix,
    AUCTIONEER,
    Resource,
    sorted_items,
    validate_instance,
)

__all__ = [
    "ParseError",
    "instance_from_dict",
    "loads_instance",
    "load_instance",
    "instance_to_dict",
    "dumps_instance",
    "dump_instance",
]


class ParseError(AuctionError):
    """Malformed instance file; carries position info when available."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


def _require(payload: Any, key: str, expected: type, where: str) -> Any:
    if not isinstance(payload, dict):
        raise ParseError(f"{where} must be an object, got {type(payload).__name__}")
    if key not in payload:
        raise ParseError(f"{where} is missing key {key!r}")
    value = payload[key]
    if not isinstance(value, expected):
        raise ParseError(
            f"{where}.{key} must be {expected.__name__}, got {type(value).__name__}"
        )
    return value


def _amount(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where} must be an integer amount, got {value!r}")
    return Fraction(value)


def _matrix(payload: Any, owner: str, where: str) -> FairnessMatrix:
    if not isinstance(payload, dict):
        raise ParseError(f"{where} must be an object mapping resource -> amount")
    entries = {}
    for rid, value in payload.items():
        if not isinstance(rid, str):
            raise ParseError(f"{where} keys must be resource id strings")
        entries[rid] = _amount(value, f"{where}[{rid!r}]")
    return FairnessMatrix(owner=owner, entries=entries)


def instance_from_dict(payload: Any) -> AuctionInstance:
    """Build and validate an instance from already-parsed JSON data.

    Raises ParseError for structural problems or InvalidInstance from
    validation.
    """
    resource_ids = _require(payload, "resources", list, "instance")
    resources = []
    for i, rid in enumerate(resource_ids):
        if not isinstance(rid, str):
            raise ParseError(f"instance.resources[{i}] must be a string id")
        resources.append(Resource(id=rid, index=i))

    auctioneer = _matrix(
        _require(payload, "auctioneer_fairness", dict, "instance"),
        AUCTIONEER,
        "instance.auctioneer_fairness",
    )

    bidders = []
    for i, raw in enumerate(_require(payload, "bidders", list, "instance")):
        where = f"instance.bidders[{i}]"
        bidder_id = _require(raw, "id", str, where)
        fairness = _matrix(
            _require(raw, "fairness", dict, where), bidder_id, f"{where}.fairness"
        )
        bids = []
        for j, raw_bid in enumerate(_require(raw, "bids", list, where)):
            bid_where = f"{where}.bids[{j}]"
            items = _require(raw_bid, "items", list, bid_where)
            for item in items:
                if not isinstance(item, str):
                    raise ParseError(f"{bid_where}.items must contain string ids")
            amount = _amount(
                _require(raw_bid, "amount", int, bid_where), f"{bid_where}.amount"
            )
            bids.append(Bid(bidder=bidder_id, items=frozenset(items), amount=amount))
        bidders.append(Bidder(id=bidder_id, fairness=fairness, bids=tuple(bids)))

    instance = AuctionInstance(
        resources=tuple(resources),
        bidders=tuple(bidders),
        auctioneer_fairness=auctioneer,
    )
    return validate_instance(instance)


def loads_instance(text: str) -> AuctionInstance:
    """Parse and validate an instance from JSON text.

    Raises ParseError (with line/column for JSON syntax problems) or
    InvalidInstance from validation.
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return instance_from_dict(payload)


def load_instance(path: str | Path) -> AuctionInstance:
    return loads_instance(Path(path).read_text(encoding="utf-8"))


def _int_amount(value: Fraction, where: str) -> int:
    if value.denominator != 1:
        raise ValueError(f"{where} is {value}; instance files carry integer amounts")
    return int(value)


def instance_to_dict(instance: AuctionInstance) -> dict:
    """Plain-data form of an instance, suitable for JSON dumping."""
    order = instance.resource_order()
    return {
        "resources": [r.id for r in sorted(instance.resources, key=lambda r: r.index)],
        "auctioneer_fairness": {
            rid: _int_amount(instance.auctioneer_fairness.entries[rid], f"auctioneer_fairness[{rid!r}]")
            for rid in sorted(instance.auctioneer_fairness.entries, key=order.__getitem__)
        },
        "bidders": [
            {
                "id": bidder.id,
                "fairness": {
                    rid: _int_amount(bidder.fairness.entries[rid], f"fairness[{rid!r}]")
                    for rid in sorted(bidder.fairness.entries, key=order.__getitem__)
                },
                "bids": [
                    {
                        "items": list(sorted_items(order, bid.items)),
                        "amount": _int_amount(bid.amount, "bid amount"),
                    }
                    for bid in bidder.bids
                ],
            }
            for bidder in instance.bidders
        ],
    }


def dumps_instance(instance: AuctionInstance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2, sort_keys=False) + "\n"


def dump_instance(instance: AuctionInstance, path: str | Path) -> None:
    Path(path).write_text(dumps_instance(instance), encoding="utf-8")
