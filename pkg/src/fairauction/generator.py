"""Deterministic pseudo-random instance generation (property-test fuel).

Same seed, same instance, byte for byte once serialized. Each bidder bids
on a handful of distinct resource subsets with integer amounts in
0..max_amount; fairness entries are in 1..max_amount.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .model import AuctionInstance, Bid, Bidder, FairnessMatrix, AUCTIONEER, Resource

__all__ = ["generate_instance"]

#: Upper bound on bids per bidder; keeps generated instances settleable fast.
MAX_BIDS_PER_BIDDER = 7


def generate_instance(
    seed: int, resources: int, bidders: int, max_amount: int
) -> AuctionInstance:
    """Build a random but fully deterministic instance.

    Subsets are drawn without replacement per bidder, so the one-bid-per-set
    invariant holds by construction. Amounts may be zero (a permitted
    "do not want" bid); fairness entries are always positive.
    """
    if resources < 1 or bidders < 1:
        raise ValueError("need at least one resource and one bidder")
    if max_amount < 1:
        raise ValueError("max_amount must be >= 1")
    rng = random.Random(seed)

    resource_list = tuple(Resource(id=f"r{i}", index=i) for i in range(resources))
    ids = [r.id for r in resource_list]

    def draw_matrix(owner: str) -> FairnessMatrix:
        return FairnessMatrix(
            owner=owner,
            entries={rid: Fraction(rng.randint(1, max_amount)) for rid in ids},
        )

    auctioneer = draw_matrix(AUCTIONEER)

    all_subsets = (1 << resources) - 1
    bidder_list = []
    for b in range(bidders):
        bidder_id = f"b{b}"
        fairness = draw_matrix(bidder_id)
        count = rng.randint(1, min(MAX_BIDS_PER_BIDDER, all_subsets))
        masks = sorted(rng.sample(range(1, all_subsets + 1), count))
        bids = tuple(
            Bid(
                bidder=bidder_id,
                items=frozenset(ids[i] for i in range(resources) if mask >> i & 1),
                amount=Fraction(rng.randint(0, max_amount)),
            )
            for mask in masks
        )
        bidder_list.append(Bidder(id=bidder_id, fairness=fairness, bids=bids))

    return AuctionInstance(
        resources=resource_list,
        bidders=tuple(bidder_list),
        auctioneer_fairness=auctioneer,
    )
