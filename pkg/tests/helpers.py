"""Shared test builders: compact instance construction and random sampling."""

from fractions import Fraction
import random

from fairauction import AuctionInstance, Bid, Bidder, FairnessMatrix, Resource


def make_instance(m, bids, fairness=None, auctioneer=None):
    """Build an instance from {bidder: [(items, amount), ...]}.

    `fairness` maps bidder -> per-resource values; anything missing
    defaults to all ones.
    """
    resources = tuple(Resource(f"r{i}", i) for i in range(m))
    ids = [r.id for r in resources]
    fairness = fairness or {}

    def mat(owner, values):
        values = values if values is not None else [1] * m
        return FairnessMatrix(owner, {rid: Fraction(v) for rid, v in zip(ids, values)})

    bidders = tuple(
        Bidder(
            bidder_id,
            mat(bidder_id, fairness.get(bidder_id)),
            tuple(
                Bid(bidder_id, frozenset(items), Fraction(amount))
                for items, amount in bidder_bids
            ),
        )
        for bidder_id, bidder_bids in bids.items()
    )
    return AuctionInstance(resources, bidders, mat("auctioneer", auctioneer))


def random_instance(rng: random.Random, max_resources=5, max_bidders=4, max_amount=15):
    """Small random instance for oracle-equivalence suites: 1..4 bids per
    bidder on distinct subsets, amounts 0..max_amount."""
    m = rng.randint(1, max_resources)
    n = rng.randint(1, max_bidders)
    all_subsets = (1 << m) - 1
    bids = {}
    fairness = {}
    for b in range(n):
        bidder_id = f"b{b}"
        fairness[bidder_id] = [rng.randint(1, max_amount) for _ in range(m)]
        count = rng.randint(1, min(4, all_subsets))
        masks = rng.sample(range(1, all_subsets + 1), count)
        bids[bidder_id] = [
            (
                [f"r{i}" for i in range(m) if mask >> i & 1],
                rng.randint(0, max_amount),
            )
            for mask in masks
        ]
    return make_instance(
        m,
        bids,
        fairness=fairness,
        auctioneer=[rng.randint(1, max_amount) for _ in range(m)],
    )
