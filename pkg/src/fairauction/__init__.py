"""Combinatorial-auction settlement engine.

Revenue-optimal winner determination over OR bids, GVA/Vickrey payments,
and fairness-adjusted final settlement with profit redistribution and
proportional tie division. All money is exact rational arithmetic.
"""

from .model import (
    AUCTIONEER,
    AuctionError,
    AuctionInstance,
    Bid,
    Bidder,
    FairnessMatrix,
    InternalInvariantViolation,
    InvalidInstance,
    Money,
    OverlappingSets,
    Package,
    Resource,
    UnknownResource,
    fair_value,
    package_fair_value,
    render_money,
    render_percent,
    validate_instance,
)
from .wdp import (
    Allocation,
    EmptyAuction,
    InstanceTooLarge,
    TieGroup,
    detect_ties,
    solve_wdp,
    solve_wdp_bruteforce,
)
from .vcg import (
    BidderPayment,
    NotAWinner,
    VcgResult,
    ZeroBidApportionment,
    apportion_payment,
    gva_payments,
    vickrey_discount,
)
from .settlement import (
    FinalPayment,
    PaymentCase,
    Redistribution,
    SettlementReport,
    TieSettlement,
    ZeroAuctioneerValuation,
    final_payment,
    redistribute_profit,
    resolve_tie,
    settle,
)
from .generator import generate_instance
from .instance_io import (
    ParseError,
    dump_instance,
    dumps_instance,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    loads_instance,
)
from .sweep import SweepReport, SweepSample, bidder_surplus, sweep_propositions

__version__ = "0.1.0"
