from .reductions import (
    GENERATORS,
    GadgetError,
    GeneratedInstance,
    gen_cvt,
    gen_hs_deg3,
    gen_hs_zero,
    gen_mq_nd,
    gen_mq_tw,
    hs_deg3_path_length,
    mq_nd_bounds,
    mq_nd_claimed_nd,
    mq_tw_bounds,
)
from .sources import CvtInstance, HittingSetInstance, MulticoloredGraphInstance, SourceError

__all__ = [
    "GENERATORS",
    "GadgetError",
    "GeneratedInstance",
    "gen_cvt",
    "gen_hs_deg3",
    "gen_hs_zero",
    "gen_mq_nd",
    "gen_mq_tw",
    "hs_deg3_path_length",
    "mq_nd_bounds",
    "mq_nd_claimed_nd",
    "mq_tw_bounds",
    "CvtInstance",
    "HittingSetInstance",
    "MulticoloredGraphInstance",
    "SourceError",
]
