"""Exact Zhang-Zhang (Clar covering) polynomials of benzenoids."""

from .clar_enum import ClarCover, enumerate_covers, kekule_count, zz_brute
from .closed_form import (
    RibbonInvariants,
    binid_check,
    clar_cover_count_ribbon,
    clar_number_formula,
    invariants_from_zz,
    kekule_ribbon,
    zz_parallelogram,
    zz_ribbon_closed,
    zz_ribbon_special,
    zz_ribbon_triple,
    zz_v3,
    zz_v4,
)
from .engine import Decomposer, reduce_forced, select_edge, zz_decompose
from .interface import (
    central_decomposition,
    classify_cover_by_central_interface,
    cover_edge_orders,
    fragment_shapes,
    interface_orders,
    interface_report,
    verify_first_rule,
)
from .lattice import (
    Benzenoid,
    CoverGraph,
    HexCoord,
    ParallelogramParams,
    RibbonParams,
    build_parallelogram,
    build_ribbon,
    canonicalize,
    mirror,
    parse_benzenoid,
    serialize_benzenoid,
    translate,
)
from .poly import NEG_INF, ONE, X, ZERO, Polynomial, degree, evaluate, leading_coeff

__version__ = "0.1.0"
