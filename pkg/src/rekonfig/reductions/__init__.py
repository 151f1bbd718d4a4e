"""Instance compilers and sequence bridges."""

from .annotations import GadgetAnnotation, GadgetTag
from .bridges import ktj_seq_to_tar_seq, tar_highval_to_tj
from .drawing import Crossing, Drawing, find_crossings, grid_draw, segment_intersection
from .isr_from_sat import add_isolated_pads, inte3sat_to_isr
from .ncl_to_isr import decompose_state, ncl_to_isr
from .planarize import (
    GADGET_EDGES,
    GADGET_ROLES,
    build_crossover_gadget,
    planarize,
)
from .pmr import pmr_to_isr
from .sat import e3sat_to_inte3sat, replace_long_clause

__all__ = [
    "Crossing",
    "Drawing",
    "GADGET_EDGES",
    "GADGET_ROLES",
    "GadgetAnnotation",
    "GadgetTag",
    "add_isolated_pads",
    "build_crossover_gadget",
    "decompose_state",
    "e3sat_to_inte3sat",
    "find_crossings",
    "grid_draw",
    "inte3sat_to_isr",
    "ktj_seq_to_tar_seq",
    "ncl_to_isr",
    "planarize",
    "pmr_to_isr",
    "replace_long_clause",
    "segment_intersection",
    "tar_highval_to_tj",
]
