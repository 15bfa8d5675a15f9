"""Heuristic house packing: rows, wall-aligned fill, ruin-and-recreate."""

from .rows import Row, contiguous_rows, fill_rows, pack_rows, plan_rows, strip_count
from .solver import (SolverConfig, best_offset_rows, edge_fill, local_search, row_frames, solve)

__all__ = [
    "Row", "SolverConfig", "best_offset_rows", "contiguous_rows", "edge_fill", "fill_rows",
    "local_search", "pack_rows", "plan_rows", "row_frames", "solve", "strip_count",
]
