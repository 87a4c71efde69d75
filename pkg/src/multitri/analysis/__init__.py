"""Sparsity, rigidity, the surface of stars and the chirotope on stars."""

from .chirotope import ChirotopeSign, chirotope_sign, extreme_stars
from .rigidity import rigidity_rank, rigidity_target
from .sparsity import pebble_game_sparse, sparsity_check
from .surface import SurfaceStats, surface_stats

__all__ = [
    "ChirotopeSign",
    "SurfaceStats",
    "chirotope_sign",
    "extreme_stars",
    "pebble_game_sparse",
    "rigidity_rank",
    "rigidity_target",
    "sparsity_check",
    "surface_stats",
]
