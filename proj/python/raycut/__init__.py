"""Cutoff-distance particle neighbor search via ray-traced scene queries.

The heavy lifting lives in the compiled extension; this package re-exports
the public operations.
"""

from ._core import (
    NeighborResult,
    brute_force,
    gen_surface,
    gen_uniform,
    kernels,
    methods,
    morton_order,
    render_depth,
    run,
    __version__,
)

__all__ = [
    "NeighborResult",
    "brute_force",
    "gen_surface",
    "gen_uniform",
    "kernels",
    "methods",
    "morton_order",
    "render_depth",
    "run",
    "__version__",
]
