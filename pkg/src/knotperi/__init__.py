"""knotperi: peripheral elements of alternating knot groups.

Parse a planar diagram code, build the augmented Dehn presentation,
solve its word problem by small-cancellation rewriting, and decide
which elements are (conjugate to) peripheral ones via the periodic
square complex spanned by the diagram's fundamental block.
"""

from .diagram import compute_regions, gauss_code, parse_pd, validate
from .geodesic import is_geodesic, is_identity, reduce_to_geodesic
from .peripheral import (
    build_complex,
    build_fundamental_block,
    is_conjugate_peripheral,
    is_peripheral,
    longitude_word,
    meridian_word,
)
from .presentation import build_augmented_dehn, check_small_cancellation
from .table import get_knot, load_table
from .words import format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "parse_pd",
    "compute_regions",
    "validate",
    "gauss_code",
    "build_augmented_dehn",
    "check_small_cancellation",
    "reduce_to_geodesic",
    "is_identity",
    "is_geodesic",
    "build_fundamental_block",
    "build_complex",
    "is_peripheral",
    "is_conjugate_peripheral",
    "meridian_word",
    "longitude_word",
    "load_table",
    "get_knot",
    "parse_word",
    "format_word",
    "__version__",
]
