import functools

import pytest

from knotperi.diagram import compute_regions
from knotperi.peripheral import build_complex, build_fundamental_block
from knotperi.presentation import build_augmented_dehn
from knotperi.table import load_table

TREFOIL_PD = "X(1,4,2,5) X(5,2,6,3) X(3,6,4,1)"

# alternating but neither reduced nor prime (granny-style connected sum)
GRANNY_PD = (
    "X(1,4,2,5) X(3,6,4,7) X(5,2,6,3) "
    "X(7,10,8,11) X(9,12,10,1) X(11,8,12,9)"
)


@functools.lru_cache(maxsize=None)
def knot_ctx(name):
    """(table entry, diagram, presentation, complex) for a table knot."""
    entry = load_table()[name]
    d = compute_regions(entry.pd)
    p = build_augmented_dehn(d)
    c = build_complex(build_fundamental_block(d, p), p)
    return entry, d, p, c


@pytest.fixture(scope="session")
def table():
    return load_table()


def all_knots():
    return sorted(load_table(), key=lambda s: (int(s.split("_")[0]), int(s.split("_")[1])))
