import pytest

from conftest import knot_ctx
from knotperi.arcs import (
    dehn_arcs,
    short_arcs,
    verify_theorem2,
    wirtinger_arcs,
    wirtinger_loops,
)
from knotperi.geodesic import is_geodesic
from knotperi.peripheral import longitude_word, meridian_words
from knotperi.words import generator, inverse


def ctx(name="5_2"):
    _, d, p, c = knot_ctx(name)
    return d, p, c


def test_wirtinger_arcs_are_longitude_prefixes():
    d, p, c = ctx()
    l = longitude_word(c)
    asserted = [a for a in wirtinger_arcs(d, p, c) if a.paper_asserted]
    assert len(asserted) == d.n - 1
    for q, inst in enumerate(asserted, start=1):
        assert inst.word == l[: 2 * q]


def test_wirtinger_arc_lower_variants_are_informational():
    d, p, c = ctx()
    lower = [a for a in wirtinger_arcs(d, p, c) if not a.paper_asserted]
    assert len(lower) == 2 * d.n - 2
    for inst in lower:
        assert inst.word[-1] == -1  # returns up through the outer region X_0


def test_wirtinger_loops_exclude_meridian_words():
    d, p, c = ctx()
    banned = set()
    for m in meridian_words(c):
        banned.add(m)
        banned.add(inverse(m))
    loops = wirtinger_loops(d, p, c)
    assert loops
    for inst in loops:
        assert len(inst.word) == 2
        assert inst.word not in banned
        assert is_geodesic(p, inst.word)


def test_dehn_arc_count_and_geodesity():
    d, p, c = ctx()
    arcs = dehn_arcs(d, p, c)
    assert len(arcs) == 2 * (d.n + 1)  # 5_2: 12 instances
    for inst in arcs:
        assert len(inst.word) == 2
        assert 0 in {generator(l) for l in inst.word}
        assert is_geodesic(p, inst.word)
    # the loop through the region across the basepoint strand is the
    # meridian itself; it is enumerated but not asserted
    assert any(not inst.paper_asserted for inst in arcs)


def test_short_arc_count_and_forward_length():
    d, p, c = ctx()
    arcs = short_arcs(d, p, c)
    assert len(arcs) == 2 * d.n
    for inst in arcs:
        if inst.params[1] == "forward":
            assert len(inst.word) < 2 * d.n


def test_words_use_valid_generators():
    d, p, c = ctx("6_2")
    every = (
        wirtinger_arcs(d, p, c)
        + wirtinger_loops(d, p, c)
        + dehn_arcs(d, p, c)
        + short_arcs(d, p, c)
    )
    for inst in every:
        assert inst.word
        assert all(0 <= generator(l) <= d.n + 1 for l in inst.word)


@pytest.mark.parametrize("name", ["4_1", "5_2", "6_1"])
def test_verify_theorem2_zero_failures(name):
    d, p, c = ctx(name)
    rep = verify_theorem2(d, p, c, knot=name)
    assert rep.ok
    assert rep.counts["wirtinger_arc"] == 3 * (d.n - 1)
    assert rep.counts["short_arc"] == 2 * d.n
    assert rep.counts["dehn_arc"] == 2 * (d.n + 1)


def test_short_arcs_not_plain_peripheral_either():
    from knotperi.peripheral import is_peripheral

    d, p, c = ctx("4_1")
    for inst in short_arcs(d, p, c):
        assert not is_peripheral(c, p, inst.word).peripheral
