import pytest

from conftest import knot_ctx
from knotperi.geodesic import is_identity
from knotperi.oracle import INCONCLUSIVE, OracleConfig, bfs_is_identity, random_words
from knotperi.words import letter


def p41():
    return knot_ctx("4_1")[2]


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(max_length=0, max_steps=10)
    with pytest.raises(ValueError):
        OracleConfig(max_length=10, max_steps=-1)


def test_empty_word_is_identity():
    p = p41()
    assert bfs_is_identity(p, (), OracleConfig(4, 100)) is True


def test_relator_is_identity():
    p = p41()
    cfg = OracleConfig(max_length=6, max_steps=5000)
    for rel in p.relators:
        assert bfs_is_identity(p, rel.word, cfg) is True


def test_single_generator_is_not_identity():
    p = p41()
    assert bfs_is_identity(p, (letter(2),), OracleConfig(3, 50000)) is False


def test_inconclusive_on_tiny_step_budget():
    p = p41()
    w = tuple(random_words(p, 8, 1, seed=1)[0])
    assert bfs_is_identity(p, w, OracleConfig(10, 3)) == INCONCLUSIVE


def test_random_words_deterministic_and_reduced():
    p = p41()
    a = random_words(p, 6, 20, seed=42)
    b = random_words(p, 6, 20, seed=42)
    assert a == b
    assert len(a) == 20
    for w in a:
        assert len(w) == 6
        assert not any(w[i] == -w[i + 1] for i in range(len(w) - 1))
    assert random_words(p, 6, 20, seed=43) != a


def test_agreement_with_geodesic_engine():
    p = p41()
    cfg = OracleConfig(max_length=8, max_steps=20000)
    checked = 0
    for w in random_words(p, 6, 50, seed=5):
        got = bfs_is_identity(p, w, cfg)
        if got != INCONCLUSIVE:
            checked += 1
            assert got == is_identity(p, w)
    assert checked >= 45  # nearly all should resolve at this budget
