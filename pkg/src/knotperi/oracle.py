"""Brute-force word-problem oracle, independent of the geodesic engine.

Breadth-first search over words reachable by free cancellation,
inverse-pair insertion, and swapping any 1-3 consecutive letters of a
symmetrized relator for the complementary segment.  The search is
exact but bounded; it exists only to certify the chain-rewriting
solver on small instances.
"""

from __future__ import annotations

import functools
import random
from collections import deque
from dataclasses import dataclass

from .presentation import SymmetrizedPresentation
from .words import Word, letter

INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class OracleConfig:
    max_length: int
    max_steps: int

    def __post_init__(self):
        if self.max_length <= 0 or self.max_steps <= 0:
            raise ValueError("oracle bounds must be positive")


@functools.lru_cache(maxsize=8)
def _segment_table(symmetrized: tuple) -> dict:
    """segment (1-3 leading relator letters) -> complementary replacements."""
    table: dict = {}
    for rel in symmetrized:
        for k in (1, 2, 3):
            seg = rel[:k]
            rest = rel[k:]
            repl = tuple(-l for l in reversed(rest))  # seg = repl in the group
            table.setdefault(seg, set()).add(repl)
    return {seg: sorted(repls) for seg, repls in table.items()}


def _segment_moves(p: SymmetrizedPresentation, w: Word):
    """Words obtained by one relator-segment swap anywhere in ``w``."""
    table = _segment_table(tuple(p.symmetrized))
    for i in range(len(w)):
        for k in (1, 2, 3):
            repls = table.get(w[i : i + k])
            if repls:
                for repl in repls:
                    yield w[:i] + repl + w[i + k :]


def bfs_is_identity(p: SymmetrizedPresentation, w, cfg: OracleConfig):
    """True / False / "inconclusive".

    False is certified by exhausting every word reachable within the
    length bound; "inconclusive" only happens when the step budget runs
    out first.
    """
    start = tuple(w)
    if not start:
        return True
    letters = [s * letter(g) for g in p.generators for s in (1, -1)]
    seen = {start}
    queue = deque([start])
    steps = 0
    while queue:
        steps += 1
        if steps > cfg.max_steps:
            return INCONCLUSIVE
        cur = queue.popleft()
        nxt = []
        for i in range(len(cur) - 1):
            if cur[i] == -cur[i + 1]:
                nxt.append(cur[:i] + cur[i + 2 :])
        nxt.extend(_segment_moves(p, cur))
        if len(cur) + 2 <= cfg.max_length:
            for i in range(len(cur) + 1):
                for l in letters:
                    nxt.append(cur[:i] + (l, -l) + cur[i:])
        for cand in nxt:
            if not cand:
                return True
            if len(cand) <= cfg.max_length and cand not in seen:
                seen.add(cand)
                queue.append(cand)
    return False


def random_words(p: SymmetrizedPresentation, length: int, count: int, seed: int):
    """Deterministic sample of freely reduced words of the given length."""
    rng = random.Random(seed)
    letters = [s * letter(g) for g in p.generators for s in (1, -1)]
    out = []
    for _ in range(count):
        w = []
        for _ in range(length):
            choices = [l for l in letters if not w or l != -w[-1]]
            w.append(rng.choice(choices))
        out.append(tuple(w))
    return out
