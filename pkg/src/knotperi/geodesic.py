"""Word problem for the augmented Dehn presentation via chain rewriting.

A freely reduced word fails to be geodesic exactly when it contains a
*chain word*: the label of the upper path of a strip of m relator
squares (m + 2 letters), which equals the strip's lower path (m
letters) in the group.  Repeatedly freely reducing and replacing the
leftmost chain terminates and yields a geodesic representative, so a
word is trivial iff this process empties it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import SymmetrizedPresentation
from .words import Word, inverse


@dataclass(frozen=True)
class ChainMatch:
    start: int
    end: int  # inclusive; end - start + 1 = square_count + 2
    replacement: Word  # two letters shorter than the matched span

    @property
    def square_count(self) -> int:
        return self.end - self.start - 1


@dataclass(frozen=True)
class RewriteStep:
    kind: str  # "free" or "chain"
    span: tuple  # (start, end) inclusive indices in the pre-step word
    replacement: Word


def free_reduce(w) -> Word:
    out = []
    for l in w:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _lookup(p: SymmetrizedPresentation, a, b):
    comp = p.pair_index.get((a, b))
    # None marks an ambiguous pair (C''(4) violation); the rewriting
    # theory is unsound there, so treat it as no match
    return comp


def _find_chain_forward(p: SymmetrizedPresentation, w):
    """Leftmost chain in reading direction, or None.

    From start i, carry g := w_i; at each following letter t the pair g·t
    must extend to a relator g t q r.  If the next word letter is exactly
    q the strip closes: the matched span is a chain whose lower path is
    the accumulated r^-1 letters.  Otherwise the strip continues with
    carry q^-1.
    """
    L = len(w)
    for i in range(L - 2):
        g = w[i]
        lower = []
        for j in range(i + 1, L - 1):
            t = w[j]
            comp = _lookup(p, g, t)
            if comp is None:
                break
            q, r = comp
            lower.append(-r)
            if w[j + 1] == q:
                return ChainMatch(i, j + 1, tuple(lower))
            g = -q
    return None


def find_chain(p: SymmetrizedPresentation, w) -> ChainMatch | None:
    """Leftmost chain subword of freely reduced ``w``, scanning both
    reading directions (a strip matches a path and its reverse alike)."""
    fwd = _find_chain_forward(p, w)
    rev = _find_chain_forward(p, inverse(w))
    if rev is not None:
        L = len(w)
        rev = ChainMatch(
            L - 1 - rev.end, L - 1 - rev.start, inverse(rev.replacement)
        )
    if fwd is None:
        return rev
    if rev is None or fwd.start <= rev.start:
        return fwd
    return rev


def reduce_to_geodesic(p: SymmetrizedPresentation, w, trace: list | None = None) -> Word:
    """Geodesic representative of ``w``; records steps into ``trace`` if given."""
    cur = tuple(w)
    while True:
        reduced = free_reduce(cur)
        if reduced != cur:
            if trace is not None:
                trace.append(RewriteStep("free", (0, len(cur) - 1), reduced))
            cur = reduced
            continue
        match = find_chain(p, cur)
        if match is None:
            return cur
        if trace is not None:
            trace.append(RewriteStep("chain", (match.start, match.end), match.replacement))
        cur = cur[: match.start] + match.replacement + cur[match.end + 1 :]


def is_identity(p: SymmetrizedPresentation, w) -> bool:
    return reduce_to_geodesic(p, w) == ()


def is_geodesic(p: SymmetrizedPresentation, w) -> bool:
    w = tuple(w)
    return free_reduce(w) == w and find_chain(p, w) is None
