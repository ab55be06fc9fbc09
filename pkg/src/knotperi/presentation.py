"""The augmented Dehn presentation and its small-cancellation structure.

One generator X_i per region of the labelled diagram (including the
outer region X_0) and one length-4 relator per crossing, read
counterclockwise from the NW corner: X_NW X_NE^-1 X_SE X_SW^-1.
Keeping X_0 alive is what makes the presentation "augmented"; the group
is the knot group times an infinite cyclic factor.

The symmetrized relator set (all cyclic rotations of every relator and
its inverse, 8 per crossing) supports the pair index: because every
piece has length 1, a two-letter subword of a relator determines the
remaining two letters uniquely, which drives both the chain rewriting
in ``geodesic`` and the plane-tiling construction in ``peripheral``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LabeledDiagram, _corner_regions, validate
from .words import Word, inverse, letter


class PresentationError(ValueError):
    pass


@dataclass(frozen=True)
class Relator:
    word: Word  # (X_a, X_b^-1, X_c, X_d^-1) as signed letters
    crossing: int

    @property
    def corners(self):
        """(a, b, c, d) generator indices, NW NE SE SW."""
        return tuple(abs(l) - 1 for l in self.word)


@dataclass(frozen=True)
class SymmetrizedPresentation:
    generators: tuple  # region indices 0..n+1
    relators: tuple  # base Relator per crossing
    symmetrized: tuple  # 8 * n words, all rotations of relators and inverses
    pair_index: dict  # (l1, l2) -> (l3, l4) completing a symmetrized relator

    @property
    def n(self) -> int:
        return len(self.relators)


@dataclass(frozen=True)
class SmallCancellationReport:
    c4_violations: tuple  # pairs occurring in >= 2 distinct symmetrized relators
    t4_violations: tuple  # sister-sets that are also pairs
    coloring: dict | None  # generator -> 0/1, relators alternate; None if impossible

    @property
    def ok(self) -> bool:
        return not self.c4_violations and not self.t4_violations and (
            self.coloring is not None
        )


def _rotations(w: Word):
    return [w[i:] + w[:i] for i in range(len(w))]


def build_augmented_dehn(
    d: LabeledDiagram, require_valid: bool = True
) -> SymmetrizedPresentation:
    """Augmented Dehn presentation of a labelled diagram.

    ``require_valid=False`` skips the reduced/prime/alternating gate; the
    small-cancellation checker uses it to exhibit violations on bad input.
    """
    if require_valid:
        report = validate(d)
        if not report.ok:
            raise PresentationError(
                "diagram fails validation: " + "; ".join(report.problems)
            )
    relators = []
    for c in range(d.n):
        a, b, cc, dd = _corner_regions(d.pd, d.dart_region, c)
        w = (letter(a), -letter(b), letter(cc), -letter(dd))
        relators.append(Relator(w, c))

    symmetrized = []
    seen = set()
    for r in relators:
        for form in _rotations(r.word) + _rotations(inverse(r.word)):
            if form not in seen:
                seen.add(form)
                symmetrized.append(form)

    pair_index = {}
    for w in symmetrized:
        key = (w[0], w[1])
        if key in pair_index and pair_index[key] != (w[2], w[3]):
            # ambiguous pair: C''(4) fails; keep the first completion so the
            # checker can still report, but downstream solvers must not run
            pair_index[key] = None
        else:
            pair_index.setdefault(key, (w[2], w[3]))

    return SymmetrizedPresentation(
        generators=tuple(range(len(d.regions))),
        relators=tuple(relators),
        symmetrized=tuple(symmetrized),
        pair_index=pair_index,
    )


def is_pair(p: SymmetrizedPresentation, w) -> bool:
    """True iff ``w`` occurs as two consecutive letters of a symmetrized relator."""
    if len(w) != 2:
        raise ValueError(f"a pair has exactly 2 letters, got {len(w)}")
    return (w[0], w[1]) in p.pair_index


def is_sister_set(p: SymmetrizedPresentation, w) -> bool:
    """True iff w = ac with ab and b^-1 c pairs for some letter b != c."""
    if len(w) != 2:
        raise ValueError(f"a sister-set has exactly 2 letters, got {len(w)}")
    a, c = w
    for (x, b), _ in p.pair_index.items():
        if x != a or b == c:
            continue
        if (-b, c) in p.pair_index:
            return True
    return False


def check_small_cancellation(p: SymmetrizedPresentation) -> SmallCancellationReport:
    # C''(4): every two-letter subword must belong to a single symmetrized
    # relator.  Count distinct completions per prefix.
    completions: dict = {}
    for w in p.symmetrized:
        completions.setdefault((w[0], w[1]), set()).add((w[2], w[3]))
    c4 = tuple(sorted(k for k, v in completions.items() if len(v) > 1))

    # T(4): no sister-set may itself be a pair
    t4 = []
    for (a, b) in completions:
        for (bb, c) in completions:
            if bb != -b or b == c:
                continue
            if (a, c) in completions and (a, c) not in t4:
                t4.append((a, c))
    t4 = tuple(sorted(t4))

    coloring = _two_color(p)
    return SmallCancellationReport(c4, t4, coloring)


def _two_color(p: SymmetrizedPresentation) -> dict | None:
    """Two-coloring of generators with color-alternating relators, or None.

    Relator X_a X_b^-1 X_c X_d^-1 alternates iff a, c share one color and
    b, d the other; encode as a parity constraint graph and check
    bipartiteness by BFS.
    """
    same, diff = [], []
    for r in p.relators:
        a, b, c, d = r.corners
        same += [(a, c), (b, d)]
        diff += [(a, b), (b, c), (c, d), (d, a)]
    color: dict = {}
    adj: dict = {g: [] for g in p.generators}
    for u, v in same:
        adj[u].append((v, 0))
        adj[v].append((u, 0))
    for u, v in diff:
        adj[u].append((v, 1))
        adj[v].append((u, 1))
    for start in p.generators:
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v, parity in adj[u]:
                want = color[u] ^ parity
                if v not in color:
                    color[v] = want
                    queue.append(v)
                elif color[v] != want:
                    return None
    return color


def dehn_to_augmented(w: Word) -> Word:
    """Rewrite a Dehn-presentation word into the augmented presentation.

    Each X_i^±1 (i >= 1) becomes (X_i X_0)^±1; the map is a monoid
    homomorphism on words and preserves triviality of the element.
    """
    out = []
    x0 = letter(0)
    for l in w:
        if abs(l) == x0:
            raise PresentationError("Dehn-presentation words must not use X_0")
        if l > 0:
            out += [l, x0]
        else:
            out += [-x0, l]
    return tuple(out)


def read_loop_word(d: LabeledDiagram, trace) -> Word:
    """Word of a loop from its region trace.

    Passing downwards through region i contributes X_i, upwards X_i^-1.
    """
    out = []
    for region, direction in trace:
        if not 0 <= region < len(d.regions):
            raise PresentationError(f"unknown region {region}")
        if direction == "down":
            out.append(letter(region))
        elif direction == "up":
            out.append(-letter(region))
        else:
            raise PresentationError(f"direction must be 'down' or 'up', got {direction!r}")
    return tuple(out)
