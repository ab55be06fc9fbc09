"""Fundamental block, peripheral complex, and peripherality decisions.

The 2n relator squares met while following the knot from the basepoint
glue edge-to-edge into a *fundamental block*; stamping block square
P_{((x+y) mod 2n)+1} onto every unit cell (x, y) tiles the plane with a
doubly periodic labelled square complex.  Edges are oriented from their
even vertex ((x+y) even) to their odd vertex, and traversing an edge
with (against) its orientation contributes a positive (negative)
letter, so every lattice path spells a word in the augmented Dehn
presentation.

A reduced word is peripheral exactly when its geodesic representative
walks from the origin to a point (an-b, an+b); meridian and longitude
are the canonical such paths.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import LabeledDiagram
from .presentation import SymmetrizedPresentation
from .geodesic import reduce_to_geodesic
from .words import Word, letter


class BlockError(ValueError):
    """Gluing or completion failure while assembling a block/complex."""


@dataclass(frozen=True)
class PlacedSquare:
    bottom: int
    right: int
    top: int
    left: int
    visit: int  # source visit index k, 1..2n

    @property
    def labels(self):
        return (self.bottom, self.right, self.top, self.left)


@dataclass(frozen=True)
class FundamentalBlock:
    placed: tuple  # P_1 .. P_{2n}

    @property
    def n(self) -> int:
        return len(self.placed) // 2


@dataclass(frozen=True)
class PeripheralComplex:
    block: FundamentalBlock
    n: int

    def cell(self, x: int, y: int) -> PlacedSquare:
        """Placed square on the unit cell [x, x+1] x [y, y+1]."""
        return self.block.placed[(x + y) % (2 * self.n)]


@dataclass(frozen=True)
class PeripheralVerdict:
    peripheral: bool
    a: int | None = None
    b: int | None = None
    endpoint: tuple | None = None
    offset: int | None = None  # conjugator offset k, when applicable
    # a conjugacy-criterion hit that failed the abelianization
    # cross-check; reported, never silently trusted
    flagged: bool = False


def _parity(x: int, y: int) -> int:
    return (x + y) % 2


def _placements(relator_word: Word, parity: int):
    """Legal (bottom, right, top, left) placements of a relator on a cell.

    Reading a cell boundary counterclockwise from its lower-left corner
    with the even-to-odd edge orientation gives B R^-1 T L^-1 on even
    cells and B^-1 R T^-1 L on odd cells; a placement is legal when that
    word is a symmetrized form of the relator.
    """
    w = relator_word
    rotations = [w[i:] + w[:i] for i in range(4)]
    inv = tuple(-l for l in reversed(w))
    rotations += [inv[i:] + inv[:i] for i in range(4)]
    out = []
    for rot in rotations:
        if parity == 0 and rot[0] > 0:
            out.append(tuple(abs(l) - 1 for l in rot))
        if parity == 1 and rot[0] < 0:
            out.append(tuple(abs(l) - 1 for l in rot))
    # distinct corners make the four placements distinct
    return [p for i, p in enumerate(out) if p not in out[:i]]


def _boundary_word(sq: PlacedSquare, parity: int) -> Word:
    b, r, t, l = (letter(sq.bottom), letter(sq.right), letter(sq.top), letter(sq.left))
    if parity == 0:
        return (b, -r, t, -l)
    return (-b, r, -t, l)


def _assert_boundary(p: SymmetrizedPresentation, sq: PlacedSquare, parity: int):
    if _boundary_word(sq, parity) not in set(p.symmetrized):
        raise BlockError(
            f"placed square {sq} at parity {parity} does not read a relator"
        )


def _canonical_relator(sq: PlacedSquare, parity: int) -> tuple:
    """Canonical form of the relator a placed square carries (placement-free)."""
    w = _boundary_word(sq, parity)
    forms = [w[i:] + w[:i] for i in range(4)]
    inv = tuple(-l for l in reversed(w))
    forms += [inv[i:] + inv[:i] for i in range(4)]
    return min(forms)


def _verify_block(p: SymmetrizedPresentation, placed) -> FundamentalBlock:
    two_n = len(placed)
    if two_n != 2 * p.n:
        raise BlockError(f"block has {two_n} squares, expected {2 * p.n}")
    for k, sq in enumerate(placed):
        _assert_boundary(p, sq, k % 2)
    if placed[0].left != placed[-1].right:
        raise BlockError("block does not close laterally (left of P_1 != right of P_2n)")
    for i in range(two_n):
        if placed[i].top != placed[(i + 1) % two_n].bottom:
            raise BlockError(f"top of P_{i+1} does not match bottom of P_{i+2}")
    counts: dict = {}
    for k, sq in enumerate(placed):
        key = _canonical_relator(sq, k % 2)
        counts[key] = counts.get(key, 0) + 1
    if any(v != 2 for v in counts.values()) or len(counts) != p.n:
        raise BlockError("each crossing's relator must appear exactly twice")
    return FundamentalBlock(tuple(placed))


def build_fundamental_block(
    d: LabeledDiagram, p: SymmetrizedPresentation
) -> FundamentalBlock:
    """Glue the 2n relator squares along the knot into a fundamental block.

    P_1 is placed so the lower staircase (0,0)->(1,0)->(1,1) reads
    X_u X_v^-1 for the c_1 under-pass from region u to region v; each
    next square is the visited crossing's relator in the unique placement
    whose left edge matches the previous right edge.
    """
    visits = d.visits
    relator_of = {r.crossing: r.word for r in p.relators}
    first = visits[0]
    if not first.is_under:
        raise BlockError("visit sequence must start at an under-pass")
    nw, ne, se, sw = first.corner_regions
    placed = [PlacedSquare(nw, ne, se, sw, 1)]
    for k in range(1, 2 * d.n):
        rel = relator_of[visits[k].crossing]
        want_left = placed[-1].right
        options = [
            q for q in _placements(rel, k % 2) if q[3] == want_left
        ]
        if len(options) != 1:
            raise BlockError(
                f"gluing failure at visit {k + 1}: {len(options)} placements "
                f"of relator {rel} have left edge {want_left}"
            )
        b, r, t, l = options[0]
        placed.append(PlacedSquare(b, r, t, l, k + 1))
    return _verify_block(p, placed)


def build_complex(block: FundamentalBlock, p: SymmetrizedPresentation | None = None) -> PeripheralComplex:
    c = PeripheralComplex(block, block.n)
    if p is not None:
        _verify_block(p, block.placed)
    return c


# --- edge labels and walks ---------------------------------------------------

DIRECTIONS = ("up", "right", "down", "left")

_STEP = {"up": (0, 1), "right": (1, 0), "down": (0, -1), "left": (-1, 0)}


def edge_letter(c: PeripheralComplex, vertex, direction: str):
    """Signed letter contributed by leaving ``vertex`` in ``direction``.

    The magnitude comes from the incident cell's placed square; the sign
    is positive exactly when the head vertex has odd parity (the edge is
    traversed with its even-to-odd orientation).
    """
    x, y = vertex
    if direction == "up":
        mag = c.cell(x, y).left
    elif direction == "right":
        mag = c.cell(x, y).bottom
    elif direction == "left":
        mag = c.cell(x - 1, y).bottom
    elif direction == "down":
        mag = c.cell(x, y - 1).left
    else:
        raise ValueError(f"unknown direction {direction!r}")
    dx, dy = _STEP[direction]
    s = 1 if _parity(x + dx, y + dy) == 1 else -1
    return s * letter(mag)


def outgoing_letters(c: PeripheralComplex, vertex) -> dict:
    return {d: edge_letter(c, vertex, d) for d in DIRECTIONS}


def walk(c: PeripheralComplex, w, start) -> set:
    """All endpoints of paths from ``start`` labelled by ``w``.

    The complex is deterministic for valid inputs (four distinct outgoing
    letters per vertex), so the frontier normally stays a single vertex,
    but the search is breadth-first and stays correct regardless.
    """
    frontier = {tuple(start)}
    for l in w:
        nxt = set()
        for v in frontier:
            for d in DIRECTIONS:
                if edge_letter(c, v, d) == l:
                    dx, dy = _STEP[d]
                    nxt.add((v[0] + dx, v[1] + dy))
        if not nxt:
            return set()
        frontier = nxt
    return frontier


# --- canonical peripheral words ----------------------------------------------

def meridian_word(c: PeripheralComplex) -> Word:
    """Label of the path (0,0) -> (0,1) -> (-1,1)."""
    return (edge_letter(c, (0, 0), "up"), edge_letter(c, (0, 1), "left"))


def meridian_words(c: PeripheralComplex) -> tuple:
    """Both geodesic representatives of the meridian: the two edge-paths
    from (0,0) to (-1,1) around the corner square."""
    second = (edge_letter(c, (0, 0), "left"), edge_letter(c, (-1, 0), "up"))
    return (meridian_word(c), second)


def longitude_word(c: PeripheralComplex) -> Word:
    """Label of the lower staircase (0,0) -> (n,n)."""
    out = []
    x = y = 0
    for _ in range(c.n):
        out.append(edge_letter(c, (x, y), "right"))
        x += 1
        out.append(edge_letter(c, (x, y), "up"))
        y += 1
    return tuple(out)


def staircase_word(c: PeripheralComplex, a: int, b: int) -> Word:
    """Label of the monotone path (0,0) -> (an-b, 0) -> (an-b, an+b)."""
    tx, ty = a * c.n - b, a * c.n + b
    out = []
    x = y = 0
    step = "right" if tx >= 0 else "left"
    for _ in range(abs(tx)):
        out.append(edge_letter(c, (x, y), step))
        x += 1 if tx >= 0 else -1
    step = "up" if ty >= 0 else "down"
    for _ in range(abs(ty)):
        out.append(edge_letter(c, (x, y), step))
        y += 1 if ty >= 0 else -1
    return tuple(out)


# --- peripherality ------------------------------------------------------------

def is_peripheral(
    c: PeripheralComplex, p: SymmetrizedPresentation, w
) -> PeripheralVerdict:
    """Decide whether ``w`` lies in the peripheral subgroup at the basepoint.

    The geodesic representative of a peripheral element labels a path
    from (0,0) to (an-b, an+b); any endpoint (X, Y) of the walk with
    X + Y divisible by 2n certifies the element as longitude^a meridian^b.
    """
    wg = reduce_to_geodesic(p, w)
    if not wg:
        return PeripheralVerdict(True, 0, 0, (0, 0))
    two_n = 2 * c.n
    for (X, Y) in sorted(walk(c, wg, (0, 0))):
        if (X + Y) % two_n == 0:
            a = (X + Y) // two_n
            b = (Y - X) // 2
            return PeripheralVerdict(True, a, b, (X, Y))
    return PeripheralVerdict(False)


def _exponent_vector(p: SymmetrizedPresentation, w) -> tuple:
    v = [0] * len(p.generators)
    for l in w:
        v[abs(l) - 1] += 1 if l > 0 else -1
    return tuple(v)


def _in_rational_span(basis, target) -> bool:
    from fractions import Fraction

    rows = [list(map(Fraction, b)) for b in basis]
    t = list(map(Fraction, target))
    piv = 0
    for col in range(len(t)):
        r = next((i for i in range(piv, len(rows)) if rows[i][col] != 0), None)
        if r is None:
            continue
        rows[piv], rows[r] = rows[r], rows[piv]
        f = rows[piv][col]
        rows[piv] = [x / f for x in rows[piv]]
        for i in range(len(rows)):
            if i != piv and rows[i][col] != 0:
                g = rows[i][col]
                rows[i] = [a - g * b for a, b in zip(rows[i], rows[piv])]
        if t[col] != 0:
            g = t[col]
            t = [a - g * b for a, b in zip(t, rows[piv])]
        piv += 1
    return all(x == 0 for x in t)


def _ab_consistent(c, p, w, a, b) -> bool:
    """Necessary condition: in the abelianization modulo the relator
    lattice, ``w`` must equal longitude^a meridian^b."""
    lv = _exponent_vector(p, longitude_word(c))
    mv = _exponent_vector(p, meridian_word(c))
    wv = _exponent_vector(p, w)
    target = [x - a * y - b * z for x, y, z in zip(wv, lv, mv)]
    return _in_rational_span([_exponent_vector(p, r.word) for r in p.relators], target)


def is_conjugate_peripheral(
    c: PeripheralComplex, p: SymmetrizedPresentation, w
) -> PeripheralVerdict:
    """Decide whether some conjugate of ``w`` is peripheral.

    A conjugate of longitude^a meridian^b labels a geodesic path from
    (0, k) whose displacement matches (an-b, an+b), for some offset
    0 <= k < 2n.  The criterion is applied to every cyclic rotation of
    the geodesic (so a conjugating prefix cannot hide the embedding),
    and any endpoint hit is cross-checked against the abelianized
    equation w = l^a m^b; a hit that fails the cross-check is returned
    with ``flagged`` set rather than silently trusted.
    """
    wg = reduce_to_geodesic(p, w)
    if not wg:
        return PeripheralVerdict(True, 0, 0, (0, 0), offset=0)
    two_n = 2 * c.n
    flagged = None
    seen = set()
    for r in range(len(wg)):
        wr = reduce_to_geodesic(p, wg[r:] + wg[:r])
        if not wr:
            return PeripheralVerdict(True, 0, 0, (0, 0), offset=0)
        if wr in seen:
            continue
        seen.add(wr)
        for k in range(two_n):
            for (X, Y) in sorted(walk(c, wr, (0, k))):
                if (X + Y - k) % two_n == 0:
                    # read a, b off the displacement (X, Y - k): absolute
                    # coordinates are only defined up to the complex's
                    # (1,-1)-translation symmetry, which shifts the start
                    a = (X + Y - k) // two_n
                    b = (Y - k - X) // 2
                    hit = PeripheralVerdict(True, a, b, (X, Y), offset=k)
                    if _ab_consistent(c, p, w, a, b):
                        return hit
                    if flagged is None:
                        flagged = PeripheralVerdict(
                            True, a, b, (X, Y), offset=k, flagged=True
                        )
    if flagged is not None:
        return flagged
    return PeripheralVerdict(False)


# --- Gauss-code recovery -------------------------------------------------------

def recover_gauss_code(c: PeripheralComplex) -> tuple:
    """Signed Gauss code read off the row-0 strip of the complex.

    Squares carrying the same relator pair up (uniquely, by the small
    cancellation condition); pairs are numbered by first occurrence and
    signs alternate starting negative (the walk starts at an under-pass).
    """
    strip = [c.cell(x, 0) for x in range(2 * c.n)]
    keys = [_canonical_relator(sq, x % 2) for x, sq in enumerate(strip)]
    for key in set(keys):
        if keys.count(key) != 2:
            raise BlockError("pairing failure: relator does not appear exactly twice")
    numbers: dict = {}
    code = []
    for i, key in enumerate(keys):
        if key not in numbers:
            numbers[key] = len(numbers) + 1
        code.append(-numbers[key] if i % 2 == 0 else numbers[key])
    return tuple(code)


# --- unoriented construction ---------------------------------------------------

def _complete_cell(p: SymmetrizedPresentation, parity, left=None, bottom=None,
                   top=None):
    """Unique placement of a cell given two adjacent edge labels.

    Works from (left, bottom) or (left, top); the two known labels form a
    pair of some symmetrized relator and the pair index supplies the rest.
    """
    if left is not None and bottom is not None:
        if parity == 0:
            key = (-letter(left), letter(bottom))
        else:
            key = (letter(left), -letter(bottom))
        comp = p.pair_index.get(key)
        if comp is None:
            raise BlockError(f"completion failure: no relator with pair {key}")
        r, t = abs(comp[0]) - 1, abs(comp[1]) - 1
        return (bottom, r, t, left)
    if left is not None and top is not None:
        if parity == 0:
            key = (letter(top), -letter(left))
        else:
            key = (-letter(top), letter(left))
        comp = p.pair_index.get(key)
        if comp is None:
            raise BlockError(f"completion failure: no relator with pair {key}")
        b, r = abs(comp[0]) - 1, abs(comp[1]) - 1
        return (b, r, top, left)
    raise ValueError("need (left, bottom) or (left, top)")


def seed_placements(p: SymmetrizedPresentation, relator_index: int):
    """All 8 placements (4 even-cell + 4 odd-cell) of a base relator."""
    w = p.relators[relator_index].word
    return _placements(w, 0), _placements(w, 1)


def build_complex_unoriented(
    p: SymmetrizedPresentation,
    relator_index: int,
    form: int = 0,
    diagonal: int = 1,
) -> PeripheralComplex:
    """Rebuild the peripheral complex from a single seed square.

    Three steps: drop one placement of one relator square on a cell, copy
    it along a diagonal (the complex is diagonal-periodic), then complete
    every remaining cell — each has two edges already labelled, and the
    pair index forces the rest.  The result must be isometric to the
    oriented complex; ``find_isometry`` checks that.

    ``form`` picks one of the 8 placements of the seed relator (0-3 on
    even cells, 4-7 on odd cells); ``diagonal`` is +1 for copies along
    (1,-1) and -1 for copies along (1,1).
    """
    if diagonal not in (1, -1):
        raise ValueError("diagonal must be +1 or -1")
    even_forms, odd_forms = seed_placements(p, relator_index)
    all_forms = even_forms + odd_forms
    if not 0 <= form < len(all_forms):
        raise ValueError(f"form must be 0..{len(all_forms) - 1}")
    seed = all_forms[form]
    eps = 0 if form < 4 else 1  # odd-cell placements seed an odd cell

    two_n = 2 * p.n
    known: dict = {}
    for t in range(-1, two_n + 3):
        known[(eps + t, -t if diagonal == 1 else t)] = seed

    def fill(x, y):
        if (x, y) in known:
            return known[(x, y)]
        parity = _parity(x, y)
        l = fill(x - 1, y)[1]  # right label of the left neighbour
        if diagonal == 1:
            b = fill(x, y - 1)[2]  # top label of the square below
            q = _complete_cell(p, parity, left=l, bottom=b)
        else:
            t = fill(x, y + 1)[0]  # bottom label of the square above
            q = _complete_cell(p, parity, left=l, top=t)
        known[(x, y)] = q
        return q

    start = eps if eps % 2 == 0 else eps + 1
    row = [fill(x, 0) for x in range(start, start + two_n)]
    if diagonal == -1:
        # the (1,1)-periodic tiling is the mirror image of the standard
        # one; reflecting across the vertical axis x = 0 sends the row
        # cell of residue i to residue -i-1-start with left/right swapped
        row = [
            (lambda q: (q[0], q[3], q[2], q[1]))(
                row[(two_n - 1 - start - j) % two_n]
            )
            for j in range(two_n)
        ]
    placed = [PlacedSquare(b, r, t, l, k + 1) for k, (b, r, t, l) in enumerate(row)]
    block = _verify_block(p, placed)
    return PeripheralComplex(block, p.n)


# --- isometries between complexes ----------------------------------------------

_DIHEDRAL = (
    ((1, 0), (0, 1)),
    ((0, -1), (1, 0)),
    ((-1, 0), (0, -1)),
    ((0, 1), (-1, 0)),
    ((-1, 0), (0, 1)),
    ((1, 0), (0, -1)),
    ((0, 1), (1, 0)),
    ((0, -1), (-1, 0)),
)


def _apply(mat, v):
    (a, b), (c, d) = mat
    return (a * v[0] + b * v[1], c * v[0] + d * v[1])


def _transformed_cell(c2: PeripheralComplex, mat, t, x, y):
    """Placement the (mat, t)-image of ``c2`` shows on cell (x, y)."""
    # pull the cell box back to the source complex
    inv_det = mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0]
    inv = (
        (mat[1][1] * inv_det, -mat[0][1] * inv_det),
        (-mat[1][0] * inv_det, mat[0][0] * inv_det),
    )
    p0 = _apply(inv, (x - t[0], y - t[1]))
    p1 = _apply(inv, (x + 1 - t[0], y + 1 - t[1]))
    sx, sy = min(p0[0], p1[0]), min(p0[1], p1[1])
    src = c2.cell(sx, sy)
    # map each source side's midpoint forward to see which image side it lands on
    mids = {
        "bottom": (2 * sx + 1, 2 * sy),
        "right": (2 * sx + 2, 2 * sy + 1),
        "top": (2 * sx + 1, 2 * sy + 2),
        "left": (2 * sx, 2 * sy + 1),
    }
    label = {
        "bottom": src.bottom, "right": src.right, "top": src.top, "left": src.left
    }
    out = {}
    for side, m in mids.items():
        ix, iy = _apply(mat, m)
        ix, iy = ix + 2 * t[0], iy + 2 * t[1]
        if iy == 2 * y:
            out["bottom"] = label[side]
        elif iy == 2 * y + 2:
            out["top"] = label[side]
        elif ix == 2 * x:
            out["left"] = label[side]
        else:
            out["right"] = label[side]
    return (out["bottom"], out["right"], out["top"], out["left"])


def find_isometry(
    c1: PeripheralComplex, c2: PeripheralComplex, up_to_relabelling: bool = False
):
    """A lattice isometry (dihedral matrix, translation) carrying ``c2``
    onto ``c1``, or None.

    With ``up_to_relabelling`` the match may compose with a bijection of
    generator labels (used to compare complexes built from differently
    labelled copies of the same diagram).
    """
    if c1.n != c2.n:
        return None
    two_n = 2 * c1.n
    window = [(x, y) for y in (0, 1) for x in range(two_n)]
    for mat in _DIHEDRAL:
        for t1 in range(two_n):
            for t2 in (0, 1):
                if (t1 + t2) % 2:
                    continue  # parity-breaking translations can't match
                sigma: dict = {}
                ok = True
                for (x, y) in window:
                    got = _transformed_cell(c2, mat, (t1, t2), x, y)
                    want = c1.cell(x, y).labels
                    for g, w in zip(got, want):
                        if not up_to_relabelling:
                            if g != w:
                                ok = False
                        elif sigma.setdefault(g, w) != w:
                            ok = False
                    if not ok:
                        break
                if ok and (
                    not up_to_relabelling or len(set(sigma.values())) == len(sigma)
                ):
                    return mat, (t1, t2)
    return None
