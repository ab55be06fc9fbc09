"""Planar diagram codes, face enumeration and diagram validation.

A PD code lists one 4-tuple of edge ids per crossing, counterclockwise
starting from the incoming under-strand edge.  Edges are numbered
1..2n along the knot, so the outgoing strand edge is always the
incoming edge plus one (mod 2n).

Faces are traced from the rotation system: a *dart* (c, i) leaves
crossing c along the edge in slot i and keeps its face on the left;
the successor dart re-enters at the other end of that edge and turns
to the previous slot.  An n-crossing knot shadow on the sphere has
exactly n + 2 faces.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field


class PdSyntaxError(ValueError):
    """Malformed PD text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class PdStructureError(ValueError):
    """Structurally invalid PD code (edge counts, components, planarity)."""


@dataclass(frozen=True)
class PdCode:
    crossings: tuple  # tuple of 4-tuples of edge ids

    @property
    def n(self) -> int:
        return len(self.crossings)

    def edge_slots(self, edge: int):
        """The two (crossing, slot) incidences of an edge."""
        hits = [
            (c, i)
            for c, quad in enumerate(self.crossings)
            for i in range(4)
            if quad[i] == edge
        ]
        return hits


@dataclass(frozen=True)
class Region:
    id: int
    boundary: tuple  # cyclic tuple of (edge id, side) with side in {"l", "r"}

    @property
    def edges(self):
        return tuple(e for e, _ in self.boundary)


@dataclass(frozen=True)
class CrossingVisit:
    crossing: int
    is_under: bool
    from_region: int | None
    to_region: int | None
    corner_regions: tuple  # (NW, NE, SE, SW) region ids of the crossing
    edge: int = 0  # edge travelled to arrive at this visit


@dataclass(frozen=True)
class LabeledDiagram:
    pd: PdCode
    regions: tuple
    outer_region: int
    basepoint_edge: int
    visits: tuple  # CrossingVisit c_1 .. c_{2n}
    n: int
    # region label of each dart, indexed 4*crossing + slot
    dart_region: tuple = field(repr=False, default=())

    def region_left_of_edge(self, edge: int) -> int:
        """Region on the left of edge ``edge`` in its travel direction."""
        c, i = _out_slots(self.pd)[edge]
        return self.dart_region[4 * c + i]

    def region_right_of_edge(self, edge: int) -> int:
        c, i = _in_slots(self.pd)[edge]
        return self.dart_region[4 * c + i]


@dataclass(frozen=True)
class ValidationReport:
    alternating: bool
    reduced: bool
    prime: bool
    problems: tuple = ()

    @property
    def ok(self) -> bool:
        return self.alternating and self.reduced and self.prime


_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text: str) -> PdCode:
    """Parse PD text: whitespace-separated ``X(a,b,c,d)`` terms.

    ``#`` starts a comment running to end of line.  A JSON
    array-of-arrays form ``[[1,4,2,5], ...]`` is also accepted.
    """
    stripped = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    body = stripped.strip()
    if body.startswith("["):
        try:
            data = json.loads(body)
        except json.JSONDecodeError as exc:
            raise PdSyntaxError(f"bad JSON PD form: {exc.msg}", exc.pos) from exc
        quads = []
        for item in data:
            if not (isinstance(item, list) and len(item) == 4):
                raise PdStructureError(f"JSON PD entries must be 4-lists, got {item!r}")
            quads.append(tuple(int(x) for x in item))
        return _check_pd(tuple(quads))

    quads = []
    pos = 0
    while pos < len(stripped):
        if stripped[pos].isspace():
            pos += 1
            continue
        m = _TERM.match(stripped, pos)
        if not m:
            raise PdSyntaxError(f"expected X(a,b,c,d) term, found {stripped[pos:pos+12]!r}", pos)
        quads.append(tuple(int(g) for g in m.groups()))
        pos = m.end()
    return _check_pd(tuple(quads))


def _check_pd(quads: tuple) -> PdCode:
    if not quads:
        raise PdStructureError("empty diagram: no crossings")
    n = len(quads)
    counts: dict = {}
    for quad in quads:
        for e in quad:
            if e < 1:
                raise PdStructureError(f"edge ids must be positive, got {e}")
            counts[e] = counts.get(e, 0) + 1
    expected = set(range(1, 2 * n + 1))
    missing = sorted(expected - set(counts))
    extra = sorted(set(counts) - expected)
    bad = sorted(e for e, k in counts.items() if k != 2)
    if missing or extra or bad:
        raise PdStructureError(
            f"edge-count violation: missing={missing} unexpected={extra} "
            f"not-exactly-twice={bad}"
        )
    pd = PdCode(quads)
    # the edge numbering must follow a single closed strand: at every
    # crossing the outgoing edge of each strand is incoming + 1 mod 2n
    for c, quad in enumerate(quads):
        a, b, cc, d = quad
        if cc != _succ(a, n):
            raise PdStructureError(
                f"crossing {c}: under-strand breaks the single-component "
                f"numbering (in {a}, out {cc})"
            )
        if _succ(b, n) != d and _succ(d, n) != b:
            raise PdStructureError(
                f"crossing {c}: over-strand edges {b},{d} are not consecutive; "
                "multi-component or non-standard input"
            )
    return pd


def _succ(e: int, n: int) -> int:
    return e % (2 * n) + 1


def _in_slots(pd: PdCode) -> dict:
    """edge -> (crossing, slot) where the edge is incoming."""
    out = {}
    for c, (a, b, cc, d) in enumerate(pd.crossings):
        out[a] = (c, 0)
        over_in, slot = (b, 1) if _succ(b, pd.n) == d else (d, 3)
        out[over_in] = (c, slot)
    return out


def _out_slots(pd: PdCode) -> dict:
    out = {}
    for c, (a, b, cc, d) in enumerate(pd.crossings):
        out[cc] = (c, 2)
        over_out, slot = (d, 3) if _succ(b, pd.n) == d else (b, 1)
        out[over_out] = (c, slot)
    return out


def _trace_faces(pd: PdCode):
    """Orbits of the face permutation; returns (faces, dart_face).

    Each dart is indexed 4c + i; a face is a tuple of darts.
    """
    n = pd.n
    other = {}
    for e in range(1, 2 * n + 1):
        (c1, i1), (c2, i2) = pd.edge_slots(e)
        other[4 * c1 + i1] = 4 * c2 + i2
        other[4 * c2 + i2] = 4 * c1 + i1
    faces = []
    dart_face = [-1] * (4 * n)
    for start in range(4 * n):
        if dart_face[start] != -1:
            continue
        orbit = []
        d = start
        while dart_face[d] == -1:
            dart_face[d] = len(faces)
            orbit.append(d)
            o = other[d]
            c, i = divmod(o, 4)
            d = 4 * c + (i - 1) % 4
        faces.append(tuple(orbit))
    if len(faces) != n + 2:
        raise PdStructureError(
            f"non-planar rotation data: {len(faces)} faces for {n} crossings "
            f"(expected {n + 2})"
        )
    return faces, dart_face


def compute_regions(pd: PdCode, outer_choice: int | None = None) -> LabeledDiagram:
    """Enumerate faces, label regions (outer = 0) and build the visit order.

    ``outer_choice`` picks a different face as region 0, given as the label
    the face receives under the default labelling.
    """
    n = pd.n
    faces, dart_face = _trace_faces(pd)
    in_slots = _in_slots(pd)
    out_slots = _out_slots(pd)

    # default outer face: the one on the right of edge 1, i.e. traced from
    # the dart leaving edge 1's head backwards along edge 1
    c1, i1 = in_slots[1]
    default_outer = dart_face[4 * c1 + i1]

    order = [default_outer] + [f for f in range(len(faces)) if f != default_outer]
    if outer_choice is not None:
        if not (0 <= outer_choice < len(faces)):
            raise PdStructureError(f"outer_choice {outer_choice} is not a valid face label")
        chosen = order[outer_choice]
        order = [chosen] + [f for f in range(len(faces)) if f != chosen]
    label_of_face = {f: lbl for lbl, f in enumerate(order)}
    dart_region = tuple(label_of_face[dart_face[d]] for d in range(4 * n))

    regions = []
    for lbl, f in enumerate(order):
        boundary = []
        for d in faces[f]:
            c, i = divmod(d, 4)
            e = pd.crossings[c][i]
            side = "l" if out_slots[e] == (c, i) else "r"
            boundary.append((e, side))
        regions.append(Region(lbl, tuple(boundary)))

    # basepoint: edge 1 unless it no longer bounds region 0
    basepoint = 1
    if 0 not in (dart_region[4 * c1 + i1],
                 dart_region[4 * out_slots[1][0] + out_slots[1][1]]):
        bounding = sorted(e for e, _ in regions[0].boundary)
        basepoint = bounding[0]

    # walk the knot from the basepoint edge, one visit per edge arrival
    visits = []
    for k in range(2 * n):
        e = (basepoint - 1 + k) % (2 * n) + 1
        if e in in_slots and in_slots[e][1] == 0:
            c = in_slots[e][0]
            is_under = True
        else:
            c = in_slots[e][0]
            is_under = False
        corners = _corner_regions(pd, dart_region, c)
        if is_under:
            frm, to = corners[0], corners[1]
        else:
            frm = to = None
        visits.append(CrossingVisit(c, is_under, frm, to, corners, e))

    # rotate so c_1 is the first under-pass
    first_under = next(i for i, v in enumerate(visits) if v.is_under)
    visits = visits[first_under:] + visits[:first_under]

    return LabeledDiagram(
        pd=pd,
        regions=tuple(regions),
        outer_region=0,
        basepoint_edge=basepoint,
        visits=tuple(visits),
        n=n,
        dart_region=dart_region,
    )


def _corner_regions(pd: PdCode, dart_region, c: int):
    """(NW, NE, SE, SW) corner regions of crossing ``c``.

    With the incoming under-strand in slot 0 entering from the west, the
    corner between slots i and i+1 (counterclockwise) is the face of dart
    (c, i); NW is the corner between slots 3 and 0.
    """
    nw = dart_region[4 * c + 3]
    ne = dart_region[4 * c + 2]
    se = dart_region[4 * c + 1]
    sw = dart_region[4 * c + 0]
    return (nw, ne, se, sw)


def validate(d: LabeledDiagram) -> ValidationReport:
    problems = []

    alternating = all(v.is_under == (i % 2 == 0) for i, v in enumerate(d.visits))
    if not alternating:
        problems.append("under/over passes do not strictly alternate")

    reduced = True
    for c in range(d.n):
        corners = _corner_regions(d.pd, d.dart_region, c)
        if len(set(corners)) != 4:
            reduced = False
            problems.append(f"crossing {c} has repeated incident regions {corners}")

    # primeness (for reduced diagrams): no two regions share >= 2 boundary edges
    prime = True
    shared: dict = {}
    for e in range(1, 2 * d.n + 1):
        pair = frozenset((d.region_left_of_edge(e), d.region_right_of_edge(e)))
        shared.setdefault(pair, []).append(e)
    for pair, edges in shared.items():
        if len(pair) == 2 and len(edges) >= 2:
            prime = False
            problems.append(
                f"regions {sorted(pair)} share boundary edges {edges}"
            )
    return ValidationReport(alternating, reduced, prime, tuple(problems))


def gauss_code(d: LabeledDiagram) -> tuple:
    """Signed Gauss code read from the visit order (negative = under)."""
    numbers: dict = {}
    code = []
    for v in d.visits:
        if v.crossing not in numbers:
            numbers[v.crossing] = len(numbers) + 1
        mag = numbers[v.crossing]
        code.append(-mag if v.is_under else mag)
    return tuple(code)
