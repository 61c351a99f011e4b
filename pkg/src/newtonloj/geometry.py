"""Newton diagrams and the side polygons at infinity.

The diagram of a polynomial is the convex hull of its exponent support.
The right polygon collects the boundary segments facing right, joining the
ordinates ord_Y to deg_Y, ordered from the horizontal axis upward; the top
polygon is the symmetric notion for the alpha range.  All geometry is exact
integer / rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, List, Optional, Sequence, Tuple

from .poly import ExponentPair, SparsePoly
from .rational import ExtRational, ext_max

Side = str  # "right" | "top"


@dataclass(frozen=True)
class Segment:
    """A hull boundary segment with lattice endpoints.

    Endpoints are stored in (beta, alpha) ascending order so that a segment
    shared by both side polygons compares equal.  The projections s1, s2 and
    the orientation sigma are derived, never stored.
    """

    lower: ExponentPair
    upper: ExponentPair

    def __post_init__(self):
        if self.lower == self.upper:
            raise ValueError("degenerate segment")
        if (self.lower[1], self.lower[0]) > (self.upper[1], self.upper[0]):
            lo, hi = self.upper, self.lower
            object.__setattr__(self, "lower", lo)
            object.__setattr__(self, "upper", hi)

    @property
    def s1(self) -> int:
        return abs(self.upper[0] - self.lower[0])

    @property
    def s2(self) -> int:
        return abs(self.upper[1] - self.lower[1])

    @property
    def sigma(self) -> int:
        """0 if axis-parallel, else the negative of the slope's sign."""
        da = self.upper[0] - self.lower[0]
        db = self.upper[1] - self.lower[1]
        if da == 0 or db == 0:
            return 0
        return -1 if da * db > 0 else 1

    def direction(self) -> Tuple[int, int]:
        """Primitive step from lower to upper (beta-ascending by construction)."""
        da = self.upper[0] - self.lower[0]
        db = self.upper[1] - self.lower[1]
        d = int_gcd(abs(da), abs(db))
        return (da // d, db // d)

    @property
    def lattice_count(self) -> int:
        """Number of lattice steps along the segment: gcd(s1, s2)."""
        return int_gcd(self.s1, self.s2)

    def lattice_points(self) -> List[ExponentPair]:
        dx, dy = self.direction()
        a, b = self.lower
        return [(a + k * dx, b + k * dy) for k in range(self.lattice_count + 1)]

    def is_parallel_to(self, other: "Segment") -> bool:
        da1 = self.upper[0] - self.lower[0]
        db1 = self.upper[1] - self.lower[1]
        da2 = other.upper[0] - other.lower[0]
        db2 = other.upper[1] - other.lower[1]
        return da1 * db2 == da2 * db1

    def __str__(self):
        return f"({self.lower[0]},{self.lower[1]})-({self.upper[0]},{self.upper[1]})"


@dataclass(frozen=True)
class Diagram:
    """Convex hull of a support: strictly convex vertices, counterclockwise."""

    vertices: Tuple[ExponentPair, ...]
    support_size: int

    def edges(self) -> List[Segment]:
        """Boundary segments in counterclockwise cycle order."""
        n = len(self.vertices)
        if n < 2:
            return []
        if n == 2:
            return [Segment(self.vertices[0], self.vertices[1])]
        return [Segment(self.vertices[k], self.vertices[(k + 1) % n]) for k in range(n)]


@dataclass(frozen=True)
class SidePolygon:
    side: Side
    segments: Tuple[Segment, ...]

    @property
    def is_empty(self) -> bool:
        return not self.segments

    def exceptional_flags(self) -> List[bool]:
        return [is_exceptional(s, self.side) for s in self.segments]

    def non_exceptional(self) -> List[Segment]:
        return [s for s in self.segments if not is_exceptional(s, self.side)]

    @property
    def exceptional_only(self) -> bool:
        return bool(self.segments) and not self.non_exceptional()


def _cross(o: ExponentPair, a: ExponentPair, b: ExponentPair) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_diagram(p: SparsePoly) -> Diagram:
    """Exact convex hull of the support; single-point hulls are legal."""
    if p.is_zero:
        raise ValueError("zero polynomial has no Newton diagram")
    pts = sorted(p.support())
    if len(pts) == 1:
        return Diagram((pts[0],), 1)
    lower: List[ExponentPair] = []
    for q in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    upper: List[ExponentPair] = []
    for q in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    cycle = lower[:-1] + upper[:-1]
    if len(cycle) == 1:
        # All points collinear: keep the two extremes.
        cycle = [pts[0], pts[-1]]
    return Diagram(tuple(cycle), len(pts))


def _walk(cycle: Sequence[ExponentPair], start: ExponentPair, stop: ExponentPair) -> List[Segment]:
    """Edges along the counterclockwise cycle from start to stop."""
    if start == stop:
        return []
    n = len(cycle)
    i = cycle.index(start)
    out: List[Segment] = []
    while cycle[i] != stop:
        j = (i + 1) % n
        out.append(Segment(cycle[i], cycle[j]))
        i = j
    return out


def side_polygon(d: Diagram, side: Side) -> SidePolygon:
    """Boundary segments facing the given side, ordered from the nearer axis."""
    verts = d.vertices
    if len(verts) < 2:
        return SidePolygon(side, ())
    if len(verts) == 2:
        seg = Segment(verts[0], verts[1])
        if side == "right":
            keep = seg.s2 != 0
        else:
            keep = seg.s1 != 0
        return SidePolygon(side, (seg,) if keep else ())
    if side == "right":
        # From the rightmost bottom vertex up to the rightmost top vertex.
        start = max(verts, key=lambda v: (-v[1], v[0]))
        stop = max(verts, key=lambda v: (v[1], v[0]))
        return SidePolygon(side, tuple(_walk(verts, start, stop)))
    if side == "top":
        # Counterclockwise passes the top from right to left; reverse so the
        # order starts at the vertical axis.
        start = max(verts, key=lambda v: (v[0], v[1]))
        stop = max(verts, key=lambda v: (-v[0], v[1]))
        return SidePolygon(side, tuple(reversed(_walk(verts, start, stop))))
    raise ValueError(f"unknown side {side!r}")


def is_exceptional(s: Segment, side: Side) -> bool:
    """Right: joins (a, 0) to (p, 1); top: joins (0, b) to (1, q)."""
    if side == "right":
        return s.lower[1] == 0 and s.upper[1] == 1
    if side == "top":
        lo, hi = sorted((s.lower, s.upper))
        return lo[0] == 0 and hi[0] == 1
    raise ValueError(f"unknown side {side!r}")


def declivity(s: Segment, side: Side) -> Fraction:
    """(|S1|/|S2|)^signed on the right, (|S2|/|S1|)^signed on the top."""
    if side == "right":
        if s.s2 == 0:
            raise ZeroDivisionError("right declivity needs s2 != 0")
        return Fraction(s.sigma * s.s1, s.s2)
    if side == "top":
        if s.s1 == 0:
            raise ZeroDivisionError("top declivity needs s1 != 0")
        return Fraction(s.sigma * s.s2, s.s1)
    raise ValueError(f"unknown side {side!r}")


def axis_intercept(s: Segment, axis: str) -> Fraction:
    """Where the line through s meets the horizontal (alpha) or vertical (beta) axis."""
    a, b = s.lower
    if axis == "horizontal":
        return a + b * declivity(s, "right")
    if axis == "vertical":
        return a * declivity(s, "top") + b
    raise ValueError(f"unknown axis {axis!r}")


def weighted_intercept(s: Segment, support: Iterable[ExponentPair], side: Side) -> ExtRational:
    """Intercept of the supporting line of the given support parallel to s.

    Right: max over the support of alpha + beta * declivity(s, right);
    top: max of alpha * declivity(s, top) + beta.
    """
    pts = list(support)
    if not pts:
        raise ValueError("weighted intercept over empty support")
    if side == "right":
        m = declivity(s, "right")
        return ext_max(ExtRational(a + b * m) for a, b in pts)
    if side == "top":
        m = declivity(s, "top")
        return ext_max(ExtRational(a * m + b) for a, b in pts)
    raise ValueError(f"unknown side {side!r}")


def label_edges(d: Diagram) -> List[Tuple[str, Segment]]:
    """Letter labels for boundary edges, counterclockwise.

    Labelling starts at the edge leaving the vertex with smallest beta
    (ties broken by smallest alpha), so reports are deterministic.
    """
    edges = d.edges()
    if not edges:
        return []
    verts = d.vertices
    start = min(verts, key=lambda v: (v[1], v[0]))
    i = verts.index(start)
    order = [edges[(i + k) % len(edges)] for k in range(len(edges))]
    return [(chr(ord("A") + k), seg) for k, seg in enumerate(order)]


def segment_label(d: Diagram, s: Segment) -> Optional[str]:
    for name, seg in label_edges(d):
        if seg == s:
            return name
    return None
