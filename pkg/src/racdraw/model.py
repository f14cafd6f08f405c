"""Domain model shared by the layout engine, the validator, and I/O.

Everything geometric in this package is exact: grid coordinates are Python
integers (arbitrary precision), crossing locations are `fractions.Fraction`
pairs. No value in this module ever passes through binary floating point.

All types are immutable values and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction


@dataclass(frozen=True, slots=True, order=True)
class Point:
    """A grid point with exact signed integer coordinates."""

    x: int
    y: int


@dataclass(frozen=True, slots=True, order=True)
class LevelPos:
    """Address of a vertex slot: level (1 = highest row) and position (1 = leftmost)."""

    level: int
    pos: int


class SegmentClass(IntEnum):
    """Which of the seven polyline segments an edge segment is (S1 = first)."""

    S1 = 1
    S2 = 2
    S3 = 3
    S4 = 4
    S5 = 5
    S6 = 6
    S7 = 7


@dataclass(frozen=True, slots=True)
class GridParams:
    """All layout constants, derived from the requested vertex count.

    ``l`` is the ceiling fourth root of ``n_input``; the grid provisions
    ``capacity = l**4`` vertex slots arranged in ``l**2`` levels of ``l**2``
    positions each. The two slope families used by crossing segments are
    ``slope_num/slope_den`` (= 1/l^3) and its negative reciprocal; they are
    exactly perpendicular by construction.
    """

    n_input: int
    l: int
    capacity: int
    levels: int
    per_level: int
    slope_num: int
    slope_den: int
    level_gap: int
    col_gap: int
    level_shift: int

    def __post_init__(self) -> None:
        if self.n_input < 1:
            raise ValueError("empty graph")
        l = self.l
        if l < 1 or (l - 1) ** 4 >= self.n_input or self.n_input > l**4:
            raise ValueError("l must be the ceiling fourth root of n_input")
        derived = (l**4, l * l, l * l, 1, l**3, 8 * l**3 + l + 1, l**4 + 1, l * l + 8)
        actual = (
            self.capacity,
            self.levels,
            self.per_level,
            self.slope_num,
            self.slope_den,
            self.level_gap,
            self.col_gap,
            self.level_shift,
        )
        if actual != derived:
            raise ValueError("grid constants inconsistent with l")


def perpendicular(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    """True iff the two integer direction vectors meet at an exact right angle.

    Decided by the integer dot product alone; raises on a zero vector.
    """
    if d1 == (0, 0) or d2 == (0, 0):
        raise ValueError("degenerate direction")
    return d1[0] * d2[0] + d1[1] * d2[1] == 0


BEND_NAMES = ("a", "b", "c", "d", "e", "f")


@dataclass(frozen=True, slots=True)
class EdgePolyline:
    """One routed edge: vertex endpoints plus the six bend points between them.

    The 8-point chain [source, a, b, c, d, e, f, target] yields seven
    segments classed S1..S7 in order. ``k`` is the first-bend index that
    encodes the target slot.
    """

    source: int
    target: int
    source_lp: LevelPos
    target_lp: LevelPos
    source_pt: Point
    target_pt: Point
    k: int
    bends: tuple[Point, Point, Point, Point, Point, Point]

    @property
    def points(self) -> tuple[Point, ...]:
        return (self.source_pt, *self.bends, self.target_pt)

    @property
    def segments(self) -> tuple[tuple[SegmentClass, Point, Point], ...]:
        pts = self.points
        return tuple(
            (SegmentClass(r + 1), pts[r], pts[r + 1]) for r in range(7)
        )


@dataclass(frozen=True)
class Drawing:
    """A complete drawing: parameters, vertex placements, and routed edges.

    Edges are stored in input order; everything is deterministic given the
    input graph.
    """

    params: GridParams
    placements: dict[int, tuple[LevelPos, Point]]
    edges: tuple[EdgePolyline, ...]

    @property
    def n(self) -> int:
        return len(self.placements)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertex_points(self) -> dict[int, Point]:
        return {v: pt for v, (_, pt) in self.placements.items()}


class DefectKind(Enum):
    """Typed geometric defects a drawing can exhibit."""

    NON_PERPENDICULAR_CROSSING = "NonPerpendicularCrossing"
    DISALLOWED_CLASS_PAIR = "DisallowedClassPair"
    COLLINEAR_OVERLAP = "CollinearOverlap"
    ENDPOINT_TOUCHES_INTERIOR = "EndpointTouchesInterior"
    SEGMENT_THROUGH_VERTEX = "SegmentThroughVertex"
    ZERO_LENGTH_SEGMENT = "ZeroLengthSegment"
    COINCIDENT_POINTS = "CoincidentPoints"


@dataclass(frozen=True, slots=True)
class Defect:
    """One reproducible violation, localized to its participants.

    ``participants`` are stable labels ("segment:<edge>:<class>",
    "vertex:<id>", "bend:<edge>:<letter>"); ``location`` holds one or two
    exact "x,y" coordinate strings (rationals as "p/q").
    """

    kind: DefectKind
    participants: tuple[str, ...]
    location: tuple[str, ...]

    def sort_key(self) -> tuple:
        return (self.kind.value, self.participants, self.location)


@dataclass(frozen=True, slots=True)
class Crossing:
    """A proper interior-interior intersection of two classed segments."""

    edge_a: int
    class_a: SegmentClass
    edge_b: int
    class_b: SegmentClass
    point: tuple[Fraction, Fraction]
    perpendicular: bool

    def sort_key(self) -> tuple:
        return (self.edge_a, self.edge_b, self.class_a, self.class_b, self.point)


def format_exact(value: int | Fraction) -> str:
    """Canonical decimal/rational string for an exact coordinate."""
    return str(value)


def format_point(x: int | Fraction, y: int | Fraction) -> str:
    return f"{format_exact(x)},{format_exact(y)}"


class CrossingReport:
    """Certification result: crossings, violations, extent, per-class counts.

    Canonically ordered ((edge_a, edge_b, class_a, class_b); that key is
    unique per segment pair) so identical drawings always serialize to
    identical bytes regardless of how the report was computed.

    Crossings are held columnar (complete drawings produce millions) and
    materialize into ``Crossing`` values on first access to ``crossings``.
    Columns may be plain sequences or NumPy int64 vectors; both are exact.
    """

    __slots__ = (
        "n",
        "m",
        "violations",
        "bbox",
        "pair_counts",
        "_cols",
        "_materialized",
    )

    def __init__(
        self,
        n: int,
        m: int,
        violations: tuple[Defect, ...],
        bbox: tuple[int, int, int, int],
        pair_counts: dict[str, int],
        crossing_columns: tuple,
    ):
        # columns: edge_a, edge_b, class_a, class_b, x_num, y_num, den, perp
        self.n = n
        self.m = m
        self.violations = violations
        self.bbox = bbox
        self.pair_counts = pair_counts
        self._cols = crossing_columns
        self._materialized: tuple[Crossing, ...] | None = None

    @property
    def crossing_count(self) -> int:
        return len(self._cols[0])

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def crossings(self) -> tuple[Crossing, ...]:
        if self._materialized is None:
            ea, eb, ca, cb, xn, yn, dn, pp = self._cols
            self._materialized = tuple(
                Crossing(
                    int(ea[i]),
                    SegmentClass(int(ca[i])),
                    int(eb[i]),
                    SegmentClass(int(cb[i])),
                    (Fraction(int(xn[i]), int(dn[i])), Fraction(int(yn[i]), int(dn[i]))),
                    bool(pp[i]),
                )
                for i in range(len(ea))
            )
        return self._materialized

    def all_perpendicular(self) -> bool:
        """True iff every recorded crossing meets at an exact right angle."""
        perp = self._cols[7]
        return all(bool(p) for p in perp) if isinstance(perp, (list, tuple)) else bool(
            perp.all()
        )

    def to_json_dict(self) -> dict:
        xmin, xmax, ymin, ymax = self.bbox
        ea, eb, ca, cb, xn, yn, dn, pp = self._cols
        return {
            "schema": "rac-report/1",
            "n": self.n,
            "m": self.m,
            "crossing_count": self.crossing_count,
            "pair_counts": {k: self.pair_counts[k] for k in sorted(self.pair_counts)},
            "bbox": {
                "xmin": str(xmin),
                "xmax": str(xmax),
                "ymin": str(ymin),
                "ymax": str(ymax),
            },
            "crossings": [
                {
                    "edge_a": int(ea[i]),
                    "class_a": SegmentClass(int(ca[i])).name,
                    "edge_b": int(eb[i]),
                    "class_b": SegmentClass(int(cb[i])).name,
                    "x": format_exact(Fraction(int(xn[i]), int(dn[i]))),
                    "y": format_exact(Fraction(int(yn[i]), int(dn[i]))),
                    "perpendicular": bool(pp[i]),
                }
                for i in range(len(ea))
            ],
            "violations": [
                {
                    "kind": d.kind.value,
                    "participants": list(d.participants),
                    "location": list(d.location),
                }
                for d in self.violations
            ],
        }

    def to_json_bytes(self) -> bytes:
        import json

        return json.dumps(
            self.to_json_dict(), sort_keys=True, separators=(",", ":")
        ).encode("ascii")

    def __eq__(self, other) -> bool:
        if not isinstance(other, CrossingReport):
            return NotImplemented
        return self.to_json_bytes() == other.to_json_bytes()

    def __repr__(self) -> str:
        return (
            f"CrossingReport(n={self.n}, m={self.m}, "
            f"crossings={self.crossing_count}, violations={len(self.violations)})"
        )
