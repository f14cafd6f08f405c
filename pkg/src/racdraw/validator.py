"""Independent certification that a drawing is right-angle-crossing.

The validator never trusts the layout engine: it enumerates segment pairs,
classifies every intersection with exact integer/rational arithmetic, and
reports crossings and defects as data. Two enumeration modes exist:

* ``BRUTE_FORCE``: a plain O(P^2) scan over all segment pairs in pure
  Python big-int arithmetic; the trust anchor.
* ``FILTERED``: prunes pairs using the drawing's slope structure (segments
  of the same exact slope family can only overlap, never cross, so they are
  tested only for collinearity) plus bounding-interval overlap on sorted
  spans. Family membership is decided by each segment's actual direction,
  not by its class label, so corrupted inputs cannot defeat the filter.

Both modes must produce byte-identical reports. All accumulation is
order-independent: results are collected and canonically sorted before the
report is assembled, so any parallel schedule would yield the same bytes.
Validation never mutates the drawing.

No floating-point operation participates in any predicate. The fast path
uses NumPy int64 vectors only under checked magnitude bounds (coordinates
below 2**28 keep every orientation product under 2**60; crossing-point
numerators additionally need coordinates below 2**19); beyond a bound the
affected stage falls back to exact big-int Python, bit-identically.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator

import numpy as np

from .model import (
    BEND_NAMES,
    CrossingReport,
    Defect,
    DefectKind,
    Drawing,
    Point,
    SegmentClass,
    format_point,
)

# Class pairs that are allowed to cross (always at a right angle).
ALLOWED_CLASS_PAIRS = frozenset({(2, 3), (3, 4), (4, 5)})

# Slope families: POS holds directions parallel to (l^3, 1), NEG those
# parallel to (1, -l^3), VERT the vertical ones; VAR is everything else.
_POS, _NEG, _VERT, _VAR = 0, 1, 2, 3

# int64 stays exact through the vectorized orientation tests below this.
_VECTOR_COORD_BOUND = 1 << 28
# ... and through crossing-point numerators below this (24 * b**3 < 2**62).
_POINT_VECTOR_BOUND = 1 << 19
# bbox comparisons involve no products; any int64-representable value works.
_BBOX_COORD_BOUND = 1 << 62


class ValidationMode(Enum):
    BRUTE_FORCE = "brute"
    FILTERED = "filtered"


class PairKind(Enum):
    DISJOINT = "Disjoint"
    SHARED_ENDPOINT_ONLY = "SharedEndpointOnly"
    PROPER_CROSSING = "ProperCrossing"
    TOUCH = "Touch"
    OVERLAP = "Overlap"


@dataclass(frozen=True, slots=True)
class PairResult:
    """Classification of how two segments intersect.

    ``point`` is set for shared endpoints, touches, and proper crossings
    (exact rationals; integral cases are integer-valued Fractions);
    ``overlap`` holds the endpoints of the shared sub-segment.
    """

    kind: PairKind
    point: tuple[Fraction, Fraction] | None = None
    overlap: tuple[Point, Point] | None = None


def _classify(ax, ay, bx, by, cx, cy, dx, dy):
    """Exact intersection classification of segments (a,b) and (c,d).

    Returns None for disjoint, else a tagged tuple:
    ("shared", x, y) | ("touch", x, y) | ("proper", xn, yn, den) with the
    crossing at (xn/den, yn/den) | ("overlap", x1, y1, x2, y2).
    """
    ux, uy = bx - ax, by - ay
    vx, vy = dx - cx, dy - cy
    rx, ry = cx - ax, cy - ay
    den = ux * vy - uy * vx
    if den:
        tn = rx * vy - ry * vx
        un = rx * uy - ry * ux
        if den < 0:
            den, tn, un = -den, -tn, -un
        if tn < 0 or tn > den or un < 0 or un > den:
            return None
        t_end = tn == 0 or tn == den
        u_end = un == 0 or un == den
        if t_end and u_end:
            return ("shared", ax, ay) if tn == 0 else ("shared", bx, by)
        if t_end:
            return ("touch", ax, ay) if tn == 0 else ("touch", bx, by)
        if u_end:
            return ("touch", cx, cy) if un == 0 else ("touch", dx, dy)
        return ("proper", ax * den + tn * ux, ay * den + tn * uy, den)
    # Parallel: intersect only if collinear, and then only along the line.
    if ux * ry - uy * rx:
        return None
    ends = ((ax, ay), (bx, by), (cx, cy), (dx, dy))
    if ux != 0:
        lo = max(min(ax, bx), min(cx, dx))
        hi = min(max(ax, bx), max(cx, dx))
        axis = 0
    else:
        lo = max(min(ay, by), min(cy, dy))
        hi = min(max(ay, by), max(cy, dy))
        axis = 1
    if lo > hi:
        return None
    first = next(p for p in ends if p[axis] == lo)
    if lo == hi:
        return ("shared", first[0], first[1])
    last = next(p for p in ends if p[axis] == hi)
    return ("overlap", first[0], first[1], last[0], last[1])


def segment_pair(seg1, seg2) -> PairResult:
    """Classify the intersection of two segments with integer endpoints.

    Accepts ``(Point, Point)`` pairs or the ``(SegmentClass, Point, Point)``
    triples produced by ``EdgePolyline.segments``. Raises on zero-length
    input.
    """
    p1, q1 = seg1[-2], seg1[-1]
    p2, q2 = seg2[-2], seg2[-1]
    if p1 == q1 or p2 == q2:
        raise ValueError("zero-length segment")
    res = _classify(p1.x, p1.y, q1.x, q1.y, p2.x, p2.y, q2.x, q2.y)
    if res is None:
        return PairResult(PairKind.DISJOINT)
    tag = res[0]
    if tag == "shared":
        return PairResult(
            PairKind.SHARED_ENDPOINT_ONLY, point=(Fraction(res[1]), Fraction(res[2]))
        )
    if tag == "touch":
        return PairResult(PairKind.TOUCH, point=(Fraction(res[1]), Fraction(res[2])))
    if tag == "proper":
        xn, yn, den = res[1], res[2], res[3]
        return PairResult(
            PairKind.PROPER_CROSSING, point=(Fraction(xn, den), Fraction(yn, den))
        )
    return PairResult(
        PairKind.OVERLAP,
        overlap=(Point(res[1], res[2]), Point(res[3], res[4])),
    )


# ---------------------------------------------------------------------------
# Segment table and scans
# ---------------------------------------------------------------------------


class _Table:
    """Flattened view of a drawing's segments for the pair scans."""

    __slots__ = (
        "edge",
        "cls",
        "ax",
        "ay",
        "bx",
        "by",
        "active",
        "zero",
        "max_abs",
        "arrays",
    )

    def __init__(self, d: Drawing):
        edge, cls = [], []
        ax, ay, bx, by = [], [], [], []
        for e_idx, poly in enumerate(d.edges):
            pts = poly.points
            for r in range(7):
                p, q = pts[r], pts[r + 1]
                edge.append(e_idx)
                cls.append(r + 1)
                ax.append(p.x)
                ay.append(p.y)
                bx.append(q.x)
                by.append(q.y)
        self.edge, self.cls = edge, cls
        self.ax, self.ay, self.bx, self.by = ax, ay, bx, by
        self.zero = [i for i in range(len(edge)) if ax[i] == bx[i] and ay[i] == by[i]]
        zero = set(self.zero)
        self.active = [i for i in range(len(edge)) if i not in zero]
        coords = [abs(v) for vs in (ax, ay, bx, by) for v in vs]
        for _, pt in d.placements.values():
            coords.append(abs(pt.x))
            coords.append(abs(pt.y))
        self.max_abs = max(coords, default=0)
        if self.max_abs < _BBOX_COORD_BOUND and edge:
            self.arrays = (
                np.array(ax, dtype=np.int64),
                np.array(ay, dtype=np.int64),
                np.array(bx, dtype=np.int64),
                np.array(by, dtype=np.int64),
                np.array(edge, dtype=np.int64),
                np.array(cls, dtype=np.int64),
            )
        else:
            self.arrays = None

    def label(self, i: int) -> str:
        return f"segment:{self.edge[i]}:S{self.cls[i]}"


def _pair_labels(t: _Table, i: int, j: int) -> tuple[str, ...]:
    return tuple(sorted((t.label(i), t.label(j))))


def _scan_zero_length(t: _Table, defects: list[Defect]) -> None:
    for i in t.zero:
        defects.append(
            Defect(
                DefectKind.ZERO_LENGTH_SEGMENT,
                (t.label(i),),
                (format_point(t.ax[i], t.ay[i]),),
            )
        )


def _scan_coincident_points(d: Drawing, defects: list[Defect]) -> None:
    tagged: dict[tuple[int, int], list[str]] = {}
    for v in sorted(d.placements):
        pt = d.placements[v][1]
        tagged.setdefault((pt.x, pt.y), []).append(f"vertex:{v}")
    for e_idx, poly in enumerate(d.edges):
        for b_idx, bend in enumerate(poly.bends):
            tagged.setdefault((bend.x, bend.y), []).append(
                f"bend:{e_idx}:{BEND_NAMES[b_idx]}"
            )
    for (x, y), tags in tagged.items():
        if len(tags) >= 2:
            defects.append(
                Defect(
                    DefectKind.COINCIDENT_POINTS,
                    tuple(sorted(tags)),
                    (format_point(x, y),),
                )
            )


def _scan_vertex_piercings(d: Drawing, t: _Table, defects: list[Defect]) -> None:
    """Flag any segment whose interior passes through a vertex point."""
    if not t.active:
        return
    idx = t.active
    use_numpy = t.max_abs < _VECTOR_COORD_BOUND and t.arrays is not None
    if use_numpy:
        act = np.array(idx, dtype=np.int64)
        axv, ayv = t.arrays[0][act], t.arrays[1][act]
        uxv = t.arrays[2][act] - axv
        uyv = t.arrays[3][act] - ayv
        dd = uxv * uxv + uyv * uyv
    for v in sorted(d.placements):
        pt = d.placements[v][1]
        if use_numpy:
            wx = pt.x - axv
            wy = pt.y - ayv
            on_line = uxv * wy - uyv * wx == 0
            tdot = wx * uxv + wy * uyv
            hits = np.nonzero(on_line & (tdot > 0) & (tdot < dd))[0]
            hit_idx = [idx[int(h)] for h in hits]
        else:
            hit_idx = []
            for i in idx:
                ux, uy = t.bx[i] - t.ax[i], t.by[i] - t.ay[i]
                wx, wy = pt.x - t.ax[i], pt.y - t.ay[i]
                if ux * wy - uy * wx == 0:
                    td = wx * ux + wy * uy
                    if 0 < td < ux * ux + uy * uy:
                        hit_idx.append(i)
        for i in hit_idx:
            defects.append(
                Defect(
                    DefectKind.SEGMENT_THROUGH_VERTEX,
                    (t.label(i), f"vertex:{v}"),
                    (format_point(pt.x, pt.y),),
                )
            )


# ---------------------------------------------------------------------------
# Pair processing (shared by both modes)
# ---------------------------------------------------------------------------

# A crossing row is (edge_a, edge_b, class_a, class_b, xn, yn, den, perp).


def _record_crossing(t, i, j, xn, yn, den, perp, rows, defects) -> None:
    ea, ca, eb, cb = t.edge[i], t.cls[i], t.edge[j], t.cls[j]
    if (eb, cb) < (ea, ca):
        ea, ca, eb, cb = eb, cb, ea, ca
    rows.append((ea, eb, ca, cb, xn, yn, den, perp))
    allowed = (min(ca, cb), max(ca, cb)) in ALLOWED_CLASS_PAIRS
    if perp and allowed:
        return
    loc = (format_point(Fraction(xn, den), Fraction(yn, den)),)
    labels = _pair_labels(t, i, j)
    if not perp:
        defects.append(Defect(DefectKind.NON_PERPENDICULAR_CROSSING, labels, loc))
    if not allowed:
        defects.append(Defect(DefectKind.DISALLOWED_CLASS_PAIR, labels, loc))


def _finish_pair(t: _Table, i: int, j: int, rows: list, defects: list) -> None:
    res = _classify(
        t.ax[i], t.ay[i], t.bx[i], t.by[i], t.ax[j], t.ay[j], t.bx[j], t.by[j]
    )
    if res is None:
        return
    tag = res[0]
    if tag == "shared":
        # Legal where construction forces it (common vertex, consecutive
        # segments); every illegal case is a point coincidence among tagged
        # vertex/bend points, which the coincidence scan reports.
        return
    if tag == "touch":
        defects.append(
            Defect(
                DefectKind.ENDPOINT_TOUCHES_INTERIOR,
                _pair_labels(t, i, j),
                (format_point(res[1], res[2]),),
            )
        )
        return
    if tag == "overlap":
        defects.append(
            Defect(
                DefectKind.COLLINEAR_OVERLAP,
                _pair_labels(t, i, j),
                (format_point(res[1], res[2]), format_point(res[3], res[4])),
            )
        )
        return
    xn, yn, den = res[1], res[2], res[3]
    ux, uy = t.bx[i] - t.ax[i], t.by[i] - t.ay[i]
    vx, vy = t.bx[j] - t.ax[j], t.by[j] - t.ay[j]
    _record_crossing(
        t, i, j, xn, yn, den, ux * vx + uy * vy == 0, rows, defects
    )


# ---------------------------------------------------------------------------
# Filtered candidate generation
# ---------------------------------------------------------------------------


def _families(t: _Table, slope_den: int) -> list[int]:
    fams = []
    l3 = slope_den
    for i in t.active:
        ux, uy = t.bx[i] - t.ax[i], t.by[i] - t.ay[i]
        if ux == uy * l3:
            fams.append(_POS)
        elif uy == -ux * l3:
            fams.append(_NEG)
        elif ux == 0:
            fams.append(_VERT)
        else:
            fams.append(_VAR)
    return fams


def _collinear_candidates(
    t: _Table, fams: list[int], slope_den: int
) -> Iterator[tuple[int, int]]:
    """Same-slope-family pairs that lie on one line with overlapping spans.

    Parallel segments can never properly cross, so within a family only
    collinear overlap is possible; bucket by the line invariant and sweep
    sorted 1D spans.
    """
    l3 = slope_den
    buckets: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
    for pos, i in enumerate(t.active):
        fam = fams[pos]
        if fam == _VAR:
            continue
        if fam == _POS:
            key = t.ax[i] - t.ay[i] * l3
            lo, hi = sorted((t.ax[i], t.bx[i]))
        elif fam == _NEG:
            key = t.ax[i] * l3 + t.ay[i]
            lo, hi = sorted((t.ax[i], t.bx[i]))
        else:
            key = t.ax[i]
            lo, hi = sorted((t.ay[i], t.by[i]))
        buckets.setdefault((fam, key), []).append((lo, hi, i))
    for group in buckets.values():
        if len(group) < 2:
            continue
        group.sort()
        open_spans: list[tuple[int, int]] = []
        for lo, hi, i in group:
            open_spans = [(h, g) for h, g in open_spans if h > lo]
            for _, g in open_spans:
                yield (g, i) if g < i else (i, g)
            open_spans.append((hi, i))


def _crossing_group_pairs(
    t: _Table, fams: list[int]
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """Cross-family candidate pairs with overlapping bounding intervals."""
    if t.arrays is None:
        yield from _crossing_group_pairs_bigint(t, fams)
        return
    act = np.array(t.active, dtype=np.int64)
    axv, ayv = t.arrays[0][act], t.arrays[1][act]
    bxv, byv = t.arrays[2][act], t.arrays[3][act]
    # Comparisons only, so a narrow dtype is exact whenever it fits.
    dtype = np.int32 if t.max_abs < (1 << 31) else np.int64
    xmin = np.minimum(axv, bxv).astype(dtype)
    xmax = np.maximum(axv, bxv).astype(dtype)
    ymin = np.minimum(ayv, byv).astype(dtype)
    ymax = np.maximum(ayv, byv).astype(dtype)
    famv = np.array(fams, dtype=np.int64)
    members = {f: np.nonzero(famv == f)[0] for f in (_POS, _NEG, _VERT, _VAR)}
    groups = [
        (_POS, _NEG),
        (_POS, _VERT),
        (_POS, _VAR),
        (_NEG, _VERT),
        (_NEG, _VAR),
        (_VERT, _VAR),
        (_VAR, _VAR),
    ]
    chunk = 2048
    for fa, fb in groups:
        ia, ib = members[fa], members[fb]
        if len(ia) == 0 or len(ib) == 0:
            continue
        xmin_b, xmax_b = np.ascontiguousarray(xmin[ib]), np.ascontiguousarray(xmax[ib])
        ymin_b, ymax_b = np.ascontiguousarray(ymin[ib]), np.ascontiguousarray(ymax[ib])
        for s in range(0, len(ia), chunk):
            ic = ia[s : s + chunk]
            mask = (xmin[ic][:, None] <= xmax_b[None, :]) & (
                xmax[ic][:, None] >= xmin_b[None, :]
            )
            mask &= ymin[ic][:, None] <= ymax_b[None, :]
            mask &= ymax[ic][:, None] >= ymin_b[None, :]
            if fa == fb:
                mask &= ic[:, None] < ib[None, :]
            ii, jj = np.nonzero(mask)
            if len(ii):
                yield act[ic[ii]], act[ib[jj]]


def _crossing_group_pairs_bigint(
    t: _Table, fams: list[int]
) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    # Exact fallback for coordinates beyond int64; same candidate set.
    out_i, out_j = [], []
    active = t.active
    spans = []
    for pos, i in enumerate(active):
        spans.append(
            (
                min(t.ax[i], t.bx[i]),
                max(t.ax[i], t.bx[i]),
                min(t.ay[i], t.by[i]),
                max(t.ay[i], t.by[i]),
                fams[pos],
            )
        )
    for a_pos in range(len(active)):
        x0, x1, y0, y1, fa = spans[a_pos]
        for b_pos in range(a_pos + 1, len(active)):
            u0, u1, v0, v1, fb = spans[b_pos]
            if fa == fb and fa != _VAR:
                continue
            if x0 <= u1 and x1 >= u0 and y0 <= v1 and y1 >= v0:
                out_i.append(active[a_pos])
                out_j.append(active[b_pos])
    if out_i:
        yield np.array(out_i, dtype=object), np.array(out_j, dtype=object)


@dataclass(frozen=True, slots=True)
class CandidatePair:
    """One pair emitted by the filter, tagged with why it must be checked."""

    kind: str  # "crossing" or "collinear"
    a: tuple[int, SegmentClass]
    b: tuple[int, SegmentClass]


def filtered_pair_stream(d: Drawing) -> Iterator[CandidatePair]:
    """Stream the candidate segment pairs the filtered mode examines.

    Yields a superset of every pair that can properly cross or overlap;
    pairs within one exact slope family appear only as "collinear"
    candidates, everything else passes the sorted-span interval filter.
    """
    t = _Table(d)
    fams = _families(t, d.params.slope_den)
    for i, j in _collinear_candidates(t, fams, d.params.slope_den):
        yield CandidatePair(
            "collinear",
            (t.edge[i], SegmentClass(t.cls[i])),
            (t.edge[j], SegmentClass(t.cls[j])),
        )
    for ia, jb in _crossing_group_pairs(t, fams):
        for i, j in zip(ia.tolist(), jb.tolist()):
            yield CandidatePair(
                "crossing",
                (t.edge[i], SegmentClass(t.cls[i])),
                (t.edge[j], SegmentClass(t.cls[j])),
            )


def _run_filtered(t: _Table, params, rows: list, col_chunks: list, defects: list) -> None:
    fams = _families(t, params.slope_den)
    for i, j in _collinear_candidates(t, fams, params.slope_den):
        _finish_pair(t, i, j, rows, defects)
    if t.arrays is None:
        for ia, jb in _crossing_group_pairs(t, fams):
            for i, j in zip(ia.tolist(), jb.tolist()):
                _finish_pair(t, int(i), int(j), rows, defects)
        return
    AX, AY, BX, BY, EG, CL = t.arrays
    vector_safe = t.max_abs < _VECTOR_COORD_BOUND
    point_safe = t.max_abs < _POINT_VECTOR_BOUND
    for ia, jb in _crossing_group_pairs(t, fams):
        if not vector_safe:
            for i, j in zip(ia.tolist(), jb.tolist()):
                _finish_pair(t, int(i), int(j), rows, defects)
            continue
        ax, ay = AX[ia], AY[ia]
        ux, uy = BX[ia] - ax, BY[ia] - ay
        cx, cy = AX[jb], AY[jb]
        vx, vy = BX[jb] - cx, BY[jb] - cy
        rx, ry = cx - ax, cy - ay
        den = ux * vy - uy * vx
        tn = rx * vy - ry * vx
        un = rx * uy - ry * ux
        neg = den < 0
        dn = np.where(neg, -den, den)
        tn = np.where(neg, -tn, tn)
        un = np.where(neg, -un, un)
        parallel = den == 0
        inside = ~parallel & (tn >= 0) & (tn <= dn) & (un >= 0) & (un <= dn)
        proper = inside & (tn > 0) & (tn < dn) & (un > 0) & (un < dn)
        # Exceptional pairs (parallel geometry, endpoint contacts, or points
        # too large to vectorize) finish in exact big-int Python.
        exceptional = parallel | (inside & ~proper)
        if not point_safe:
            exceptional = exceptional | proper
            proper = np.zeros_like(proper)
        for pos in np.nonzero(exceptional)[0]:
            _finish_pair(t, int(ia[pos]), int(jb[pos]), rows, defects)
        sel = np.nonzero(proper)[0]
        if len(sel) == 0:
            continue
        dn_s, tn_s = dn[sel], tn[sel]
        xn = ax[sel] * dn_s + tn_s * ux[sel]
        yn = ay[sel] * dn_s + tn_s * uy[sel]
        perp = ux[sel] * vx[sel] + uy[sel] * vy[sel] == 0
        ea, ca = EG[ia[sel]], CL[ia[sel]]
        eb, cb = EG[jb[sel]], CL[jb[sel]]
        swap = (eb < ea) | ((eb == ea) & (cb < ca))
        ea, eb = np.where(swap, eb, ea), np.where(swap, ea, eb)
        ca, cb = np.where(swap, cb, ca), np.where(swap, ca, cb)
        cmin, cmax = np.minimum(ca, cb), np.maximum(ca, cb)
        allowed = (
            ((cmin == 2) & (cmax == 3))
            | ((cmin == 3) & (cmax == 4))
            | ((cmin == 4) & (cmax == 5))
        )
        clean = perp & allowed
        for pos in np.nonzero(~clean)[0]:
            _finish_pair(t, int(ia[sel[pos]]), int(jb[sel[pos]]), rows, defects)
        keep = np.nonzero(clean)[0]
        if len(keep):
            col_chunks.append(
                (
                    ea[keep],
                    eb[keep],
                    ca[keep],
                    cb[keep],
                    xn[keep],
                    yn[keep],
                    dn_s[keep],
                    perp[keep],
                )
            )


def _run_brute(t: _Table, rows: list, defects: list) -> None:
    act = t.active
    finish = _finish_pair
    for a_pos in range(len(act)):
        i = act[a_pos]
        for b_pos in range(a_pos + 1, len(act)):
            finish(t, i, act[b_pos], rows, defects)


def _assemble_columns(rows: list, col_chunks: list) -> tuple:
    """Merge row tuples and columnar chunks into canonically sorted columns."""
    if col_chunks:
        if rows:
            by_col = list(zip(*rows))
            col_chunks.append(
                tuple(np.array(c, dtype=np.int64) for c in by_col[:7])
                + (np.array(by_col[7], dtype=bool),)
            )
        cols = tuple(
            np.concatenate([chunk[k] for chunk in col_chunks]) for k in range(8)
        )
        order = np.lexsort((cols[3], cols[2], cols[1], cols[0]))
        return tuple(c[order] for c in cols)
    if not rows:
        return ((), (), (), (), (), (), (), ())
    rows.sort()
    return tuple(zip(*rows))


def _pair_count_histogram(cols: tuple) -> dict[str, int]:
    ca, cb = cols[2], cols[3]
    if len(ca) == 0:
        return {}
    if isinstance(ca, np.ndarray):
        cmin, cmax = np.minimum(ca, cb), np.maximum(ca, cb)
        codes, counts = np.unique(cmin * 10 + cmax, return_counts=True)
        return {
            f"S{int(code) // 10}xS{int(code) % 10}": int(count)
            for code, count in zip(codes, counts)
        }
    counter = Counter((min(a, b), max(a, b)) for a, b in zip(ca, cb))
    return {f"S{a}xS{b}": count for (a, b), count in sorted(counter.items())}


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------


def bounding_box(d: Drawing) -> tuple[int, int, int, int]:
    """Exact (xmin, xmax, ymin, ymax) over all vertex and bend points."""
    if not d.placements:
        raise ValueError("empty drawing")
    xs, ys = [], []
    for _, pt in d.placements.values():
        xs.append(pt.x)
        ys.append(pt.y)
    for poly in d.edges:
        for bend in poly.bends:
            xs.append(bend.x)
            ys.append(bend.y)
    return (min(xs), max(xs), min(ys), max(ys))


def validate(
    d: Drawing, mode: ValidationMode = ValidationMode.FILTERED
) -> CrossingReport:
    """Certify ``d``: enumerate crossings, flag every defect, measure extent.

    The report is empty of violations iff the drawing is a right-angle
    crossing drawing with the expected crossing structure. Defects are data,
    not errors.
    """
    t = _Table(d)
    rows: list = []
    col_chunks: list = []
    defects: list[Defect] = []
    _scan_zero_length(t, defects)
    _scan_coincident_points(d, defects)
    _scan_vertex_piercings(d, t, defects)
    if mode is ValidationMode.BRUTE_FORCE:
        _run_brute(t, rows, defects)
    else:
        _run_filtered(t, d.params, rows, col_chunks, defects)
    cols = _assemble_columns(rows, col_chunks)
    defects.sort(key=Defect.sort_key)
    return CrossingReport(
        n=d.n,
        m=d.m,
        violations=tuple(defects),
        bbox=bounding_box(d),
        pair_counts=_pair_count_histogram(cols),
        crossing_columns=cols,
    )


@dataclass(frozen=True)
class StatsReport:
    """Headline figures for a drawing and its certification."""

    n: int
    m: int
    bends_per_edge: int
    width: int
    height: int
    area: int
    area_ratio: float
    crossing_count: int
    pair_counts: dict[str, int]
    violation_count: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "bends_per_edge": self.bends_per_edge,
            "width": str(self.width),
            "height": str(self.height),
            "area": str(self.area),
            "area_ratio": self.area_ratio,
            "crossing_count": self.crossing_count,
            "pair_counts": {k: self.pair_counts[k] for k in sorted(self.pair_counts)},
            "violation_count": self.violation_count,
        }

    def format_text(self) -> str:
        lines = [
            f"n                {self.n}",
            f"m                {self.m}",
            f"bends per edge   {self.bends_per_edge}",
            f"width            {self.width}",
            f"height           {self.height}",
            f"area             {self.area}",
            f"area / n^2.75    {self.area_ratio:.4f}",
            f"crossings        {self.crossing_count}",
        ]
        for key in sorted(self.pair_counts):
            lines.append(f"  {key}          {self.pair_counts[key]}")
        lines.append(f"violations       {self.violation_count}")
        return "\n".join(lines)


def stats(
    d: Drawing,
    report: CrossingReport | None = None,
    mode: ValidationMode = ValidationMode.FILTERED,
) -> StatsReport:
    """Compute the drawing's headline numbers, validating if needed."""
    if report is None:
        report = validate(d, mode)
    xmin, xmax, ymin, ymax = report.bbox
    width, height = xmax - xmin, ymax - ymin
    bends = max((len(poly.bends) for poly in d.edges), default=0)
    return StatsReport(
        n=d.n,
        m=d.m,
        bends_per_edge=bends,
        width=width,
        height=height,
        area=width * height,
        area_ratio=float(width * height) / math.pow(float(d.n), 2.75),
        crossing_count=report.crossing_count,
        pair_counts=dict(report.pair_counts),
        violation_count=len(report.violations),
    )
