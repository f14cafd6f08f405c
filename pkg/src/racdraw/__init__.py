"""Six-bend right-angle-crossing drawings on an integer grid.

Public surface: the layout engine (place vertices, route edges, draw whole
graphs), the exact validator (certify the right-angle property, enumerate
crossings, measure the grid box), and I/O (edge lists, JSON documents,
SVG).
"""

from .layout import (
    GraphInput,
    draw_complete,
    draw_graph,
    params_from_n,
    place_vertices,
    route_edge,
)
from .model import (
    Crossing,
    CrossingReport,
    Defect,
    DefectKind,
    Drawing,
    EdgePolyline,
    GridParams,
    LevelPos,
    Point,
    SegmentClass,
    perpendicular,
)
from .io import (
    DocumentError,
    DuplicateEdgeError,
    EdgeListError,
    MalformedLineError,
    MissingHeaderError,
    NonIntegerCoordinateError,
    SelfLoopError,
    VertexRangeError,
    dumps_drawing,
    loads_drawing,
    parse_edge_list,
    read_drawing,
    serialize_edge_list,
    write_drawing,
)
from .svg import SvgOptions, render_svg
from .validator import (
    CandidatePair,
    PairKind,
    PairResult,
    StatsReport,
    ValidationMode,
    bounding_box,
    filtered_pair_stream,
    segment_pair,
    stats,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "CandidatePair",
    "Crossing",
    "CrossingReport",
    "Defect",
    "DefectKind",
    "DocumentError",
    "Drawing",
    "DuplicateEdgeError",
    "EdgeListError",
    "EdgePolyline",
    "GraphInput",
    "GridParams",
    "LevelPos",
    "MalformedLineError",
    "MissingHeaderError",
    "NonIntegerCoordinateError",
    "PairKind",
    "PairResult",
    "Point",
    "SegmentClass",
    "SelfLoopError",
    "StatsReport",
    "SvgOptions",
    "ValidationMode",
    "VertexRangeError",
    "bounding_box",
    "draw_complete",
    "draw_graph",
    "dumps_drawing",
    "filtered_pair_stream",
    "loads_drawing",
    "params_from_n",
    "parse_edge_list",
    "perpendicular",
    "place_vertices",
    "read_drawing",
    "render_svg",
    "route_edge",
    "segment_pair",
    "serialize_edge_list",
    "stats",
    "validate",
    "write_drawing",
]
