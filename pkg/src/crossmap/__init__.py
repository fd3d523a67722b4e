"""crossmap: in-memory cross-filtering analytics for point-geolocated tables.

Declarative configs turn a CSV/JSON/GeoJSON file into a coordinated-view
dashboard: every map, chart, and table filter narrows every other view, at
interactive latency on million-record datasets.
"""

from .dataset import ColumnSchema, Dataset
from .errors import (
    CrossmapError,
    EmptySample,
    IllegalFilterKind,
    IllegalReducer,
    IncompatibleColumnKind,
    InvalidBbox,
    InvalidFilterSpec,
    LatLonOutOfRange,
    MalformedInput,
    MissingColumn,
    NoTextDimension,
    NonFiniteInput,
    NonPointGeometry,
    NonPositiveWidth,
    NotHierarchyDimension,
    NotScalarDimension,
    TooManyDimensions,
    TypeCoercionFailure,
    UnknownDimension,
    UnknownSortColumn,
)
from .engine import (
    BBox,
    Bin,
    ChangeSummary,
    COUNT,
    DimensionSpec,
    Engine,
    GroupResult,
    PathPrefix,
    Range,
    Reducer,
    RollupNode,
    TablePage,
    Term,
    ValueSet,
    build_engine,
    sum_of,
)
from .geo import Cluster, MercatorPoint, bbox_pass, cluster, project
from .ingest import (
    AppConfig,
    Diagnostic,
    build_app,
    infer_schema,
    load_config,
    parse_tabular,
    validate_config,
)
from .textviz import TermCount, term_counts, tokenize

__version__ = "0.1.0"

__all__ = [
    "AppConfig", "BBox", "Bin", "ChangeSummary", "Cluster", "ColumnSchema",
    "COUNT", "CrossmapError", "Dataset", "Diagnostic", "DimensionSpec",
    "EmptySample", "Engine", "GroupResult", "IllegalFilterKind",
    "IllegalReducer", "IncompatibleColumnKind", "InvalidBbox",
    "InvalidFilterSpec", "LatLonOutOfRange", "MalformedInput", "MercatorPoint",
    "MissingColumn", "NoTextDimension", "NonFiniteInput", "NonPointGeometry",
    "NonPositiveWidth", "NotHierarchyDimension", "NotScalarDimension",
    "PathPrefix", "Range", "Reducer", "RollupNode", "TablePage", "Term",
    "TermCount", "TooManyDimensions", "TypeCoercionFailure", "UnknownDimension",
    "UnknownSortColumn", "ValueSet", "bbox_pass", "build_app", "build_engine",
    "cluster", "infer_schema", "load_config", "parse_tabular", "project",
    "sum_of", "term_counts", "tokenize", "validate_config",
]
