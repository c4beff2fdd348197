"""Parse FOON annotations, merge them and retrieve task trees for a goal."""
from .bench import BenchRow, Enumeration, enumerate_trees, render_csv, render_table, run_table
from .dot import to_dot
from .graph import UniversalFOON, creators_of, merge
from .model import (
    FunctionalUnit,
    KitchenItem,
    MotionFlag,
    MotionNode,
    ObjectNode,
    format_key,
    object_key,
    unit_key,
)
from .parser import (
    FoonParseError,
    ParseDiagnostic,
    load_kitchen,
    load_subgraph,
    parse_kitchen,
    parse_subgraph,
    serialize_kitchen,
    serialize_subgraph,
)
from .retrieval import (
    RetrievalError,
    RetrievalQuery,
    Strategy,
    TaskTree,
    ValidationReport,
    finalize,
    in_kitchen,
    retrieve,
    retrieve_heuristic1,
    retrieve_heuristic2,
    retrieve_iddfs,
    validate,
)

__version__ = "0.1.0"
