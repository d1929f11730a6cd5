"""Highly attack-resistant vertex multicolorings: verification, named
constructions, existence search, and serialization."""

from .checker import (
    CheckReport,
    SampleReport,
    check_highly,
    check_hr,
    check_resistant,
    lemma_disjunction,
    sample_check,
)
from .codec import CodecError, decode_coloring, decode_edge_list, decode_instance, encode_instance
from .coloring import (
    ColorClasses,
    ColorSet,
    Multicoloring,
    canonical_form,
    classes,
    extend_palette,
    extend_vertex,
    from_classes,
    has_all_colors,
    union_over,
)
from .constructions import ColoredInstance, c7_pair, c8c8p5, catalog, clique_partition, instance
from .graph import (
    Graph,
    VertexSet,
    add_isolated_vertex,
    complete,
    cycle,
    disjoint_union,
    induced_subgraph,
    path,
)
from .lemmas import LemmaRunReport, run_lemma
from .search import (
    Decision,
    KEntry,
    MinColorsResult,
    NonexistenceSummary,
    decide,
    exhaustive_nonexistence,
    k_lookup,
    k_table,
    min_colors,
)

__all__ = [
    "CheckReport",
    "CodecError",
    "ColorClasses",
    "ColorSet",
    "ColoredInstance",
    "Decision",
    "Graph",
    "KEntry",
    "LemmaRunReport",
    "MinColorsResult",
    "Multicoloring",
    "NonexistenceSummary",
    "SampleReport",
    "VertexSet",
    "add_isolated_vertex",
    "c7_pair",
    "c8c8p5",
    "canonical_form",
    "catalog",
    "check_highly",
    "check_hr",
    "check_resistant",
    "classes",
    "clique_partition",
    "complete",
    "cycle",
    "decide",
    "decode_coloring",
    "decode_edge_list",
    "decode_instance",
    "disjoint_union",
    "encode_instance",
    "exhaustive_nonexistence",
    "extend_palette",
    "extend_vertex",
    "from_classes",
    "has_all_colors",
    "induced_subgraph",
    "instance",
    "k_lookup",
    "k_table",
    "lemma_disjunction",
    "min_colors",
    "path",
    "run_lemma",
    "sample_check",
    "union_over",
]

__version__ = "0.1.0"
