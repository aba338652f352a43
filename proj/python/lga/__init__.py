"""Graded traces and representation multiplicities of layered-graph algebras."""

from lga._core import (
    LayeredGraph,
    build_boolean_lattice,
    build_dn,
    class_size,
    dn_dimension_recurrence,
    dn_dual_multiplicities,
    dn_dual_trace,
    dn_multiplicities,
    dn_trace,
    format_graph,
    hilbert,
    koszul_dn,
    koszul_qn,
    orthogonality_check,
    parse_graph,
    partitions,
    qn_dual_multiplicities,
    qn_dual_trace,
    qn_multiplicities,
    qn_trace,
    sn_character,
    verify_dn,
    verify_qn,
)

__all__ = [
    "LayeredGraph",
    "build_boolean_lattice",
    "build_dn",
    "class_size",
    "dn_dimension_recurrence",
    "dn_dual_multiplicities",
    "dn_dual_trace",
    "dn_multiplicities",
    "dn_trace",
    "format_graph",
    "hilbert",
    "koszul_dn",
    "koszul_qn",
    "orthogonality_check",
    "parse_graph",
    "partitions",
    "qn_dual_multiplicities",
    "qn_dual_trace",
    "qn_multiplicities",
    "qn_trace",
    "sn_character",
    "verify_dn",
    "verify_qn",
]
