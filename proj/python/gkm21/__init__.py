"""Exact verifier for the 42-curve configuration on the order-3 generalized
Kummer surface in characteristic 2."""

from ._core import (
    config_graph,
    ec_add,
    ec_points,
    generator_solutions,
    gram_data,
    graph_iso,
    intersection_table,
    quotient_map,
    relation_report,
    torsion_tables,
    verify_all,
)

__all__ = [
    "config_graph",
    "ec_add",
    "ec_points",
    "generator_solutions",
    "gram_data",
    "graph_iso",
    "intersection_table",
    "quotient_map",
    "relation_report",
    "torsion_tables",
    "verify_all",
]
