"""Weak del Pezzo surfaces with toric self-maps.

Thin re-export of the C++ extension: classification of the twelve loop
types, script verification, graph emission, and the low-level cycle and
lattice helpers.
"""

from ._core import (
    boundary_labels,
    classify,
    graph_ascii,
    graph_dot,
    identify_figure,
    negative_class_counts,
    normalize_cycle,
    power_map_pullback,
    surface,
    verify,
    web,
)

__all__ = [
    "boundary_labels",
    "classify",
    "graph_ascii",
    "graph_dot",
    "identify_figure",
    "negative_class_counts",
    "normalize_cycle",
    "power_map_pullback",
    "surface",
    "verify",
    "web",
]
