"""Generalized graph coloring toolkit.

Computes (f,p)-proper chromatic numbers, list colorability, choosability
decisions and island-based coloring numbers with machine-checkable
certificates, plus the constructions and randomized pipelines needed to
exercise them at desk scale.
"""

from fpcolor.graph import Graph, from_edge_list, from_graph6, to_graph6
from fpcolor.params import PARAMETERS, Parameter

__all__ = [
    "Graph",
    "Parameter",
    "PARAMETERS",
    "from_edge_list",
    "from_graph6",
    "to_graph6",
]
