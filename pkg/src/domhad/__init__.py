"""Dominating clique minors of small graphs, with a focus on alpha <= 2."""

__version__ = "0.1.0"

from .graph import Graph, complement, join, union
from .graph6 import from_graph6, to_graph6
from .catalog import catalog
from .minors import MinorCertificate, hd, has_dominating_kt, verify_dominating

__all__ = [
    "Graph",
    "MinorCertificate",
    "catalog",
    "complement",
    "from_graph6",
    "has_dominating_kt",
    "hd",
    "join",
    "to_graph6",
    "union",
    "verify_dominating",
]
