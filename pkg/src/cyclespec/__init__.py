"""Certified cycle-spectrum extraction from dense graphs."""

from .backend import backend_name
from .errors import (
    BudgetExceeded,
    CyclespecError,
    HypothesisNotMet,
    InputError,
    InternalContradiction,
    NotBipartite,
    ParseError,
    VerificationFailure,
)
from .graph import Graph, average_degree, graph_sha256, parse_graph, serialize

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "average_degree",
    "backend_name",
    "graph_sha256",
    "parse_graph",
    "serialize",
    "BudgetExceeded",
    "CyclespecError",
    "HypothesisNotMet",
    "InputError",
    "InternalContradiction",
    "NotBipartite",
    "ParseError",
    "VerificationFailure",
    "__version__",
]
