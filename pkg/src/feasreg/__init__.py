"""Feasible regions of induced quantum-graph densities.

Subpackages:
  graphs         -- bit-set graphs, graph6, canonical forms, exact counting
  quantum        -- linear combinations of patterns and their densities
  constructions  -- extremal families parameterized by target density
  curves         -- closed-form boundary curves and scalars
  multipartite   -- limit densities and simplex-constrained optimization
  lab            -- exhaustive enumeration, verifiers, random sampling
  cli            -- command-line surface
"""

from .errors import CapabilityError, ConstructionError, DomainError, FeasRegError
from .graphs import Graph, IsoClass, canonical_form, count_induced, edge_density, induced_density
from .quantum import QuantumGraph, parse_quantum, q_density, rand_density

__version__ = "0.1.0"

__all__ = [
    "CapabilityError",
    "ConstructionError",
    "DomainError",
    "FeasRegError",
    "Graph",
    "IsoClass",
    "QuantumGraph",
    "canonical_form",
    "count_induced",
    "edge_density",
    "induced_density",
    "parse_quantum",
    "q_density",
    "rand_density",
    "__version__",
]
