"""Topological lower bounds for graph chromatic numbers.

The package builds Hom complexes of multi-homomorphisms, computes their
GF(2) homology and Z2-invariants (cohomological index, coindex
certificates), and turns these into certified chromatic-number bounds.
"""

__version__ = "0.1.0"

from .bounds import (BoundReport, TestGraphCertificate, bound_sweep,
                     cycle_homology_scan, lovasz_bound, odd_cycle_bound,
                     test_graph_certificate, verify_cor_ineq1)
from .coloring import ColoringResult, chromatic_number
from .complexes import (ChainComplexGF2, SimplicialComplexGF2,
                        cellular_chain_complex, homological_connectivity,
                        order_complex)
from .errors import (BudgetExceededError, HomchromError, InvalidInputError,
                     NonFreeActionError)
from .graphs import (Graph, Involution, VertexMap, complete, complete_swap01,
                     connected_graphs, cycle, cycle_reflection,
                     graph_from_edges, kneser, kneser_reversal, odd_girth)
from .homposet import (HomPoset, action_is_free, equivariant_cells,
                       fixed_cells, hom_cells)
from .multihom import MultiHom, from_involution, from_vertex_map, star
from .quotients import fixed_quotient_graph, universal_factorization
from .z2topology import (HindResult, Z2Complex, coind_at_least, hind,
                         pi1_trivial_heuristic)

__all__ = [name for name in dir() if not name.startswith("_")]
