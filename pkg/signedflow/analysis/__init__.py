from .balance import balanced_component_count, is_balanced, is_flow_admissible
from .connectivity import INFINITE, cyclic_edge_connectivity, minimum_cyclic_cut
from .cycles import z2_cycle_space_basis, cycle_space_dimension
from .matching import MatchingResult, maximum_matching, perfect_matching, is_matching
from .search import BoundarySearch
from .oracle import brute_force_k_flow, k_flow_domain
