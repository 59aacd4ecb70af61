from .formats import SgfDocument, FlwDocument, FlwEntry, parse_sgf, serialize_sgf, parse_flw, serialize_flw
from .generators import generate_random_cubic_signed, generate_random_multigraph, petersen, complete_graph, complete_bipartite, cycle_graph
