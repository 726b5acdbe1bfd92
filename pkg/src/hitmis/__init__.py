"""hitmis: compute and certify hitting sets of maximum independent sets.

Exact engines (independence number, MIS enumeration, minimum hitting
set) act as oracles; the constructive procedures (locally-sparse
framework, 11-simplicial disk piercing, bipartite matching, VC-dim-1
structure, separator recursion, two-order layering, weak circle-graph
layers) each return hitting sets verified against those oracles.
"""

from .errors import (ExplosionError, GeneralPositionError, HitmisError,
                     InternalGeometryError, InvalidCertificateError,
                     OutOfRangeError, PreconditionError, SelfLoopError,
                     SizeLimitError, TheoremViolationError)
from .bitset import bits, mask_of
from .graph import (Graph, bipartition, build_graph, complement,
                    connected_components, graph_from_dimacs, graph_from_json,
                    graph_to_dimacs, graph_to_json, induced_subgraph,
                    is_acyclic, min_degree_vertex)
from .mis import (HajnalResult, MISFamily, enumerate_mis, family_from_json,
                  family_to_json, hajnal_check, independence_number,
                  pairwise_symmetric_difference_stats)
from .hitting import (HitterReport, greedy_hitting_set, min_hitting_set,
                      report_from_json, report_to_json, verify_hitting)
from .geometry import (ArcSet, DiskSet, IntervalSet, chord_cover_relation,
                       circular_arc_graph, disk_graph, find_11_simplicial,
                       interval_graph, larger_neighbor_independence,
                       overlap_graph)
from .generators import (GenSpec, alon_pairs_graph, blowup,
                         complete_multipartite, cycle_graph, gnp, is_chordal,
                         is_even_hole_free, random_arcs, random_chordal,
                         random_disks, random_intervals, sumner_structure,
                         vc_dimension)
from .hitters import (SparseFrameworkTrace, balanced_separator,
                      bipartite_hitter, circular_arc_prune,
                      locally_sparse_hitter, min_degree_hitter,
                      separator_hitter, simplicial_hitter, vc1_hitter)
from .two_order import (CoverColoring, TwoOrderStructure, circle_to_two_order,
                        cover_coloring, k_intersecting_value, make_two_order,
                        two_order_from_json, two_order_hitter,
                        two_order_to_json, validate_two_order,
                        weak_circle_layers)

__version__ = "0.1.0"
