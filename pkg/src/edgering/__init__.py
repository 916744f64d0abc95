"""Edge rings of bipartite graphs: h-polynomials, Gorenstein
classification by two independent routes, and blockwise minimal
Gorenstein closures."""

__version__ = "0.1.0"

from .errors import (CapacityError, ComputationError, ContractError,
                     EdgeRingError, GenerationError, GraphFileError,
                     InputError, NonBipartiteError)
from .graph import (Bipartition, BlockDecomposition, Graph, Subgraph,
                    bipartition_of, blocks, build_graph, connected_components,
                    delta, induced_subgraph, is_connected, is_ordinary,
                    is_two_connected, neighborhood)
from .matching import (Matching, has_perfect_matching, is_matching_covered,
                       maximum_matching, strict_hall_holds)
from .facets import (AcceptableSet, FillSet, component_separator,
                     enumerate_acceptable, fill_set, internal_tight_cover,
                     is_acceptable, is_tight, mirror_tight_set, non_edges,
                     separates, uncross)
from .hilbert import (HVector, h1_formula, h_vector, interior_count_via_reciprocity,
                      interior_lattice_points, interior_nonedge_points,
                      is_palindromic, monomial_count, monomial_counts)
from .classify import (Classification, ClosureResult, MainTheoremVerdict,
                       block_product_check, classify, gorenstein_closure,
                       h_vector_product, is_gorenstein_combinatorial,
                       is_gorenstein_palindromic, is_pseudo_gorenstein,
                       poly_mul, verify_closure_minimality, verify_main_theorem)
from .generate import (exhaustive_bipartite, make_rng, natural_sides,
                       random_bipartite, random_matching_union, side_pairs)
from .graphio import parse_graph, read_graph, serialize_graph
