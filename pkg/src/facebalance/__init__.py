"""Exact face-number invariants, Cohen-Macaulay tests, and d-colorable
multicomplex witnesses for simplicial complexes at desk scale."""

from .complexes import (ComplexError, Graph, SimplicialComplex, clique_complex,
                        convolve, empty_complex, f_from_h, find_colorable_complex,
                        h_from_f, independence_complex, is_balanced,
                        is_full_dimensional_subcomplex, maximal_independent_sets,
                        parse_complex, parse_graph, proper_coloring)
from .homology import (BettiProfile, CMViolation, boundary_rank, cm_report,
                       is_cohen_macaulay, reduced_betti)
from .polynomials import (LinearAutomorphism, Multicomplex, Specialization,
                          StandardBasisOverflow, TermOrder, apply_automorphism,
                          f_vector_of_multicomplex, initial_ideal_by_degree,
                          revlex_compare, specialization_stream,
                          stanley_reisner_generators, standard_monomial_basis,
                          support_part)
from .balancing import (BalancedWitness, BalancingPair, CoverError,
                        VerificationError, balanced_witness, base_pair_points,
                        base_pair_near_bipartite, compose_pairs, factor_complex,
                        inherit_to_subcomplex, join_of_factors,
                        kind_kleinschmidt, parse_cover)
from .classify import (PGDecomposition, Verdict, basic_5_cycles, beta,
                       catalog_graph, classify_girth5, count_triangles,
                       embed_in_join, exceptional_catalog, girth,
                       independent_facet_transversal, induced_cycle_lengths,
                       is_isomorphic, is_well_covered, max_k4_free_edges,
                       pendant_edges, pendant_perfect_matching,
                       pg_decomposition, turan_graph)
from .samples import flag_sphere_graph, overlinked_pentagon_graph, pg_sample_graph

__version__ = "0.1.0"
