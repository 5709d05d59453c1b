"""Linear quotient orderings for powers of edge ideals.

Exact-arithmetic constructions and checks: revlex power orderings with
representative dedup, the two-block anticycle ordering, colon-ideal
linearity tests, projective dimension and Betti numbers (quotient counts,
whisker closed forms, mapping-cone ranks, and homology oracles), plus an
exact subset search for most-linear orderings.
"""

from .errors import (ContextMismatchError, DuplicateEdgeError,
                     DuplicateGeneratorError, FamilyParameterError,
                     GraphError, LiftError, LinquotError, LoopEdgeError,
                     NonLinearOrderingError, OracleBudgetError,
                     VertexIndexError)
from .graphs import (EdgeIdeal, Graph, anticycle, antipath, complement,
                     cycle, family_ideal, graph_from_edges, is_tree,
                     load_graph, star, whisker_graph)
from .homology import bareiss_rank, betti_oracle, betti_taylor
from .monomials import (Monomial, VariableContext, colon_single, degree,
                        divides, gcd, lcm, support)
from .powers import (EdgeDecomposition, OrderedPowerGenerators, PowerEntry,
                     anticycle_ordering, edge_decompositions_of,
                     power_generators, representatives, revlex_power_list,
                     revlex_precedes)
from .quotients import (BettiTable, LinearityReport, QuotientReport,
                        QuotientStep, betti_from_ordering,
                        colon_minimal_generators, get_quotients,
                        is_linear_by_pairs, is_linear_by_quotients,
                        is_linear_ordering, is_violating_pair,
                        linearity_report, pd_from_ordering, quotient_counts,
                        quotient_variable_sets)
from .resolutions import (Resolution, complex_defect,
                          mapping_cone_resolution, verify_complex,
                          verify_minimal)
from .search import (SearchResult, find_linear_ordering,
                     linear_prefix_length, most_linear_ordering)
from .whiskers import (whisker_bc, whisker_betti_closed_form,
                       whisker_betti_table, whisker_pd_closed_form,
                       whisker_quotient_variables)

__version__ = "0.1.0"
