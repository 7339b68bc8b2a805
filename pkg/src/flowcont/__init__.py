"""Exact decision procedures for group-valued flow-continuous edge maps.

An edge map between multidigraphs is flow-continuous over a group when
every flow on the target pulls back to a flow on the source.  This
package decides that exactly for any finitely generated abelian group,
collapses the whole family of such questions per map into one gcd,
computes divisor down-sets at map and graph level, and constructs
digraph pairs realizing any prescribed down-set.
"""

from .algebra import (
    Group,
    GroupSyntaxError,
    INTEGERS,
    TRIVIAL,
    cone_member,
    direct_product,
    divisors,
    exponent,
    gcd_all,
    next_prime_above,
    parse_group,
)
from .constructions import (
    DigonFamily,
    WitnessPlan,
    WitnessReport,
    as_digon_union,
    build_witness,
    decompose_in_cone,
    digon_ff_map,
    digon_union_witness,
    ff_set_digons,
    verify_witness,
)
from .decide import (
    DiscrepancyMatrix,
    EdgeMap,
    FailureCertificate,
    algebraic_image,
    constant_map,
    discrepancy,
    ff_gcd,
    format_edge_map,
    index_bijection,
    is_ff_group,
    is_ff_n,
    is_ff_z,
    oracle_is_ff_group,
    oracle_refutation,
    parse_edge_map,
    pull_back,
    refuting_flows,
)
from .ffsets import (
    DEFAULT_MAP_BUDGET,
    EquivalenceReport,
    FFSet,
    SearchOutcome,
    count_ff_maps,
    exists_ff_map,
    ff_set_of_graphs,
    ff_set_of_map,
    subcubic_equivalence_check,
)
from .flows import (
    BudgetExceededError,
    DEFAULT_FLOW_BUDGET,
    circuit_matrix,
    count_nowhere_zero_flows,
    enumerate_flows,
    filter_flows,
    incidence_matrix,
    is_flow,
    is_tension,
    star_tension,
)
from .graphs import (
    BUILTIN_NAMES,
    GraphFormatError,
    MultiDigraph,
    SpanningStructure,
    builtin,
    dicycle,
    digon,
    disjoint_union,
    format_digraph,
    k4,
    loop,
    parse_digraph,
    petersen,
    spanning_structure,
)
from .selftest import SuiteResult, run_selftest

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES",
    "BudgetExceededError",
    "DEFAULT_FLOW_BUDGET",
    "DEFAULT_MAP_BUDGET",
    "DigonFamily",
    "DiscrepancyMatrix",
    "EdgeMap",
    "EquivalenceReport",
    "FFSet",
    "FailureCertificate",
    "GraphFormatError",
    "Group",
    "GroupSyntaxError",
    "INTEGERS",
    "MultiDigraph",
    "SearchOutcome",
    "SpanningStructure",
    "SuiteResult",
    "TRIVIAL",
    "WitnessPlan",
    "WitnessReport",
    "algebraic_image",
    "as_digon_union",
    "build_witness",
    "builtin",
    "circuit_matrix",
    "cone_member",
    "constant_map",
    "count_ff_maps",
    "count_nowhere_zero_flows",
    "decompose_in_cone",
    "dicycle",
    "digon",
    "digon_ff_map",
    "digon_union_witness",
    "direct_product",
    "discrepancy",
    "disjoint_union",
    "divisors",
    "enumerate_flows",
    "exists_ff_map",
    "exponent",
    "ff_gcd",
    "ff_set_digons",
    "ff_set_of_graphs",
    "ff_set_of_map",
    "filter_flows",
    "format_digraph",
    "format_edge_map",
    "gcd_all",
    "incidence_matrix",
    "index_bijection",
    "is_ff_group",
    "is_ff_n",
    "is_ff_z",
    "is_flow",
    "is_tension",
    "k4",
    "loop",
    "next_prime_above",
    "oracle_is_ff_group",
    "oracle_refutation",
    "parse_digraph",
    "parse_edge_map",
    "parse_group",
    "petersen",
    "pull_back",
    "refuting_flows",
    "run_selftest",
    "spanning_structure",
    "star_tension",
    "subcubic_equivalence_check",
    "verify_witness",
]
