"""Decide flow-continuity of an edge map, exactly.

An edge map f sends each edge of a source digraph G to an edge of a target
digraph H.  It is n-flow-continuous (FF_n) when every Z_n-flow on H pulls
back along f to a Z_n-flow on G, and FF_Z when that holds over the
integers.  The whole family of these questions collapses to one integer:
the gcd g of the discrepancy matrix.  f is FF_n iff n divides g, and FF_Z
iff g = 0.

Why this works: pulling back phi and applying Kirchhoff at a source vertex
v evaluates the pushforward of the star tension at v against phi, and the
flows on H are exactly the coefficient combinations of its fundamental
circuits.  So FF holds iff every (star tension, circuit) pairing vanishes
modulo n.  The brute-force oracle below re-checks the definition with no
shortcuts and must never be folded into the gcd route.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import Group, exponent, gcd_all
from .flows import (
    DEFAULT_FLOW_BUDGET,
    GroupVector,
    circuit_matrix,
    enumerate_flows,
    incidence_matrix,
    is_flow,
)
from .graphs import MultiDigraph, SignedEdgeVector


@dataclass(frozen=True)
class EdgeMap:
    """A total map from source edge indices to target edge indices."""

    source: MultiDigraph
    target: MultiDigraph
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.num_edges:
            raise ValueError(
                f"assignment covers {len(self.assignment)} edges, "
                f"source has {self.source.num_edges}"
            )
        for i, j in enumerate(self.assignment):
            if not (0 <= j < self.target.num_edges):
                raise ValueError(f"edge {i} maps to {j}, out of target range")

    def __call__(self, i: int) -> int:
        return self.assignment[i]


def index_bijection(source: MultiDigraph, target: MultiDigraph) -> EdgeMap:
    """The map sending edge i to edge i; needs equal edge counts."""
    if source.num_edges != target.num_edges:
        raise ValueError(
            f"no index bijection: {source.num_edges} vs {target.num_edges} edges"
        )
    return EdgeMap(source, target, tuple(range(source.num_edges)))


def constant_map(source: MultiDigraph, target: MultiDigraph, j: int) -> EdgeMap:
    """The map sending every source edge to target edge j."""
    return EdgeMap(source, target, (j,) * source.num_edges)


def parse_edge_map(text: str, source: MultiDigraph, target: MultiDigraph) -> EdgeMap:
    """Read a map from text: one target index per source edge, in order.

    '#' starts a comment; blank lines are skipped.  Conventionally one
    index per line, but any whitespace separation is accepted.
    """
    tokens: list[int] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        for token in line.split():
            try:
                tokens.append(int(token))
            except ValueError:
                raise ValueError(f"line {line_number}: bad edge index {token!r}") from None
    if len(tokens) != source.num_edges:
        raise ValueError(
            f"map lists {len(tokens)} edges, source has {source.num_edges}"
        )
    return EdgeMap(source, target, tuple(tokens))


def format_edge_map(f: EdgeMap) -> str:
    """Serialize in the format parse_edge_map reads."""
    return "".join(f"{j}\n" for j in f.assignment)


def algebraic_image(f: EdgeMap, tau: SignedEdgeVector) -> SignedEdgeVector:
    """Push an integer edge vector forward: sum over each edge's preimage."""
    if len(tau) != f.source.num_edges:
        raise ValueError(
            f"vector has {len(tau)} entries, source has {f.source.num_edges} edges"
        )
    image = [0] * f.target.num_edges
    for value, j in zip(tau, f.assignment):
        image[j] += value
    return tuple(image)


@dataclass(frozen=True)
class DiscrepancyMatrix:
    """Pairing of pushed-forward star tensions with target circuits.

    Row v, column C holds the signed sum over fundamental circuit C of H
    of the algebraic image of the star tension at source vertex v.  All of
    flow-continuity is encoded in the divisibility of these entries.
    """

    entries: tuple[tuple[int, ...], ...]

    @property
    def num_rows(self) -> int:
        return len(self.entries)

    @property
    def num_cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0


@dataclass(frozen=True)
class FailureCertificate:
    """One matrix entry refuting flow-continuity.

    modulus is the n that fails to divide value; modulus 0 stands for the
    integers, in which case value is simply nonzero.
    """

    vertex: int
    circuit: int
    value: int
    modulus: int


def discrepancy(f: EdgeMap) -> DiscrepancyMatrix:
    """The full discrepancy matrix of f.

    Computed as S P C where S stacks the star tensions of the source,
    P is the 0/1 pushforward matrix of f, and C has the fundamental
    circuits of the target as columns.  Entries are bounded by the source
    edge count, so int64 is exact.
    """
    stars = incidence_matrix(f.source)
    push = np.zeros((f.source.num_edges, f.target.num_edges), dtype=np.int64)
    for i, j in enumerate(f.assignment):
        push[i, j] = 1
    product = stars @ push @ circuit_matrix(f.target)
    return DiscrepancyMatrix(tuple(tuple(int(x) for x in row) for row in product))


def ff_gcd(f: EdgeMap) -> int:
    """The single nonnegative integer g with: f is FF_n iff n | g.

    g = 0 (the gcd of an empty or all-zero matrix) means f is FF_Z and
    hence flow-continuous over every group.
    """
    return gcd_all(x for row in discrepancy(f).entries for x in row)


def _first_failure(matrix: DiscrepancyMatrix, n: int) -> FailureCertificate | None:
    # row-major scan, so certificates are deterministic
    for v, row in enumerate(matrix.entries):
        for c, value in enumerate(row):
            if (value % n != 0) if n else (value != 0):
                return FailureCertificate(vertex=v, circuit=c, value=value, modulus=n)
    return None


def is_ff_n(f: EdgeMap, n: int) -> tuple[bool, FailureCertificate | None]:
    """Is f n-flow-continuous?  On failure, also return a witness entry.

    n = 0 is accepted as shorthand for the integers.
    """
    if n < 0:
        raise ValueError(f"modulus must be nonnegative, got {n}")
    certificate = _first_failure(discrepancy(f), n)
    return certificate is None, certificate


def is_ff_z(f: EdgeMap) -> bool:
    """Is f flow-continuous over the integers (hence over every group)?"""
    return ff_gcd(f) == 0


def is_ff_group(f: EdgeMap, m: Group) -> bool:
    """Is f flow-continuous over m?  Only the exponent of m matters.

    A finite group with exponent e behaves exactly like Z_e, and any group
    with a free part behaves like Z.
    """
    e = exponent(m)
    if e is None:
        return is_ff_z(f)
    return is_ff_n(f, e)[0]


def pull_back(f: EdgeMap, phi: GroupVector) -> GroupVector:
    """The composition phi after f: source edge i carries phi[f(i)]."""
    if len(phi) != f.target.num_edges:
        raise ValueError(
            f"flow has {len(phi)} entries, target has {f.target.num_edges} edges"
        )
    return tuple(phi[j] for j in f.assignment)


def refuting_flows(f: EdgeMap, m: Group, budget: int = DEFAULT_FLOW_BUDGET):
    """Flows on the target whose pullback breaks Kirchhoff on the source.

    Empty iff f is flow-continuous over m.  Enumeration order follows
    enumerate_flows, so the first refutation is deterministic.
    """
    for phi in enumerate_flows(f.target, m, budget):
        if not is_flow(f.source, pull_back(f, phi), m):
            yield phi


def oracle_refutation(
    f: EdgeMap, m: Group, budget: int = DEFAULT_FLOW_BUDGET
) -> GroupVector | None:
    """First refuting flow, or None if every flow pulls back to a flow."""
    return next(refuting_flows(f, m, budget), None)


def oracle_is_ff_group(f: EdgeMap, m: Group, budget: int = DEFAULT_FLOW_BUDGET) -> bool:
    """Definitional check of flow-continuity by exhausting all flows on m.

    Independent of the discrepancy machinery; used to validate it.
    """
    return oracle_refutation(f, m, budget) is None
