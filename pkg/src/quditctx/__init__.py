"""Qudit stabilizer structures, Clifford Cayley graphs and contextuality invariants."""

from .clifford import (
    CliffordElement,
    clifford_trace_abs,
    clifford_unitary,
    conjugacy_classes,
    enumerate_clifford,
    jamiolkowski_state,
    traceless_set,
)
from .graphs import Graph, cayley_graph, disjoint_union, or_product, orthogonality_graph
from .invariants import (
    InvariantReport,
    chromatic_number,
    clique_cover,
    compute_report,
    fractional_packing,
    independence_number,
    induced_odd_cycles,
    lovasz_theta,
    max_clique,
)
from .pauli import (
    PauliOperator,
    Projector,
    eigenprojector,
    hermitian_eigen,
    pauli_matrix,
    rank1_decompose,
    symplectic_commutes,
)
from .states import (
    StabilizerState,
    StateFamily,
    enumerate_single,
    enumerate_two_qudit,
    is_orthogonal,
)
from .zmod import PrimeDim, legendre, mod_inverse, smallest_nonresidue

__version__ = "0.1.0"

__all__ = [
    "CliffordElement",
    "Graph",
    "InvariantReport",
    "PauliOperator",
    "PrimeDim",
    "Projector",
    "StabilizerState",
    "StateFamily",
    "cayley_graph",
    "chromatic_number",
    "clifford_trace_abs",
    "clifford_unitary",
    "clique_cover",
    "compute_report",
    "conjugacy_classes",
    "disjoint_union",
    "eigenprojector",
    "enumerate_clifford",
    "enumerate_single",
    "enumerate_two_qudit",
    "fractional_packing",
    "hermitian_eigen",
    "independence_number",
    "induced_odd_cycles",
    "is_orthogonal",
    "jamiolkowski_state",
    "legendre",
    "lovasz_theta",
    "max_clique",
    "mod_inverse",
    "or_product",
    "orthogonality_graph",
    "pauli_matrix",
    "rank1_decompose",
    "smallest_nonresidue",
    "symplectic_commutes",
    "traceless_set",
]
