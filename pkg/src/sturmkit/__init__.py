"""Combinatorics of Sturm attractors with circle symmetry."""

from __future__ import annotations

from .bijection import Pairing, permutation_to_signature, signature_to_permutation
from .census import census, is_integrable_involution, is_meander, is_sturm
from .graph import (
    ConnectionGraph,
    graph_isomorphic,
    neumann_graph,
    quotient_periodic,
    transitive_closure,
    transitive_reduction,
)
from .lapsig import (
    MaxN,
    MaxNQ,
    Signature,
    canonicalize,
    counts,
    enumerate_signatures,
    labels,
    parse_signature,
    reverse_signature,
    serialize,
    validate,
)
from .perm import (
    compose_paths,
    cycle_structure,
    format_perm,
    inverse,
    morse_indices,
    parse_perm,
    reverse_trivial,
    zero_numbers,
)
from .pitchfork import find_pitchforks, fully_reducible, reduce_at

__version__ = "0.1.0"
