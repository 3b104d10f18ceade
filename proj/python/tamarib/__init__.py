"""Type-B Tamari lattices, Greene-Kleitman partitions and chain-length checks.

Type-B elements are tuples of ints with ``math.inf`` standing for infinity.
"""

from ._core import (
    MalformedVector,
    OrderViolation,
    Poset,
    dual,
    entry_sum,
    enumerate_type_a,
    enumerate_type_b,
    first_chain,
    format_type_b,
    gk_partition,
    is_isomorphic,
    is_lattice,
    level_map,
    leveled_members,
    longest_chain_length,
    max_k_antichain_union,
    max_k_chain_union,
    parse_type_b,
    second_chain,
    structural_remarks,
    type_a_poset,
    type_b_poset,
    validate_type_a,
    validate_type_b,
    verify_antichain_partition,
    verify_lemma1,
    verify_theorem1,
)

__all__ = [
    "MalformedVector",
    "OrderViolation",
    "Poset",
    "dual",
    "entry_sum",
    "enumerate_type_a",
    "enumerate_type_b",
    "first_chain",
    "format_type_b",
    "gk_partition",
    "is_isomorphic",
    "is_lattice",
    "level_map",
    "leveled_members",
    "longest_chain_length",
    "max_k_antichain_union",
    "max_k_chain_union",
    "parse_type_b",
    "second_chain",
    "structural_remarks",
    "type_a_poset",
    "type_b_poset",
    "validate_type_a",
    "validate_type_b",
    "verify_antichain_partition",
    "verify_lemma1",
    "verify_theorem1",
]
