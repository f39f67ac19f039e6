"""Cycle separation structures on planar combinatorial embeddings."""

from _cyclesep import (  # noqa: F401
    Embedding,
    Error,
    Family,
    canonical_cycle,
    complementary_regions,
    crosses,
    enumerate_cycles,
    enumerate_paths,
    envelope,
    fits_into,
    gen,
    geometric_side,
    interior,
    joint_classes,
    order_cycles,
    order_paths,
    property_ids,
    r_predicate,
    region,
    run_cli,
    side_sets,
    to_dot,
    to_svg,
    trim,
    verify,
    verify_non_touching,
)

__all__ = [
    "Embedding",
    "Error",
    "Family",
    "canonical_cycle",
    "complementary_regions",
    "crosses",
    "enumerate_cycles",
    "enumerate_paths",
    "envelope",
    "fits_into",
    "gen",
    "geometric_side",
    "interior",
    "joint_classes",
    "order_cycles",
    "order_paths",
    "property_ids",
    "r_predicate",
    "region",
    "run_cli",
    "side_sets",
    "to_dot",
    "to_svg",
    "trim",
    "verify",
    "verify_non_touching",
]
