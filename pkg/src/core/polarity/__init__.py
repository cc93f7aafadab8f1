"""Closed formulas for the polarity index of cactus graphs."""

from .closed_forms import closed_form, degree_term_closed_form, expected_census
from .families import Family, FamilySpec, legal_offsets, parse_family_spec
from .formula import (
    Method,
    corollary22_applicable,
    wiener_polarity,
    wp_cactus,
    wp_corollary22,
    wp_from_census,
    wp_tree,
)

__all__ = [
    "Family",
    "FamilySpec",
    "Method",
    "closed_form",
    "corollary22_applicable",
    "degree_term_closed_form",
    "expected_census",
    "legal_offsets",
    "parse_family_spec",
    "wiener_polarity",
    "wp_cactus",
    "wp_corollary22",
    "wp_from_census",
    "wp_tree",
]
