"""Signless Laplacian coefficients of unicyclic graphs."""

from __future__ import annotations

from .graph_core import (
    FamilySpec, GraphError, LabeledGraph, UnicyclicGraph, build_family, canonical_form,
    enumerate_unicyclic, family_graph, matching_number, maximum_matching, parse_family,
)
from .polynomial import IntPolynomial
from .spectra import (
    CoefficientVector, Comparison, coefficients, compare_coefficients, incidence_energy,
    signless_char_poly, tu_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "FamilySpec", "GraphError", "LabeledGraph", "UnicyclicGraph", "build_family",
    "canonical_form", "enumerate_unicyclic", "family_graph", "matching_number",
    "maximum_matching", "parse_family", "IntPolynomial", "CoefficientVector", "Comparison",
    "coefficients", "compare_coefficients", "incidence_energy", "signless_char_poly",
    "tu_coefficient",
]
