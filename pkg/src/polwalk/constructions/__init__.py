"""Explicit families of polarized graphs."""

from .family import FamilyRecipe, asymptotic_family, family_recipe, fit_constants
from .monographs import homotopic_optimal, lower_bound_graph
from .optimal import OPTIMAL_VALENCE, genus_optimal
from .polygon import (GluingPolygon, gluing_quotient, monograph_4g_gon, polygon_quotient,
                      standard_monograph)
from .steiner import (SkolemTriples, SteinerSystem, ks_polarization, ks_valuation,
                      skolem_triples, steiner_from_walks)

__all__ = [
    "FamilyRecipe", "GluingPolygon", "OPTIMAL_VALENCE", "SkolemTriples", "SteinerSystem",
    "asymptotic_family", "family_recipe", "fit_constants", "genus_optimal", "gluing_quotient",
    "homotopic_optimal", "ks_polarization", "ks_valuation", "lower_bound_graph",
    "monograph_4g_gon", "polygon_quotient", "skolem_triples", "standard_monograph",
    "steiner_from_walks",
]
