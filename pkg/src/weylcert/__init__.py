"""Exact Weyl-group and nilpotent-orbit combinatorics with machine-checkable
non-unitarity certificates and spectral-gap reports."""

from .certify import (CONSTRAINED, INCONCLUSIVE, NON_UNITARY,
                      CertificateReport, GapClassification, ModuleProfile,
                      ReflLinkGraph, Witness, certify, refl_link_graph,
                      spectral_gap)
from .orbits import (DualType, HypothesisError, Orbit, exceptional, h_half,
                     h_half_norm_sq, h_vector, nsol_orbits, o_min, orbit,
                     sl, so, sp, special_orbit, w_orbit_contains)
from .springer import (d_value_A, good_set, good_set_via_span,
                       kostka_foulkes, q_matrix_at_minus1_A, tau_data,
                       x_minus1_A)
from .weyl import (ClassFunction, ConjugacyClass, WeylType, conjugacy_classes,
                   elliptic_pairing, elliptic_span_member, group_order,
                   inner_product, irr_character, irreducible_labels,
                   lr_coefficient, reflection_character, sign_twist_label,
                   wedge_character)

__version__ = "0.1.0"

__all__ = [
    "CONSTRAINED", "INCONCLUSIVE", "NON_UNITARY",
    "CertificateReport", "ClassFunction", "ConjugacyClass", "DualType",
    "GapClassification", "HypothesisError", "ModuleProfile", "Orbit",
    "ReflLinkGraph", "WeylType", "Witness",
    "certify", "conjugacy_classes", "d_value_A", "elliptic_pairing",
    "elliptic_span_member", "exceptional", "good_set", "good_set_via_span",
    "group_order", "h_half", "h_half_norm_sq", "h_vector", "inner_product",
    "irr_character", "irreducible_labels", "kostka_foulkes",
    "lr_coefficient", "nsol_orbits", "o_min", "orbit",
    "q_matrix_at_minus1_A", "refl_link_graph", "reflection_character",
    "sign_twist_label", "sl", "so", "sp", "special_orbit", "spectral_gap",
    "tau_data", "w_orbit_contains", "wedge_character", "x_minus1_A",
]
