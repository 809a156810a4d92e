"""Exact GF(2) classification of spin structures on circle bundles over
non-orientable surfaces, with the symplectic picture on the orientation
double cover."""
from .action_orth import (Report, act_A1, classify_A1, classify_form, equivalence_witness,
                          expected_A1_sizes, lift_F_sigma, stabilizer_check,
                          stabilizer_generators)
from .action_symp import (arf_closed_form, arf_of, classify_epi, cor_witness, f_s_matrix,
                          factorize_transvections, in_Gs, in_Kt, kt_generators, replay)
from .gf2core import GF2Mat, GF2Vec, ShapeError, all_vectors, kernel, mat_inv, rank, solve
from .grouptool import (FormSpace, Isometry, OrbitReport, QuadForm, arf, closure,
                        enumerate_isometries, is_isometry, orbit_decompose, transvection)
from .homology import (NSurface, OSurface, Presentation, SectionParams, SpecialCovering,
                       TotalN, TotalO, epi_set, in_epi, pi_star, presentation, pull_back,
                       specials, tilde_pi_star)
from .liftweak import (TotalAut, is_realizable, lift_to_symp, project_to_orth, weak_class,
                       weak_witness)

__version__ = "0.1.0"

__all__ = [
    "Report", "act_A1", "classify_A1", "classify_form", "equivalence_witness",
    "expected_A1_sizes", "lift_F_sigma", "stabilizer_check", "stabilizer_generators",
    "arf_closed_form", "arf_of", "classify_epi", "cor_witness", "f_s_matrix",
    "factorize_transvections", "in_Gs", "in_Kt", "kt_generators", "replay", "GF2Mat",
    "GF2Vec", "ShapeError", "all_vectors", "kernel", "mat_inv", "rank", "solve",
    "FormSpace", "Isometry", "OrbitReport", "QuadForm", "arf", "closure",
    "enumerate_isometries", "is_isometry", "orbit_decompose", "transvection", "NSurface",
    "OSurface", "Presentation", "SectionParams", "SpecialCovering", "TotalN", "TotalO",
    "epi_set", "in_epi", "pi_star", "presentation", "pull_back", "specials",
    "tilde_pi_star", "TotalAut", "is_realizable", "lift_to_symp", "project_to_orth",
    "weak_class", "weak_witness",
]
