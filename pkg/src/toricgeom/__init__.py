"""toricgeom: an exact-arithmetic toric geometry kernel.

Cones, fans and normal toric varieties with their canonical ideals, Chow
rings and intersection numbers, line bundle cohomology vanishing sets, and
fine regular star triangulations of small lattice polytopes.  Everything is
computed over exact integers/rationals and is fully deterministic.
"""

from .errors import UnsupportedInputError, ValidationError
from .lattice import (IntMatrix, SNFResult, cokernel_grading, kernel_basis,
                      smith_normal_form)
from .polyhedral import (Cone, Polyhedron, cone_dim, convex_hull, dual_cone,
                         hilbert_basis, lattice_points, lp_feasible,
                         lp_feasible_point, polyhedron_membership,
                         positive_hull, print_constraints)
from .polyring import (Grading, MultiPoly, PolyIdeal, PolyRing,
                       graded_component_basis, groebner_basis, ideal_equal,
                       normal_form, saturate)
from .toric_variety import (Fan, NormalToricVariety, ToricDivisorClass,
                            affine_normal_toric_variety,
                            canonical_divisor_class,
                            cyclic_quotient_singularity, del_pezzo_surface,
                            hirzebruch_surface, ideal_of_linear_relations,
                            irrelevant_ideal, is_complete, is_projective,
                            is_simplicial, is_smooth, normal_toric_variety,
                            product, projective_space, stanley_reisner_ideal,
                            toric_ideal, torus)
from .intersection import (ChowRing, RationalEquivalenceClass, chow_ring,
                           degree, intersection_form, multiply,
                           rational_equivalence_class)
from .cohomology import (ContributionSet, VanishingSet, cohomology_dim,
                         contribution_sets, in_vanishing_set, vanishing_sets)
from .triangulation import (PointConfiguration, Triangulation, frst_enumerate,
                            varieties_from_star_triangulations,
                            verify_regularity_certificate)

__version__ = "0.1.0"

__all__ = [
    "Cone", "ChowRing", "ContributionSet", "Fan", "Grading", "IntMatrix",
    "MultiPoly", "NormalToricVariety", "PointConfiguration", "PolyIdeal",
    "PolyRing", "Polyhedron", "RationalEquivalenceClass", "SNFResult",
    "ToricDivisorClass", "Triangulation", "UnsupportedInputError",
    "ValidationError", "VanishingSet", "affine_normal_toric_variety",
    "canonical_divisor_class", "chow_ring", "cohomology_dim",
    "cokernel_grading", "cone_dim", "contribution_sets", "convex_hull",
    "cyclic_quotient_singularity", "degree", "del_pezzo_surface", "dual_cone",
    "frst_enumerate", "graded_component_basis", "groebner_basis",
    "hilbert_basis", "hirzebruch_surface", "ideal_equal",
    "ideal_of_linear_relations", "in_vanishing_set", "intersection_form",
    "irrelevant_ideal", "is_complete", "is_projective", "is_simplicial",
    "is_smooth", "kernel_basis", "lattice_points", "lp_feasible",
    "lp_feasible_point", "multiply", "normal_form", "normal_toric_variety",
    "polyhedron_membership", "positive_hull", "print_constraints", "product",
    "projective_space", "rational_equivalence_class", "saturate",
    "smith_normal_form", "stanley_reisner_ideal", "toric_ideal", "torus",
    "vanishing_sets", "varieties_from_star_triangulations",
    "verify_regularity_certificate",
]
