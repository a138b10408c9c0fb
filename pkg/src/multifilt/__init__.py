"""Hilbert polynomials, reduction vectors and postulation vectors of multigraded filtrations.

Exact computations over monomial ideals of k[[x]], k[[x, y]] (optionally modulo
a monomial ideal) and numerical semigroup rings k[[t^a1, ..., t^ak]].
"""

from .filtration import (Filtration, NotAdmissibleError, StabilizationError, check_admissible_window,
                         ratliff_rush)
from .hilbert import (FitError, HilbertPoly, delta, delta_recursive, fit_polynomial, hilbert_function,
                      leading_coefficient_identity, vanishing_region, verify_vanishing_theorem)
from .ideals import (INFINITE, MonomialIdeal, PolyRing, RingMismatchError, SemigroupIdeal, SemigroupRing,
                     UnsupportedBackendError, integral_closure, is_infinite, quotient_length)
from .kmcomplex import (KMHomologyProfile, good_reduction_intersection, h1_vanishing_on_box,
                        huneke_identity_check, km_homology, rees_h1)
from .postulation import (postulation_region, verify_dim1_correspondence, verify_dim2_bijection,
                          verify_dim2_equivalences)
from .reduction import (CompleteReduction, JointReduction, complete_reduction_number,
                        induced_reductions_check, is_good, is_reduction_at, joint_reduction_number_zero,
                        make_complete_reduction, make_joint_reduction, reduction_vectors,
                        search_joint_reductions, search_monomial_reduction, search_monomial_reductions,
                        single_graded_reduction_number)
from .region import Region
from .report import TheoremReport

__all__ = [
    "INFINITE", "CompleteReduction", "FitError", "Filtration", "HilbertPoly", "JointReduction",
    "KMHomologyProfile", "MonomialIdeal", "NotAdmissibleError", "PolyRing", "Region",
    "RingMismatchError", "SemigroupIdeal", "SemigroupRing", "StabilizationError", "TheoremReport",
    "UnsupportedBackendError", "check_admissible_window", "complete_reduction_number", "delta",
    "delta_recursive", "fit_polynomial", "good_reduction_intersection", "h1_vanishing_on_box",
    "hilbert_function", "huneke_identity_check", "induced_reductions_check", "integral_closure",
    "is_good", "is_infinite", "is_reduction_at", "joint_reduction_number_zero", "km_homology",
    "leading_coefficient_identity", "make_complete_reduction", "make_joint_reduction",
    "postulation_region", "quotient_length", "ratliff_rush", "reduction_vectors", "rees_h1",
    "search_joint_reductions", "search_monomial_reduction", "search_monomial_reductions",
    "single_graded_reduction_number", "vanishing_region", "verify_dim1_correspondence",
    "verify_dim2_bijection", "verify_dim2_equivalences", "verify_vanishing_theorem",
]
