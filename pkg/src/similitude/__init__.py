"""Counting functions for similarity sublattices of the 4D hypercubic lattices
and similarity submodules of the Hurwitz, icosian, and cubian quaternion
orders, with an independent brute-force oracle and numeric asymptotics checks.
"""

from .asymptotics import (GrowthModel, estimate_constant, l_value_at_one,
                          target_constant, zeta_special_value_check)
from .counting import (CrossCheckFailure, Target, dedekind_coeff, g,
                       order_zeta_coeff, series, ssm_count)
from .dirichlet import (CoeffSeq, coeff_seq, convolve, dilate,
                        dirichlet_inverse, from_multiplicative,
                        is_multiplicative, ones, partial_sum, shift)
from .lattice import LatticeKey
from .oracle import (D4STAR, Z4, AmbientLattice, count_ssl_bruteforce,
                     enumerate_ssm_icosian, enumerate_sublattices,
                     is_similar_sublattice)
from .orders import (Order, OrderElement, canonicalize_pair, content, element,
                     is_odd, is_primitive, module_lattice, unit_group)
from .quadfield import (PrimeClass, QuadInt, QuadRat, Ring,
                        canonical_associate, conjugate, is_representable_index,
                        norm, prime_class)
from .quat import Quat, quat_conj, quat_mul, reduced_norm, similarity_matrix

__all__ = [
    "AmbientLattice", "CoeffSeq", "CrossCheckFailure", "D4STAR", "GrowthModel",
    "LatticeKey", "Order", "OrderElement", "PrimeClass", "Quat", "QuadInt",
    "QuadRat", "Ring", "Target", "Z4", "canonical_associate",
    "canonicalize_pair", "coeff_seq", "conjugate", "content", "convolve",
    "count_ssl_bruteforce", "dedekind_coeff", "dilate", "dirichlet_inverse",
    "element", "enumerate_ssm_icosian", "enumerate_sublattices",
    "estimate_constant", "from_multiplicative", "g", "is_multiplicative",
    "is_odd", "is_primitive", "is_representable_index",
    "is_similar_sublattice", "l_value_at_one", "module_lattice", "norm",
    "ones", "order_zeta_coeff", "partial_sum", "prime_class", "quat_conj",
    "quat_mul", "reduced_norm", "series", "shift", "similarity_matrix",
    "ssm_count", "target_constant", "unit_group", "zeta_special_value_check",
]
