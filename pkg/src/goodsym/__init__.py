"""Schur combinations, their Newton polytopes, and checks for SNP, IDP and goodness."""
from .families import alternating_chain_sum, chain_sum, dual_grothendieck, example_g2_310
from .partition import (BoxChain, Partition, check_chain, contains, dominates, generate_chain,
                        sm_orbit, sort_decreasing, subchain)
from .polytope import (IdpReport, LatticePolytope, contains_point, dilate, dimension, idp_check,
                       lattice_points, minkowski_power_points, vertices)
from .symfunc import (SchurCombination, SparsePolynomial, brackets, expand_combination, expand_schur,
                      is_symmetric, support, to_schur_basis)
from .tableaux import Tableau, column_split, content_of, enumerate_ssyt, kostka, skew_row_bounded_count
from .verifier import (GoodnessReport, SnpReport, TheoremViolation, ZeroPolynomialError, check_condition_a,
                       check_condition_a_prime, check_condition_b, check_condition_b_prime, check_good,
                       check_snp, newton_of_combination, newton_polytope, rado_containment,
                       schur_membership, verify_good_theorem)

__version__ = "0.1.0"
