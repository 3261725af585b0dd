"""Exact conductor-exponent calculus for group filtrations and
Weil-Deligne block data, with brute-force character-theoretic oracles."""

from .chars import (ClassFunction, CharacterTable, character_table,
                    fixed_dim, frobenius_schur, gen_character, gen_rational,
                    gen_symplectic, inner_product, is_rational_charpoly,
                    is_symplectic, restrict)
from .cyclo import CycloNum
from .filtration import (ConductorReport, conductor, conductor_exponent,
                         min_sum_bound, nonfixed_dim, pgroup_tensor_bound,
                         symplectic_tensor_bound, tensor_fixed_excess,
                         tensor_level_identity)
from .globalbound import (FactoredInteger, GlobalDatum, PrimeLocalPair,
                          PrimeSummary, d_term, rankin_selberg_bound,
                          self_tensor_bound)
from .groups import (FiniteGroup, Filtration, Subgroup, affine, build_group,
                     cyclic, dihedral, direct_product, elementary_abelian,
                     filtration_from_generators, heisenberg, make_filtration,
                     power_map, quaternion8, subgroup_generated)
from .jacobians import (BreakRep, FamilyParams, disc_valuation,
                        jacobian_inertia_model, joint_break_model,
                        smallest_valid_unit, swan_break, swan_jacobian,
                        validate_params, verify_sharpness)
from .weildeligne import (AbVarDatum, InertiaModel, WDRep, artin_conductor,
                          clebsch_gordan, conductor_bound, degree,
                          degree_gap, semistable_equality, swan_bound,
                          swan_conductor, tame_identity, tensor,
                          uniform_bound)

__version__ = "0.1.0"
