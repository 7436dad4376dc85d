"""Finite 2-groups with exactly three automorphism orbits.

Construction of the explicit group models from squarings, automorphism orbit
counting, the one-dimensional semilinear subgroup calculus, the binary-digit
number theory behind the classification, and the end-to-end pipelines.
"""

from .field import Field, SubfieldEmbedding, get_embedding, get_field
from .gammal1 import (
    GammaL1,
    HomTarget,
    StandardParams,
    contains,
    enumerate_hom_targets,
    enumerate_transitive_subgroups,
    is_normal_in,
    is_transitive,
    knuth_full_cycle,
    largest_abelian_normal,
    orbit_count_params,
    quotient_data,
    standard_form,
)
from .group import (
    AutPairGroup,
    GroupSpec,
    aut_pair_group,
    brute_force_orbits,
    export_pc_presentation,
    from_squaring,
    invariant_profile,
    orbit_count,
    parse_pc_presentation,
    squaring_of_group,
)
from .squaring import (
    Predatum,
    SearchBudgetExceeded,
    Squaring,
    biadditivity_criterion,
    coset_monomial_squaring,
    gammal1_equivalent,
    gl_equivalent,
    induced_form,
    induced_form_table,
    is_biadditive,
    sigma1_solutions,
    sigma_omega,
    singer_squaring,
    validate_predatum,
)
from .classify import (
    ClassEntry,
    enumerate_singer,
    identify_exceptional,
    label_singer_classes,
    nonstandard_search,
    theorem_list,
)

__version__ = "0.1.0"
