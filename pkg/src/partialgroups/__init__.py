"""Partial groups over finite Cayley-table groups.

Build the structure carrier = support * defect inside a finite ambient group,
work with its partial subgroups, cosets, quotients, and homomorphisms, and
run the exhaustive claim registry over a catalog of small instances.
"""

from .errors import AlgebraError
from .groups import (
    GroupMap,
    GroupQuotient,
    GroupTable,
    SubgroupSet,
    all_subgroups,
    check_group_hom,
    enumerate_group_homs,
    find_isomorphism,
    group_quotient,
    subgroup,
    subgroup_closure,
    validate_group,
)
from .catalog import CATALOG_NAMES, catalog, group_by_spec
from .formats import load_cayley, save_cayley
from .partial import (
    FreeClassPartition,
    PartialGroup,
    SupplementPair,
    SupplementViolation,
    build_partial_group,
    case_table_mul,
    check_free,
    check_supplement,
    dot_identity,
    factorize,
    find_supplements,
    free_classes,
    inv_set,
    partial_mul,
    partial_power,
    quotient_by_free_relation,
)
from .substructures import (
    CongruencePartition,
    CosetFamily,
    PartialQuotient,
    PartialSubgroup,
    congruence_mod,
    conjugate_set,
    coset,
    coset_relation_classes,
    decompose_partial_subgroup,
    enumerate_partial_subgroups,
    intersect_subgroups,
    is_normal_partial,
    is_partial_subgroup,
    normal_test,
    partial_quotient,
    product_subgroups,
    totality_flags,
)
from .morphisms import (
    HomAnatomy,
    HomViolation,
    PartialHom,
    check_inverse_hom,
    check_mm3_properties,
    enumerate_partial_homs,
    hom_anatomy,
    identity_hom,
    is_partial_hom,
    support_projection,
)
from .theorems import (
    ClaimId,
    ClaimReport,
    InstanceSpec,
    REGISTRY,
    claim_ids,
    enumerate_instances,
    first_iso_check,
    recheck_witness,
    run_claims,
    second_iso_check,
    third_iso_check,
)

__version__ = "0.1.0"
