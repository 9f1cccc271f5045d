"""Schur rings over finite abelian groups."""

from ._schur import (
    AbelianGroup,
    BudgetExceeded,
    InvalidArgument,
    MalformedInput,
    SchurError,
    SRing,
    ValidationError,
    a_subgroups,
    aut_order,
    check_all_schurian,
    check_nonregular_tensor,
    check_quotient_regular_orbits,
    check_radical_wreath,
    check_regular_classification,
    check_table1,
    classify_up_to_cayley,
    cyclotomic_by_powers,
    cyclotomic_rings,
    enumerate_srings,
    enumerate_srings_brute,
    filter_rings,
    group_ring,
    gw_sections,
    is_primitive,
    is_quasi_thin,
    is_rational,
    is_regular,
    is_schurian,
    make_sring,
    parse_rings,
    predicate_names,
    ring_radical,
    table1,
    tensor,
    trivial_sring,
    validate,
    verify_paper,
    wreath,
)

__all__ = [name for name in dir() if not name.startswith("_")]
