"""Exact combinatorics of pedestal polynomials.

Young diagrams and general finite posets, their standard tableaux and linear
extensions, reverse plane partitions, the degree-n star-product monomial
ring, and exhaustive desk-scale verifiers for the identities tying them
together.
"""

from .errors import (
    CycleError,
    DegreeMismatchError,
    InvalidExtensionError,
    InvalidTableauError,
    MissingValueError,
    NegativeEntryError,
    NegativePartError,
    NonMonotoneError,
    NotMonotoneError,
    PedestalError,
    PosetMismatchError,
    ShapeMismatchError,
    TooManyPartsError,
    UnknownLabelError,
)
from .shapes import (
    Node,
    Partition,
    StandardTableau,
    comaj,
    conjugate,
    descents,
    enumerate_syt,
    hook_multiset,
    l_stat,
    maj,
    make_partition,
    partitions,
    syt_count,
)
from .posets import (
    Label,
    LinearExtension,
    Poset,
    as_poset,
    canonical_extension,
    extension_of_tableau,
    linear_extensions,
    poset_from_covers,
    random_connected_posets,
    tableau_of_extension,
    young_poset,
)
from .rpp import (
    ReversePlanePartition,
    enumerate_column_strict,
    enumerate_rpp,
    make_rpp,
    pi_sort,
    rpp_add,
    rpp_from_rows,
    rpp_sub,
    volume,
)
from .ring import (
    FamilyCandidate,
    FamilyReport,
    Monomial,
    PolyMismatch,
    Series,
    SeriesMismatch,
    SymmetryWitness,
    UniPoly,
    bar_s_row,
    bar_schur,
    family_membership_check,
    first_poly_mismatch,
    first_series_mismatch,
    identity_01_report,
    identity_04_report,
    maj_comaj_report,
    make_monomial,
    monomial_of_partition,
    monomial_volume,
    principal_specialization,
    schur,
    series_star,
    star,
    swap_adjacent,
    symmetry_witness,
    unit_monomial,
    verify_identity_01,
    verify_identity_04,
    verify_maj_comaj,
)
from .pedestal import (
    IndependenceMismatch,
    Pedestal,
    b_st,
    b_st_inverse,
    disagreement_nodes,
    independence_report,
    pedestal,
    pedestal_polynomial,
    pedestal_set_witness,
    pi_poly,
    tableau_from_rpp,
    verify_independence,
)

__version__ = "0.1.0"

__all__ = [
    "CycleError", "DegreeMismatchError", "InvalidExtensionError",
    "InvalidTableauError", "MissingValueError", "NegativeEntryError",
    "NegativePartError", "NonMonotoneError", "NotMonotoneError",
    "PedestalError", "PosetMismatchError", "ShapeMismatchError",
    "TooManyPartsError", "UnknownLabelError",
    "Node", "Partition", "StandardTableau", "comaj", "conjugate", "descents",
    "enumerate_syt", "hook_multiset", "l_stat", "maj", "make_partition",
    "partitions", "syt_count",
    "Label", "LinearExtension", "Poset", "as_poset", "canonical_extension",
    "extension_of_tableau", "linear_extensions", "poset_from_covers",
    "random_connected_posets", "tableau_of_extension", "young_poset",
    "ReversePlanePartition", "enumerate_column_strict", "enumerate_rpp",
    "make_rpp", "pi_sort", "rpp_add", "rpp_from_rows", "rpp_sub", "volume",
    "FamilyCandidate", "FamilyReport", "Monomial", "PolyMismatch", "Series",
    "SeriesMismatch", "SymmetryWitness", "UniPoly", "bar_s_row", "bar_schur",
    "family_membership_check", "first_poly_mismatch", "first_series_mismatch",
    "identity_01_report", "identity_04_report", "maj_comaj_report",
    "make_monomial", "monomial_of_partition", "monomial_volume",
    "principal_specialization", "schur", "series_star", "star",
    "swap_adjacent", "symmetry_witness", "unit_monomial",
    "verify_identity_01", "verify_identity_04", "verify_maj_comaj",
    "IndependenceMismatch", "Pedestal", "b_st", "b_st_inverse",
    "disagreement_nodes", "independence_report", "pedestal",
    "pedestal_polynomial", "pedestal_set_witness", "pi_poly",
    "tableau_from_rpp", "verify_independence",
    "__version__",
]
