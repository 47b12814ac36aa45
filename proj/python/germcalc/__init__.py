"""Invariants, constructions and simplicity tests for map germs."""

from ._core import (
    CodimResult,
    GermError,
    MultiGerm,
    NotCorankOne,
    NotStabilized,
    NotStableType,
    ParseError,
    StabilizationPolicy,
    Unfolding,
    UnsupportedDimensions,
    ValidationError,
    a_codim,
    ae_codim,
    atlas_entry,
    atlas_names,
    atype,
    atype_indices,
    augment,
    binary_concat,
    corank,
    expected_codim,
    export_catalog_json,
    generalised_concat,
    instantiate,
    is_quasi_homogeneous,
    is_stable,
    lookup,
    milnor,
    monic_concat,
    multiplicity,
    nishimura_bound,
    parse,
    predicted_codim_augconc,
    sim_aug_concat,
    simplicity_report,
    tjurina,
    verify,
    wilson_check,
)

__version__ = "0.1.0"
