"""Exact genus-0 invariants of planar curves in P^3."""

from ._core import (  # noqa: F401
    CohClass,
    __version__,
    binomial,
    diagonal,
    dual_basis,
    expected_codim,
    full_table,
    gw_invariant,
    inverse_pairing,
    kontsevich,
    load_cache,
    n_planar,
    pairing_matrix,
    phi3_classical,
    quantum_basis_product,
    reduce,
    reduce_point_insertion,
    run_cli,
    save_cache,
    wdvv1_coefficient_identity,
    wdvv_pairing_check,
)
