"""Exact Hodge-theoretic invariants of hypersurface singularities."""

from ._milnor_hodge import (
    Error,
    LaurentPoly,
    ParseError,
    PreconditionError,
    SchemaError,
    Spectrum,
    brieskorn_pham,
    chi_one,
    chi_y,
    chi_y_singular,
    chi_y_virtual,
    du_bois_test,
    explicit_spectrum,
    hodge_table,
    quasi_homogeneous,
    run_cli,
    signature,
    thom_sebastiani,
    verify,
)

__all__ = [
    "Error",
    "LaurentPoly",
    "ParseError",
    "PreconditionError",
    "SchemaError",
    "Spectrum",
    "brieskorn_pham",
    "chi_one",
    "chi_y",
    "chi_y_singular",
    "chi_y_virtual",
    "du_bois_test",
    "explicit_spectrum",
    "hodge_table",
    "quasi_homogeneous",
    "run_cli",
    "signature",
    "thom_sebastiani",
    "verify",
]
