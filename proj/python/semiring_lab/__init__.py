"""Exact ideal arithmetic and theorem checks over commutative semirings."""

from ._core import (
    CarrierMismatch,
    Error,
    Ideal,
    InternalError,
    ParseError,
    PreconditionError,
    ResourceLimit,
    Semiring,
    Unsupported,
    check,
    dm_pair,
    enumerate,
    eval,
    falsify,
    gaussian_pair,
    normalize_expr,
    run_cli,
    search,
    semiring,
    semiring_catalog,
    suite_catalog,
    table_semiring,
    verify_axioms,
)

__all__ = [
    "CarrierMismatch",
    "Error",
    "Ideal",
    "InternalError",
    "ParseError",
    "PreconditionError",
    "ResourceLimit",
    "Semiring",
    "Unsupported",
    "check",
    "dm_pair",
    "enumerate",
    "eval",
    "falsify",
    "gaussian_pair",
    "normalize_expr",
    "run_cli",
    "search",
    "semiring",
    "semiring_catalog",
    "suite_catalog",
    "table_semiring",
    "verify_axioms",
]
