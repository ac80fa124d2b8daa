from ._ncalg import (
    NcalgError,
    classify,
    graded_dim,
    groebner_basis,
    hilbert_series,
    koszul_defect,
    orbit,
    run,
)

__all__ = [
    "NcalgError",
    "classify",
    "graded_dim",
    "groebner_basis",
    "hilbert_series",
    "koszul_defect",
    "orbit",
    "run",
]
