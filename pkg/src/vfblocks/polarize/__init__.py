"""Covering-pair polarizations, pole accounting, semistability and Smith form."""

from .covering import (
    CoveringPair,
    CoveringPairError,
    NodeLedger,
    PoleLedger,
    build_covering_pair,
    node_ledger,
    openeye_bound,
    pole_certificate,
)
from .poly import Poly
from .semistability import (
    MultiDegreeSheafData,
    SemistabilityError,
    a_semistable,
    limit_semistable,
    linear_semistable,
    twist_alpha_from_a,
)
from .smith import SNFResult, SingularMatrixError, parse_matrix, pole_exponents, smith_normal_form

__all__ = [
    "CoveringPair",
    "CoveringPairError",
    "MultiDegreeSheafData",
    "NodeLedger",
    "PoleLedger",
    "Poly",
    "SNFResult",
    "SemistabilityError",
    "SingularMatrixError",
    "a_semistable",
    "build_covering_pair",
    "limit_semistable",
    "linear_semistable",
    "node_ledger",
    "openeye_bound",
    "parse_matrix",
    "pole_certificate",
    "pole_exponents",
    "smith_normal_form",
    "twist_alpha_from_a",
]
