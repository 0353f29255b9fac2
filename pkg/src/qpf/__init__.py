"""Exact quasi-determinant and quasi-Pfaffian toolkit.

Everything is computed over exact coefficient rings (rationals,
rational quaternions, rational block matrices) so that algebraic
identities can be checked as literal equalities.
"""

from qpf.rings import (
    RATIONAL,
    QUATERNION,
    BlockMatrix,
    DimMismatch,
    Quaternion,
    Ring,
    RingError,
    Singular,
    TagMismatch,
    block_ring,
)

__all__ = [
    "RATIONAL",
    "QUATERNION",
    "BlockMatrix",
    "DimMismatch",
    "Quaternion",
    "Ring",
    "RingError",
    "Singular",
    "TagMismatch",
    "block_ring",
]
