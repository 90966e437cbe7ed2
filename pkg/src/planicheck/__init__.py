"""Planimetry verification toolkit.

Exact and tolerance-aware primitives for triangle congruence criteria, the
ambiguous SSA dichotomy (congruent or supplementary remaining angles), and
numeric verification of classical triangle locus statements.
"""

__version__ = "0.1.0"

from .scalars import (  # noqa: F401
    EXACT,
    BackendMismatchError,
    DegenerateInputError,
    ExactBackend,
    ExactValueError,
    FloatBackend,
    LengthMismatchError,
    Scalar,
)
