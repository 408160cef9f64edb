"""Exact closed forms for Cauchy and min matrices, with independent oracles.

The subpackages:

* :mod:`cauchykit.ring` -- exact scalars (rationals, prime fields).
* :mod:`cauchykit.densela` -- generic brute-force linear algebra (the oracle).
* :mod:`cauchykit.cauchy` -- Cauchy matrices and their closed forms.
* :mod:`cauchykit.minmat` -- min matrices, the order-theoretic twin.
* :mod:`cauchykit.canary` -- float inversion as an ill-conditioning canary.
* :mod:`cauchykit.verify` / :mod:`cauchykit.cli` -- reports, JSON, CLI.
"""

from .ring import (
    CauchyKitError,
    ContextMismatchError,
    FpElement,
    NotInvertibleError,
    PrimeField,
    RationalRing,
    UnorderedRingError,
)
from .densela import Matrix, ShapeError, SizeLimitError, WeightVectors
from .cauchy import CauchySpec, InvertibilityVerdict, NonInvertiblePairSumError
from .minmat import MinSpec, SortedMinSpec, UnsortedInputError

__all__ = [
    "CauchyKitError",
    "ContextMismatchError",
    "FpElement",
    "NotInvertibleError",
    "PrimeField",
    "RationalRing",
    "UnorderedRingError",
    "Matrix",
    "ShapeError",
    "SizeLimitError",
    "WeightVectors",
    "CauchySpec",
    "InvertibilityVerdict",
    "NonInvertiblePairSumError",
    "MinSpec",
    "SortedMinSpec",
    "UnsortedInputError",
]

__version__ = "0.1.0"
