"""reslat enumerates, checks, constructs and counts finite idempotent residuated lattices."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from .base import (
    CHAIN,
    Amalgam,
    CanonicalForm,
    CheckReport,
    CompiledChain,
    Constraint,
    ConstraintSet,
    Embedding,
    FepClosure,
    FinAlgebra,
    LacedCode,
    Level,
    PreorderRel,
    PropertyFlags,
    Sign,
    Skeleton,
    SkeletonDecomposition,
    Span,
)
from .exceptions import ReslatException  # noqa

__all__ = [
    "CHAIN",
    "Amalgam",
    "CanonicalForm",
    "CheckReport",
    "CompiledChain",
    "Constraint",
    "ConstraintSet",
    "Embedding",
    "FepClosure",
    "FinAlgebra",
    "LacedCode",
    "Level",
    "PreorderRel",
    "PropertyFlags",
    "ReslatException",
    "Sign",
    "Skeleton",
    "SkeletonDecomposition",
    "Span",
]
