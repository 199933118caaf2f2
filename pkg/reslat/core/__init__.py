"""Finite-algebra validation and structure extraction."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.core.congruence import (
    congruences,
    is_simple,
    is_subdirectly_irreducible,
    monolith,
)
from reslat.core.homomorphism import check_homomorphism
from reslat.core.lattice import linear_extension, relabel
from reslat.core.properties import properties
from reslat.core.structure import (
    bounded_subalgebra,
    direct_product,
    gamma_closure,
    generated_subalgebra,
    monoidal_preorder,
    opposite,
    restrict,
    skeleton,
)
from reslat.core.validation import complete_residuals, validate

__all__ = [
    "bounded_subalgebra",
    "check_homomorphism",
    "complete_residuals",
    "congruences",
    "direct_product",
    "gamma_closure",
    "generated_subalgebra",
    "is_simple",
    "is_subdirectly_irreducible",
    "linear_extension",
    "monoidal_preorder",
    "monolith",
    "opposite",
    "properties",
    "relabel",
    "restrict",
    "skeleton",
    "validate",
]
