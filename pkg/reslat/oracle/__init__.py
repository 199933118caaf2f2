"""Brute-force model search and isomorphism checks."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.oracle.canonical import (
    canonical,
    canonical_hash,
    canonical_representative,
    is_isomorphic,
)
from reslat.oracle.search import brute_force, lattice_orders

__all__ = [
    "brute_force",
    "canonical",
    "canonical_hash",
    "canonical_representative",
    "is_isomorphic",
    "lattice_orders",
]
