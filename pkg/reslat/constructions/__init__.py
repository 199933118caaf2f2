"""Constructions of finite idempotent residuated lattices."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.constructions.amalgam import amalgamate_cic, amalgamate_osm
from reslat.constructions.catalan import (
    catalan_decompose,
    catalan_label,
    catalan_sum,
    enumerate_catalan,
)
from reslat.constructions.families import (
    abs_chain,
    abs_chain_literal,
    abs_index,
    c4,
    opposite_c4,
)
from reslat.constructions.fep import check_partial_preservation, fep_closure
from reslat.constructions.sugihara import sugihara_chain, sugihara_from_involution
from reslat.constructions.tensor import tensor

__all__ = [
    "abs_chain",
    "abs_chain_literal",
    "abs_index",
    "amalgamate_cic",
    "amalgamate_osm",
    "c4",
    "catalan_decompose",
    "catalan_label",
    "catalan_sum",
    "check_partial_preservation",
    "enumerate_catalan",
    "fep_closure",
    "opposite_c4",
    "sugihara_chain",
    "sugihara_from_involution",
    "tensor",
]
