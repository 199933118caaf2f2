"""Named algebras: absolute-value chains and the noncommutative 4-element chains."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from reslat.base import CHAIN, FinAlgebra, LacedCode, Level
from reslat.chains import compile_code
from reslat.constructions.checks import self_check
from reslat.core.validation import complete_residuals
from reslat.exceptions import SizeTooSmall


def abs_index(k: int, value: int) -> int:
    """Return the index of the integer label value in a chain on -k..k."""
    return value + k


def abs_chain_literal(k: int) -> FinAlgebra:
    """Return the chain -k..k with x·y = x if |x| ≥ |y| and y otherwise.

    The table has no residuals: k·(-k) = k, so the least element does not
    annihilate and k\\(-k) does not exist.
    """
    if k < 1:
        raise SizeTooSmall(k, 1)
    labels = range(-k, k + 1)
    return FinAlgebra(
        n=2 * k + 1,
        unit=abs_index(k, 0),
        prod=[
            [abs_index(k, x if abs(x) >= abs(y) else y) for y in labels]
            for x in labels
        ],
        leq=CHAIN,
    )


def abs_chain(k: int) -> FinAlgebra:
    """Return the residuated absolute-value chain on -k..k.

    The least element -k absorbs every product. Elsewhere x·y = x if |x| ≥ |y|
    and y otherwise, the left argument winning ties.
    """
    if k < 1:
        raise SizeTooSmall(k, 1)
    labels = range(-k, k + 1)

    def multiply(x: int, y: int) -> int:
        if -k in (x, y):
            return -k
        return x if abs(x) >= abs(y) else y

    algebra = FinAlgebra(
        n=2 * k + 1,
        unit=abs_index(k, 0),
        prod=[[abs_index(k, multiply(x, y)) for y in labels] for x in labels],
        leq=CHAIN,
    )
    return self_check("abs_chain", complete_residuals(algebra))


def c4() -> FinAlgebra:
    """Return the 4-element chain ⊥ < c < 1 < c♯ with c·c♯ = c and c♯·c = c♯."""
    return compile_code(LacedCode((Level.CPAIR,))).algebra


def opposite_c4() -> FinAlgebra:
    """Return the opposite of c4, in which c·c♯ = c♯ and c♯·c = c."""
    return compile_code(LacedCode((Level.IPAIR,))).algebra
