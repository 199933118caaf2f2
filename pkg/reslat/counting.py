"""Exact counts of finite idempotent residuated chains and Catalan algebras.

All arithmetic is done on Python integers. The closed form of the idempotent
chain count lives in the ring Z[√3].
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, Tuple, Union

from reslat.exceptions import SizeTooSmall


@dataclass(frozen=True)
class RootThreeInt:
    """The element a + b·√3 of Z[√3]."""

    a: int
    b: int = 0

    def __add__(self, other: Union[int, "RootThreeInt"]) -> "RootThreeInt":
        if isinstance(other, int):
            other = RootThreeInt(other)
        if not isinstance(other, RootThreeInt):
            return NotImplemented
        return RootThreeInt(self.a + other.a, self.b + other.b)

    def __sub__(self, other: Union[int, "RootThreeInt"]) -> "RootThreeInt":
        if isinstance(other, int):
            other = RootThreeInt(other)
        if not isinstance(other, RootThreeInt):
            return NotImplemented
        return RootThreeInt(self.a - other.a, self.b - other.b)

    def __mul__(self, other: Union[int, "RootThreeInt"]) -> "RootThreeInt":
        if isinstance(other, int):
            other = RootThreeInt(other)
        if not isinstance(other, RootThreeInt):
            return NotImplemented
        return RootThreeInt(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __pow__(self, exponent: int) -> "RootThreeInt":
        if exponent < 0:
            raise ValueError("Z[√3] has no general inverses")
        result = RootThreeInt(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "RootThreeInt":
        """Return a - b·√3."""
        return RootThreeInt(self.a, -self.b)


ONE_PLUS_ROOT_THREE = RootThreeInt(1, 1)


def _require(n: int, minimum: int):
    if n < minimum:
        raise SizeTooSmall(n, minimum)


def multinomial(total: int, *parts: int) -> int:
    """Return total! / (parts[0]! ... parts[-1]!), or 0 when the parts do not sum to total."""
    if sum(parts) != total or any(part < 0 for part in parts):
        return 0
    result = factorial(total)
    for part in parts:
        result //= factorial(part)
    return result


def count_cic(n: int) -> int:
    """Return 2^(n-2), the number of commutative idempotent residuated chains of size n."""
    _require(n, 2)
    return 2 ** (n - 2)


def count_cic_by_unit(n: int) -> int:
    """Count commutative idempotent chains by the number of elements below the unit."""
    _require(n, 2)
    return sum(comb(n - 2, k) for k in range(n - 1))


def count_ic_terms(n: int) -> Dict[Tuple[int, int], int]:
    """Return the terms of the double sum for I(n), keyed by (s, t).

    s counts the comparable and t the incomparable noncommuting pairs.
    """
    _require(n, 2)
    half = n // 2
    terms = {}
    for s in range(half):
        for t in range(half - s):
            singles = n - 2 - 2 * s - 2 * t
            levels = n - 2 - s - t
            terms[(s, t)] = multinomial(levels, s, t, singles) * 2**singles
    return terms


def count_ic_formula(n: int) -> int:
    """Return I(n), the number of idempotent residuated chains of size n, as a double sum."""
    return sum(count_ic_terms(n).values())


def count_ic_recurrence(n: int) -> int:
    """Return I(n) by iterating I(n+2) = 2·I(n) + 2·I(n+1) from I(2) = 1 and I(3) = 2."""
    _require(n, 2)
    previous, current = 1, 2
    if n == 2:
        return previous
    for _ in range(n - 3):
        previous, current = current, 2 * previous + 2 * current
    return current


def _conjugate_difference(exponent: int) -> int:
    power = ONE_PLUS_ROOT_THREE**exponent
    difference = power - power.conjugate()
    # difference is 2b·√3 with a zero rational part
    return difference.b // 2


def count_ic_closed(n: int) -> int:
    """Return I(n) = ((1+√3)^(n-1) - (1-√3)^(n-1)) / (2√3), computed exactly."""
    _require(n, 2)
    return _conjugate_difference(n - 1)


def closed_form_exponent_n(n: int) -> int:
    """Return ((1+√3)^n - (1-√3)^n) / (2√3), which equals I(n+1)."""
    _require(n, 2)
    return _conjugate_difference(n)


def catalan_count(n: int) -> int:
    """Return the (n-1)th Catalan number binom(2n-2, n-1) / n."""
    _require(n, 1)
    return comb(2 * (n - 1), n - 1) // n


def catalan_by_convolution(n: int) -> int:
    """Return the (n-1)th Catalan number from C(n) = Σ C(k)·C(n-k)."""
    _require(n, 1)
    values = [0, 1]
    for size in range(2, n + 1):
        values.append(sum(values[k] * values[size - k] for k in range(1, size)))
    return values[n]
