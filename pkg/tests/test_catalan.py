"""Test Catalan sums, decompositions and labels."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from pytest import mark, raises

from reslat import FinAlgebra
from reslat.constructions import (
    c4,
    catalan_decompose,
    catalan_label,
    catalan_sum,
    enumerate_catalan,
)
from reslat.core import (
    complete_residuals,
    direct_product,
    is_subdirectly_irreducible,
    properties,
    validate,
)
from reslat.counting import catalan_count
from reslat.exceptions import SizeTooSmall, WrongClass
from reslat.oracle import canonical

TRIVIAL = FinAlgebra(n=1, unit=0, prod=[[0]])
TWO_CHAIN = FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 1]])


def test_sum_of_trivial() -> None:
    assert catalan_sum(TRIVIAL, TRIVIAL) == complete_residuals(TWO_CHAIN)


def test_decompose_two_chain() -> None:
    first, second = catalan_decompose(TWO_CHAIN)
    assert first.n == 1
    assert second.n == 1


def test_labels() -> None:
    assert catalan_label(TRIVIAL) == "o"
    assert catalan_label(TWO_CHAIN) == "(oo)"
    left = catalan_sum(TWO_CHAIN, TRIVIAL)
    right = catalan_sum(TRIVIAL, TWO_CHAIN)
    assert catalan_label(left) == "((oo)o)"
    assert catalan_label(right) == "(o(oo))"
    assert canonical(left) != canonical(right)


def test_sum_wrong_class() -> None:
    with raises(WrongClass):
        catalan_sum(c4(), TRIVIAL)


def test_decompose_wrong_class() -> None:
    with raises(WrongClass):
        catalan_decompose(direct_product(TWO_CHAIN, TWO_CHAIN))
    with raises(WrongClass):
        catalan_decompose(TRIVIAL)


def test_enumerate_too_small() -> None:
    with raises(SizeTooSmall):
        list(enumerate_catalan(0))


@mark.parametrize("n", range(2, 7))
def test_sum_decompose_roundtrip(n: int) -> None:
    for k in range(1, n):
        for first in enumerate_catalan(k):
            for second in enumerate_catalan(n - k):
                total = catalan_sum(first, second)
                assert total.n == n
                left, right = catalan_decompose(total)
                assert canonical(left) == canonical(first)
                assert canonical(right) == canonical(second)
                assert catalan_label(total) == f"({catalan_label(first)}{catalan_label(second)})"


@mark.parametrize("n", range(1, 8))
def test_enumerate(n: int) -> None:
    algebras = list(enumerate_catalan(n))
    assert len(algebras) == catalan_count(n)
    assert len({canonical(algebra) for algebra in algebras}) == len(algebras)
    assert len({catalan_label(algebra) for algebra in algebras}) == len(algebras)
    for algebra in algebras:
        completed = complete_residuals(algebra)
        assert validate(completed).ok
        flags = properties(completed)
        assert flags.commutative
        assert flags.conservative


@mark.parametrize("n", range(8, 10))
def test_enumerate_counts(n: int) -> None:
    assert sum(1 for _ in enumerate_catalan(n)) == catalan_count(n)


@mark.slow
def test_enumerate_counts_large() -> None:
    assert [sum(1 for _ in enumerate_catalan(n)) for n in (10, 11)] == [4862, 16796]


@mark.parametrize("n", range(2, 6))
def test_sums_are_subdirectly_irreducible(n: int) -> None:
    for algebra in enumerate_catalan(n):
        assert is_subdirectly_irreducible(algebra), catalan_label(algebra)
