"""Test the named families and the tensor construction."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from pytest import mark, raises

from reslat import SkeletonDecomposition
from reslat.chains import compile_code, enumerate_codes, parse_code
from reslat.constructions import (
    abs_chain,
    abs_chain_literal,
    abs_index,
    c4,
    opposite_c4,
    sugihara_chain,
    sugihara_from_involution,
    tensor,
)
from reslat.core import (
    complete_residuals,
    congruences,
    generated_subalgebra,
    properties,
    skeleton,
    validate,
)
from reslat.core.structure import is_closed
from reslat.exceptions import (
    BadFibers,
    BadSkeleton,
    EvenSize,
    NotResiduable,
    SizeTooSmall,
)
from reslat.oracle import is_isomorphic


def test_sugihara_three() -> None:
    algebra = sugihara_from_involution(3)
    assert algebra.unit == 1
    assert algebra.prod == ((0, 0, 0), (0, 1, 2), (0, 2, 2))
    assert [algebra.neg(x) for x in algebra.elements] == [2, 1, 0]


def test_sugihara_five() -> None:
    algebra = sugihara_chain(2)
    minus_two, minus_one, plus_one, plus_two = (abs_index(2, v) for v in (-2, -1, 1, 2))
    assert algebra.mul(minus_two, plus_two) == minus_two
    assert algebra.mul(plus_two, minus_one) == plus_two
    assert algebra.mul(minus_one, plus_one) == minus_one
    assert algebra.left_div(plus_one, minus_one) == minus_one
    assert properties(algebra).odd_sugihara


def test_sugihara_trivial() -> None:
    assert sugihara_chain(0).n == 1


def test_sugihara_even() -> None:
    with raises(EvenSize):
        sugihara_from_involution(4)
    with raises(SizeTooSmall):
        sugihara_from_involution(0)


def test_sugihara_three_is_positive_code() -> None:
    assert is_isomorphic(sugihara_chain(1), compile_code(parse_code("p")).algebra)


def test_abs_chain_literal_not_residuable() -> None:
    literal = abs_chain_literal(2)
    assert literal.mul(abs_index(2, 2), abs_index(2, -2)) == abs_index(2, 2)
    with raises(NotResiduable):
        complete_residuals(literal)


@mark.parametrize("k", range(1, 6))
def test_abs_chain(k: int) -> None:
    algebra = abs_chain(k)
    assert algebra.n == 2 * k + 1
    assert algebra == compile_code(parse_code("p" + "C" * (k - 1))).algebra
    bottom = abs_index(k, -k)
    assert all(algebra.mul(x, bottom) == bottom for x in algebra.elements)
    assert validate(algebra).ok
    assert generated_subalgebra(algebra, [abs_index(k, -1)]) == frozenset(algebra.elements)
    for x in range(1, k):
        assert algebra.left_div(abs_index(k, x), abs_index(k, 0)) == abs_index(k, -x - 1)


def test_abs_chain_residual_truncates() -> None:
    algebra = abs_chain(2)
    assert algebra.left_div(abs_index(2, 1), abs_index(2, 0)) == abs_index(2, -2)
    assert algebra.left_div(abs_index(2, 2), abs_index(2, 0)) == abs_index(2, -2)


def test_abs_chain_too_small() -> None:
    with raises(SizeTooSmall):
        abs_chain(0)
    with raises(SizeTooSmall):
        abs_chain_literal(0)


def test_c4_facts() -> None:
    algebra = c4()
    assert algebra.mul(1, 3) == 1
    assert algebra.mul(3, 1) == 3
    assert not properties(algebra).commutative
    assert len(congruences(algebra)) == 2
    proper = [
        subset
        for subset in ([2], [0, 2], [1, 2], [2, 3], [0, 1, 2], [0, 2, 3], [1, 2, 3])
        if is_closed(algebra, subset)
    ]
    assert proper == [[2]]
    assert generated_subalgebra(algebra, [3]) == frozenset(range(4))


def test_c4_not_isomorphic_to_opposite() -> None:
    assert is_isomorphic(c4(), opposite_c4()) is None
    assert is_isomorphic(c4(), c4()) is not None


@mark.parametrize("n", range(2, 9))
def test_tensor_roundtrip(n: int) -> None:
    for code in enumerate_codes(n, commutative_only=True):
        algebra = compile_code(code).algebra
        rebuilt = tensor(skeleton(algebra).decomposition())
        assert rebuilt == algebra, str(code)


def test_tensor_godel() -> None:
    algebra = tensor(SkeletonDecomposition(sugihara_chain(0), (3,)))
    assert algebra == compile_code(parse_code("n")).algebra


def test_tensor_fibers() -> None:
    algebra = tensor(SkeletonDecomposition(sugihara_chain(1), (1, 3, 1)))
    assert algebra.n == 5
    assert algebra.unit == 3
    parts = skeleton(algebra)
    assert parts.elements == (0, 3, 4)
    assert parts.fibers == ((0,), (1, 2, 3), (4,))


def test_tensor_bad_skeleton() -> None:
    with raises(BadSkeleton):
        tensor(SkeletonDecomposition(compile_code(parse_code("n")).algebra, (1, 1, 1)))


def test_tensor_bad_fibers() -> None:
    with raises(BadFibers):
        tensor(SkeletonDecomposition(sugihara_chain(1), (1, 1)))
    with raises(BadFibers):
        tensor(SkeletonDecomposition(sugihara_chain(1), (1, 0, 1)))
