"""Test the quantified laws on compiled chains and named algebras."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from pytest import mark

from reslat import FinAlgebra
from reslat.chains import compile_code, enumerate_codes, parse_code
from reslat.constructions import c4, opposite_c4, sugihara_chain
from reslat.core import direct_product
from reslat.core.laws import (
    check_central_pairs,
    check_chain_conservative,
    check_cone_chain,
    check_conservative_equation,
    check_generation_bound,
    check_idempotent_laws,
    check_lacing,
    different_signs,
    generation_bound,
)
from reslat.core.structure import bounded_subalgebra, generated_subalgebra

TWO_CHAIN = FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 1]])


def _quadratic_bound(m: int) -> int:
    if m == 1:
        return generation_bound(1)
    return (2 * m + 1) * m


def test_different_signs() -> None:
    algebra = c4()
    assert different_signs(algebra, 1, 3)
    assert not different_signs(algebra, 0, 1)
    assert not different_signs(algebra, 2, 3)


def test_generation_bound() -> None:
    assert [generation_bound(m) for m in range(1, 4)] == [4, 7, 10]


@mark.parametrize("n", range(2, 7))
def test_chain_laws(n: int) -> None:
    for code in enumerate_codes(n):
        algebra = compile_code(code).algebra
        assert check_idempotent_laws(algebra).ok, str(code)
        assert check_cone_chain(algebra).ok, str(code)
        assert check_chain_conservative(algebra).ok, str(code)
        assert check_central_pairs(algebra).ok, str(code)
        assert check_lacing(algebra).ok, str(code)


@mark.parametrize("n", range(2, 8))
def test_commutative_chain_laws(n: int) -> None:
    for code in enumerate_codes(n, commutative_only=True):
        algebra = compile_code(code).algebra
        assert check_conservative_equation(algebra).ok, str(code)
        assert check_generation_bound(algebra, max_seed=2).ok, str(code)
        assert check_generation_bound(algebra, max_seed=3, bound=_quadratic_bound).ok, str(code)


def test_generation_bound_sugihara() -> None:
    assert check_generation_bound(sugihara_chain(3)).ok


def test_generation_bound_quadratic() -> None:
    algebra = compile_code(parse_code("npnpn")).algebra
    report = check_generation_bound(algebra, max_seed=3, bound=_quadratic_bound)
    assert report.ok


def test_generated_inside_bounded() -> None:
    algebra = compile_code(parse_code("pnp")).algebra
    for x in algebra.elements:
        for y in algebra.elements:
            assert generated_subalgebra(algebra, [x, y]) <= bounded_subalgebra(algebra, [x, y])


def test_generation_bound_violation() -> None:
    report = check_generation_bound(sugihara_chain(2), max_seed=1, bound=lambda m: 2)
    assert not report.ok
    assert report.axioms() == ["generation bound"]


def test_noncommutative_pairs() -> None:
    assert check_central_pairs(c4()).ok
    assert check_central_pairs(opposite_c4()).ok
    assert check_lacing(opposite_c4()).ok


def test_cone_chain_violation() -> None:
    square = direct_product(TWO_CHAIN, TWO_CHAIN)
    report = check_cone_chain(square)
    assert report.violations == [("cones form a chain", (1, 2))]


def test_idempotent_laws_product() -> None:
    assert check_idempotent_laws(direct_product(TWO_CHAIN, TWO_CHAIN)).ok
