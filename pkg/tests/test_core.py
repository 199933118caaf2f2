"""Test validation and structure extraction on small algebras."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from pytest import raises

from reslat import Embedding, FinAlgebra
from reslat.chains import compile_code, enumerate_codes, parse_code
from reslat.constructions import abs_chain_literal, c4, opposite_c4, sugihara_chain
from reslat.core import (
    check_homomorphism,
    complete_residuals,
    congruences,
    direct_product,
    gamma_closure,
    generated_subalgebra,
    is_simple,
    is_subdirectly_irreducible,
    monoidal_preorder,
    opposite,
    properties,
    relabel,
    restrict,
    skeleton,
    validate,
)
from reslat.core.congruence import monolith, principal_congruence
from reslat.core.lattice import chain_sequence, is_totally_ordered, linear_extension
from reslat.core.structure import is_closed
from reslat.exceptions import (
    DimensionMismatch,
    IndexOutOfRange,
    InvariantBreach,
    MissingResiduals,
    NotIdempotent,
    NotInjective,
    NotResiduable,
    TooLarge,
    WrongClass,
)

TRIVIAL = FinAlgebra(n=1, unit=0, prod=[[0]])
TWO_CHAIN = FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 1]])
GODEL_3 = compile_code(parse_code("n")).algebra
LUKASIEWICZ_3 = FinAlgebra(
    n=3, unit=2, prod=[[max(0, x + y - 2) for y in range(3)] for x in range(3)]
)


def test_validate_two_chain() -> None:
    assert validate(TWO_CHAIN).ok


def test_validate_with_residuals() -> None:
    assert validate(complete_residuals(TWO_CHAIN)).ok
    assert validate(c4()).ok


def test_complete_residuals() -> None:
    algebra = complete_residuals(TWO_CHAIN)
    assert algebra.ld == ((1, 1), (0, 1))
    assert algebra.rd == ((1, 0), (1, 1))
    assert algebra.neg(0) == 1


def test_complete_residuals_not_residuable() -> None:
    with raises(NotResiduable):
        complete_residuals(abs_chain_literal(1))


def test_validate_identity_violation() -> None:
    report = validate(FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 0]]))
    assert not report.ok
    assert "identity" in report.axioms()


def test_validate_wrong_residual_table() -> None:
    algebra = complete_residuals(TWO_CHAIN)
    broken = algebra.with_residuals([[1, 1], [0, 0]], algebra.rd)
    report = validate(broken)
    assert report.axioms() == ["residuation"]


def test_validate_no_join() -> None:
    algebra = FinAlgebra(
        n=3,
        unit=0,
        prod=[[0, 1, 2], [1, 1, 1], [2, 2, 2]],
        leq=[[1, 1, 1], [0, 1, 0], [0, 0, 1]],
    )
    assert "join" in validate(algebra).axioms()


def test_validate_dimensions() -> None:
    with raises(DimensionMismatch):
        validate(FinAlgebra(n=2, unit=1, prod=[[0, 0, 0], [0, 1, 0]]))
    with raises(IndexOutOfRange):
        validate(FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 5]]))
    with raises(IndexOutOfRange):
        validate(FinAlgebra(n=2, unit=2, prod=[[0, 0], [0, 1]]))


def test_properties_two_chain() -> None:
    flags = properties(TWO_CHAIN)
    assert flags.names() == ["idempotent", "commutative", "conservative", "totally_ordered"]
    assert not flags.odd_sugihara


def test_properties_c4() -> None:
    assert properties(c4()).names() == ["idempotent", "conservative", "totally_ordered"]


def test_properties_sugihara() -> None:
    assert properties(sugihara_chain(2)).odd_sugihara
    assert not properties(GODEL_3).odd_sugihara


def test_properties_not_idempotent() -> None:
    flags = properties(LUKASIEWICZ_3)
    assert not flags.idempotent
    assert flags.commutative


def test_monoidal_preorder_c4() -> None:
    preorder = monoidal_preorder(c4())
    assert preorder.equivalent(1, 3)
    assert preorder.greatest() == [2]
    assert preorder.least() == [0]
    assert preorder.sharp(1) == 3
    assert preorder.sharp(2) == 2
    assert preorder.levels() == [[0], [1, 3], [2]]


def test_monoidal_preorder_opposite_c4() -> None:
    preorder = monoidal_preorder(opposite_c4())
    assert preorder.incomparable(1, 3)
    assert preorder.sharp(3) == 1


def test_monoidal_preorder_not_idempotent() -> None:
    with raises(NotIdempotent):
        monoidal_preorder(LUKASIEWICZ_3)


def test_monoidal_preorder_not_transitive() -> None:
    prod = [[0] * 5, [0, 1, 1, 3, 1], [0, 2, 2, 2, 2], [0, 3, 3, 3, 3], [0, 1, 2, 3, 4]]
    with raises(InvariantBreach) as err:
        monoidal_preorder(FinAlgebra(n=5, unit=4, prod=prod))
    assert ("transitive", (1, 2, 3)) in err.value.report.violations
    assert err.value.report.axioms() == ["transitive"]


def test_residuals_required() -> None:
    with raises(MissingResiduals):
        TWO_CHAIN.left_div(1, 0)
    with raises(MissingResiduals):
        TWO_CHAIN.right_div(0, 1)


def test_gamma_requires_residuals() -> None:
    with raises(MissingResiduals):
        gamma_closure(TWO_CHAIN, 0)


def test_gamma_bottom_two_chain() -> None:
    assert gamma_closure(complete_residuals(TWO_CHAIN), 0) == (0, 1)


def test_gamma_unit_godel() -> None:
    assert gamma_closure(GODEL_3, GODEL_3.unit) == (2, 2, 2)


def test_skeleton_godel() -> None:
    parts = skeleton(GODEL_3)
    assert parts.elements == (2,)
    assert parts.fibers == ((0, 1, 2),)
    assert parts.algebra.n == 1
    assert parts.decomposition().fibers == (3,)


def test_skeleton_sugihara() -> None:
    parts = skeleton(sugihara_chain(1))
    assert parts.elements == (0, 1, 2)
    assert parts.fibers == ((0,), (1,), (2,))


def test_skeleton_noncommutative() -> None:
    with raises(WrongClass):
        skeleton(c4())


def test_generated_subalgebra_c4() -> None:
    algebra = c4()
    assert generated_subalgebra(algebra, []) == frozenset({2})
    assert generated_subalgebra(algebra, [1]) == frozenset(range(4))
    assert generated_subalgebra(algebra, [0]) == frozenset(range(4))


def test_generated_subalgebra_godel() -> None:
    assert generated_subalgebra(GODEL_3, [1]) == frozenset({1, 2})
    assert generated_subalgebra(GODEL_3, [0]) == frozenset({0, 2})


def test_restrict() -> None:
    assert restrict(GODEL_3, [0, 2]) == complete_residuals(TWO_CHAIN)
    assert restrict(GODEL_3, [1, 2]).n == 2


def test_restrict_not_closed() -> None:
    assert not is_closed(c4(), [1, 2])
    with raises(WrongClass):
        restrict(c4(), [1, 2])


def test_opposite_c4() -> None:
    assert opposite(c4()) == opposite_c4()
    assert opposite(opposite(c4())) == c4()


def test_direct_product() -> None:
    square = direct_product(TWO_CHAIN, TWO_CHAIN)
    assert square.n == 4
    assert square.unit == 3
    assert validate(square).ok
    assert not is_totally_ordered(square)
    flags = properties(square)
    assert flags.idempotent
    assert flags.commutative
    assert not flags.conservative


def test_relabel() -> None:
    reversed_order = relabel(GODEL_3, [2, 1, 0])
    assert not reversed_order.is_chain_tagged
    assert reversed_order.unit == 0
    assert chain_sequence(reversed_order) == [2, 1, 0]
    assert linear_extension(reversed_order) == [2, 1, 0]
    assert relabel(reversed_order, [2, 1, 0]) == GODEL_3


def test_relabel_not_a_permutation() -> None:
    with raises(ValueError):
        relabel(GODEL_3, [0, 0, 1])


def test_congruences_trivial() -> None:
    assert congruences(TRIVIAL) == [((0,),)]
    assert not is_simple(TRIVIAL)


def test_congruences_two_chain() -> None:
    assert congruences(TWO_CHAIN) == [((0,), (1,)), ((0, 1),)]
    assert is_simple(TWO_CHAIN)


def test_congruences_godel() -> None:
    assert congruences(GODEL_3) == [
        ((0,), (1,), (2,)),
        ((0,), (1, 2)),
        ((0, 1, 2),),
    ]
    assert principal_congruence(GODEL_3, 0, 1) == ((0, 1, 2),)
    assert monolith(GODEL_3) == ((0,), (1, 2))
    assert is_subdirectly_irreducible(GODEL_3)
    assert not is_simple(GODEL_3)


def test_congruences_c4() -> None:
    assert len(congruences(c4())) == 2
    assert is_simple(c4())


def _blocks(partition) -> frozenset:
    return frozenset(frozenset(block) for block in partition)


def _meet(first, second) -> frozenset:
    return frozenset(
        frozenset(a) & frozenset(b) for a in first for b in second if set(a) & set(b)
    )


def test_congruences_closed_under_meet() -> None:
    algebras = [GODEL_3, c4(), sugihara_chain(2), direct_product(TWO_CHAIN, TWO_CHAIN)]
    algebras.extend(compile_code(code).algebra for n in range(2, 6) for code in enumerate_codes(n))
    for algebra in algebras:
        found = {_blocks(partition) for partition in congruences(algebra)}
        assert _blocks(tuple((x,) for x in algebra.elements)) in found
        assert _blocks((tuple(algebra.elements),)) in found
        for first in found:
            for second in found:
                assert _meet(first, second) in found


def test_congruences_too_large() -> None:
    with raises(TooLarge):
        congruences(sugihara_chain(4), max_size=7)


def test_homomorphism() -> None:
    assert check_homomorphism(Embedding(TWO_CHAIN, GODEL_3, (0, 2))).ok
    assert check_homomorphism(Embedding(TWO_CHAIN, GODEL_3, (1, 2))).ok


def test_homomorphism_violation() -> None:
    report = check_homomorphism(Embedding(TWO_CHAIN, sugihara_chain(1), (0, 1)))
    assert not report.ok
    assert "left residual" in report.axioms()


def test_homomorphism_not_injective() -> None:
    with raises(NotInjective):
        check_homomorphism(Embedding(TWO_CHAIN, GODEL_3, (2, 2)))
