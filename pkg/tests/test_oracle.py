"""Test the exhaustive model search against the structural enumerators."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from pytest import mark, raises

from reslat import ConstraintSet, FinAlgebra
from reslat.chains import compile_code, enumerate_codes
from reslat.constructions import c4, enumerate_catalan, opposite_c4
from reslat.core import (
    check_homomorphism,
    direct_product,
    is_subdirectly_irreducible,
    relabel,
    validate,
)
from reslat.core.laws import (
    check_central_pairs,
    check_chain_conservative,
    check_cone_chain,
    check_conservative_equation,
    check_idempotent_laws,
    check_lacing,
)
from reslat.counting import catalan_count, count_cic, count_ic_recurrence
from reslat.exceptions import SizeTooSmall, TooLarge
from reslat.oracle import (
    brute_force,
    canonical,
    canonical_hash,
    canonical_representative,
    is_isomorphic,
    lattice_orders,
)
from reslat.oracle.canonical import linear_extensions

CHAINS = ConstraintSet.of("idempotent", "chain")
COMMUTATIVE_CHAINS = ConstraintSet.of("idempotent", "chain", "commutative")
CATALAN = ConstraintSet.of("conservative", "commutative")

TWO_CHAIN = FinAlgebra(n=2, unit=1, prod=[[0, 0], [0, 1]])


def _tables(algebras):
    return {(algebra.unit, algebra.prod) for algebra in algebras}


def test_constraint_set() -> None:
    constraints = ConstraintSet.parse("conservative, commutative")
    assert "idempotent" in constraints
    assert "residuated" in constraints
    assert "chain" not in constraints
    assert constraints.names() == [
        "bounded-annihilating-bottom",
        "commutative",
        "conservative",
        "idempotent",
        "residuated",
    ]


def test_lattice_orders() -> None:
    assert [len(lattice_orders(n)) for n in range(1, 7)] == [1, 1, 1, 2, 5, 15]


def test_linear_extensions() -> None:
    square = direct_product(TWO_CHAIN, TWO_CHAIN)
    assert list(linear_extensions(square)) == [[0, 1, 2, 3], [0, 2, 1, 3]]
    assert list(linear_extensions(c4())) == [[0, 1, 2, 3]]


def test_is_isomorphic() -> None:
    shuffled = relabel(c4(), [2, 0, 3, 1])
    assert not shuffled.is_chain_tagged
    isomorphism = is_isomorphic(c4(), shuffled)
    assert isomorphism is not None
    assert isomorphism.map == (1, 3, 0, 2)
    assert check_homomorphism(isomorphism).ok
    assert canonical(shuffled) == canonical(c4())
    assert canonical_hash(shuffled) == canonical_hash(c4())
    assert canonical_representative(shuffled) == c4()


def test_not_isomorphic() -> None:
    assert is_isomorphic(c4(), opposite_c4()) is None
    assert is_isomorphic(c4(), TWO_CHAIN) is None
    assert canonical_hash(c4()) != canonical_hash(opposite_c4())
    assert len(canonical_hash(c4())) == 40


def test_brute_force_bounds() -> None:
    with raises(TooLarge):
        brute_force(7, CHAINS)
    with raises(TooLarge):
        brute_force(4, CHAINS, max_size=3)
    with raises(SizeTooSmall):
        brute_force(0, CHAINS)


def test_brute_force_trivial() -> None:
    assert len(brute_force(1, CATALAN)) == 1
    assert len(brute_force(1, ConstraintSet())) == 1


@mark.parametrize("n", range(2, 7))
def test_brute_force_chains(n: int) -> None:
    models = brute_force(n, CHAINS)
    assert len(models) == count_ic_recurrence(n)
    compiled = [compile_code(code).algebra for code in enumerate_codes(n)]
    assert _tables(models) == _tables(compiled)


@mark.parametrize("n", range(2, 7))
def test_brute_force_commutative_chains(n: int) -> None:
    models = brute_force(n, COMMUTATIVE_CHAINS)
    assert len(models) == count_cic(n)
    compiled = [
        compile_code(code).algebra for code in enumerate_codes(n, commutative_only=True)
    ]
    assert _tables(models) == _tables(compiled)


@mark.parametrize("n", range(1, 7))
def test_brute_force_catalan(n: int) -> None:
    models = brute_force(n, CATALAN)
    assert len(models) == catalan_count(n)
    assert {canonical(model) for model in models} == {
        canonical(algebra) for algebra in enumerate_catalan(n)
    }


def test_brute_force_models() -> None:
    models = brute_force(4, ConstraintSet.of("idempotent"))
    forms = [canonical(model) for model in models]
    assert forms == sorted(forms)
    assert len(set(forms)) == len(forms)
    for model in models:
        assert validate(model).ok
        assert check_idempotent_laws(model).ok
        assert canonical_representative(model) == model


def test_brute_force_residuated() -> None:
    models = brute_force(3, ConstraintSet())
    assert len(models) == 3
    assert all(validate(model).ok for model in models)


def test_brute_force_jobs() -> None:
    assert brute_force(4, CHAINS, jobs=2) == brute_force(4, CHAINS)



@mark.parametrize("n", range(2, 7))
def test_chain_models_satisfy_laws(n: int) -> None:
    for model in brute_force(n, CHAINS):
        assert check_idempotent_laws(model).ok
        assert check_chain_conservative(model).ok
        assert check_central_pairs(model).ok
        assert check_lacing(model).ok


@mark.parametrize("n", range(2, 7))
def test_catalan_models_satisfy_laws(n: int) -> None:
    for model in brute_force(n, CATALAN):
        assert check_idempotent_laws(model).ok
        assert check_cone_chain(model).ok
        assert check_conservative_equation(model).ok


@mark.parametrize("n", range(2, 6))
def test_catalan_models_are_subdirectly_irreducible(n: int) -> None:
    assert all(is_subdirectly_irreducible(model) for model in brute_force(n, CATALAN))
