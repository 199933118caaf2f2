"""Idempotent residuated chains encoded by the levels of their monoidal preorder.

A laced code lists the ⊑-levels strictly between the bottom and the unit, from
the ⊑-smallest upwards. Each level is a negative or a positive central element,
or a noncommuting pair whose members are mutually ⊑-related (C) or
⊑-incomparable (I). Compiling a code places the bottom first, then the negative
elements by ascending level, the unit, and the positive elements by descending
level.
"""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

import logging
from typing import Generator, List, Optional, Tuple

from reslat.base import (
    CHAIN,
    CheckReport,
    CompiledChain,
    FinAlgebra,
    LacedCode,
    Level,
    PreorderRel,
    Sign,
)
from reslat.core.lattice import chain_sequence, is_totally_ordered, relabel
from reslat.core.properties import is_idempotent
from reslat.core.structure import monoidal_preorder
from reslat.core.validation import complete_residuals
from reslat.exceptions import InvalidCodeError, SizeTooSmall, WrongClass

logger = logging.getLogger(__name__)

LETTERS = [Level.NEG, Level.POS, Level.CPAIR, Level.IPAIR]
COMMUTATIVE_LETTERS = [Level.NEG, Level.POS]


def parse_code(text: str) -> LacedCode:
    """Parse a code literal over the letters n, p, C and I."""
    try:
        return LacedCode(tuple(Level(letter) for letter in text.strip()))
    except ValueError as err:
        raise InvalidCodeError(f'"{text}" uses letters outside n, p, C, I') from err


def format_code(code: LacedCode) -> str:
    """Return the literal of a code."""
    return str(code)


def compile_code(code: LacedCode) -> CompiledChain:
    """Build the idempotent residuated chain described by a laced code."""
    levels = code.levels
    top_level = len(levels) + 1
    negatives: List[Tuple[int, Sign]] = [(0, Sign.NEG)]
    positives: List[Tuple[int, Sign]] = []
    for rank, level in enumerate(levels, start=1):
        if level != Level.POS:
            negatives.append((rank, Sign.NEG))
        if level != Level.NEG:
            positives.append((rank, Sign.POS))
    ordered = negatives + [(top_level, Sign.POS)] + list(reversed(positives))
    level_of = tuple(rank for rank, _ in ordered)
    sign_of = tuple(sign for _, sign in ordered)
    n = len(ordered)

    def multiply(x: int, y: int) -> int:
        if x == y or level_of[x] < level_of[y]:
            return x
        if level_of[x] > level_of[y]:
            return y
        if levels[level_of[x] - 1] == Level.CPAIR:
            return x
        return y

    algebra = FinAlgebra(
        n=n,
        unit=len(negatives),
        prod=[[multiply(x, y) for y in range(n)] for x in range(n)],
        leq=CHAIN,
    )
    return CompiledChain(complete_residuals(algebra), code, level_of, sign_of)


def recover_code(algebra: FinAlgebra) -> LacedCode:
    """Read the laced code off an idempotent residuated chain.

    Raises WrongClass when the algebra is not an idempotent chain or its
    monoidal preorder is not laced and compatible.
    """
    if not is_totally_ordered(algebra) or not is_idempotent(algebra):
        raise WrongClass("recover_code requires an idempotent chain")
    if algebra.n < 2:
        raise WrongClass("laced codes describe chains with at least two elements")
    if not algebra.is_chain_tagged:
        algebra = relabel(algebra, chain_sequence(algebra))
    preorder = monoidal_preorder(algebra)
    try:
        grouped = preorder.levels()
    except ValueError as err:
        raise WrongClass("the monoidal preorder is not laced") from err
    if grouped[0] != [algebra.bottom] or grouped[-1] != [algebra.unit]:
        raise WrongClass("bottom and unit must form their own levels")
    levels = [_classify(algebra, preorder, group) for group in grouped[1:-1]]
    return LacedCode(tuple(levels))


def _classify(algebra: FinAlgebra, preorder: PreorderRel, group: List[int]) -> Level:
    if len(group) == 1:
        if algebra.le(group[0], algebra.unit):
            return Level.NEG
        return Level.POS
    if len(group) != 2:
        raise WrongClass(f"level {group} has more than two elements")
    x, y = group
    if algebra.le(x, algebra.unit) == algebra.le(y, algebra.unit):
        raise WrongClass(f"pair {group} does not have opposite signs")
    if preorder.equivalent(x, y):
        return Level.CPAIR
    return Level.IPAIR


def enumerate_codes(
    n: int, commutative_only: bool = False
) -> Generator[LacedCode, None, None]:
    """Yield every laced code of carrier size n once, in lexicographic order.

    Raises SizeTooSmall when n < 2.
    """
    if n < 2:
        raise SizeTooSmall(n, 2)
    letters = COMMUTATIVE_LETTERS if commutative_only else LETTERS
    for levels in _words(n - 2, letters):
        yield LacedCode(levels)


def _words(weight: int, letters: List[Level]) -> Generator[Tuple[Level, ...], None, None]:
    if weight == 0:
        yield ()
        return
    for letter in letters:
        if letter.weight > weight:
            continue
        for rest in _words(weight - letter.weight, letters):
            yield (letter,) + rest


def extend_code(code: LacedCode) -> List[LacedCode]:
    """Return the four codes obtained by adding new ⊑-cocovers of the unit."""
    return [LacedCode(code.levels + (letter,)) for letter in LETTERS]


def strip_top_level(code: LacedCode) -> Optional[LacedCode]:
    """Remove the ⊑-cocovers of the unit, or return None for the 2-element code."""
    if not code.levels:
        return None
    return LacedCode(code.levels[:-1])


def enumerate_by_extension(n: int) -> List[LacedCode]:
    """Build all codes of size n by repeatedly adding cocovers of the unit.

    Raises SizeTooSmall when n < 2.
    """
    if n < 2:
        raise SizeTooSmall(n, 2)
    by_size = {2: [LacedCode()]}
    for size in range(3, n + 1):
        by_size[size] = []
    for size in range(2, n + 1):
        for code in by_size[size]:
            for extended in extend_code(code):
                if extended.size <= n:
                    by_size[extended.size].append(extended)
    return by_size[n]


def pair_counts(code: LacedCode) -> Tuple[int, int]:
    """Return the number of comparable and incomparable noncommuting pairs."""
    return (
        sum(1 for level in code.levels if level == Level.CPAIR),
        sum(1 for level in code.levels if level == Level.IPAIR),
    )


def validate_code_semantics(code: LacedCode) -> CheckReport:
    """Compile a code and check lacing and compatibility of its preorder."""
    compiled = compile_code(code)
    return check_laced_compatible(
        compiled.algebra, monoidal_preorder(compiled.algebra)
    )


def check_laced_compatible(algebra: FinAlgebra, preorder: PreorderRel) -> CheckReport:
    """Check that a preorder on a chain is laced and compatible with it.

    The chain must carry the CHAIN tag. Axioms are checked as quantified
    statements over the carrier.
    """
    report = CheckReport()
    elements = list(algebra.elements)
    unit = algebra.unit
    greatest = preorder.greatest()
    if greatest != [unit]:
        report.add("laced greatest element", *greatest)
    sharp = {}
    for a in elements:
        partners = [
            x
            for x in elements
            if x != a and (preorder.equivalent(a, x) or preorder.incomparable(a, x))
        ]
        if len(partners) > 1:
            report.add("laced unique partner", a, *partners)
        sharp[a] = partners[0] if len(partners) == 1 else a
    for a in elements:
        for x in elements:
            if x in (a, sharp[a]):
                continue
            if preorder.leq(a, x) != preorder.leq(sharp[a], x) or preorder.leq(
                x, a
            ) != preorder.leq(x, sharp[a]):
                report.add("laced partner alignment", a, sharp[a], x)
    bottom = algebra.bottom
    for x in elements:
        if not preorder.leq(bottom, x):
            report.add("compatible bottom", bottom, x)
    for x in elements:
        for y in elements:
            if algebra.le(unit, x) and algebra.le(unit, y):
                if algebra.le(x, y) != preorder.leq(y, x):
                    report.add("compatible positive cone", x, y)
            if algebra.le(x, unit) and algebra.le(y, unit):
                if algebra.le(x, y) != preorder.leq(x, y):
                    report.add("compatible negative cone", x, y)
    for x in elements:
        if sharp[x] != x and algebra.le(unit, x) != algebra.le(sharp[x], unit):
            report.add("compatible pair signs", x, sharp[x])
    return report
