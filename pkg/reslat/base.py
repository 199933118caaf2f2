"""The main objects in reslat."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass, replace
from dataclasses import field as data_field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

from reslat.exceptions import MissingResiduals

CHAIN = "chain"

Table = Tuple[Tuple[int, ...], ...]
Matrix = Tuple[Tuple[bool, ...], ...]


def freeze_table(rows: Optional[Sequence[Sequence[Any]]]) -> Optional[tuple]:
    """Convert a nested sequence into a tuple of tuples."""
    if rows is None:
        return None
    return tuple(tuple(row) for row in rows)


@dataclass(frozen=True)
class FinAlgebra:
    """A finite residuated-lattice candidate on the carrier 0..n-1.

    The lattice order is either the tag CHAIN, meaning the index order, or an
    n×n boolean matrix with leq[x][y] true iff x ≤ y.

    Tables are row-major with the first argument as row:
    prod[x][y] = x·y, ld[x][c] = x\\c and rd[c][y] = c/y.
    """

    n: int
    unit: int
    prod: Table
    leq: Union[str, Matrix] = CHAIN
    ld: Optional[Table] = None
    rd: Optional[Table] = None

    def __post_init__(self):
        object.__setattr__(self, "prod", freeze_table(self.prod))
        if self.leq != CHAIN:
            object.__setattr__(
                self, "leq", tuple(tuple(bool(v) for v in row) for row in self.leq)
            )
        object.__setattr__(self, "ld", freeze_table(self.ld))
        object.__setattr__(self, "rd", freeze_table(self.rd))

    @property
    def is_chain_tagged(self) -> bool:
        """Return True when the lattice order is the index order."""
        return self.leq == CHAIN

    @property
    def has_residuals(self) -> bool:
        """Return True when both residual tables are present."""
        return self.ld is not None and self.rd is not None

    @property
    def elements(self) -> range:
        """Iterate over the carrier."""
        return range(self.n)

    @cached_property
    def order(self) -> Matrix:
        """The lattice order as a boolean matrix."""
        if self.leq == CHAIN:
            return tuple(tuple(x <= y for y in range(self.n)) for x in range(self.n))
        return self.leq  # type: ignore[return-value]

    def le(self, x: int, y: int) -> bool:
        """Return True if x ≤ y in the lattice order."""
        if self.leq == CHAIN:
            return x <= y
        return self.leq[x][y]  # type: ignore[index]

    def lt(self, x: int, y: int) -> bool:
        """Return True if x < y in the lattice order."""
        return x != y and self.le(x, y)

    @cached_property
    def meet_table(self) -> Table:
        """The meet table. Requires the order to be a lattice."""
        return _bound_table(self, lower=True)

    @cached_property
    def join_table(self) -> Table:
        """The join table. Requires the order to be a lattice."""
        return _bound_table(self, lower=False)

    def meet(self, x: int, y: int) -> int:
        """Return x ∧ y."""
        if self.leq == CHAIN:
            return min(x, y)
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        """Return x ∨ y."""
        if self.leq == CHAIN:
            return max(x, y)
        return self.join_table[x][y]

    def mul(self, x: int, y: int) -> int:
        """Return x·y."""
        return self.prod[x][y]

    def left_div(self, x: int, c: int) -> int:
        """Return x\\c."""
        if self.ld is None:
            raise MissingResiduals()
        return self.ld[x][c]

    def right_div(self, c: int, y: int) -> int:
        """Return c/y."""
        if self.rd is None:
            raise MissingResiduals()
        return self.rd[c][y]

    @cached_property
    def bottom(self) -> int:
        """The least element of the lattice order."""
        return next(x for x in self.elements if all(self.le(x, y) for y in self.elements))

    @cached_property
    def top(self) -> int:
        """The greatest element of the lattice order."""
        return next(x for x in self.elements if all(self.le(y, x) for y in self.elements))

    def neg(self, x: int) -> int:
        """Return ¬x = x\\1."""
        return self.left_div(x, self.unit)

    def with_residuals(self, ld: Table, rd: Table) -> "FinAlgebra":
        """Return a copy of this algebra with the given residual tables."""
        return replace(self, ld=ld, rd=rd)

    def without_residuals(self) -> "FinAlgebra":
        """Return a copy of this algebra without residual tables."""
        return replace(self, ld=None, rd=None)

    def to_data(self) -> Dict[str, Any]:
        """Convert to a JSON algebra document."""
        data: Dict[str, Any] = {
            "n": self.n,
            "unit": self.unit,
            "leq": CHAIN if self.leq == CHAIN else [[int(v) for v in row] for row in self.leq],
            "prod": [list(row) for row in self.prod],
        }
        if self.ld is not None:
            data["ld"] = [list(row) for row in self.ld]
        if self.rd is not None:
            data["rd"] = [list(row) for row in self.rd]
        return data

    @classmethod
    def from_data(cls, data: Dict[str, Any]) -> "FinAlgebra":
        """Create a FinAlgebra from a JSON algebra document."""
        leq = data.get("leq", CHAIN)
        return cls(
            n=data["n"],
            unit=data["unit"],
            prod=data["prod"],
            leq=leq,
            ld=data.get("ld"),
            rd=data.get("rd"),
        )


def _bound_table(algebra: FinAlgebra, lower: bool) -> Table:
    rows = []
    for x in algebra.elements:
        row = []
        for y in algebra.elements:
            bound = _bound(algebra, x, y, lower)
            if bound is None:
                kind = "meet" if lower else "join"
                raise ValueError(f"{x} and {y} have no {kind}")
            row.append(bound)
        rows.append(tuple(row))
    return tuple(rows)


def _bound(algebra: FinAlgebra, x: int, y: int, lower: bool) -> Optional[int]:
    if lower:
        candidates = [z for z in algebra.elements if algebra.le(z, x) and algebra.le(z, y)]
        best = [z for z in candidates if all(algebra.le(w, z) for w in candidates)]
    else:
        candidates = [z for z in algebra.elements if algebra.le(x, z) and algebra.le(y, z)]
        best = [z for z in candidates if all(algebra.le(z, w) for w in candidates)]
    if len(best) != 1:
        return None
    return best[0]


@dataclass
class PropertyFlags:
    """The structural flags of a residuated lattice, computed by table scans."""

    idempotent: bool
    commutative: bool
    conservative: bool
    totally_ordered: bool
    odd_sugihara: bool

    def names(self) -> List[str]:
        """Return the names of the flags that hold."""
        return [name for name, value in self.to_data().items() if value]

    def to_data(self) -> Dict[str, bool]:
        """Convert to JSON object."""
        return dict(
            idempotent=self.idempotent,
            commutative=self.commutative,
            conservative=self.conservative,
            totally_ordered=self.totally_ordered,
            odd_sugihara=self.odd_sugihara,
        )


@dataclass(frozen=True)
class PreorderRel:
    """The monoidal preorder ⊑ of an idempotent algebra: x ⊑ y iff x·y = x."""

    matrix: Matrix

    @property
    def n(self) -> int:
        """The carrier size."""
        return len(self.matrix)

    def leq(self, x: int, y: int) -> bool:
        """Return True if x ⊑ y."""
        return self.matrix[x][y]

    def equivalent(self, x: int, y: int) -> bool:
        """Return True if x ∼ y, i.e. x ⊑ y and y ⊑ x."""
        return self.matrix[x][y] and self.matrix[y][x]

    def incomparable(self, x: int, y: int) -> bool:
        """Return True if x ⋈ y, i.e. neither x ⊑ y nor y ⊑ x."""
        return not self.matrix[x][y] and not self.matrix[y][x]

    def greatest(self) -> List[int]:
        """Return the elements above every other element."""
        return [x for x in range(self.n) if all(self.matrix[y][x] for y in range(self.n))]

    def least(self) -> List[int]:
        """Return the elements below every other element."""
        return [x for x in range(self.n) if all(self.matrix[x][y] for y in range(self.n))]

    def sharp(self, x: int) -> int:
        """Return x♯: the unique partner of x in a laced preorder, or x itself."""
        partners = [
            y
            for y in range(self.n)
            if y != x and (self.equivalent(x, y) or self.incomparable(x, y))
        ]
        if len(partners) == 1:
            return partners[0]
        return x

    def levels(self) -> List[List[int]]:
        """Group the carrier into ⊑-levels, listed from the smallest level upwards.

        Two elements share a level when they are equivalent or incomparable.
        This is only meaningful for laced preorders.
        """
        remaining = set(range(self.n))
        result: List[List[int]] = []
        while remaining:
            level = [
                x
                for x in sorted(remaining)
                if all(self.matrix[x][y] or self.incomparable(x, y) for y in remaining)
            ]
            if not level:
                raise ValueError("preorder is not laced")
            result.append(level)
            remaining.difference_update(level)
        return result


@dataclass(frozen=True)
class Embedding:
    """An injective index map between two algebras."""

    source: FinAlgebra
    target: FinAlgebra
    map: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))

    def __call__(self, x: int) -> int:
        return self.map[x]

    def image(self) -> FrozenSet[int]:
        """Return the image of the map."""
        return frozenset(self.map)

    def compose(self, after: "Embedding") -> "Embedding":
        """Return `after ∘ self`."""
        return Embedding(self.source, after.target, tuple(after.map[x] for x in self.map))


@dataclass
class CheckReport:
    """The outcome of checking axioms: a list of named violations with witnesses."""

    violations: List[Tuple[str, Tuple[int, ...]]] = data_field(default_factory=list)

    @property
    def ok(self) -> bool:
        """Return True when no violation was found."""
        return len(self.violations) == 0

    def add(self, axiom: str, *witness: int):
        """Record a violation of the named axiom."""
        self.violations.append((axiom, tuple(witness)))

    def extend(self, other: "CheckReport"):
        """Add all violations of another report."""
        self.violations.extend(other.violations)

    def axioms(self) -> List[str]:
        """Return the distinct names of the violated axioms."""
        seen: List[str] = []
        for axiom, _ in self.violations:
            if axiom not in seen:
                seen.append(axiom)
        return seen

    def to_data(self) -> Dict[str, Any]:
        """Convert to JSON object."""
        return dict(
            ok=self.ok,
            violations=[dict(axiom=a, witness=list(w)) for a, w in self.violations],
        )


class Level(Enum):
    """A ⊑-level of a laced code strictly between bottom and unit."""

    NEG = "n"
    POS = "p"
    CPAIR = "C"
    IPAIR = "I"

    @property
    def weight(self) -> int:
        """The number of carrier elements on this level."""
        return 2 if self in (Level.CPAIR, Level.IPAIR) else 1

    @property
    def is_pair(self) -> bool:
        """Return True for noncommuting-pair levels."""
        return self.weight == 2


class Sign(Enum):
    """The sign of an element of a chain: positive means 1 ≤ x."""

    NEG = "neg"
    POS = "pos"


@dataclass(frozen=True)
class LacedCode:
    """Level-sequence encoding of a compatible laced preorder on a finite chain.

    The levels run from the ⊑-smallest to the ⊑-largest, strictly between the
    implicit bottom level {⊥} and top level {1}.
    """

    levels: Tuple[Level, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))

    @property
    def size(self) -> int:
        """The carrier size encoded by this code."""
        return 2 + sum(level.weight for level in self.levels)

    @property
    def is_commutative(self) -> bool:
        """Return True when the code has no noncommuting pairs."""
        return not any(level.is_pair for level in self.levels)

    def __str__(self) -> str:
        return "".join(level.value for level in self.levels)

    def __lt__(self, other: "LacedCode") -> bool:
        return _level_key(self) < _level_key(other)


_LEVEL_ORDER = {Level.NEG: 0, Level.POS: 1, Level.CPAIR: 2, Level.IPAIR: 3}


def _level_key(code: LacedCode) -> Tuple[int, ...]:
    return tuple(_LEVEL_ORDER[level] for level in code.levels)


@dataclass(frozen=True)
class CompiledChain:
    """A chain algebra compiled from a laced code.

    Level ranks run from 0 for the bottom level to len(code.levels) + 1 for the
    unit.
    """

    algebra: FinAlgebra
    code: LacedCode
    level_of: Tuple[int, ...]
    sign_of: Tuple[Sign, ...]


@dataclass(frozen=True)
class SkeletonDecomposition:
    """An odd Sugihara chain with a fiber chain over each of its elements.

    fibers[c] is the length of the chain X_c over skeleton index c; its last
    element is identified with c.
    """

    skeleton: FinAlgebra
    fibers: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "fibers", tuple(self.fibers))

    @property
    def size(self) -> int:
        """The carrier size of the tensor algebra."""
        return sum(self.fibers)


@dataclass(frozen=True)
class Span:
    """A pair of embeddings i1: A → B and i2: A → C."""

    i1: Embedding
    i2: Embedding

    @property
    def a(self) -> FinAlgebra:
        """The common source."""
        return self.i1.source

    @property
    def b(self) -> FinAlgebra:
        """The target of the first leg."""
        return self.i1.target

    @property
    def c(self) -> FinAlgebra:
        """The target of the second leg."""
        return self.i2.target


@dataclass(frozen=True)
class Amalgam:
    """An algebra D with embeddings j1: B → D and j2: C → D."""

    d: FinAlgebra
    j1: Embedding
    j2: Embedding


class Constraint(Enum):
    """A constraint a brute-force search can impose."""

    RESIDUATED = "residuated"
    IDEMPOTENT = "idempotent"
    COMMUTATIVE = "commutative"
    CONSERVATIVE = "conservative"
    CHAIN = "chain"
    BOUNDED = "bounded-annihilating-bottom"


@dataclass(frozen=True)
class ConstraintSet:
    """The constraints of a brute-force search. Residuation is always implied."""

    flags: FrozenSet[Constraint] = frozenset()

    def __post_init__(self):
        flags = set(self.flags) | {Constraint.RESIDUATED, Constraint.BOUNDED}
        if Constraint.CONSERVATIVE in flags:
            flags.add(Constraint.IDEMPOTENT)
        object.__setattr__(self, "flags", frozenset(flags))

    @classmethod
    def of(cls, *constraints: Union[str, Constraint]) -> "ConstraintSet":
        """Create a ConstraintSet from names or Constraint values."""
        return cls(frozenset(Constraint(c) for c in constraints))

    @classmethod
    def parse(cls, text: str) -> "ConstraintSet":
        """Create a ConstraintSet from a comma separated list of names."""
        return cls.of(*[part.strip() for part in text.split(",") if part.strip()])

    def __contains__(self, constraint: Union[str, Constraint]) -> bool:
        return Constraint(constraint) in self.flags

    def names(self) -> List[str]:
        """Return the sorted constraint names."""
        return sorted(c.value for c in self.flags)


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """An isomorphism invariant of a FinAlgebra: its least relabelled table tuple."""

    key: Tuple[int, ...]


@dataclass(frozen=True)
class Skeleton:
    """The skeleton of a commutative idempotent chain with its fibers.

    elements holds the indices of the γ₁-closed elements from bottom to top, and
    fibers[i] the indices of the fiber over elements[i], also bottom to top.
    """

    algebra: FinAlgebra
    elements: Tuple[int, ...]
    fibers: Tuple[Tuple[int, ...], ...]

    def decomposition(self) -> SkeletonDecomposition:
        """Return the decomposition this skeleton describes."""
        return SkeletonDecomposition(self.algebra, tuple(len(f) for f in self.fibers))


@dataclass(frozen=True)
class FepClosure:
    """A finite algebra built around a finite partial subalgebra of a larger algebra.

    carrier[i] is the index, in the larger algebra, of element i of the finite
    algebra. subset lists the partial subalgebra in increasing index order.
    """

    algebra: FinAlgebra
    carrier: Tuple[int, ...]
    subset: Tuple[int, ...]

    def label(self, x: int) -> int:
        """Return the label in the finite algebra of an element of the larger one."""
        return self.carrier.index(x)

    def inclusion(self) -> Dict[int, int]:
        """Map every element of the partial subalgebra to its label."""
        return {x: self.label(x) for x in self.subset}
