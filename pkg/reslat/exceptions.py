"""Generic exceptions for reslat."""

# SPDX-FileCopyrightText: 2026 reslat contributors
# SPDX-License-Identifier: Apache-2.0

from typing import TYPE_CHECKING, Optional, Tuple

if TYPE_CHECKING:
    from reslat.base import CheckReport


class ReslatException(Exception):  # noqa: N818
    """Base class for all Exceptions thrown by reslat."""


class DimensionMismatch(ReslatException):  # noqa: N818
    """Raised when the tables of an algebra do not have the declared size."""

    def __init__(self, table: str, expected: int, actual: int):
        ReslatException.__init__(
            self, f"dimension mismatch: {table} has {actual} entries, expected {expected}"
        )


class IndexOutOfRange(ReslatException):  # noqa: N818
    """Raised when a table entry or a distinguished element is not a carrier index."""

    def __init__(self, table: str, value: int, n: int):
        ReslatException.__init__(
            self, f"index out of range: {table} contains {value}, carrier is 0..{n - 1}"
        )


class NotResiduable(ReslatException):  # noqa: N818
    """Raised when a residual has no greatest candidate."""

    def __init__(self, side: str, x: int, c: int):
        ReslatException.__init__(
            self, f"not residuable: no greatest {side} residual for ({x}, {c})"
        )
        self.witness: Tuple[int, int] = (x, c)


class NotIdempotent(ReslatException):  # noqa: N818
    """Raised when an operation requires an idempotent product."""

    def __init__(self, x: int):
        ReslatException.__init__(self, f"not idempotent: {x}·{x} ≠ {x}")


class MissingResiduals(ReslatException):  # noqa: N818
    """Raised when an operation requires residual tables."""

    def __init__(self):
        super().__init__("missing residuals: complete the residual tables first")


class WrongClass(ReslatException):  # noqa: N818
    """Raised when an algebra is not in the class an operation requires."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"wrong class: {message}")


class TooLarge(ReslatException):  # noqa: N818
    """Raised when an exhaustive search would exceed its configured size bound."""

    def __init__(self, n: int, bound: int):
        ReslatException.__init__(self, f"too large: size {n} exceeds the bound {bound}")


class NotInjective(ReslatException):  # noqa: N818
    """Raised when an embedding map identifies two elements."""

    def __init__(self, x: int, y: int):
        ReslatException.__init__(self, f"not injective: {x} and {y} have the same image")


class SizeTooSmall(ReslatException):  # noqa: N818
    """Raised when a size argument is below the smallest meaningful size."""

    def __init__(self, n: int, minimum: int):
        ReslatException.__init__(self, f"size too small: {n} < {minimum}")


class EvenSize(ReslatException):  # noqa: N818
    """Raised when an odd Sugihara chain of even size is requested."""

    def __init__(self, n: int):
        ReslatException.__init__(self, f"even size: odd Sugihara chains have odd size, got {n}")


class BadSkeleton(ReslatException):  # noqa: N818
    """Raised when a skeleton is not a totally ordered odd Sugihara monoid."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"bad skeleton: {message}")


class BadFibers(ReslatException):  # noqa: N818
    """Raised when the fibers of a decomposition do not match its skeleton."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"bad fibers: {message}")


class NoAtom(ReslatException):  # noqa: N818
    """Raised when a monoidal order has no unique atom."""

    def __init__(self):
        super().__init__("no atom: the monoidal order has no unique atom")


class IncompatibleSpan(ReslatException):  # noqa: N818
    """Raised when the two legs of a span do not form a span of embeddings."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"incompatible span: {message}")


class InvalidCodeError(ReslatException):
    """Raised when a laced code literal cannot be parsed."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"invalid code: {message}")


class InvalidDocumentError(ReslatException):
    """Raised when an algebra document is malformed."""

    def __init__(self, message: str):
        ReslatException.__init__(self, f"invalid document: {message}")


class InvariantBreach(ReslatException):  # noqa: N818
    """Raised when a construction produces an algebra that fails its own checks."""

    def __init__(self, operation: str, report: "CheckReport", message: Optional[str] = None):
        first = report.violations[0] if report.violations else ("unknown", ())
        text = message or f"{operation} broke {first[0]} at {first[1]}"
        ReslatException.__init__(self, f"invariant breach: {text}")
        self.report = report


class InvalidLogLevelException(ReslatException):
    """Raised when the logging level in the configuration is invalid."""

    def __init__(self):
        super().__init__("Configured log level unknown.")
