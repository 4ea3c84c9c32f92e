"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LPAError(Exception):
    """Base class for all errors raised by lpa_spectrum."""


class UnknownVertex(LPAError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self) -> str:
        return f"unknown vertex {self.vertex!r}"


class DuplicateVertex(LPAError, ValueError):
    pass


class InvalidMultiplicity(LPAError, ValueError):
    pass


class CapExceeded(LPAError, RuntimeError):
    """An exponential enumeration ran past its configured limit."""


class NotHereditarySaturated(LPAError, ValueError):
    pass


class NotAdmissible(LPAError, ValueError):
    pass


class InvalidCycle(LPAError, ValueError):
    pass


class ZeroPolynomial(LPAError, ValueError):
    pass


class SymbolicField(LPAError, ValueError):
    """Arithmetic was requested over the symbolic (coefficient-free) field."""


class UnsupportedDegree(LPAError, ValueError):
    pass


class FieldMismatch(LPAError, ValueError):
    pass


class MalformedCandidate(LPAError, ValueError):
    pass


class OutOfRange(LPAError, ValueError):
    pass


class ParseError(LPAError, ValueError):
    def __init__(self, message: str, *, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field!r}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(prefix + message)
        self.line = line
        self.field = field


class InvariantViolation(LPAError, AssertionError):
    """Two independent computations of the same quantity disagreed."""
