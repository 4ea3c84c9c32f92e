"""Laurent polynomials over the rationals and small prime fields.

The units of ``K[x, x^-1]`` are the monomials ``k * x^n`` with ``k != 0``, so
every nonzero Laurent polynomial has a unique associate that is a monic
ordinary polynomial with nonzero constant term.  That representative is what
:func:`normalize` returns, and irreducibility in the Laurent ring is
irreducibility of the representative in ``K[x]`` (of positive degree).

Ordinary polynomials are handled internally as coefficient lists, lowest
degree first, with no trailing zeros.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Union

from sympy import Poly, Rational, Symbol, isprime

from .errors import (
    CapExceeded,
    FieldMismatch,
    OutOfRange,
    ParseError,
    SymbolicField,
    UnsupportedDegree,
    ZeroPolynomial,
)

Coeff = Union[int, Fraction]

MAX_PRIME = 97
MAX_ENUM_DEGREE = 8
RATIONAL_DEGREE_LIMIT = 3
_X = Symbol("x")
DEFAULT_ENUM_CAP = 200_000


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``"Q"``, ``"Fp"`` (with ``p``), or ``"symbolic"``."""

    kind: str
    p: int | None = None

    @property
    def is_symbolic(self) -> bool:
        return self.kind == "symbolic"

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "Fp"

    def __str__(self) -> str:
        if self.kind == "Fp":
            return f"F{self.p}"
        return self.kind


RATIONALS = FieldSpec("Q")
SYMBOLIC = FieldSpec("symbolic")


def prime_field(p: int) -> FieldSpec:
    if not isinstance(p, int) or p > MAX_PRIME or not isprime(p):
        raise OutOfRange(f"prime field order must be a prime <= {MAX_PRIME}, got {p!r}")
    return FieldSpec("Fp", p)


def parse_field(text: str) -> FieldSpec:
    """Parse ``symbolic``, ``Q`` or ``F<p>`` (for example ``F2``)."""
    t = text.strip()
    if t.lower() == "symbolic":
        return SYMBOLIC
    if t in ("Q", "QQ"):
        return RATIONALS
    m = re.fullmatch(r"F_?(\d+)", t, flags=re.IGNORECASE)
    if m:
        return prime_field(int(m.group(1)))
    raise ParseError(f"unknown field {text!r} (expected symbolic, Q or F<p>)", field="field")


# ------------------------------------------------------- field arithmetic


def _reduce(field: FieldSpec, c) -> Coeff:
    if field.kind == "Fp":
        if isinstance(c, Fraction):
            if c.denominator % field.p == 0:
                raise ZeroDivisionError(f"{c} has no image in F{field.p}")
            return c.numerator * pow(c.denominator, -1, field.p) % field.p
        return int(c) % field.p
    if field.kind == "Q":
        return Fraction(c)
    raise SymbolicField("the symbolic field carries no arithmetic")


def _inv(field: FieldSpec, c: Coeff) -> Coeff:
    if field.kind == "Fp":
        return pow(int(c), -1, field.p)
    return 1 / Fraction(c)


def _trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pdivmod(field: FieldSpec, a: list, b: list) -> tuple[list, list]:
    if not b:
        raise ZeroPolynomial("division by the zero polynomial")
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead_inv = _inv(field, b[-1])
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        k = _reduce(field, r[-1] * lead_inv)
        q[shift] = k
        for i, y in enumerate(b):
            r[shift + i] = _reduce(field, r[shift + i] - k * y)
        _trim(r)
    return _trim(q), r


def _pmod(field: FieldSpec, a: list, b: list) -> list:
    return _pdivmod(field, a, b)[1]


def _monic(field: FieldSpec, a: list) -> list:
    if not a:
        return a
    k = _inv(field, a[-1])
    return [_reduce(field, c * k) for c in a]


# ----------------------------------------------------------------- values


@dataclass(frozen=True)
class LaurentPoly:
    """A Laurent polynomial stored as sorted ``(exponent, coefficient)`` pairs
    with no zero coefficients."""

    field: FieldSpec
    terms: tuple[tuple[int, Coeff], ...]

    @classmethod
    def from_dict(cls, field: FieldSpec, coeffs: Mapping[int, Coeff]) -> "LaurentPoly":
        if field.is_symbolic:
            return cls(field, tuple(sorted((int(e), c) for e, c in coeffs.items() if c != 0)))
        acc: dict[int, Coeff] = {}
        for e, c in coeffs.items():
            acc[int(e)] = _reduce(field, acc.get(int(e), 0) + _reduce(field, c))
        return cls(field, tuple(sorted((e, c) for e, c in acc.items() if c != 0)))

    @classmethod
    def from_coeffs(cls, field: FieldSpec, coeffs: Iterable[Coeff], shift: int = 0) -> "LaurentPoly":
        """Build ``sum(c_i * x**(i + shift))`` from a low-to-high coefficient list."""
        return cls.from_dict(field, {i + shift: c for i, c in enumerate(coeffs)})

    @property
    def coeffs(self) -> dict[int, Coeff]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def low(self) -> int:
        return self.terms[0][0]

    @property
    def high(self) -> int:
        return self.terms[-1][0]

    def to_poly(self) -> list:
        """Coefficient list of ``x**(-low) * self``, lowest degree first."""
        if not self.terms:
            return []
        out = [0] * (self.high - self.low + 1)
        for e, c in self.terms:
            out[e - self.low] = c
        return out

    def _same_field(self, other: "LaurentPoly") -> None:
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if self.field.is_symbolic:
            raise SymbolicField("the symbolic field carries no arithmetic")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._same_field(other)
        acc = self.coeffs
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly.from_dict(self.field, acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly.from_dict(self.field, {e: -c for e, c in self.terms})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._same_field(other)
        acc: dict[int, Coeff] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(self.field, acc)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in reversed(self.terms):
            neg = c < 0
            mag = -c if neg else c
            if e == 0:
                body = str(mag)
            else:
                mono = "x" if e == 1 else f"x^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("-" if neg else "+") + body)
        return "".join(parts)


def monomial(field: FieldSpec, coeff: Coeff, exponent: int) -> LaurentPoly:
    return LaurentPoly.from_dict(field, {exponent: coeff})


def _require_arith(f: LaurentPoly) -> None:
    if f.field.is_symbolic:
        raise SymbolicField("the symbolic field carries no arithmetic")
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no associate class")


def _normal_coeffs(f: LaurentPoly) -> list:
    _require_arith(f)
    return _monic(f.field, f.to_poly())


def normalize(f: LaurentPoly) -> LaurentPoly:
    """Canonical associate: monic, lowest exponent shifted to zero.

    >>> str(normalize(LaurentPoly.from_dict(RATIONALS, {-2: 3, -1: 3})))
    'x+1'
    """
    return LaurentPoly.from_coeffs(f.field, _normal_coeffs(f))


def degree(f: LaurentPoly) -> int:
    """Degree of the normalized representative (0 exactly for units)."""
    _require_arith(f)
    return f.high - f.low


def _is_irreducible_fp(p: int, a: list) -> bool:
    return Poly(list(reversed(a)), _X, modulus=p).is_irreducible


def _is_irreducible_q(a: list) -> bool:
    if len(a) - 1 > RATIONAL_DEGREE_LIMIT:
        raise UnsupportedDegree(f"irreducibility over Q is implemented up to degree {RATIONAL_DEGREE_LIMIT}")
    return Poly([Rational(c.numerator, c.denominator) for c in map(Fraction, reversed(a))], _X, domain="QQ").is_irreducible


def is_irreducible(f: LaurentPoly) -> bool:
    """Irreducible in ``K[x, x^-1]``; units are not irreducible."""
    a = _normal_coeffs(f)
    if len(a) < 2:
        return False
    if f.field.kind == "Fp":
        return _is_irreducible_fp(f.field.p, a)
    return _is_irreducible_q(a)


def necklace_count(p: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree ``d`` over ``F_p``."""
    from sympy import divisors, mobius

    return sum(int(mobius(d // e)) * p**e for e in divisors(d)) // d


def enumerate_irreducible_classes(
    field: FieldSpec, max_degree: int, cap: int = DEFAULT_ENUM_CAP
) -> list[LaurentPoly]:
    """Every irreducible associate class of degree ``1..max_degree``.

    Sorted by degree, then by coefficient vector from the leading term down.
    The class of ``x`` is a unit in the Laurent ring and never appears.
    """
    if field.is_symbolic:
        raise SymbolicField("the symbolic field has infinitely many classes; nothing to enumerate")
    if not field.is_prime_field:
        raise OutOfRange("enumeration needs a prime field")
    if not 1 <= max_degree <= MAX_ENUM_DEGREE:
        raise OutOfRange(f"max_degree must be in 1..{MAX_ENUM_DEGREE}")
    p = field.p
    candidates = sum((p - 1) * p ** (d - 1) for d in range(1, max_degree + 1))
    if candidates > cap:
        raise CapExceeded(f"{candidates} candidate polynomials over F{p} exceed the cap of {cap}")
    out = []
    for d in range(1, max_degree + 1):
        # high-to-low coefficients after the leading 1; the constant term is nonzero
        for middle in product(range(p), repeat=d - 1):
            for const in range(1, p):
                high_to_low = (1, *middle, const)
                a = list(reversed(high_to_low))
                if _is_irreducible_fp(p, a):
                    out.append(LaurentPoly.from_coeffs(field, a))
    return out


def divides(f: LaurentPoly, g: LaurentPoly) -> bool:
    """``f | g`` in ``K[x, x^-1]``."""
    if f.field != g.field:
        raise FieldMismatch(f"{f.field} vs {g.field}")
    a = _normal_coeffs(f)
    if g.is_zero():
        return True
    b = _normal_coeffs(g)
    return not _pmod(f.field, b, a)


def associates(f: LaurentPoly, g: LaurentPoly) -> bool:
    return normalize(f) == normalize(g)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
          (?P<coef>\d+)\s*(?:\*\s*(?P<x1>x)(?:\s*\^\s*\(?\s*(?P<e1>-?\d+)\s*\)?)?)?
        | (?P<x2>x)(?:\s*\^\s*\(?\s*(?P<e2>-?\d+)\s*\)?)?
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str, field: FieldSpec) -> LaurentPoly:
    """Parse ``"x^3+x+1"``, ``"3*x^-2 + 3*x^-1"`` and similar.

    Monomials are ``k``, ``x``, ``x^n``, ``k*x`` or ``k*x^n`` with integer
    ``k`` and (possibly negative) integer ``n``, joined by ``+`` or ``-``.
    """
    if field.is_symbolic:
        raise SymbolicField("cannot read polynomial coefficients in the symbolic field")
    src = text.strip()
    if not src:
        raise ParseError("empty polynomial", field="poly")
    pos = 0
    acc: dict[int, Coeff] = {}
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos or (not first and not m.group("sign")):
            raise ParseError(f"cannot parse polynomial {text!r} at offset {pos}", field="poly")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            k = int(m.group("coef"))
            e = int(m.group("e1")) if m.group("e1") else (1 if m.group("x1") else 0)
        else:
            k = 1
            e = int(m.group("e2")) if m.group("e2") else 1
        acc[e] = acc.get(e, 0) + sign * k
        pos = m.end()
        first = False
    return LaurentPoly.from_dict(field, acc)
