"""Exact sparse polynomials over the rationals in the variables t1..tk.

Polynomials wrap elements of a sympy `PolyRing` over `QQ` with graded
lexicographic order (t1 > t2 > ... > tk); one ring is built per variable
count and shared. All values are immutable.
"""

from __future__ import annotations

import fractions
import functools
import itertools
import math
import typing

import pydantic
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from gkm_core.exceptions import GKMConfigError, GKMVariableCountError
from gkm_core.models_base import FrozenModel, Rational, to_fraction

Monomial = tuple[int, ...]
Scalar = int | fractions.Fraction

# Degree of the zero polynomial. Compares below every integer degree.
MINUS_INFINITY: typing.Final[float] = -math.inf


@functools.cache
def polynomial_ring(k: int) -> PolyRing:
    if k < 1:
        raise GKMConfigError(f"a polynomial ring needs at least one variable, got {k}")
    return PolyRing(",".join(f"t{i}" for i in range(1, k + 1)), QQ, grlex)


def to_qq(value: Scalar):
    value = fractions.Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value) -> fractions.Fraction:
    return fractions.Fraction(int(value.numerator), int(value.denominator))


def _format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"t{i}")
        elif e > 1:
            parts.append(f"t{i}^{e}")
    return "*".join(parts)


def format_terms(
    terms: typing.Iterable[tuple[Monomial, fractions.Fraction]], compact: bool = False
) -> str:
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    out = []
    for position, (monomial, c) in enumerate(terms):
        magnitude = abs(c)
        body = _format_monomial(monomial)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{str(magnitude)}*{body}"

        if position == 0:
            out.append(f"-{text}" if c < 0 else text)
        else:
            out.append(f"{minus if c < 0 else plus}{text}")
    return "".join(out) if out else "0"


class Polynomial:
    """A sparse polynomial with rational coefficients in `var_count` variables."""

    __slots__ = ("element",)

    def __init__(self, element: PolyElement):
        self.element = element

    @classmethod
    def zero(cls, k: int) -> Polynomial:
        return cls(polynomial_ring(k).zero)

    @classmethod
    def one(cls, k: int) -> Polynomial:
        return cls(polynomial_ring(k).one)

    @classmethod
    def constant(cls, k: int, c: Scalar) -> Polynomial:
        return cls(polynomial_ring(k).ground_new(to_qq(c)))

    @classmethod
    def variable(cls, k: int, i: int) -> Polynomial:
        """The variable t_i, 1-based."""
        if not 1 <= i <= k:
            raise GKMConfigError(f"variable t{i} does not exist in {k} variables")
        return cls(polynomial_ring(k).gens[i - 1])

    @classmethod
    def from_terms(
        cls, k: int, terms: typing.Mapping[Monomial, Scalar]
    ) -> Polynomial:
        ring = polynomial_ring(k)
        clean = {}
        for monomial, c in terms.items():
            if len(monomial) != k or any(e < 0 for e in monomial):
                raise GKMVariableCountError(
                    f"monomial {monomial} does not live in {k} variables"
                )
            if c:
                clean[tuple(monomial)] = to_qq(c)
        return cls(ring.from_dict(clean))

    @property
    def var_count(self) -> int:
        return self.element.ring.ngens

    @property
    def terms(self) -> dict[Monomial, fractions.Fraction]:
        return {m: from_qq(c) for m, c in self.element.terms()}

    @property
    def degree(self) -> int | float:
        if not self.element:
            return MINUS_INFINITY
        return max(sum(m) for m in self.element.keys())

    @property
    def is_zero(self) -> bool:
        return not self.element

    def is_homogeneous(self, d: int | None = None) -> bool:
        """True for the zero polynomial, or when every term has the same degree
        (equal to `d` when given)."""
        degrees = {sum(m) for m in self.element.keys()}
        if not degrees:
            return True
        if len(degrees) > 1:
            return False
        return d is None or degrees == {d}

    def coefficient(self, monomial: Monomial) -> fractions.Fraction:
        return from_qq(self.element.get(tuple(monomial), QQ.zero))

    def _check(self, other: Polynomial):
        if self.var_count != other.var_count:
            raise GKMVariableCountError(
                f"polynomials over {self.var_count} and {other.var_count} variables"
            )

    def _coerce(self, other: typing.Any) -> Polynomial | None:
        match other:
            case Polynomial():
                self._check(other)
                return other
            case int() | fractions.Fraction():
                return Polynomial.constant(self.var_count, other)
            case _:
                return None

    def __add__(self, other):
        if (o := self._coerce(other)) is None:
            return NotImplemented
        return Polynomial(self.element + o.element)

    __radd__ = __add__

    def __sub__(self, other):
        if (o := self._coerce(other)) is None:
            return NotImplemented
        return Polynomial(self.element - o.element)

    def __rsub__(self, other):
        if (o := self._coerce(other)) is None:
            return NotImplemented
        return Polynomial(o.element - self.element)

    def __mul__(self, other):
        if (o := self._coerce(other)) is None:
            return NotImplemented
        return Polynomial(self.element * o.element)

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(-self.element)

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        return Polynomial(self.element**exponent)

    def __eq__(self, other):
        match other:
            case Polynomial():
                return (
                    self.var_count == other.var_count and self.element == other.element
                )
            case int() | fractions.Fraction():
                return self == Polynomial.constant(self.var_count, other)
            case _:
                return NotImplemented

    def __hash__(self):
        # Constants compare equal to ints and Fractions, so they hash like them.
        if self.is_zero or self.degree == 0:
            return hash(self.coefficient((0,) * self.var_count))
        return hash((self.var_count, frozenset(self.element.items())))

    def __bool__(self):
        return not self.is_zero

    def to_text(self, compact: bool = False) -> str:
        return format_terms(self.terms.items(), compact=compact)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"<Polynomial {self.to_text()!r} in {self.var_count} variables>"

    def factored(self) -> str:
        """Compact text of the factorisation over the rationals, e.g. `t2*(t1-t2)`."""
        if self.is_zero or self.degree == 0:
            return self.to_text(compact=True)

        unit, factors = self.element.factor_list()
        unit = from_qq(unit)
        normalised = []
        for f, e in factors:
            f = Polynomial(f)
            if next(iter(f.terms.values())) < 0:
                f = -f
                if e % 2 == 1:
                    unit = -unit
            normalised.append((f, e))
        factors = sorted(
            normalised,
            key=lambda fe: (fe[0].degree, len(fe[0].element), fe[0].to_text()),
        )
        flipped = None
        if unit < 0:
            # Absorb the sign into the last odd-power factor with several terms.
            for position in reversed(range(len(factors))):
                f, e = factors[position]
                if e % 2 == 1 and len(f.element) > 1:
                    factors[position] = (-f, e)
                    flipped = position
                    unit = -unit
                    break

        bare = len(factors) == 1 and factors[0][1] == 1 and unit == 1
        parts = []
        for position, (f, e) in enumerate(factors):
            terms = f.terms.items()
            if position == flipped:
                terms = sorted(terms, key=lambda mc: mc[1] < 0)
            text = format_terms(terms, compact=True)
            if len(f.element) > 1 and not bare:
                text = f"({text})"
            parts.append(text if e == 1 else f"{text}^{e}")
        body = "*".join(parts)

        if unit == 1:
            return body
        if unit == -1:
            return f"-{body}"
        return f"{unit}*{body}"


def poly_arithmetic(
    a: Polynomial, b: Polynomial, op: typing.Literal["add", "subtract", "multiply"]
) -> Polynomial:
    a._check(b)
    match op:
        case "add":
            return a + b
        case "subtract":
            return a - b
        case "multiply":
            return a * b
        case _:
            raise ValueError(f"unknown polynomial operation {op!r}")


class LinearForm(FrozenModel):
    """A nonzero homogeneous degree-one form `sum(c_i * t_i)`; the direction of a
    moment-graph edge."""

    coefficients: tuple[Rational, ...]

    @pydantic.field_validator("coefficients")
    @classmethod
    def not_zero(cls, v: tuple[fractions.Fraction, ...]):
        if not v:
            raise ValueError("a linear form needs at least one coefficient")
        if not any(v):
            raise ValueError("a linear form must be nonzero")
        return v

    @classmethod
    def of(cls, *coefficients: Scalar | str) -> LinearForm:
        return cls(coefficients=tuple(to_fraction(c) for c in coefficients))

    @classmethod
    def from_polynomial(cls, p: Polynomial) -> LinearForm:
        if p.is_zero or not p.is_homogeneous(1):
            raise ValueError(f"{p} is not a nonzero linear form")
        k = p.var_count
        return cls(
            coefficients=tuple(
                p.coefficient(tuple(int(i == j) for j in range(k))) for i in range(k)
            )
        )

    @property
    def var_count(self) -> int:
        return len(self.coefficients)

    @property
    def pivot(self) -> int:
        """0-based index of the last variable with a nonzero coefficient."""
        return max(i for i, c in enumerate(self.coefficients) if c)

    def to_polynomial(self) -> Polynomial:
        k = self.var_count
        return Polynomial.from_terms(
            k,
            {tuple(int(i == j) for j in range(k)): c for i, c in enumerate(self.coefficients)},
        )

    def pair(self, xi: typing.Sequence[fractions.Fraction]) -> fractions.Fraction:
        return sum((c * x for c, x in zip(self.coefficients, xi, strict=True)), fractions.Fraction(0))

    def is_proportional(self, other: LinearForm) -> bool:
        if self.var_count != other.var_count:
            return False
        ratio = None
        for a, b in zip(self.coefficients, other.coefficients):
            if (a == 0) != (b == 0):
                return False
            if a:
                if ratio is None:
                    ratio = a / b
                elif a / b != ratio:
                    return False
        return True

    def __neg__(self) -> LinearForm:
        return LinearForm(coefficients=tuple(-c for c in self.coefficients))

    def __str__(self):
        return self.to_polynomial().to_text(compact=True)


@functools.cache
def monomial_basis(k: int, d: int) -> tuple[Monomial, ...]:
    """All monomials of total degree d in k variables, graded-lex descending."""
    if k < 1 or d < 0:
        raise GKMConfigError(f"no monomial basis for k={k}, d={d}")
    monomials = set()
    for combination in itertools.combinations_with_replacement(range(k), d):
        exponents = [0] * k
        for i in combination:
            exponents[i] += 1
        monomials.add(tuple(exponents))
    return tuple(sorted(monomials, reverse=True))


def _substitution(alpha: LinearForm) -> PolyElement:
    """The pivot variable solved from alpha = 0, as a ring element."""
    ring = polynomial_ring(alpha.var_count)
    p = alpha.pivot
    lead = alpha.coefficients[p]
    expr = ring.zero
    for i, c in enumerate(alpha.coefficients):
        if i != p and c:
            expr += ring.gens[i] * to_qq(-c / lead)
    return expr


@functools.lru_cache(maxsize=65536)
def restrict_monomial(monomial: Monomial, alpha: LinearForm) -> PolyElement:
    ring = polynomial_ring(alpha.var_count)
    return ring.from_dict({monomial: QQ.one}).compose(
        ring.gens[alpha.pivot], _substitution(alpha)
    )


def restrict_to_hyperplane(f: Polynomial, alpha: LinearForm) -> Polynomial:
    """Restricts f to the hyperplane alpha = 0 by eliminating alpha's pivot
    variable. The result is zero exactly when alpha divides f."""
    if f.var_count != alpha.var_count:
        raise GKMVariableCountError(
            f"polynomial in {f.var_count} variables restricted along a form in {alpha.var_count}"
        )
    ring = polynomial_ring(alpha.var_count)
    return Polynomial(f.element.compose(ring.gens[alpha.pivot], _substitution(alpha)))


def divides_linear(alpha: LinearForm, f: Polynomial) -> bool:
    return restrict_to_hyperplane(f, alpha).is_zero


def eval_at_zero(f: Polynomial) -> fractions.Fraction:
    return f.coefficient((0,) * f.var_count)
