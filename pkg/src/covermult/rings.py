"""Exact sparse polynomials over Q or a prime field, with degree-compatible
monomial orderings.

Everything here is immutable and exact: coefficients are `fractions.Fraction`
or prime-field residues, monomials are plain exponent tuples, and polynomials
keep their terms sorted strictly descending under the ring's ordering so that
leading-term access is O(1) and printing is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Monomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# Monomial helpers


def monomial_degree(m: Monomial) -> int:
    """Total degree (sum of exponents)."""
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    """Exponent vector of x^a / x^b; requires divisibility."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(e < 0 for e in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def one_monomial(nvars: int) -> Monomial:
    return (0,) * nvars


def monomials_of_degree(nvars: int, degree: int) -> Iterator[Monomial]:
    """Yield every exponent vector of the given total degree.

    Order is deterministic: first exponent descending, recursively.
    """
    if nvars <= 0:
        if degree == 0:
            yield ()
        return
    if nvars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            yield (first, *rest)


# ---------------------------------------------------------------------------
# Orderings


class Ordering(Enum):
    """Degree-compatible monomial orderings with reverse-lexicographic tiebreak.

    ``LOCAL_DEGREVLEX`` ("ds") is the local ordering: lower total degree is
    greater, so 1 beats every other monomial.  ``GLOBAL_DEGREVLEX`` ("dp") is
    its global counterpart, used internally for canonical forms and
    cross-checks.  The tiebreak is shared: among monomials of equal degree,
    the one whose last differing exponent is smaller is greater.
    """

    LOCAL_DEGREVLEX = "ds"
    GLOBAL_DEGREVLEX = "dp"

    def sort_key(self, m: Monomial):
        deg = sum(m)
        tie = tuple(-e for e in reversed(m))
        if self is Ordering.LOCAL_DEGREVLEX:
            return (-deg, tie)
        return (deg, tie)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """Return 1 if a > b, -1 if a < b, 0 if equal."""
        if len(a) != len(b):
            raise ValueError("monomials live in different variable counts")
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.compare(a, b) > 0

    @property
    def is_local(self) -> bool:
        return self is Ordering.LOCAL_DEGREVLEX

    @classmethod
    def from_name(cls, name: str) -> "Ordering":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(f"unknown ordering {name!r}")


# ---------------------------------------------------------------------------
# Coefficient fields


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FpElement:
    """Residue in F_p; arithmetic keeps the value reduced into [0, p)."""

    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "FpElement":
        if not isinstance(other, FpElement) or other.modulus != self.modulus:
            raise TypeError("mixed prime-field arithmetic")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return FpElement(self.value + other.value, self.modulus)

    def __sub__(self, other):
        other = self._coerce(other)
        return FpElement(self.value - other.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        return FpElement(self.value * other.value, self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero residue")
        inv = pow(other.value, -1, self.modulus)
        return FpElement(self.value * inv, self.modulus)

    def __neg__(self):
        return FpElement(-self.value, self.modulus)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


Coefficient = Union[Fraction, FpElement]


@dataclass(frozen=True)
class RationalField:
    """Exact rationals (arbitrary precision, always reduced)."""

    @property
    def name(self) -> str:
        return "Q"

    def coeff(self, numerator: int, denominator: int = 1) -> Fraction:
        return Fraction(numerator, denominator)

    def from_fraction(self, q: Fraction) -> Fraction:
        return q

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)


@dataclass(frozen=True)
class PrimeField:
    """F_p for an odd prime p."""

    p: int

    def __post_init__(self):
        if self.p <= 2 or not _is_prime(self.p):
            raise ValueError(f"modulus must be a prime > 2, got {self.p}")

    @property
    def name(self) -> str:
        return f"Fp {self.p}"

    def coeff(self, numerator: int, denominator: int = 1) -> FpElement:
        if denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator divisible by modulus {self.p}")
        num = FpElement(numerator, self.p)
        if denominator == 1:
            return num
        return num / FpElement(denominator, self.p)

    def from_fraction(self, q: Fraction) -> FpElement:
        return self.coeff(q.numerator, q.denominator)

    @property
    def zero(self) -> FpElement:
        return FpElement(0, self.p)

    @property
    def one(self) -> FpElement:
        return FpElement(1, self.p)


QQ = RationalField()

FieldSpec = Union[RationalField, PrimeField]


# ---------------------------------------------------------------------------
# Ring context


def _valid_identifier(name: str) -> bool:
    return name.isidentifier()


@dataclass(frozen=True)
class RingContext:
    """Variable names plus a monomial ordering and a coefficient field.

    Local-ordering computations are implicitly computations in the
    localization of the polynomial ring at the origin; the localization is
    never represented explicitly and units are never constructed.
    """

    variables: tuple[str, ...]
    ordering: Ordering = Ordering.LOCAL_DEGREVLEX
    field: FieldSpec = QQ

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if not self.variables:
            raise ValueError("ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")
        for name in self.variables:
            if not _valid_identifier(name):
                raise ValueError(f"invalid variable name {name!r}")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def extend(self, new_var: str) -> "RingContext":
        """Append one variable (last, so it is revlex-smallest at its degree)."""
        if new_var in self.variables:
            raise ValueError(f"variable {new_var!r} already present")
        return RingContext((*self.variables, new_var), self.ordering, self.field)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def constant(self, numerator: int, denominator: int = 1) -> "Polynomial":
        c = self.field.coeff(numerator, denominator)
        return Polynomial.make(self, [(one_monomial(self.nvars), c)])

    def var(self, name: str, power: int = 1) -> "Polynomial":
        if power < 0:
            raise ValueError("negative power")
        idx = self.variables.index(name)
        mon = tuple(power if i == idx else 0 for i in range(self.nvars))
        return Polynomial.make(self, [(mon, self.field.one)])

    def poly(self, text: str) -> "Polynomial":
        """Parse a polynomial written in this ring's variables."""
        from .parsing import parse_polynomial

        return parse_polynomial(text, self)

    def __str__(self):
        return f"{self.field.name}[{','.join(self.variables)}]"


# ---------------------------------------------------------------------------
# Polynomials


def _coerce_coefficient(field: FieldSpec, c) -> Coefficient:
    if isinstance(c, FpElement):
        if not (isinstance(field, PrimeField) and field.p == c.modulus):
            raise ValueError("coefficient from a different field")
        return c
    if isinstance(c, bool) or not isinstance(c, (int, Fraction)):
        raise ValueError(f"unsupported coefficient {c!r}")
    return field.from_fraction(Fraction(c))


@dataclass(frozen=True)
class Polynomial:
    """Canonical sparse polynomial.

    ``terms`` is strictly descending under the ring ordering, holds no zero
    coefficients and no duplicate monomials; the zero polynomial is the empty
    sequence.
    """

    ring: RingContext
    terms: tuple[tuple[Monomial, Coefficient], ...]

    @staticmethod
    def make(ring: RingContext,
             pairs: Iterable[tuple[Monomial, Coefficient]]) -> "Polynomial":
        """Canonicalize: combine duplicates, drop zeros, sort descending.

        Integer and Fraction coefficients are coerced through the ring's
        field, so literals work in prime-field rings too.
        """
        acc: dict[Monomial, Coefficient] = {}
        nvars = ring.nvars
        for mon, coeff in pairs:
            mon = tuple(mon)
            coeff = _coerce_coefficient(ring.field, coeff)
            if len(mon) != nvars:
                raise ValueError(
                    f"monomial {mon} has wrong length for {ring}")
            if any(e < 0 for e in mon):
                raise ValueError(f"negative exponent in {mon}")
            if mon in acc:
                acc[mon] = acc[mon] + coeff
            else:
                acc[mon] = coeff
        key = ring.ordering.sort_key
        kept = sorted((m for m, c in acc.items() if c), key=key, reverse=True)
        return Polynomial(ring, tuple((m, acc[m]) for m in kept))

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def leading_coefficient(self) -> Coefficient:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def leading_term(self) -> "Polynomial":
        return Polynomial(self.ring, (self.terms[0],)) if self.terms else self._raise_zero()

    def _raise_zero(self):
        raise ValueError("zero polynomial has no leading data")

    def order(self) -> int:
        """Minimum total degree among the terms."""
        if not self.terms:
            raise ValueError("zero polynomial has no order")
        return min(monomial_degree(m) for m, _ in self.terms)

    def degree(self) -> int:
        """Maximum total degree among the terms."""
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(monomial_degree(m) for m, _ in self.terms)

    def initial_form(self) -> "Polynomial":
        """Homogeneous part of lowest total degree; the zero polynomial maps to itself."""
        if not self.terms:
            return self
        low = self.order()
        kept = tuple(t for t in self.terms if monomial_degree(t[0]) == low)
        return Polynomial(self.ring, kept)

    @property
    def has_constant_term(self) -> bool:
        return any(monomial_degree(m) == 0 for m, _ in self.terms)

    def monic(self) -> "Polynomial":
        """Divide by the leading coefficient."""
        lc = self.leading_coefficient
        return Polynomial(self.ring,
                          tuple((m, c / lc) for m, c in self.terms))

    # -- arithmetic ---------------------------------------------------------

    def _check_ring(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ValueError("polynomials from different ring contexts")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return Polynomial.make(self.ring, self.terms + other.terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        acc: dict[Monomial, Coefficient] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = monomial_mul(ma, mb)
                c = ca * cb
                if m in acc:
                    acc[m] = acc[m] + c
                else:
                    acc[m] = c
        key = self.ring.ordering.sort_key
        kept = sorted((m for m, c in acc.items() if c), key=key, reverse=True)
        return Polynomial(self.ring, tuple((m, acc[m]) for m in kept))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scaled(self, c: Coefficient) -> "Polynomial":
        """Multiply by a field element (ints and Fractions are coerced)."""
        c = _coerce_coefficient(self.ring.field, c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, k * c) for m, k in self.terms))

    def term_multiple(self, mon: Monomial, coeff: Coefficient) -> "Polynomial":
        """Multiply by coeff * x^mon; the ordering is multiplicative, so the
        term sequence stays sorted."""
        if not coeff:
            return self.ring.zero()
        return Polynomial(self.ring,
                          tuple((monomial_mul(m, mon), c * coeff)
                                for m, c in self.terms))

    # -- ring extension ------------------------------------------------------

    def lift(self, extended: RingContext) -> "Polynomial":
        """View this polynomial inside a ring with extra variables appended.

        Appending zero exponents does not disturb the degrevlex comparison,
        so the term sequence carries over unchanged.
        """
        if extended.variables[: self.ring.nvars] != self.ring.variables:
            raise ValueError("target ring does not extend this ring")
        if extended.field != self.ring.field or extended.ordering != self.ring.ordering:
            raise ValueError("target ring changes field or ordering")
        pad = (0,) * (extended.nvars - self.ring.nvars)
        return Polynomial(extended,
                          tuple(((*m, *pad), c) for m, c in self.terms))

    # -- printing ------------------------------------------------------------

    def __str__(self):
        return polynomial_to_string(self)

    def __repr__(self):
        return f"<{self.ring} | {self}>"


def _coeff_sign_and_body(c: Coefficient) -> tuple[bool, str]:
    """(is_negative, printed magnitude); prime-field residues are never negative."""
    if isinstance(c, Fraction):
        return c < 0, str(-c if c < 0 else c)
    return False, str(c)


def polynomial_to_string(f: Polynomial) -> str:
    """Canonical printer: descending terms, '^' powers, '*' separators."""
    if f.is_zero:
        return "0"
    pieces: list[str] = []
    for i, (mon, coeff) in enumerate(f.terms):
        negative, mag = _coeff_sign_and_body(coeff)
        factors = []
        for name, e in zip(f.ring.variables, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        if not factors:
            body = mag
        elif mag == "1":
            body = "*".join(factors)
        else:
            body = mag + "*" + "*".join(factors)
        if i == 0:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append(("- " if negative else "+ ") + body)
    return " ".join(pieces)


# ---------------------------------------------------------------------------
# Monomial ideals


def minimalize_monomials(gens: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility antichain generating the same monomial ideal."""
    ordered = sorted(set(tuple(g) for g in gens),
                     key=Ordering.GLOBAL_DEGREVLEX.sort_key)
    kept: list[Monomial] = []
    for m in ordered:
        if not any(monomial_divides(k, m) for k in kept):
            kept.append(m)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its minimal generators.

    ``min_gens`` is a divisibility antichain sorted ascending under the
    global degrevlex key, so equal ideals compare equal.
    """

    nvars: int
    min_gens: tuple[Monomial, ...]

    @staticmethod
    def make(nvars: int, gens: Iterable[Monomial]) -> "MonomialIdeal":
        gens = list(gens)
        for g in gens:
            if len(g) != nvars:
                raise ValueError("generator has wrong variable count")
            if any(e < 0 for e in g):
                raise ValueError("negative exponent")
        return MonomialIdeal(nvars, tuple(minimalize_monomials(gens)))

    @property
    def is_zero(self) -> bool:
        return not self.min_gens

    @property
    def is_unit(self) -> bool:
        return any(monomial_degree(m) == 0 for m in self.min_gens)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(monomial_divides(g, m) for g in self.min_gens)

    def format(self, variables: Sequence[str]) -> str:
        if not self.min_gens:
            return "<0>"
        parts = []
        for mon in self.min_gens:
            factors = []
            for name, e in zip(variables, mon):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors) if factors else "1")
        return "<" + ", ".join(parts) + ">"
