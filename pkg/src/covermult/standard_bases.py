"""Mora reduction and standard bases for local degree orderings.

With a local ordering the naive division algorithm need not terminate: the
leading monomials of the intermediate remainders strictly decrease, but a
local ordering has infinite descending chains (x > x^2 > x^3 > ...).  Mora's
weak normal form restores termination by controlling the ecart, the gap
between a polynomial's top and bottom degree: the reducer of minimal ecart is
chosen at each step, and the current remainder itself joins the working set
whenever every eligible reducer has a larger ecart.  The resulting remainder
r satisfies r = 0 or lm(r) outside the leading ideal of the working set, and
a unit multiple of the input has a standard representation; the unit is never
materialized.

The completion loop `standard_basis` repeatedly adjoins nonzero normal forms
of s-polynomials until every pair reduces to zero.  Its output is kept raw
(never minimized, interreduced, sorted, or made monic) and the full chain of
intermediate generating sets is returned, because downstream threshold
computations are defined on exactly that chain.

All choices are deterministic: reducers tie-break by earliest insertion into
the working set, and s-polynomial pairs are processed first-in first-out.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Sequence, Union

from .rings import (
    MonomialIdeal,
    Ordering,
    Polynomial,
    RingContext,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
)


@dataclass(frozen=True)
class IdealBasis:
    """A finite list of nonzero generators sharing one ring context."""

    ring: RingContext
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring context")
            if g.is_zero:
                raise ValueError("zero generator not allowed")

    @classmethod
    def from_strings(cls, ring: RingContext, texts: Iterable[str]) -> "IdealBasis":
        return cls(ring, tuple(ring.poly(t) for t in texts))

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


BasisLike = Union[IdealBasis, Sequence[Polynomial]]


def _generators(basis: BasisLike) -> tuple[Polynomial, ...]:
    if isinstance(basis, IdealBasis):
        return basis.generators
    return tuple(basis)


def ecart(f: Polynomial) -> int:
    """Top degree minus bottom degree; zero exactly for homogeneous input."""
    return f.degree() - f.order()


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    """Cancel the leading terms of f and g against their lcm monomial."""
    if f.is_zero or g.is_zero:
        raise ValueError("s-polynomial of a zero polynomial")
    f._check_ring(g)
    a = f.leading_monomial
    b = g.leading_monomial
    gamma = monomial_lcm(a, b)
    one = f.ring.field.one
    left = f.term_multiple(monomial_quotient(gamma, a), one)
    right = g.term_multiple(monomial_quotient(gamma, b),
                            f.leading_coefficient / g.leading_coefficient)
    return left - right


@dataclass(frozen=True)
class ReductionStep:
    reducee: Polynomial
    reducer: Polynomial
    reducee_added: bool


@dataclass(frozen=True)
class NormalFormTrace:
    """Step-by-step record of one Mora reduction.

    Every step's reducer leading monomial divides the reducee's; the result
    is zero or its leading monomial is divisible by no leading monomial of
    the final working set.
    """

    steps: tuple[ReductionStep, ...]
    result: Polynomial
    final_working_set: tuple[Polynomial, ...]

    def dump(self) -> str:
        """One line per step: index, reducee, reducer, added-to-working-set flag."""
        lines = []
        for i, step in enumerate(self.steps):
            lines.append(f"{i}\t{step.reducee}\t{step.reducer}\t{step.reducee_added}")
        return "\n".join(lines)


def _min_ecart_reducer(eligible: list[Polynomial]) -> Polynomial:
    # min() keeps the first minimum, i.e. the earliest-inserted reducer.
    return min(eligible, key=ecart)


def mora_normal_form(f: Polynomial,
                     basis: BasisLike) -> tuple[Polynomial, NormalFormTrace]:
    """Polynomial weak normal form of f with respect to the basis.

    Terminating for every degree-compatible ordering implemented here; with
    the local ordering this is Mora's algorithm.
    """
    working = list(_generators(basis))
    steps: list[ReductionStep] = []
    h = f
    while not h.is_zero:
        lm = h.leading_monomial
        eligible = [g for g in working
                    if monomial_divides(g.leading_monomial, lm)]
        if not eligible:
            break
        g = _min_ecart_reducer(eligible)
        added = ecart(g) > ecart(h)
        if added:
            working.append(h)
        steps.append(ReductionStep(h, g, added))
        h = s_polynomial(h, g)
    return h, NormalFormTrace(tuple(steps), h, tuple(working))


@dataclass(frozen=True)
class SNormalForm:
    """Outcome of the cap-limited s-normal-form reduction.

    kind is "zero", "irreducible", or "cap_exceeded"; remainder carries the
    final polynomial for the latter two.
    """

    kind: str
    remainder: Polynomial

    @property
    def is_zero(self) -> bool:
        return self.kind == "zero"


def s_normal_form(f: Polynomial, basis: BasisLike,
                  step_cap: int = 10000) -> SNormalForm:
    """Reduce f against a growing set, the reducee joining it at every step.

    Without the ecart rule this procedure may not terminate, so it is capped:
    hitting the cap reports "cap_exceeded" rather than truncating silently.
    Reducer selection is the same as in `mora_normal_form` (minimal ecart,
    earliest insertion on ties).
    """
    if step_cap <= 0:
        raise ValueError("step_cap must be positive")
    working = list(_generators(basis))
    h = f
    steps = 0
    while not h.is_zero:
        lm = h.leading_monomial
        eligible = [g for g in working
                    if monomial_divides(g.leading_monomial, lm)]
        if not eligible:
            return SNormalForm("irreducible", h)
        if steps >= step_cap:
            return SNormalForm("cap_exceeded", h)
        g = _min_ecart_reducer(eligible)
        working.append(h)
        h = s_polynomial(h, g)
        steps += 1
    return SNormalForm("zero", h)


def standard_basis(g0: IdealBasis) -> tuple[IdealBasis, tuple[IdealBasis, ...]]:
    """Complete g0 to a standard basis; also return the chain of
    strictly growing generating sets, starting at g0 itself.

    Pairs are queued first-in first-out; each appended element is the Mora
    normal form of an s-polynomial against the full current set, so its
    leading monomial strictly enlarges the leading ideal and the loop stops
    after finitely many extensions.
    """
    gens = list(g0.generators)
    chain = [g0]
    queue: deque[tuple[int, int]] = deque(
        (i, j) for j in range(len(gens)) for i in range(j))
    while queue:
        i, j = queue.popleft()
        s = s_polynomial(gens[i], gens[j])
        if s.is_zero:
            continue
        h, _ = mora_normal_form(s, gens)
        if h.is_zero:
            continue
        gens.append(h)
        chain.append(IdealBasis(g0.ring, tuple(gens)))
        queue.extend((k, len(gens) - 1) for k in range(len(gens) - 1))
    return chain[-1], tuple(chain)


@dataclass(frozen=True)
class BuchbergerReport:
    passed: bool
    failing_pair: tuple[int, int] | None = None
    remainder: Polynomial | None = None

    def __bool__(self):
        return self.passed


def buchberger_check(basis: BasisLike) -> BuchbergerReport:
    """True iff every pairwise s-polynomial has Mora normal form zero."""
    gens = _generators(basis)
    for j in range(len(gens)):
        for i in range(j):
            s = s_polynomial(gens[i], gens[j])
            if s.is_zero:
                continue
            h, _ = mora_normal_form(s, gens)
            if not h.is_zero:
                return BuchbergerReport(False, (i, j), h)
    return BuchbergerReport(True)


def leading_ideal(basis: BasisLike) -> MonomialIdeal:
    """Minimal monomial generators of the ideal of leading monomials."""
    gens = _generators(basis)
    if isinstance(basis, IdealBasis):
        nvars = basis.ring.nvars
    else:
        if not gens:
            raise ValueError("cannot infer variable count from an empty list")
        nvars = gens[0].ring.nvars
    return MonomialIdeal.make(nvars, [g.leading_monomial for g in gens])


def initial_ideal_generators(std_basis: BasisLike) -> tuple[Polynomial, ...]:
    """Initial forms of the basis elements, monic, deduplicated.

    The caller is responsible for passing a standard basis; only then do
    these forms generate the full initial ideal.
    """
    seen = set()
    out = []
    for g in _generators(std_basis):
        form = g.initial_form().monic()
        key = form.terms
        if key not in seen:
            seen.add(key)
            out.append(form)
    return tuple(out)


def minimalize_basis(basis: IdealBasis) -> IdealBasis:
    """Drop elements whose leading monomial is divisible by another's.

    Optional convenience; threshold computations always use the raw chain.
    """
    order = Ordering.GLOBAL_DEGREVLEX
    ranked = sorted(basis.generators,
                    key=lambda g: order.sort_key(g.leading_monomial))
    kept: list[Polynomial] = []
    for g in ranked:
        if not any(monomial_divides(k.leading_monomial, g.leading_monomial)
                   for k in kept):
            kept.append(g)
    return IdealBasis(basis.ring, tuple(kept))


def reduces_to_zero(f: Polynomial, basis: BasisLike) -> bool:
    if f.is_zero:
        return True
    h, _ = mora_normal_form(f, basis)
    return h.is_zero


def _rehome(f: Polynomial, ring: RingContext) -> Polynomial:
    return Polynomial.make(ring, f.terms)


def ideals_equal(a: BasisLike, b: BasisLike, ring: RingContext) -> bool:
    """Decide whether two generator lists span the same polynomial ideal.

    Works under the global degrevlex ordering via mutual normal-form
    membership; for homogeneous inputs this coincides with equality of the
    corresponding ideals under the local ordering.
    """
    ga = _generators(a)
    gb = _generators(b)
    check_ring = replace(ring, ordering=Ordering.GLOBAL_DEGREVLEX)
    ra = [_rehome(f, check_ring) for f in ga]
    rb = [_rehome(f, check_ring) for f in gb]
    sb_a, _ = standard_basis(IdealBasis(check_ring, tuple(ra)))
    sb_b, _ = standard_basis(IdealBasis(check_ring, tuple(rb)))
    return (all(reduces_to_zero(f, sb_a) for f in rb)
            and all(reduces_to_zero(f, sb_b) for f in ra))
