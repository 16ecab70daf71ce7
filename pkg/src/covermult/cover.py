"""Tangent cones and multiplicities of cyclic branched covers.

Given an ideal I in the base variables and a branch function g vanishing at
the origin, the degree-n cover of the singularity branched along g = 0 is
presented by the ideal I + <g - y^n> in one extra variable.  A standard-basis
computation for I + <g> in the base ring yields a threshold N = max order of
the resulting generators; once n exceeds N, the cover's tangent cone is the
cone of the g = 0 section times an affine line, and in particular its
multiplicity stops depending on n.

That conclusion needs g to be a nonzerodivisor modulo I.  The hypothesis is
not verified algorithmically (no primality or zero-divisor testing here);
instead every analysis carries a warning, and `mult_table` computes each row
by an independent standard-basis run so that a failure of the hypothesis
shows up as a visibly non-stabilizing table rather than a silent lie.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

from .hilbert import dim_and_mult, multiplicity_of_local_ring
from .rings import MonomialIdeal, Polynomial, RingContext
from .standard_bases import (
    IdealBasis,
    ideals_equal,
    initial_ideal_generators,
    leading_ideal,
    mora_normal_form,
    standard_basis,
)

REGULARITY_WARNING = (
    "stabilization is guaranteed only if the branch function is a "
    "nonzerodivisor modulo the ideal; this hypothesis is assumed, not checked"
)


class CoverHypothesisError(ValueError):
    """The branch data violates the cover construction's hypotheses."""


@dataclass(frozen=True)
class CoverProblem:
    """Base ideal, branch function, and the name of the cover variable."""

    base_ring: RingContext
    ideal_gens: IdealBasis
    branch: Polynomial
    cover_var: str = "y"

    def __post_init__(self):
        if self.ideal_gens.ring != self.base_ring:
            raise ValueError("ideal generators from a different ring")
        if self.branch.ring != self.base_ring:
            raise ValueError("branch function from a different ring")
        if self.branch.is_zero:
            raise CoverHypothesisError("branch function is zero")
        if self.branch.has_constant_term:
            raise CoverHypothesisError(
                "branch function does not vanish at the origin")
        if self.cover_var in self.base_ring.variables:
            raise ValueError(
                f"cover variable {self.cover_var!r} clashes with a base variable")

    @cached_property
    def extended_ring(self) -> RingContext:
        return self.base_ring.extend(self.cover_var)

    @cached_property
    def base_standard_basis(self) -> IdealBasis:
        sb, _ = standard_basis(self.ideal_gens)
        return sb

    def validate(self) -> None:
        """Certify the branch function is not in the ideal (normal form != 0)."""
        if self.ideal_gens.generators:
            remainder, _ = mora_normal_form(self.branch, self.base_standard_basis)
            if remainder.is_zero:
                raise CoverHypothesisError("branch function lies in the ideal")


@dataclass(frozen=True)
class CoverRow:
    """One degree of the cover: initial-ideal generators, dimension,
    multiplicity, and whether the cone already equals the stable one."""

    n: int
    cone_gens: tuple[Polynomial, ...]
    dimension: int
    multiplicity: int
    stable: bool


@dataclass(frozen=True)
class CoverAnalysis:
    """Threshold analysis of a cover problem, optionally with per-n rows.

    `chain` is the raw sequence of strictly growing generating sets produced
    while completing (base standard basis) + (branch) to a standard basis;
    `threshold_N` is the maximum order over the final set, exactly as the
    raw chain delivers it.
    """

    problem: CoverProblem
    base_std_basis: IdealBasis
    chain: tuple[IdealBasis, ...]
    final_basis: IdealBasis
    threshold_N: int
    stable_cone_gens: tuple[Polynomial, ...]
    stable_dimension: int
    stable_multiplicity: int
    rows: tuple[CoverRow, ...] = ()

    @property
    def stabilized_in_range(self) -> bool:
        """True if rows beyond the threshold exist and all carry the stable cone."""
        beyond = [r for r in self.rows if r.n > self.threshold_N]
        return bool(beyond) and all(r.stable for r in beyond)

    @property
    def observed_multiplicity_onset(self) -> int | None:
        """Smallest computed n from which the multiplicity column equals the
        stable value through the end of the range; None if the tail differs."""
        onset = None
        for row in reversed(self.rows):
            if row.multiplicity != self.stable_multiplicity:
                break
            onset = row.n
        return onset


def _display_sorted(gens: tuple[Polynomial, ...]) -> tuple[Polynomial, ...]:
    if not gens:
        return gens
    ordering = gens[0].ring.ordering
    return tuple(sorted(
        gens,
        key=lambda f: (ordering.sort_key(f.leading_monomial), str(f)),
        reverse=True))


def cover_ideal(problem: CoverProblem, n: int) -> IdealBasis:
    """Generators of the degree-n cover ideal: the base generators lifted,
    plus (branch - y^n) with y the cover variable."""
    if n < 1:
        raise ValueError("cover degree must be positive")
    problem.validate()
    ext = problem.extended_ring
    lifted = [g.lift(ext) for g in problem.ideal_gens.generators]
    relation = problem.branch.lift(ext) - ext.var(problem.cover_var, n)
    return IdealBasis(ext, (*lifted, relation))


def stabilization_threshold(problem: CoverProblem) -> CoverAnalysis:
    """Compute the threshold N beyond which the cover's tangent cone is the
    stable one, together with the stable cone generators.

    Pipeline: standard basis F of the base ideal; completion of F + (branch)
    to a standard basis, keeping the whole chain; N = max order over the
    final set; stable cone = initial forms of the final set, regarded in the
    extended ring.
    """
    problem.validate()
    base_sb = problem.base_standard_basis
    g0 = IdealBasis(problem.base_ring,
                    (*base_sb.generators, problem.branch))
    final, chain = standard_basis(g0)
    threshold = max(g.order() for g in final.generators)
    ext = problem.extended_ring
    cone = _display_sorted(tuple(
        f.lift(ext) for f in initial_ideal_generators(final)))
    lead = MonomialIdeal.make(
        ext.nvars, [f.leading_monomial for f in cone])
    dimension, multiplicity = dim_and_mult(lead)
    return CoverAnalysis(
        problem=problem,
        base_std_basis=base_sb,
        chain=chain,
        final_basis=final,
        threshold_N=threshold,
        stable_cone_gens=cone,
        stable_dimension=dimension,
        stable_multiplicity=multiplicity,
    )


def mult_table(problem: CoverProblem, n_lo: int, n_hi: int) -> CoverAnalysis:
    """Threshold analysis plus one independently computed row per cover
    degree n in [n_lo, n_hi].

    Each row runs its own standard-basis computation from scratch, so the
    table is evidence for stabilization rather than a restatement of it.
    """
    if n_lo < 1 or n_lo > n_hi:
        raise ValueError("need 1 <= n_lo <= n_hi")
    analysis = stabilization_threshold(problem)
    ext = problem.extended_ring
    rows = []
    for n in range(n_lo, n_hi + 1):
        sb, _ = standard_basis(cover_ideal(problem, n))
        cone = _display_sorted(initial_ideal_generators(sb))
        dimension, multiplicity = dim_and_mult(leading_ideal(sb))
        stable = (multiplicity == analysis.stable_multiplicity
                  and ideals_equal(cone, analysis.stable_cone_gens, ext))
        rows.append(CoverRow(n, cone, dimension, multiplicity, stable))
    return replace(analysis, rows=tuple(rows))


def product_structure_check(
        analysis: CoverAnalysis) -> tuple[bool, Polynomial | None]:
    """Certify the stable cone is a cylinder over the base variables: no
    stable generator may involve the cover variable.  Returns the offending
    generator otherwise."""
    for f in analysis.stable_cone_gens:
        if any(m[-1] for m, _ in f.terms):
            return False, f
    return True, None


def degree_bound_check(analysis: CoverAnalysis, base_mult: int) -> bool:
    """Every computed row must satisfy mult <= n * (base multiplicity)."""
    if not analysis.rows:
        raise ValueError("analysis has no rows")
    return all(row.multiplicity <= row.n * base_mult for row in analysis.rows)


def base_multiplicity(problem: CoverProblem) -> tuple[int, int]:
    """(dimension, multiplicity) of the base singularity."""
    dimension, multiplicity, _ = multiplicity_of_local_ring(problem.ideal_gens)
    return dimension, multiplicity
