"""Hilbert series of monomial quotients, dimension and multiplicity of the
tangent cone, and an independent linear-algebra oracle.

Two routes to the same local multiplicity are implemented on purpose.  The
fast route goes through the monomial ideal of leading monomials of a standard
basis and the usual pivot recursion for the Hilbert numerator.  The slow
route, `hs_function_oracle`, never looks at a standard basis: it measures the
quotient by the ideal plus a power of the maximal ideal directly, by exact
Gaussian elimination over the coefficient field.  Tests require the two
routes to agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .rings import (
    MonomialIdeal,
    Monomial,
    Polynomial,
    monomial_degree,
    monomial_divides,
    monomial_mul,
    monomials_of_degree,
)
from .standard_bases import IdealBasis, leading_ideal, standard_basis


class ImproperIdealError(ValueError):
    """Raised when a computation needs a proper ideal of the local ring."""


# ---------------------------------------------------------------------------
# Integer polynomials in t, as coefficient lists


def _poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_shift(a: Sequence[int], k: int) -> list[int]:
    return [0] * k + list(a)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


# ---------------------------------------------------------------------------
# Hilbert numerator


def minimalize(gens: Iterable[Monomial], nvars: int) -> MonomialIdeal:
    """Divisibility antichain generating the same monomial ideal."""
    return MonomialIdeal.make(nvars, gens)


def _pairwise_coprime(gens: Sequence[Monomial]) -> bool:
    for j in range(len(gens)):
        for i in range(j):
            if any(a and b for a, b in zip(gens[i], gens[j])):
                return False
    return True


def _pivot_power(gens: Sequence[Monomial], nvars: int) -> Monomial:
    # Most frequent variable; its power is the least positive exponent among
    # the generators that contain it.
    counts = [0] * nvars
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    var = max(range(nvars), key=lambda i: (counts[i], -i))
    power = min(m[var] for m in gens if m[var])
    return tuple(power if i == var else 0 for i in range(nvars))


def hilbert_numerator(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Numerator Q(t) with HS(t) = Q(t)/(1-t)^nvars for the quotient by the
    ideal, graded by total degree.

    Recursion: Q(I) = Q(I + <p>) + t^(deg p) * Q(I : p) for a pivot
    variable-power p; base cases are the zero ideal, the unit ideal, and
    pairwise-coprime generators.
    """
    gens = ideal.min_gens
    nvars = ideal.nvars
    if not gens:
        return (1,)
    if any(monomial_degree(m) == 0 for m in gens):
        return (0,)
    if _pairwise_coprime(gens):
        q = [1]
        for m in gens:
            factor = [0] * (monomial_degree(m) + 1)
            factor[0] = 1
            factor[-1] = -1
            q = _poly_mul(q, factor)
        return tuple(q)
    pivot = _pivot_power(gens, nvars)
    added = MonomialIdeal.make(nvars, (*gens, pivot))
    colon_gens = [tuple(max(e - p, 0) for e, p in zip(m, pivot)) for m in gens]
    colon = MonomialIdeal.make(nvars, colon_gens)
    q_added = hilbert_numerator(added)
    q_colon = hilbert_numerator(colon)
    out = _poly_add(q_added, _poly_shift(q_colon, monomial_degree(pivot)))
    return tuple(out)


def series_coefficients(ideal: MonomialIdeal, through_degree: int) -> list[int]:
    """Counts of standard monomials (monomials outside the ideal) per degree,
    obtained by expanding Q(t)/(1-t)^nvars as a power series."""
    q = list(hilbert_numerator(ideal))
    coeffs = q[: through_degree + 1] + [0] * max(0, through_degree + 1 - len(q))
    for _ in range(ideal.nvars):
        run = 0
        for i in range(through_degree + 1):
            run += coeffs[i]
            coeffs[i] = run
    return coeffs


@dataclass(frozen=True)
class HilbertSummary:
    numerator: tuple[int, ...]
    dimension: int
    multiplicity: int


def dim_and_mult(ideal: MonomialIdeal) -> tuple[int, int]:
    """Krull dimension and multiplicity of the quotient by the ideal.

    Writes HS(t) = P(t)/(1-t)^d in lowest terms with P(1) != 0 and returns
    (d, P(1)); for d = 0 the multiplicity is the total count of standard
    monomials.
    """
    return _summary(ideal)[1:]


def hilbert_summary(ideal: MonomialIdeal) -> HilbertSummary:
    numerator, dimension, multiplicity = _summary(ideal)
    return HilbertSummary(numerator, dimension, multiplicity)


def _summary(ideal: MonomialIdeal) -> tuple[tuple[int, ...], int, int]:
    q = list(hilbert_numerator(ideal))
    if all(c == 0 for c in q):
        raise ImproperIdealError("unit ideal")
    ones = 0
    while sum(q) == 0:
        partial = []
        run = 0
        for c in q:
            run += c
            partial.append(run)
        assert partial[-1] == 0
        q = partial[:-1]
        ones += 1
    dimension = ideal.nvars - ones
    multiplicity = sum(q)
    assert dimension >= 0 and multiplicity > 0
    return tuple(hilbert_numerator(ideal)), dimension, multiplicity


# ---------------------------------------------------------------------------
# Multiplicity of a local ring presented by generators


def multiplicity_of_local_ring(g0: IdealBasis) -> tuple[int, int, IdealBasis]:
    """(dimension, multiplicity, standard basis) of the local ring presented
    by the given generators, through the leading ideal of a standard basis."""
    sb, _ = standard_basis(g0)
    if not sb.generators:
        return (g0.ring.nvars, 1, sb)
    lead = leading_ideal(sb)
    if lead.is_unit:
        raise ImproperIdealError("not a proper ideal at the origin")
    dimension, multiplicity = dim_and_mult(lead)
    return dimension, multiplicity, sb


# ---------------------------------------------------------------------------
# Independent oracle: dim of R / (ideal + m^(s+1)) by exact linear algebra


def hs_function_sequence(g0: IdealBasis, s_max: int) -> list[int]:
    """Values dim_K R/(I + m^(s+1)) for s = 0..s_max, no standard bases.

    Spanning vectors are the monomial multiples of the generators, added in
    order of their bottom degree.  Columns are indexed by monomials sorted
    degree-ascending; every new vector is reduced against earlier pivots and
    installs a new pivot if nonzero.  Because each pivot is the lowest column
    of its vector, an element of the accumulated span lies in m^(s+1) exactly
    when every pivot it uses has degree > s, which turns the per-s truncated
    ranks into a single elimination:

        dim R/(I + m^(s+1)) = #monomials(deg <= s) - #pivots(deg <= s).
    """
    if s_max < 0:
        raise ValueError("s_max must be nonnegative")
    ring = g0.ring
    nvars = ring.nvars
    gens = g0.generators
    max_ecart = max((g.degree() - g.order() for g in gens), default=0)

    col_index: dict[Monomial, int] = {}
    col_degree: list[int] = []
    for d in range(s_max + max_ecart + 1):
        for m in monomials_of_degree(nvars, d):
            col_index[m] = len(col_degree)
            col_degree.append(d)

    pivots: dict[int, dict[int, object]] = {}
    pivot_degree_counts = [0] * (s_max + max_ecart + 2)

    def insert(row: dict[int, object]) -> None:
        while row:
            p = min(row)
            if p in pivots:
                factor = row[p]
                for col, val in pivots[p].items():
                    cur = row.get(col)
                    new = (cur - factor * val) if cur is not None else -factor * val
                    if new:
                        row[col] = new
                    elif col in row:
                        del row[col]
            else:
                lead = row[p]
                pivots[p] = {c: v / lead for c, v in row.items()}
                pivot_degree_counts[col_degree[p]] += 1
                return

    counts_le: list[int] = []
    total = 0
    values: list[int] = []
    orders = [g.order() for g in gens]
    for s in range(s_max + 1):
        total += comb(s + nvars - 1, nvars - 1)
        counts_le.append(total)
        for g, ord_g in zip(gens, orders):
            d = s - ord_g
            if d < 0:
                continue
            for m in monomials_of_degree(nvars, d):
                row = {col_index[monomial_mul(m, mon)]: coeff
                       for mon, coeff in g.terms}
                insert(row)
        usable = sum(pivot_degree_counts[: s + 1])
        values.append(counts_le[s] - usable)
    return values


def hs_function_oracle(g0: IdealBasis, s: int) -> int:
    """dim_K R/(I + m^(s+1)), computed by exact linear algebra only."""
    return hs_function_sequence(g0, s)[s]


def hs_dimension_and_multiplicity(values: Sequence[int]) -> tuple[int, int]:
    """Extract (dimension, multiplicity) from values of s -> dim R/(I+m^(s+1)).

    The d-th finite difference of the sequence is eventually the constant
    multiplicity, where d is the dimension.  The input must extend beyond the
    point where that difference has settled; the tail is required to be
    constant over its last four entries (or all of them, if fewer remain).
    """
    seq = list(values)
    for d in range(len(seq)):
        tail = seq[-4:] if len(seq) >= 4 else seq
        if len(tail) >= 2 and all(v == tail[0] for v in tail) and tail[0] != 0:
            return d, tail[0]
        if len(seq) < 2:
            break
        seq = [b - a for a, b in zip(seq, seq[1:])]
    raise ValueError("sequence too short: finite differences never settled")
