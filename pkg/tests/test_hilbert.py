"""Hilbert numerators against brute force, multiplicity extraction, and the
linear-algebra oracle."""

import itertools
import random
from math import comb

import pytest

from covermult import (
    IdealBasis,
    ImproperIdealError,
    MonomialIdeal,
    RingContext,
    dim_and_mult,
    hilbert_numerator,
    hilbert_summary,
    hs_dimension_and_multiplicity,
    hs_function_oracle,
    hs_function_sequence,
    minimalize,
    monomial_lcm,
    monomials_of_degree,
    multiplicity_of_local_ring,
    series_coefficients,
)


# -- minimalize -----------------------------------------------------------------


def test_minimalize_absorbs_multiples():
    ideal = minimalize([(1, 0), (2, 0), (1, 1)], 2)
    assert ideal.min_gens == ((1, 0),)


def test_minimalize_keeps_incomparables():
    ideal = minimalize([(3, 0, 0), (0, 0, 2), (3, 0, 2)], 3)
    assert ideal.min_gens == ((0, 0, 2), (3, 0, 0))


def test_minimalize_empty():
    assert minimalize([], 3).min_gens == ()
    assert minimalize([], 3).is_zero


# -- numerator -------------------------------------------------------------------


def test_numerator_coprime_pair():
    ideal = MonomialIdeal.make(3, [(0, 0, 2), (3, 0, 0)])
    assert hilbert_numerator(ideal) == (1, 0, -1, -1, 0, 1)


def test_numerator_zero_ideal():
    assert hilbert_numerator(MonomialIdeal.make(4, [])) == (1,)


def test_numerator_principal():
    assert hilbert_numerator(MonomialIdeal.make(1, [(1,)])) == (1, -1)


def test_numerator_unit_ideal():
    assert hilbert_numerator(MonomialIdeal.make(2, [(0, 0)])) == (0,)


def _inclusion_exclusion(ideal: MonomialIdeal) -> tuple[int, ...]:
    nvars = ideal.nvars
    out = [0] * (sum(max(m) * nvars for m in ideal.min_gens) + 2)
    for r in range(len(ideal.min_gens) + 1):
        for subset in itertools.combinations(ideal.min_gens, r):
            lcm = (0,) * nvars
            for m in subset:
                lcm = monomial_lcm(lcm, m)
            out[sum(lcm)] += (-1) ** r
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _random_monomial_ideal(rng, nvars, max_gens, max_deg):
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        deg = rng.randint(1, max_deg)
        cuts = sorted(rng.randint(0, deg) for _ in range(nvars - 1))
        exps = [b - a for a, b in zip([0] + cuts, cuts + [deg])]
        gens.append(tuple(exps))
    return MonomialIdeal.make(nvars, gens)


def test_numerator_matches_inclusion_exclusion():
    rng = random.Random(7)
    for _ in range(60):
        nvars = rng.randint(1, 4)
        ideal = _random_monomial_ideal(rng, nvars, max_gens=6, max_deg=6)
        assert hilbert_numerator(ideal) == _inclusion_exclusion(ideal)


def test_series_counts_standard_monomials():
    rng = random.Random(11)
    for _ in range(25):
        nvars = rng.randint(1, 4)
        ideal = _random_monomial_ideal(rng, nvars, max_gens=5, max_deg=6)
        coeffs = series_coefficients(ideal, 12)
        for d in range(13):
            count = sum(1 for m in monomials_of_degree(nvars, d)
                        if not ideal.contains_monomial(m))
            assert coeffs[d] == count


def test_hilbert_function_monotone_under_extra_generator():
    rng = random.Random(23)
    for _ in range(20):
        nvars = rng.randint(2, 3)
        ideal = _random_monomial_ideal(rng, nvars, max_gens=4, max_deg=5)
        bigger = _random_monomial_ideal(rng, nvars, max_gens=1, max_deg=5)
        joined = MonomialIdeal.make(nvars, ideal.min_gens + bigger.min_gens)
        small = series_coefficients(joined, 10)
        large = series_coefficients(ideal, 10)
        assert all(a <= b for a, b in zip(small, large))
        dim_small, mult_small = dim_and_mult(joined)
        dim_large, mult_large = dim_and_mult(ideal)
        if dim_small == dim_large:
            assert mult_small <= mult_large


# -- dimension and multiplicity -----------------------------------------------------


def test_dim_and_mult_golden_pairs():
    assert dim_and_mult(MonomialIdeal.make(3, [(0, 0, 2), (3, 0, 0)])) == (1, 6)
    assert dim_and_mult(
        MonomialIdeal.make(3, [(1, 1, 0), (2, 0, 0), (0, 1, 3)])) == (1, 5)
    assert dim_and_mult(MonomialIdeal.make(4, [])) == (4, 1)


def test_dim_and_mult_zero_dimensional():
    ideal = MonomialIdeal.make(2, [(2, 0), (0, 2), (1, 1)])
    dim, mult = dim_and_mult(ideal)
    assert dim == 0
    # multiplicity equals the total count of standard monomials: 1, x, y
    assert mult == 3


def test_dim_and_mult_unit_ideal_rejected():
    with pytest.raises(ImproperIdealError):
        dim_and_mult(MonomialIdeal.make(2, [(0, 0)]))


def test_hilbert_summary():
    summary = hilbert_summary(MonomialIdeal.make(3, [(0, 0, 2), (3, 0, 0)]))
    assert summary.numerator == (1, 0, -1, -1, 0, 1)
    assert (summary.dimension, summary.multiplicity) == (1, 6)


# -- local-ring multiplicity pipeline -------------------------------------------------


def test_multiplicity_cusp(ring2):
    assert multiplicity_of_local_ring(
        IdealBasis.from_strings(ring2, ["x^3 + y^4"]))[:2] == (1, 3)


def test_multiplicity_double_cover(ring3):
    assert multiplicity_of_local_ring(
        IdealBasis.from_strings(ring3, ["x^3 + y^4", "x^3 - z^2"]))[:2] == (1, 6)


def test_multiplicity_smooth_hypersurface(ring3):
    assert multiplicity_of_local_ring(
        IdealBasis.from_strings(ring3, ["x"]))[:2] == (2, 1)


def test_multiplicity_zero_ideal(ring3):
    assert multiplicity_of_local_ring(IdealBasis(ring3, ()))[:2] == (3, 1)


def test_multiplicity_unit_at_origin_rejected(ring2):
    with pytest.raises(ImproperIdealError):
        multiplicity_of_local_ring(IdealBasis.from_strings(ring2, ["x + 1"]))
    # a unit hiding behind a reduction, not just a constant generator
    with pytest.raises(ImproperIdealError):
        multiplicity_of_local_ring(
            IdealBasis.from_strings(ring2, ["x + 1 + y", "y"]))


# -- oracle ----------------------------------------------------------------------------


def test_oracle_full_ring(ring3):
    basis = IdealBasis(ring3, ())
    for s in range(6):
        assert hs_function_oracle(basis, s) == comb(s + 3, 3)


def test_oracle_single_variable():
    ring = RingContext(("x",))
    basis = IdealBasis.from_strings(ring, ["x"])
    assert hs_function_sequence(basis, 8) == [1] * 9


def test_oracle_slope_is_multiplicity(ring2):
    seq = hs_function_sequence(IdealBasis.from_strings(ring2, ["x^3 + y^4"]), 10)
    diffs = [b - a for a, b in zip(seq, seq[1:])]
    assert diffs[3:] == [3] * len(diffs[3:])
    assert hs_dimension_and_multiplicity(seq) == (1, 3)


def test_oracle_ignores_localization_units(ring2):
    # <x - x^2> and <x> agree locally at the origin
    a = hs_function_sequence(IdealBasis.from_strings(ring2, ["x - x^2"]), 8)
    b = hs_function_sequence(IdealBasis.from_strings(ring2, ["x"]), 8)
    assert a == b


def test_cross_route_small_cases(ring2, ring3):
    cases = [
        IdealBasis.from_strings(ring2, ["x^3 + y^4"]),
        IdealBasis.from_strings(ring3, ["x^3 + y^4", "x^3 - z^2"]),
        IdealBasis.from_strings(ring3, ["x*y", "x^2 - z^3"]),
        IdealBasis.from_strings(ring2, ["x^2 - y^3", "x*y^2"]),
    ]
    for basis in cases:
        dim, mult, _ = multiplicity_of_local_ring(basis)
        seq = hs_function_sequence(basis, 12)
        assert hs_dimension_and_multiplicity(seq) == (dim, mult)


def test_hs_extractor_on_known_sequences():
    assert hs_dimension_and_multiplicity([4] * 8) == (0, 4)
    assert hs_dimension_and_multiplicity([1, 3, 5, 7, 9, 11]) == (1, 2)
    with pytest.raises(ValueError):
        hs_dimension_and_multiplicity([1, 2])
