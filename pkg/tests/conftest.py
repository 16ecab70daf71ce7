"""Shared strategies and fixtures."""

from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import settings

from covermult import IdealBasis, Polynomial, RingContext

settings.register_profile("default", deadline=None, max_examples=60,
                          derandomize=True)
settings.load_profile("default")


def monomials(nvars: int, max_exp: int = 4):
    return st.tuples(*([st.integers(0, max_exp)] * nvars))


def coefficients(bound: int = 3, max_denominator: int = 3):
    return st.fractions(
        min_value=Fraction(-bound), max_value=Fraction(bound),
        max_denominator=max_denominator,
    ).filter(lambda q: q != 0)


def polynomials(ring: RingContext, max_exp: int = 3, max_terms: int = 4,
                nonzero: bool = False):
    pair = st.tuples(monomials(ring.nvars, max_exp), coefficients())
    strat = st.lists(pair, min_size=1 if nonzero else 0,
                     max_size=max_terms).map(
        lambda pairs: Polynomial.make(ring, pairs))
    if nonzero:
        strat = strat.filter(lambda f: not f.is_zero)
    return strat


def bases(ring: RingContext, max_gens: int = 3, max_exp: int = 3,
          max_terms: int = 3):
    gen = polynomials(ring, max_exp=max_exp, max_terms=max_terms, nonzero=True)
    return st.lists(gen, min_size=1, max_size=max_gens).map(
        lambda gens: IdealBasis(ring, tuple(gens)))


@pytest.fixture
def ring2():
    return RingContext(("x", "y"))


@pytest.fixture
def ring3():
    return RingContext(("x", "y", "z"))
