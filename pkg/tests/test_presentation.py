"""Module presentations and their series, checked against direct counts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbcalc.oracle import verify_series
from hilbcalc.polyring import PolyIdeal, Polynomial
from hilbcalc.presentation import (
    BadParams,
    CyclicModule,
    FAMILY_CASES,
    NotMonomial,
    ResolutionPresentation,
    closed_form_family,
    determinantal_check_module,
    module_dimension,
    module_table,
    series_of_cyclic,
    series_of_monomial_quotient,
    series_of_resolution,
)
from hilbcalc.series import (
    HilbertSeries,
    IntPolynomial,
    binomial,
    hilbert_coefficients,
    shift,
)


def monomial_ideal(d, *exps):
    return PolyIdeal(d, [Polynomial.from_monomial(d, e) for e in exps])


def mp_ideal(d, s):
    """(x1..xd)(x1..x_{d-s}) as a monomial ideal."""
    gens = []
    for a in range(d - s):
        for b in range(a, d):
            e = [0] * d
            e[a] += 1
            e[b] += 1
            gens.append(tuple(e))
    return monomial_ideal(d, *gens)


class TestMonomialSeries:
    def test_zero_ideal(self):
        S = series_of_monomial_quotient(3, PolyIdeal(3))
        assert S == HilbertSeries(3, IntPolynomial.one())

    def test_pure_variables(self):
        S = series_of_monomial_quotient(3, monomial_ideal(3, (1, 0, 0), (0, 1, 0)))
        assert S.numerator == IntPolynomial((1, -2, 1))

    def test_unit_ideal(self):
        I = PolyIdeal(2, [Polynomial.one(2)])
        S = series_of_monomial_quotient(2, I)
        assert S.is_zero

    def test_two_gen_example(self):
        S = series_of_monomial_quotient(3, monomial_ideal(3, (1, 0, 1), (0, 1, 1)))
        assert S.numerator == IntPolynomial((1, 0, -2, 1))
        assert verify_series(CyclicModule(3, monomial_ideal(3, (1, 0, 1), (0, 1, 1))))

    def test_rejects_general_ideal(self):
        d = 2
        f = Polynomial(d, {(2, 0): Fraction(1), (1, 1): Fraction(1)})
        with pytest.raises(NotMonomial):
            series_of_monomial_quotient(d, PolyIdeal(d, [f]))

    @settings(max_examples=30, deadline=None)
    @given(
        st.integers(1, 3),
        st.sets(
            st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3)),
            max_size=4,
        ),
    )
    def test_random_monomial_vs_counts(self, _unused, exps):
        exps = {e for e in exps if any(e)}
        I = monomial_ideal(3, *exps) if exps else PolyIdeal(3)
        assert verify_series(CyclicModule(3, I), max_degree=9)


class TestCyclicSeries:
    def test_mp_table(self):
        M = CyclicModule(3, mp_ideal(3, 1))
        T = module_table(M)
        assert T.dim == 1
        assert (T.e(0), T.e(1)) == (1, -2)
        assert verify_series(M)

    def test_shifted_free(self):
        M = CyclicModule(4, PolyIdeal(4), shift=3)
        S = series_of_cyclic(M)
        assert S.numerator == IntPolynomial.t_power(3)

    def test_field_quotient(self):
        M = CyclicModule(1, monomial_ideal(1, (1,)))
        assert module_dimension(M) == 0
        assert module_table(M).e(0) == 1

    def test_general_ideal_through_initial(self):
        d = 3
        f1 = Polynomial(d, {(2, 0, 0): Fraction(1), (0, 1, 1): Fraction(-1)})
        f2 = Polynomial(d, {(1, 1, 0): Fraction(1)})
        M = CyclicModule(d, PolyIdeal(d, [f1, f2]))
        assert verify_series(M)

    def test_shift_commutes(self):
        M0 = CyclicModule(3, mp_ideal(3, 1))
        M2 = CyclicModule(3, mp_ideal(3, 1), shift=2)
        assert series_of_cyclic(M2) == shift(series_of_cyclic(M0), 2)
        assert verify_series(M2)

    def test_dimension_is_shift_invariant(self):
        M0 = CyclicModule(4, mp_ideal(4, 2))
        M3 = CyclicModule(4, mp_ideal(4, 2), shift=3)
        assert module_dimension(M0) == module_dimension(M3) == 2


class TestResolutionSeries:
    def test_free_ring(self):
        P = ResolutionPresentation(2, ((0,),))
        assert series_of_resolution(P) == HilbertSeries(2, IntPolynomial.one())

    def test_koszul_two_forms(self):
        k, l = 2, 3
        P = ResolutionPresentation(4, ((0,), (k, l), (k + l,)))
        T = hilbert_coefficients(series_of_resolution(P))
        for i in range(len(T.coeffs)):
            assert T.e(i) == binomial(k + l, i + 2) - binomial(k, i + 2) - binomial(
                l, i + 2
            )

    def test_three_points_resolution(self):
        P = ResolutionPresentation(3, ((0,), (3, 3, 3, 3), (4, 4, 4)))
        T = hilbert_coefficients(series_of_resolution(P))
        assert (T.e(0), T.e(1), T.e(2)) == (6, 8, 3)

    def test_rejects_empty_step_zero(self):
        with pytest.raises(ValueError):
            ResolutionPresentation(2, ((), (1,)))

    def test_rejects_negative_series(self):
        with pytest.raises(ValueError):
            ResolutionPresentation(2, ((0,), (0, 0)))


class TestClosedFormFamilies:
    def test_all_cases_match_their_resolutions(self):
        instances = [
            closed_form_family("shifted-free", d=6, r=4),
            closed_form_family("hypersurface", d=4, k=3),
            closed_form_family("complete-intersection-2", d=4, k=2, l=3),
            closed_form_family("hilbert-burch", d=3, m=2),
        ]
        for inst in instances:
            T = hilbert_coefficients(series_of_resolution(inst.presentation))
            assert T == inst.expected, inst.case

    def test_case_list_is_exhaustive(self):
        assert set(FAMILY_CASES) == {
            "shifted-free",
            "hypersurface",
            "complete-intersection-2",
            "hilbert-burch",
        }

    def test_bad_params(self):
        with pytest.raises(BadParams):
            closed_form_family("hypersurface", d=0, k=2)
        with pytest.raises(BadParams):
            closed_form_family("hilbert-burch", d=1, m=2)
        with pytest.raises(BadParams):
            closed_form_family("shifted-free", d=3)
        with pytest.raises(BadParams):
            closed_form_family("no-such-case", d=3)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 8), st.integers(1, 6))
    def test_shifted_free_expansion(self, r, d):
        inst = closed_form_family("shifted-free", d=d, r=r)
        T = hilbert_coefficients(series_of_resolution(inst.presentation))
        assert T == inst.expected


class TestDeterminantalInstance:
    def test_dimension_table_and_counts(self):
        M = determinantal_check_module(0)
        assert module_dimension(M) == 1
        T = module_table(M)
        assert (T.e(0), T.e(1)) == (3, 2)
        assert verify_series(M)

    def test_deterministic_in_seed(self):
        assert determinantal_check_module(0) == determinantal_check_module(0)
