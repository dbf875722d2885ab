"""Superficiality, ssop, admissibility certification, and depth."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbcalc.polyring import LinearForm, PolyIdeal, Polynomial, colon
from hilbcalc.presentation import CyclicModule, module_dimension, series_of_cyclic
from hilbcalc.superficial import (
    CERTIFIED,
    NOT_SSOP,
    PROBABLY_NOT_ADMISSIBLE,
    STOP_DIMENSION_ZERO,
    STOP_TRIALS_EXHAUSTED,
    SuperficialityReport,
    _screen,
    _screen_passes,
    depth,
    find_superficial_sequence,
    is_regular,
    is_ssop,
    is_superficial,
    quotient_module,
    socle_series,
    superficial_chain,
)


def mono(d, *exps):
    return PolyIdeal(d, [Polynomial.from_monomial(d, e) for e in exps])


def lf(*cs):
    return LinearForm(tuple(Fraction(c) for c in cs))


def mp_module(d, s):
    """R/(maximal ideal times the prime of the first d-s variables)."""
    gens = []
    for a in range(d - s):
        for b in range(a, d):
            e = [0] * d
            e[a] += 1
            e[b] += 1
            gens.append(tuple(e))
    return CyclicModule(d, mono(d, *gens))


MP3 = mp_module(3, 1)
PQ = CyclicModule(3, mono(3, (1, 0, 1), (0, 1, 1)))  # vars x1, x2, y1
Z1 = lf(-1, 0, 1)


class TestSuperficialityReport:
    def test_consistency_enforced(self):
        with pytest.raises(ValueError):
            SuperficialityReport(True, False, None)
        with pytest.raises(ValueError):
            SuperficialityReport(False, False, 3)
        with pytest.raises(ValueError):
            SuperficialityReport(True, True, 2)

    def test_truthiness(self):
        assert SuperficialityReport(True, True, 0)
        assert not SuperficialityReport(False, False, None)


class TestIsSuperficial:
    def test_last_variable_on_mp(self):
        rep = is_superficial(MP3, lf(0, 0, 1))
        assert rep.is_superficial
        assert rep.socle_length == 2
        assert not rep.colon_equal

    def test_prime_member_fails(self):
        rep = is_superficial(MP3, lf(1, 0, 0))
        assert not rep.is_superficial
        assert rep.socle_length is None

    def test_dimension_zero_always_superficial(self):
        M = CyclicModule(2, mono(2, (1, 0), (0, 1)))
        rep = is_superficial(M, lf(1, 0))
        assert rep.is_superficial and rep.socle_length == 1
        rep2 = is_superficial(M, lf(3, -2))
        assert rep2.is_superficial

    def test_superficial_drops_dimension_by_one(self):
        for M, g in ((MP3, lf(0, 0, 1)), (PQ, Z1)):
            assert is_superficial(M, g)
            Q, _ = quotient_module(M, g)
            assert module_dimension(Q) == module_dimension(M) - 1

    def test_shift_invariant(self):
        shifted = CyclicModule(3, MP3.ideal, shift=2)
        assert is_superficial(shifted, lf(0, 0, 1)) == is_superficial(
            MP3, lf(0, 0, 1)
        )


class TestIsRegular:
    def test_variable_off_hypersurface(self):
        M = CyclicModule(2, mono(2, (2, 0)))
        assert is_regular(M, lf(0, 1))
        assert not is_regular(M, lf(1, 0))

    def test_mp_has_no_regular_form(self):
        candidates = [lf(1, 0, 0), lf(0, 1, 0), lf(0, 0, 1), lf(1, 1, 1), lf(1, -1, 2)]
        assert not any(is_regular(MP3, f) for f in candidates)

    def test_z1_regular_on_pq(self):
        assert is_regular(PQ, Z1)

    def test_agrees_with_literal_colon(self):
        # the definition: f regular iff (I : f) has the series of I
        cases = [
            (MP3, lf(0, 0, 1)),
            (MP3, lf(1, 0, 0)),
            (PQ, Z1),
            (PQ, lf(0, 1, 0)),
            (CyclicModule(2, mono(2, (2, 0))), lf(0, 1)),
        ]
        for M, f in cases:
            Q = colon(M.ideal, f.to_polynomial())
            literal = series_of_cyclic(CyclicModule(M.ring_dim, Q)) == series_of_cyclic(
                CyclicModule(M.ring_dim, M.ideal)
            )
            assert is_regular(M, f) == literal, (M, f)

    def test_regular_implies_superficial_with_zero_socle(self):
        rep = is_superficial(PQ, Z1)
        assert rep.is_superficial and rep.colon_equal and rep.socle_length == 0

    def test_socle_series_matches_colon_route(self):
        # series of (I:g)/I computed through the colon must equal the
        # quotient-route socle series up to the extra factor of t
        from hilbcalc.series import HilbertSeries

        for M, g in ((MP3, lf(0, 0, 1)), (MP3, lf(1, 0, 0)), (PQ, lf(0, 1, 0))):
            Q = colon(M.ideal, g.to_polynomial())
            SI = series_of_cyclic(CyclicModule(M.ring_dim, M.ideal))
            SQ = series_of_cyclic(CyclicModule(M.ring_dim, Q))
            direct = HilbertSeries(
                M.ring_dim, (SI.numerator - SQ.numerator).times_t_power(1)
            )
            assert socle_series(M, g) == direct


class TestIsSsop:
    def test_mp_last_variable(self):
        assert is_ssop(MP3, [lf(0, 0, 1)])

    def test_pq_pair(self):
        assert is_ssop(PQ, [lf(0, 1, 0), Z1])

    def test_insufficient_drop(self):
        M = CyclicModule(2, mono(2, (1, 1)))  # R/(x1 y1)
        assert not is_ssop(M, [lf(1, 0)])

    def test_dependent_family(self):
        assert not is_ssop(PQ, [Z1, Z1.scaled(2)])

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            is_ssop(MP3, [])


class TestSuperficialChain:
    def test_mp_single_step(self):
        reports, modules = superficial_chain(MP3, [lf(0, 0, 1)])
        assert reports[0].socle_length == 2
        assert modules[0].ring_dim == 2
        assert modules[0].ideal.monomial_exponents() == frozenset(
            {(2, 0), (1, 1), (0, 2)}
        )

    def test_dead_form_reported_honestly(self):
        # second form equals the first, so it dies after one step and
        # acts as zero on a still positive-dimensional module
        M = CyclicModule(2, PolyIdeal(2))
        reports, _ = superficial_chain(M, [lf(1, 0), lf(1, 0)])
        assert reports[0].is_superficial
        assert not reports[1].is_superficial

    def test_shift_carried(self):
        shifted = CyclicModule(3, MP3.ideal, shift=2)
        _, modules = superficial_chain(shifted, [lf(0, 0, 1)])
        assert modules[0].shift == 2


class TestFindSuperficialSequence:
    def test_sop_certifies(self):
        cert = find_superficial_sequence(MP3, [lf(0, 0, 1)])
        assert cert and cert.verdict == CERTIFIED
        assert cert.witness == (lf(0, 0, 1),)

    def test_recombination_reorders(self):
        # x2 itself is not superficial for PQ, so certification must
        # lean on z1 first; the witness still spans (x2, z1)
        cert = find_superficial_sequence(PQ, [lf(0, 1, 0), Z1])
        assert cert.verdict == CERTIFIED
        assert len(cert.witness) == 2
        from hilbcalc.polyring import forms_independent

        assert forms_independent(list(cert.witness))
        for w in cert.witness:
            assert not forms_independent([lf(0, 1, 0), Z1, w])

    def test_witness_forms_are_stepwise_superficial(self):
        cert = find_superficial_sequence(PQ, [lf(0, 1, 0), Z1])
        reports, _ = superficial_chain(PQ, list(cert.witness))
        assert all(r.is_superficial for r in reports)

    def test_not_ssop_on_dependent(self):
        cert = find_superficial_sequence(PQ, [Z1, Z1.scaled(3)])
        assert cert.verdict == NOT_SSOP and cert.witness is None

    def test_not_ssop_on_bad_drop(self):
        M = CyclicModule(2, mono(2, (1, 1)))
        cert = find_superficial_sequence(M, [lf(1, 0)])
        assert cert.verdict == NOT_SSOP

    def test_probably_not_admissible(self):
        # (x2) is an ssop for PQ but no scalar multiple is superficial,
        # so certification can only exhaust its budget
        cert = find_superficial_sequence(PQ, [lf(0, 1, 0)], trials=8)
        assert cert.verdict == PROBABLY_NOT_ADMISSIBLE
        assert cert.trials_used == 8
        assert not cert

    def test_empty_input(self):
        cert = find_superficial_sequence(MP3, [])
        assert cert.verdict == CERTIFIED and cert.witness == ()

    def test_deterministic(self):
        a = find_superficial_sequence(PQ, [lf(0, 1, 0), Z1], seed=5)
        b = find_superficial_sequence(PQ, [lf(0, 1, 0), Z1], seed=5)
        assert a == b


class TestDepth:
    def test_mp_depth_zero(self):
        cert = depth(MP3)
        assert cert.depth == 0
        assert cert.stop_evidence == STOP_TRIALS_EXHAUSTED
        assert not cert.is_exact

    def test_pq_depth_one(self):
        cert = depth(PQ)
        assert cert.depth == 1
        assert is_regular(PQ, cert.chain[0])

    def test_free_module_full_depth(self):
        cert = depth(CyclicModule(3, PolyIdeal(3)))
        assert cert.depth == 3
        assert cert.stop_evidence == STOP_DIMENSION_ZERO
        assert cert.is_exact

    def test_hypersurface_exact_depth(self):
        M = CyclicModule(2, mono(2, (2, 0)))
        cert = depth(M)
        assert cert.depth == 1 and cert.is_exact

    def test_depth_at_most_dim(self):
        for M in (MP3, PQ, CyclicModule(3, PolyIdeal(3))):
            assert depth(M).depth <= module_dimension(M)

    def test_zero_module(self):
        M = CyclicModule(2, PolyIdeal(2, [Polynomial.one(2)]))
        cert = depth(M)
        assert cert.depth == 0 and cert.is_exact

    def test_chain_regular_in_original_ring(self):
        cert = depth(CyclicModule(3, PolyIdeal(3)))
        current = CyclicModule(3, PolyIdeal(3))
        for f in cert.chain:
            assert is_regular(current, f)
            break  # first link lives in the original ring by contract

    def test_deterministic_and_memoized(self):
        a = depth(PQ, seed=11)
        b = depth(PQ, seed=11)
        assert a is b
        c = depth(PQ, seed=12)
        assert c.depth == a.depth

    def test_depth_quotient_correspondence(self):
        # with one certified superficial form g and 1 < dim M:
        # depth M > 1 iff depth M/gM > 0
        cert = find_superficial_sequence(PQ, [Z1])
        Q, _ = quotient_module(PQ, cert.witness[0])
        assert (depth(PQ).depth > 1) == (depth(Q).depth > 0)

    def test_shift_invariant(self):
        shifted = CyclicModule(3, PQ.ideal, shift=3)
        assert depth(shifted).depth == depth(PQ).depth


class TestScreen:
    @settings(max_examples=40, deadline=None)
    @given(
        st.sets(
            st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
            max_size=4,
        ),
        st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)),
    )
    def test_rejection_is_sound(self, exps, coeffs):
        # the degree-two screen may only reject certified zerodivisors
        exps = {e for e in exps if any(e)}
        if not exps or not any(coeffs):
            return
        I = mono(3, *exps)
        M = CyclicModule(3, I)
        f = lf(*coeffs)
        screen = _screen(I)
        if not _screen_passes(screen, f):
            assert not is_regular(M, f)
