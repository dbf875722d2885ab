"""Regularity, superficiality, ssop checks, and certified depth.

All predicates run through Hilbert series of linear-form quotients.
The load-bearing identity: for a linear form g on M = R/I,

    t * series(0 :_M g)  =  series(M/gM) - (1-t) * series(M)

so with both sides written over (1-t)^(d-1), the numerator of the
socle series is just  h_quotient - h_M.  Superficiality of g means
that difference has dimension <= 0, regularity means it vanishes,
and its e_0 is the correction length that shows up in the defect
formulas.  No colon Groebner bases on the hot path.

Positive claims (regular, superficial, certified sequences) are exact.
Negative claims that rest on exhausting random candidates are Monte
Carlo and say so in their certificates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from hilbcalc.linalg import FractionEchelon
from hilbcalc.oracle import monomials_of_degree
from hilbcalc.polyring import (
    LinearElimination,
    LinearForm,
    PolyIdeal,
    eliminate_form,
    form_combination,
    forms_independent,
    quotient_by_linear,
)
from hilbcalc.presentation import CyclicModule, series_of_cyclic
from hilbcalc.series import (
    HilbertSeries,
    hilbert_coefficients,
    series_dimension,
)

DEFAULT_TRIALS = 32
DEFAULT_COEFF_BOUND = 5

CERTIFIED = "certified"
NOT_SSOP = "not-ssop"
PROBABLY_NOT_ADMISSIBLE = "probably-not-admissible"

STOP_DIMENSION_ZERO = "dimension-zero"
STOP_TRIALS_EXHAUSTED = "trials-exhausted"


@dataclass(frozen=True)
class SuperficialityReport:
    """Outcome of the finite-length test for one linear form.

    socle_length is ell(0 :_M g), present exactly when the form is
    superficial; colon_equal records (I : g) = I, i.e. regularity.
    """

    is_superficial: bool
    colon_equal: bool
    socle_length: Optional[int] = None

    def __post_init__(self) -> None:
        if self.is_superficial != (self.socle_length is not None):
            raise ValueError("socle_length present iff superficial")
        if self.colon_equal and self.socle_length != 0:
            raise ValueError("regular forms have empty socle")

    def __bool__(self) -> bool:
        return self.is_superficial


@dataclass(frozen=True)
class AdmissibilityCertificate:
    verdict: str
    witness: Optional[tuple[LinearForm, ...]]
    trials_used: int

    def __bool__(self) -> bool:
        return self.verdict == CERTIFIED


@dataclass(frozen=True)
class DepthCertificate:
    """A maximal chain of certified-regular linear forms.

    Every link is exact evidence (colon equality of series).  The claim
    that the chain is maximal is exact when stop_evidence is
    dimension-zero, Monte Carlo when candidates were merely exhausted.
    """

    depth: int
    chain: tuple[LinearForm, ...]
    stop_evidence: str
    failed_trials: int

    def __post_init__(self) -> None:
        if self.depth != len(self.chain):
            raise ValueError("depth must equal chain length")

    @property
    def is_exact(self) -> bool:
        return self.stop_evidence == STOP_DIMENSION_ZERO


def quotient_module(
    M: CyclicModule, f: LinearForm
) -> tuple[CyclicModule, LinearElimination]:
    """M/fM presented in one fewer variable, with the substitution used."""
    if f.nvars != M.ring_dim:
        raise ValueError("form lives in a different ring")
    elim = eliminate_form(f)
    return CyclicModule(M.ring_dim - 1, quotient_by_linear(M.ideal, f), M.shift), elim


def socle_series(M: CyclicModule, g: LinearForm) -> HilbertSeries:
    """Series of (0 :_M g), up to one harmless degree shift."""
    base = M.drop_shift()
    h1 = series_of_cyclic(base).numerator
    quotient, _ = quotient_module(base, g)
    h2 = series_of_cyclic(quotient).numerator
    return HilbertSeries(base.ring_dim - 1, h2 - h1)


def is_superficial(M: CyclicModule, g: LinearForm) -> SuperficialityReport:
    """Finite-length test: g is superficial iff (0 :_M g) has dim <= 0."""
    D = socle_series(M, g)
    if D.is_zero:
        return SuperficialityReport(True, True, 0)
    if series_dimension(D) <= 0:
        return SuperficialityReport(True, False, hilbert_coefficients(D).e(0))
    return SuperficialityReport(False, False, None)


def is_regular(M: CyclicModule, f: LinearForm) -> bool:
    """True iff (I : f) = I, detected as a vanishing socle series."""
    return socle_series(M, f).is_zero


def superficial_chain(
    M: CyclicModule, gs: Sequence[LinearForm]
) -> tuple[tuple[SuperficialityReport, ...], tuple[CyclicModule, ...]]:
    """Run is_superficial along successive quotients by gs, in order.

    Forms are given in the ring of M; each is mapped through the earlier
    substitutions before testing.  Returns one report per form and the
    quotient modules after each step (shift carried along).  A form that
    dies on the way down acts as multiplication by zero, whose socle is
    the whole module; it is superficial only once the module has finite
    length.
    """
    reports: list[SuperficialityReport] = []
    modules: list[CyclicModule] = []
    current = M
    pending = list(gs)
    while pending:
        g = pending.pop(0)
        if g is None:
            S = series_of_cyclic(current.drop_shift())
            if S.is_zero or series_dimension(S) <= 0:
                reports.append(
                    SuperficialityReport(
                        True, S.is_zero, hilbert_coefficients(S).e(0)
                    )
                )
            else:
                reports.append(SuperficialityReport(False, False, None))
            modules.append(current)
            continue
        reports.append(is_superficial(current, g))
        current, elim = quotient_module(current, g)
        modules.append(current)
        pending = [elim.map_form(p) if p is not None else None for p in pending]
    return tuple(reports), tuple(modules)


def is_ssop(M: CyclicModule, fs: Sequence[LinearForm]) -> bool:
    """True iff cutting by fs drops the dimension by len(fs).

    Forms that become zero along the way contribute no drop, so a
    dependent family can never pass.
    """
    pending = list(fs)
    if not pending:
        raise ValueError("need at least one form")
    n = len(pending)
    S = series_of_cyclic(M.drop_shift())
    if S.is_zero:
        return False
    s = series_dimension(S)
    current = M.drop_shift()
    while pending:
        f = pending.pop(0)
        if f is None:
            continue
        current, elim = quotient_module(current, f)
        pending = [elim.map_form(g) if g is not None else None for g in pending]
    return series_dimension(series_of_cyclic(current)) == s - n


def _combination_stream(
    k: int, rng: random.Random, bound: int
) -> Iterator[tuple[int, ...]]:
    """Coefficient vectors over a k-element basis: units, signed pairs,
    then unbounded random draws."""
    for j in range(k):
        yield tuple(1 if i == j else 0 for i in range(k))
    for a in range(k):
        for b in range(a + 1, k):
            for sb in (1, -1):
                yield tuple(
                    (1 if i == a else (sb if i == b else 0)) for i in range(k)
                )
    while True:
        c = tuple(rng.randint(-bound, bound) for _ in range(k))
        if any(c):
            yield c


def find_superficial_sequence(
    M: CyclicModule,
    fs: Sequence[LinearForm],
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_COEFF_BOUND,
) -> AdmissibilityCertificate:
    """Certify fs admissible by exhibiting a superficial sequence with the
    same span, rebuilt one form at a time along the quotients.

    Every form in a returned witness is certified superficial on its
    quotient, which is exact; the probably-not-admissible verdict only
    says `trials` straight candidates failed at some step.
    """
    fs = tuple(fs)
    if not fs:
        return AdmissibilityCertificate(CERTIFIED, (), 0)
    if not forms_independent(fs) or not is_ssop(M, fs):
        return AdmissibilityCertificate(NOT_SSOP, None, 0)
    rng = random.Random(seed)
    current = M.drop_shift()
    basis_here = list(fs)
    basis_orig = list(fs)
    witness: list[LinearForm] = []
    used = 0
    for _ in range(len(fs)):
        k = len(basis_here)
        dim_before = series_dimension(series_of_cyclic(current))
        found = None
        failures = 0
        for coeffs in _combination_stream(k, rng, bound):
            g = form_combination(coeffs, basis_here)
            if is_superficial(current, g):
                found = (coeffs, g)
                break
            failures += 1
            used += 1
            if failures >= trials:
                return AdmissibilityCertificate(PROBABLY_NOT_ADMISSIBLE, None, used)
        coeffs, g = found
        witness.append(form_combination(coeffs, basis_orig))
        # retire the basis member the new form leans on hardest
        p = max(range(k), key=lambda j: (abs(coeffs[j]), j))
        current, elim = quotient_module(current, g)
        if series_dimension(series_of_cyclic(current)) != dim_before - 1:
            raise RuntimeError("superficial quotient failed to drop dimension")
        basis_here = [
            elim.map_form(basis_here[j]) for j in range(k) if j != p
        ]
        basis_orig = [basis_orig[j] for j in range(k) if j != p]
        if any(h is None for h in basis_here):
            raise RuntimeError("complement basis collapsed under substitution")
    return AdmissibilityCertificate(CERTIFIED, tuple(witness), used)


def _screen(I: PolyIdeal) -> tuple[FractionEchelon, int, dict, int]:
    """Degree-two data for fast rejection of non-regular forms.

    A regular linear form multiplies the degree-one part of R/I into
    degree two injectively; a rank drop there is certain evidence of a
    zerodivisor.  Passing the screen decides nothing.
    """
    d = I.ring_dim
    deg2 = monomials_of_degree(d, 2)
    index = {m: j for j, m in enumerate(deg2)}
    ech = FractionEchelon(len(deg2))
    lin = FractionEchelon(d)
    for g in I.generators:
        dg = g.homogeneous_degree()
        if dg == 1:
            vec = [Fraction(0)] * d
            for m, c in g.terms.items():
                vec[m.index(1)] = c
            lin.insert(vec)
            for k in range(d):
                row = [Fraction(0)] * len(deg2)
                for m, c in g.terms.items():
                    e = list(m)
                    e[k] += 1
                    row[index[tuple(e)]] = c
                ech.insert(row)
        elif dg == 2:
            row = [Fraction(0)] * len(deg2)
            for m, c in g.terms.items():
                row[index[m]] = c
            ech.insert(row)
    return ech, d - lin.rank, index, d


def _screen_passes(screen, f: LinearForm) -> bool:
    ech, expected, index, d = screen
    resid = FractionEchelon(len(index))
    for k in range(d):
        row = [Fraction(0)] * len(index)
        for j, c in enumerate(f.coefficients):
            if c:
                e = [0] * d
                e[j] += 1
                e[k] += 1
                row[index[tuple(e)]] += c
        resid.insert(ech.reduce(row))
    return resid.rank == expected


def _candidate_stream(
    d: int, rng: random.Random, bound: int
) -> Iterator[LinearForm]:
    """Linear forms to try as regular elements: variables, signed pairs
    of variables, then random small-coefficient forms."""
    one = Fraction(1)
    for j in range(d):
        yield LinearForm(tuple(one if i == j else Fraction(0) for i in range(d)))
    for a in range(d):
        for b in range(a + 1, d):
            for sb in (1, -1):
                yield LinearForm(
                    tuple(
                        one if i == a else (Fraction(sb) if i == b else Fraction(0))
                        for i in range(d)
                    )
                )
    while True:
        c = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(d))
        if any(c):
            yield LinearForm(c)


def _pullback(f: LinearForm, var_map: Sequence[int], d0: int) -> LinearForm:
    coeffs = [Fraction(0)] * d0
    for k, c in enumerate(f.coefficients):
        coeffs[var_map[k]] = c
    return LinearForm(tuple(coeffs))


_DEPTH_CACHE: dict[tuple, DepthCertificate] = {}


def depth(
    M: CyclicModule,
    seed: int = 0,
    trials: int = DEFAULT_TRIALS,
    bound: int = DEFAULT_COEFF_BOUND,
) -> DepthCertificate:
    """Longest chain of certified-regular linear forms the search finds.

    Chain forms are reported in the ring of M; each was certified on the
    successive quotient, and those certifications are exact.  A nonzero
    module of dimension zero has no regular linear form at all, so the
    dimension-zero stop is exact as well; stopping on exhausted trials
    leaves open that a cleverer candidate exists.  The zero module stops
    at the dimension-zero terminal immediately.
    """
    key = (M.key(), seed, trials, bound)
    hit = _DEPTH_CACHE.get(key)
    if hit is not None:
        return hit
    d0 = M.ring_dim
    current = M.drop_shift()
    var_map = list(range(d0))
    chain: list[LinearForm] = []
    rng = random.Random(seed)
    while True:
        S = series_of_cyclic(current)
        if S.is_zero or series_dimension(S) <= 0:
            cert = DepthCertificate(len(chain), tuple(chain), STOP_DIMENSION_ZERO, 0)
            break
        screen = _screen(current.ideal)
        failures = 0
        found = None
        for f in _candidate_stream(current.ring_dim, rng, bound):
            if _screen_passes(screen, f) and is_regular(current, f):
                found = f
                break
            failures += 1
            if failures >= trials:
                break
        if found is None:
            cert = DepthCertificate(
                len(chain), tuple(chain), STOP_TRIALS_EXHAUSTED, failures
            )
            break
        chain.append(_pullback(found, var_map, d0))
        current, elim = quotient_module(current, found)
        var_map = [var_map[elim.old_index(i)] for i in range(current.ring_dim)]
    _DEPTH_CACHE[key] = cert
    return cert
