"""Exact Hilbert series arithmetic for standard graded modules.

A series is a pair (ambient_dim, numerator) standing for the formal
power series numerator / (1 - t)^ambient_dim.  Coefficient extraction
at t = 1 goes through the substitution t -> u + 1 on integer
polynomials, never through numerical differentiation, so every value
produced here is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

DEFAULT_TRUNCATION = 64


class InexactDivision(ArithmeticError):
    """Division of a numerator by a power of (1 - t) left a remainder."""


class MixedAmbient(ValueError):
    """Signed combination of series over different ambient dimensions."""


class _MinusInfinity:
    """Dimension sentinel for the zero module, strictly below every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "_MinusInfinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "-infinity"

    def __lt__(self, other):
        if isinstance(other, int):
            return True
        if isinstance(other, _MinusInfinity):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, _MinusInfinity)):
            return True
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, _MinusInfinity)):
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, int):
            return False
        if isinstance(other, _MinusInfinity):
            return True
        return NotImplemented


MINUS_INFINITY = _MinusInfinity()

# Dimension of a graded module: a plain integer, or the sentinel for 0.
Dim = Union[int, _MinusInfinity]


def binomial(m: int, n: int) -> int:
    """Binomial coefficient with C(m, 0) = 1 and C(m, n) = 0 for m < n."""
    if not isinstance(m, int) or not isinstance(n, int) or m < 0 or n < 0:
        raise ValueError(f"binomial expects naturals, got ({m!r}, {n!r})")
    return math.comb(m, n)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense univariate polynomial over the integers, trailing zeros trimmed."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def t_power(cls, r: int) -> "IntPolynomial":
        if r < 0:
            raise ValueError("t_power expects a natural exponent")
        return cls((0,) * r + (1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree of a nonzero polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return IntPolynomial.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def times_t_power(self, r: int) -> "IntPolynomial":
        if r < 0:
            raise ValueError("shift exponent must be a natural")
        if self.is_zero:
            return self
        return IntPolynomial((0,) * r + self.coeffs)

    def times_one_minus_t(self, k: int = 1) -> "IntPolynomial":
        """Multiply by (1 - t)^k."""
        p = self
        for _ in range(k):
            cs = list(p.coeffs) + [0]
            for i in range(len(cs) - 1, 0, -1):
                cs[i] -= cs[i - 1]
            p = IntPolynomial(tuple(cs))
        return p

    def div_one_minus_t(self, k: int = 1) -> "IntPolynomial":
        """Exact division by (1 - t)^k; raises InexactDivision on remainder."""
        p = self
        for _ in range(k):
            if p.is_zero:
                continue
            # p = (1 - t) q  <=>  q_i is the i-th prefix sum, exact iff p(1) = 0
            acc = 0
            q = []
            for c in p.coeffs:
                acc += c
                q.append(acc)
            if q[-1] != 0:
                raise InexactDivision("numerator not divisible by (1 - t)")
            p = IntPolynomial(tuple(q[:-1]))
        return p

    def multiplicity_at_one(self) -> int:
        """Largest k with (1 - t)^k dividing self; undefined for zero."""
        if self.is_zero:
            raise ValueError("multiplicity at 1 is undefined for the zero polynomial")
        k = 0
        p = self
        while True:
            try:
                p = p.div_one_minus_t()
            except InexactDivision:
                return k
            k += 1

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def taylor_at_one(self) -> tuple[int, ...]:
        """Coefficients of self written in powers of (t - 1), trimmed."""
        out = []
        n = len(self.coeffs)
        for i in range(n):
            out.append(sum(binomial(j, i) * self.coeffs[j] for j in range(i, n)))
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)


ONE_MINUS_T = IntPolynomial((1, -1))


@dataclass(frozen=True, eq=False)
class HilbertSeries:
    """numerator / (1 - t)^ambient_dim as a formal power series."""

    ambient_dim: int
    numerator: IntPolynomial

    def __post_init__(self) -> None:
        if not isinstance(self.ambient_dim, int) or self.ambient_dim < 0:
            raise ValueError("ambient_dim must be a natural number")
        if not isinstance(self.numerator, IntPolynomial):
            object.__setattr__(self, "numerator", IntPolynomial(tuple(self.numerator)))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def _reduced_key(self):
        if self.numerator.is_zero:
            return ("zero",)
        v = self.numerator.multiplicity_at_one()
        return (self.ambient_dim - v, self.numerator.div_one_minus_t(v).coeffs)

    def __eq__(self, other) -> bool:
        # Equality after cancelling common (1 - t) factors.
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return self._reduced_key() == other._reduced_key()

    def __hash__(self) -> int:
        return hash(self._reduced_key())

    def __repr__(self) -> str:
        return f"HilbertSeries(d={self.ambient_dim}, h={list(self.numerator.coeffs)})"


@dataclass(frozen=True)
class CoefficientTable:
    """Hilbert coefficients e_0..e_D of a module, D the last nonzero index."""

    dim: Dim
    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        cs = tuple(int(c) for c in self.coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    def e(self, i: int) -> int:
        """e_i, with indices past the stored table reading as zero."""
        if i < 0:
            raise ValueError("coefficient index must be a natural")
        if i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)


def series_dimension(S: HilbertSeries) -> Dim:
    """Pole order of S at t = 1; the sentinel for the zero series."""
    if S.numerator.is_zero:
        return MINUS_INFINITY
    return S.ambient_dim - S.numerator.multiplicity_at_one()


def h_polynomial(S: HilbertSeries) -> IntPolynomial:
    """Numerator of S over (1 - t)^max(dim, 0); exact by construction."""
    s = series_dimension(S)
    if s is MINUS_INFINITY:
        return IntPolynomial.zero()
    drop = S.ambient_dim - max(s, 0)
    return S.numerator.div_one_minus_t(drop)


def hilbert_coefficients(S: HilbertSeries) -> CoefficientTable:
    """Taylor coefficients of the reduced numerator at t = 1."""
    s = series_dimension(S)
    if s is MINUS_INFINITY:
        return CoefficientTable(MINUS_INFINITY, ())
    return CoefficientTable(s, h_polynomial(S).taylor_at_one())


def relative_coefficient(S: HilbertSeries, i: int) -> int:
    """i-th Taylor coefficient of the raw numerator at t = 1.

    Unlike hilbert_coefficients this depends on the ambient dimension,
    not only on the reduced series.
    """
    if i < 0:
        raise ValueError("coefficient index must be a natural")
    h = S.numerator
    return sum(binomial(j, i) * h.coeffs[j] for j in range(i, len(h.coeffs)))


def shift(S: HilbertSeries, r: int) -> HilbertSeries:
    """Series of the same module with degrees shifted up by r."""
    if r < 0:
        raise ValueError("shift must be a natural")
    return HilbertSeries(S.ambient_dim, S.numerator.times_t_power(r))


def combine(terms: Sequence[tuple[int, HilbertSeries]]) -> HilbertSeries:
    """Signed sum of series sharing one ambient dimension."""
    if not terms:
        raise ValueError("combine requires at least one term")
    ambient = terms[0][1].ambient_dim
    total = IntPolynomial.zero()
    for sign, S in terms:
        if sign not in (1, -1):
            raise ValueError(f"signs must be +1 or -1, got {sign!r}")
        if S.ambient_dim != ambient:
            raise MixedAmbient(
                f"ambient dimensions differ: {S.ambient_dim} vs {ambient}"
            )
        total = total + sign * S.numerator
    return HilbertSeries(ambient, total)


def expand(S: HilbertSeries, max_degree: int = DEFAULT_TRUNCATION) -> list[int]:
    """Power series coefficients of S in degrees 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be a natural")
    d = S.ambient_dim
    h = S.numerator.coeffs
    out = []
    for n in range(max_degree + 1):
        if d == 0:
            out.append(h[n] if n < len(h) else 0)
        else:
            acc = 0
            for j in range(min(n, len(h) - 1) + 1):
                if h[j]:
                    acc += h[j] * binomial(n - j + d - 1, d - 1)
            out.append(acc)
    return out


def partial_sum_threshold(S: HilbertSeries) -> int:
    """Least n from which the closed partial sum formula is guaranteed."""
    s = series_dimension(S)
    if s is MINUS_INFINITY:
        raise ValueError("partial sums need a nonzero series")
    return h_polynomial(S).degree - max(s, 0)


@dataclass(frozen=True)
class PartialSumCheck:
    equal: bool
    threshold: int
    left: int
    right: int

    def __bool__(self) -> bool:
        return self.equal


def partial_sum_check(S: HilbertSeries, n: int) -> PartialSumCheck:
    """Compare sum of lengths through degree n with the binomial closed form.

    The closed form is guaranteed only for n at or past the reported
    threshold; below it both sides are still evaluated and compared.
    """
    if S.numerator.is_zero:
        raise ValueError("partial sums need a nonzero series")
    if n < 0:
        raise ValueError("degree bound must be a natural")
    s = series_dimension(S)
    table = hilbert_coefficients(S)
    left = sum(expand(S, n))
    right = 0
    if isinstance(s, int):
        for i in range(0, max(s, -1) + 1):
            right += (-1) ** i * table.e(i) * binomial(n + s - i, s - i)
    return PartialSumCheck(
        equal=(left == right),
        threshold=partial_sum_threshold(S),
        left=left,
        right=right,
    )


def regular_quotient_coeffs(T: CoefficientTable, k: int) -> CoefficientTable:
    """Table of M/fM for f a degree-k regular element, from the table of M."""
    if k < 1:
        raise ValueError("regular element degree must be positive")
    if not T.coeffs:
        raise ValueError("quotient by a regular element needs a nonzero module")
    if T.dim is MINUS_INFINITY:
        raise ValueError("quotient by a regular element needs a nonzero module")
    top = len(T.coeffs) + k - 1
    coeffs = tuple(
        sum(binomial(k, j + 1) * T.e(n - j) for j in range(0, min(n, k - 1) + 1))
        for n in range(top)
    )
    return CoefficientTable(T.dim - 1, coeffs)
