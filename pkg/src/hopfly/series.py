"""Truncated formal power series over RingElem and Schur-function extraction.

A series is a finite coefficient list e_0, ..., e_D; arithmetic never reads
past the truncation degree, and products truncate to the smaller degree of
the factors.  Schur functions are read off either from series coefficients
by the Jacobi-Trudy determinant, or from explicit variable values by the
bialternant quotient; the two routes are independent and cross-check each
other in the test suite.
"""

from __future__ import annotations

import dataclasses
from typing import Callable, Sequence

from .ring import LaurentPoly2, RingElem, det_fractions
from .partitions import Partition


@dataclasses.dataclass(frozen=True, eq=False)
class TruncatedSeries:
    """Coefficients e_0..e_D of a formal power series, exact and immutable."""

    coeffs: tuple[RingElem, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def one(cls, degree: int, like: RingElem | None = None) -> "TruncatedSeries":
        base = LaurentPoly2 if like is None else type(like.num)
        one = RingElem(base.one())
        zero = RingElem(base.zero())
        return cls((one,) + (zero,) * degree)

    @classmethod
    def linear_factor(cls, u: RingElem, sign: int, degree: int) -> "TruncatedSeries":
        """(1 + u*t)**sign to the requested degree, sign in {+1, -1}."""
        base = type(u.num)
        one = RingElem(base.one())
        if sign == 1:
            zero = RingElem(base.zero())
            coeffs = [one, u] + [zero] * (degree - 1)
            return cls(tuple(coeffs[: degree + 1]))
        if sign == -1:
            coeffs = [one]
            acc = one
            for _ in range(degree):
                acc = -(acc * u)
                coeffs.append(acc.reduced())
            return cls(tuple(coeffs))
        raise ValueError(f"sign must be +1 or -1, got {sign}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> RingElem:
        if k < 0:
            return RingElem(type(self.coeffs[0].num).zero())
        if k > self.degree:
            raise ValueError(f"coefficient {k} beyond truncation degree {self.degree}")
        return self.coeffs[k]

    def truncate(self, degree: int) -> "TruncatedSeries":
        if degree > self.degree:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: degree + 1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.degree == other.degree and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def agrees_with(self, other: "TruncatedSeries", degree: int | None = None) -> bool:
        d = min(self.degree, other.degree) if degree is None else degree
        return all(self.coeff(k) == other.coeff(k) for k in range(d + 1))

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product, truncated to the smaller degree."""
        d = min(self.degree, other.degree)
        out = []
        for k in range(d + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc.reduced())
        return TruncatedSeries(tuple(out))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul(other)
        return NotImplemented

    def invert(self) -> "TruncatedSeries":
        """The series B with self * B = 1 to the truncation degree.

        Requires constant coefficient 1, so the recursion stays integral.
        """
        if not (self.coeffs[0] == 1):
            raise ValueError("series inversion needs constant coefficient 1")
        base = type(self.coeffs[0].num)
        out = [RingElem(base.one())]
        for k in range(1, self.degree + 1):
            acc = self.coeffs[1] * out[k - 1]
            for i in range(2, k + 1):
                acc = acc + self.coeffs[i] * out[k - i]
            out.append((-acc).reduced())
        return TruncatedSeries(tuple(out))

    def scale_t(self, alpha: RingElem) -> "TruncatedSeries":
        """The series of t -> alpha*t: coefficient k picks up alpha**k."""
        out = [self.coeffs[0]]
        power = RingElem(type(alpha.num).one())
        for k in range(1, self.degree + 1):
            power = (power * alpha).reduced()
            out.append((self.coeffs[k] * power).reduced())
        return TruncatedSeries(tuple(out))

    def negate_t(self) -> "TruncatedSeries":
        """The series of t -> -t."""
        out = [c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)]
        return TruncatedSeries(tuple(out))

    def map_coeffs(self, f: Callable[[RingElem], RingElem]) -> "TruncatedSeries":
        return TruncatedSeries(tuple(f(c) for c in self.coeffs))

    def __str__(self) -> str:
        pieces = [f"({self.coeffs[0]})"]
        for k in range(1, self.degree + 1):
            t = "t" if k == 1 else f"t^{k}"
            pieces.append(f"({self.coeffs[k]}) {t}")
        return " + ".join(pieces)


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.mul(b)


def series_invert(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert()


def linear_factor(u: RingElem, sign: int, degree: int) -> TruncatedSeries:
    return TruncatedSeries.linear_factor(u, sign, degree)


def schur_of_series(mu: Partition, series: TruncatedSeries) -> RingElem:
    """Jacobi-Trudy determinant det(e_{mu'_i + j - i}) of the coefficients.

    The matrix has order mu_1; coefficients with negative index are zero and
    an index beyond the truncation degree raises rather than truncating.
    """
    if mu.size == 0:
        return RingElem(type(series.coeffs[0].num).one())
    conj = mu.conjugate()
    r = mu.parts[0]
    needed = conj.parts[0] + r - 1
    if needed > series.degree:
        raise ValueError(
            f"Schur extraction for {mu} needs degree {needed}, series has {series.degree}"
        )
    matrix = [
        [series.coeff(conj.part(i) + j - i) for j in range(1, r + 1)]
        for i in range(1, r + 1)
    ]
    return det_fractions(matrix).reduced()


def schur_classical(lam: Partition, xs: Sequence[RingElem]) -> RingElem:
    """Bialternant quotient det(x_i**(lam_j + N - j)) / det(x_i**(N - j)).

    The denominator is the Vandermonde alternant, so the x values must be
    pairwise distinct; the quotient always lies in the ring and the division
    is performed exactly.
    """
    n = len(xs)
    if n < lam.length:
        raise ValueError(f"need at least {lam.length} variables for {lam}")
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] == xs[j]:
                raise ValueError("repeated variable values make the alternant vanish")
    exps = lam.index_set(n)
    numerator = det_fractions([[x ** e for e in exps] for x in xs])
    vandermonde = det_fractions([[x ** e for e in Partition(()).index_set(n)] for x in xs])
    cross = numerator.num * vandermonde.den_poly()
    quo = cross.exact_div(vandermonde.num)
    if quo is None:
        raise ValueError("alternant quotient is not exact over the given values")
    return RingElem(quo, numerator.den).reduced()
