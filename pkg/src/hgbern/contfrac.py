"""Convergents of the continued fraction of the generating function.

The reciprocal 1F1 generating function expands as a continued fraction whose
partial quotients are a_n(x) = N+n with b_{2m}(x) = m x and
b_{2m+1}(x) = -(N+m) x.  This module computes the convergent numerators and
denominators P_n/Q_n by that recurrence and by closed-form coefficient
formulas, checks the series-approximation property
Q_n S - P_n = O(x^{n+1}), and evaluates the binomial identity families that
property yields for the coefficients.

Conventions inherited by all closed forms: falling-factorial binomials
(``binom(-1, 0) = 1`` and ``binom(n, k) = 0`` for ``0 <= n < k``), empty
products equal to 1, and empty sums equal to 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable

from .exactnum import binom, falling, rising
from .hbnum import MemoStore, Series, hb

__all__ = [
    "Poly",
    "ConvergentPair",
    "convergent_rec",
    "convergent_closed",
    "approximation_defect",
    "identity_even",
    "identity_odd",
    "classical_identity",
    "CLASSICAL_VARIANTS",
]


def _fmt_coeff(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Poly:
    """Immutable dense polynomial over Fraction, coefficients in ascending order.

    Trailing zero coefficients are stripped; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable[Fraction | int] = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self._coeffs)

    def __sub__(self, other: "Poly") -> "Poly":
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "Poly | Fraction | int") -> "Poly":
        if isinstance(other, Poly):
            if not self._coeffs or not other._coeffs:
                return Poly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Poly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for power, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = _fmt_coeff(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{_fmt_coeff(mag)}{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class ConvergentPair:
    """Numerator/denominator polynomials of the index-n convergent for parameter N.

    Degrees follow the pattern deg P_{2m-1} = deg P_{2m} = deg Q_{2m} = m and
    deg Q_{2m-1} = m-1, and Q never vanishes at 0.  One degeneration: at
    N = 1 with m even the leading coefficient of Q_{2m-1} carries a factor
    N-1 and the degree drops to m-2 (the vanishing odd classical Bernoulli
    numbers at work); the approximation property is unaffected.
    """

    n: int
    P: Poly
    Q: Poly
    N: int

    def __post_init__(self) -> None:
        if self.Q[0] == 0:
            raise ValueError("convergent denominator must not vanish at x = 0")


def _validate(N: int, n: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")


def convergent_rec(N: int, n: int) -> ConvergentPair:
    """Convergent by the three-term recurrence with P_0 = Q_0 = 1,
    P_1 = (N+1) - x, Q_1 = N+1."""
    _validate(N, n)
    p_prev, p = Poly([1]), Poly([N + 1, -1])
    q_prev, q = Poly([1]), Poly([N + 1])
    if n == 0:
        return ConvergentPair(0, p_prev, q_prev, N)
    for k in range(2, n + 1):
        a = Poly([N + k])
        m = k // 2
        b = Poly([0, m]) if k % 2 == 0 else Poly([0, -(N + m)])
        p_prev, p = p, a * p + b * p_prev
        q_prev, q = q, a * q + b * q_prev
    return ConvergentPair(n, p, q, N)


def _prod(N: int, lo: int, hi: int) -> int:
    """prod_{l=lo..hi} (N + l); empty when hi < lo."""
    return rising(N + lo, hi - lo + 1) if hi >= lo else 1


def convergent_closed(N: int, n: int) -> ConvergentPair:
    """Convergent from the closed coefficient formulas; identical to
    ``convergent_rec`` for every index."""
    _validate(N, n)
    if n == 0:
        return ConvergentPair(0, Poly([1]), Poly([1]), N)
    even = n % 2 == 0
    m = n // 2 if even else (n + 1) // 2

    def top(j: int) -> int:
        return 2 * m - j if even else 2 * m - j - 1

    p_coeffs = [(-1) ** j * binom(m, j) * _prod(N, 1, top(j)) for j in range(m + 1)]

    q_coeffs = []
    for j in range((m if even else m - 1) + 1):
        acc = 0
        for k in range(j + 1):
            acc += (
                (-1) ** (j - k)
                * falling(top(j), k)
                * binom(m - k - 1, j - k)
                * _prod(N, k + 1, top(j))
            )
        q_coeffs.append(acc)
    return ConvergentPair(n, Poly(p_coeffs), Poly(q_coeffs), N)


def approximation_defect(pair: ConvergentPair, store: MemoStore | None = None) -> Series:
    """The series Q_n S - P_n truncated at x^{n+1}, where S is the generating
    series of the parameter-N numbers; identically zero because the convergent
    matches S through order n."""
    order = pair.n + 1
    series = [hb(pair.N, k, store) / factorial(k) for k in range(order)]
    coeffs = []
    for h in range(order):
        acc = -pair.P[h]
        for j in range(min(h, pair.Q.degree) + 1):
            acc += pair.Q[j] * series[h - j]
        coeffs.append(acc)
    return Series(tuple(coeffs), order)


def identity_even(
    N: int, n: int, h: int, store: MemoStore | None = None
) -> tuple[Fraction, Fraction]:
    """Both sides of the even-convergent coefficient identity.

    The left side is the x^h coefficient sum coming from Q_{2n} S; the right
    side is (-1)^h binom(n, h) prod_{l=1..2n-h}(N+l) for h <= n and 0 above.
    The two sides agree for 0 <= h <= 2n (the approximation order of the
    index-2n convergent); larger h is computable but not an identity.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if h < 0:
        raise ValueError("h must be >= 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    lhs = Fraction(0)
    for j in range(min(h, n) + 1):
        bpart = hb(N, h - j, store) / factorial(h - j)
        weight = 0
        for k in range(j + 1):
            weight += (
                (-1) ** (j - k)
                * falling(2 * n - j, k)
                * binom(n - k - 1, j - k)
                * _prod(N, k + 1, 2 * n - j)
            )
        lhs += weight * bpart
    rhs = Fraction((-1) ** h * binom(n, h) * _prod(N, 1, 2 * n - h)) if h <= n else Fraction(0)
    return lhs, rhs


def identity_odd(
    N: int, n: int, h: int, store: MemoStore | None = None
) -> tuple[Fraction, Fraction]:
    """Odd-convergent companion of :func:`identity_even`, with weights
    falling(2n-j-1, k) and products up to N+2n-j-1.

    Agreement is guaranteed for 0 <= h <= 2n-1 only: the index-(2n-1)
    convergent approximates one order less, and at h = 2n the sides
    genuinely differ in general (e.g. N=3, n=2, h=4 gives -1/105 vs 0).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if h < 0:
        raise ValueError("h must be >= 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    lhs = Fraction(0)
    for j in range(min(h, n) + 1):
        bpart = hb(N, h - j, store) / factorial(h - j)
        weight = 0
        for k in range(j + 1):
            weight += (
                (-1) ** (j - k)
                * falling(2 * n - j - 1, k)
                * binom(n - k - 1, j - k)
                * _prod(N, k + 1, 2 * n - j - 1)
            )
        lhs += weight * bpart
    rhs = (
        Fraction((-1) ** h * binom(n, h) * _prod(N, 1, 2 * n - h - 1)) if h <= n else Fraction(0)
    )
    return lhs, rhs


CLASSICAL_VARIANTS = ("even", "odd", "even-reduced", "odd-reduced")


def classical_identity(
    variant: str, n: int, h: int, store: MemoStore | None = None
) -> tuple[Fraction, Fraction]:
    """Classical (N = 1) specializations of the identity families.

    ``even`` / ``odd`` divide the N = 1 identities by (2n-h+1)! resp.
    (2n-h)!, turning the products into factorial ratios; they hold for
    h <= 2n resp. h <= 2n-1.  ``even-reduced`` / ``odd-reduced`` replace the
    inner alternating sums by their closed forms split on the parity of j;
    these hold on the wider ranges 1 <= h <= 2n+1 resp. 1 <= h <= 2n (the
    extension leans on the falling-factorial binomial conventions).
    """
    if variant not in CLASSICAL_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {CLASSICAL_VARIANTS}")
    if n < 1:
        raise ValueError("n must be >= 1")

    B = lambda i: hb(1, i, store)  # noqa: E731 - local shorthand

    if variant == "even" or variant == "odd":
        shift = 1 if variant == "even" else 0
        # factorial (2n - h + shift)! must exist
        if h < 0 or h > 2 * n + shift:
            raise ValueError(f"variant {variant!r} needs 0 <= h <= {2 * n + shift}")
        lhs = Fraction(0)
        for j in range(min(h, n) + 1):
            bpart = B(h - j) / factorial(h - j)
            for k in range(j + 1):
                lhs += (
                    Fraction(
                        (-1) ** (j - k)
                        * falling(2 * n - j - 1 + shift, k)
                        * binom(n - k - 1, j - k)
                        * factorial(2 * n - j + shift),
                        factorial(k + 1) * factorial(2 * n - h + shift),
                    )
                    * bpart
                )
        rhs = Fraction((-1) ** h * binom(n, h)) if h <= n else Fraction(0)
        return lhs, rhs

    if variant == "even-reduced":
        if h < 1 or h > 2 * n + 1:
            raise ValueError("variant 'even-reduced' needs 1 <= h <= 2n+1")
        lhs = Fraction(0)
        for j in range(h // 2 + 1):
            lhs += (
                Fraction(factorial(2 * n - 2 * j + 1), 2 * j + 1)
                * binom(n, 2 * j)
                * B(h - 2 * j)
                / factorial(h - 2 * j)
            )
        lhs += Fraction(factorial(2 * n), 2) * B(h - 1) / factorial(h - 1)
        for j in range(1, (h - 1) // 2 + 1):
            lhs += (
                Fraction(factorial(2 * n - 2 * j), 4 * (2 * j + 1))
                * Fraction(1, binom(2 * j - 1, j))
                * binom(n - j - 1, j)
                * binom(n, j)
                * B(h - 2 * j - 1)
                / factorial(h - 2 * j - 1)
            )
        rhs = (
            Fraction((-1) ** h * binom(n, h) * factorial(2 * n - h + 1))
            if h <= n
            else Fraction(0)
        )
        return lhs, rhs

    # odd-reduced
    if h < 1 or h > 2 * n:
        raise ValueError("variant 'odd-reduced' needs 1 <= h <= 2n")
    lhs = Fraction(0)
    for j in range(h // 2 + 1):
        lhs += (
            Fraction(factorial(j) ** 2 * factorial(2 * n - 2 * j), factorial(2 * j + 1))
            * binom(n, j)
            * binom(n - j - 1, j)
            * B(h - 2 * j)
            / factorial(h - 2 * j)
        )
    rhs = Fraction((-1) ** h * binom(n, h) * factorial(2 * n - h)) if h <= n else Fraction(0)
    return lhs, rhs
