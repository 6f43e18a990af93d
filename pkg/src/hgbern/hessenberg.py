"""Exact determinants of Toeplitz-Hessenberg matrices.

A :class:`ToeplitzHessenbergSpec` ``(a0, [a1..am])`` describes the m x m
lower-Hessenberg matrix that is constant along diagonals: a1 on the main
diagonal, a_{k+1} on the k-th subdiagonal and the constant a0 on the
superdiagonal.  Its determinant obeys the first-row expansion

    D_m = sum_{l=1..m} (-a0)^(l-1) a_l D_{m-l},   D_0 = 1,

which keeps evaluation exact and O(m^2).  ``trudi_expand`` recomputes the
same determinant as a partition sum (Trudi's formula; a0 = 1 is Brioschi's
case), and ``inversion_pair_check`` verifies the duality under which a
sequence and its determinant transform swap roles.

``hb_det`` / ``hb_higher_det`` specialize the entries to recover the
hypergeometric Bernoulli numbers by a determinant route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactnum import cauchy_product, enumerate_partition_vectors, multinomial, rising

__all__ = [
    "ToeplitzHessenbergSpec",
    "toeplitz_hessenberg_det",
    "trudi_expand",
    "hb_det",
    "hb_higher_det",
    "InversionVerdict",
    "inversion_pair_check",
]


@dataclass(frozen=True)
class ToeplitzHessenbergSpec:
    """Superdiagonal constant ``a0`` and first-column entries ``a1..am``."""

    a0: Fraction
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "a0", Fraction(self.a0))
        object.__setattr__(self, "entries", tuple(Fraction(a) for a in self.entries))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def matrix(self) -> list[list[Fraction]]:
        """Materialize the dense matrix (row i holds ..., a2, a1, a0, 0, ...)."""
        m = self.dimension
        zero = Fraction(0)
        return [
            [
                self.a0 if j == i + 1 else self.entries[i - j] if j <= i else zero
                for j in range(m)
            ]
            for i in range(m)
        ]


def toeplitz_hessenberg_det(spec: ToeplitzHessenbergSpec) -> Fraction:
    """Determinant via the first-row expansion recursion (empty matrix gives 1)."""
    d = [Fraction(1)]
    for k in range(1, spec.dimension + 1):
        acc = Fraction(0)
        sign = Fraction(1)
        for l in range(1, k + 1):
            acc += sign * spec.entries[l - 1] * d[k - l]
            sign *= -spec.a0
        d.append(acc)
    return d[-1]


def trudi_expand(spec: ToeplitzHessenbergSpec) -> Fraction:
    """The same determinant as a sum over partitions of the dimension:

        sum_{t_1 + 2 t_2 + ... + m t_m = m}
            multinomial(t) (-a0)^(m - sum t) a_1^{t_1} ... a_m^{t_m}.
    """
    m = spec.dimension
    if m < 1:
        raise ValueError("dimension must be >= 1")
    total = Fraction(0)
    for vec in enumerate_partition_vectors(m):
        term = Fraction(multinomial(vec.multiplicities)) * (-spec.a0) ** (m - vec.part_count)
        for i, t in enumerate(vec.multiplicities, start=1):
            if t:
                term *= spec.entries[i - 1] ** t
        total += term
    return total


def _entry_row(N: int, r: int, upto: int) -> list[Fraction]:
    """Toeplitz entries for the order-r determinant: the r-fold Cauchy power
    of 1/((N+1)...(N+j))."""
    base = [Fraction(1, rising(N + 1, j)) for j in range(upto + 1)]
    row = base
    for _ in range(r - 1):
        row = cauchy_product(row, base)
    return row


def hb_det(N: int, n: int) -> Fraction:
    """Hypergeometric Bernoulli number as (-1)^n n! times the determinant with
    entries a_l = 1/((N+1)...(N+l)) and unit superdiagonal."""
    if N < 1 or n < 1:
        raise ValueError("N and n must be >= 1")
    entries = tuple(Fraction(1, rising(N + 1, l)) for l in range(1, n + 1))
    det = toeplitz_hessenberg_det(ToeplitzHessenbergSpec(Fraction(1), entries))
    return (-1) ** n * factorial(n) * det


def hb_higher_det(N: int, r: int, n: int) -> Fraction:
    """Order-r determinant route; the entries become the r-fold convolution weights."""
    if N < 1 or r < 1 or n < 1:
        raise ValueError("N, r and n must be >= 1")
    row = _entry_row(N, r, n)
    det = toeplitz_hessenberg_det(ToeplitzHessenbergSpec(Fraction(1), tuple(row[1:])))
    return (-1) ** n * factorial(n) * det


@dataclass(frozen=True)
class InversionVerdict:
    """Outcome of the determinant-inversion cross-check between two sequences."""

    convolution_ok: bool
    alpha_from_r_ok: bool
    r_from_alpha_ok: bool
    product_ok: bool

    @property
    def failures(self) -> tuple[str, ...]:
        names = (
            ("convolution", self.convolution_ok),
            ("alpha-from-R determinant", self.alpha_from_r_ok),
            ("R-from-alpha determinant", self.r_from_alpha_ok),
            ("matrix product", self.product_ok),
        )
        return tuple(name for name, ok in names if not ok)

    def __bool__(self) -> bool:
        return not self.failures


def inversion_pair_check(
    alphas: Sequence[Fraction], rs: Sequence[Fraction]
) -> InversionVerdict:
    """Verify that sequences (alpha_n) and (R(n)) determine each other.

    With alpha_0 = R(0) = 1 implied, four views of the same duality are
    checked for every prefix: the alternating convolution
    ``sum_{k<=n} (-1)^(n-k) alpha_k R(n-k) = 0`` (the cheapest and therefore
    primary relation), both Toeplitz-Hessenberg determinant directions, and
    the product of the two banded unit-lower-triangular matrices being the
    identity.  The verdict records which directions fail.

    The alternating relation dictates the sign convention of the matrix
    product: the R-side factor carries checkerboard signs (-1)^(i-j) R(i-j),
    since sum_l alpha_{d-l} (-1)^l R(l) = delta_{d,0} is what the relation
    rearranges to.  A plain product of both unsigned bands is not the
    identity.
    """
    if len(alphas) != len(rs):
        raise ValueError("sequences must have equal length")
    n = len(alphas)
    a = [Fraction(1)] + [Fraction(x) for x in alphas]
    rr = [Fraction(1)] + [Fraction(x) for x in rs]

    conv_ok = True
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(m + 1):
            acc += (-1) ** (m - k) * a[k] * rr[m - k]
        if acc != 0:
            conv_ok = False
            break

    alpha_ok = all(
        toeplitz_hessenberg_det(ToeplitzHessenbergSpec(Fraction(1), tuple(rr[1 : m + 1]))) == a[m]
        for m in range(1, n + 1)
    )
    r_ok = all(
        toeplitz_hessenberg_det(ToeplitzHessenbergSpec(Fraction(1), tuple(a[1 : m + 1]))) == rr[m]
        for m in range(1, n + 1)
    )

    product_ok = True
    for i in range(n + 1):
        for j in range(n + 1):
            acc = Fraction(0)
            for k in range(j, i + 1):
                acc += a[i - k] * (-1) ** (k - j) * rr[k - j]
            if acc != (1 if i == j else 0):
                product_ok = False
                break
        if not product_ok:
            break

    return InversionVerdict(conv_ok, alpha_ok, r_ok, product_ok)
