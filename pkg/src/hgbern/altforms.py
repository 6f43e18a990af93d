"""Alternative exact routes to the same hypergeometric Bernoulli numbers.

Each function recomputes values that :mod:`hbnum` derives by recurrence,
through a structurally different identity: explicit composition sums,
binomial-weighted sums, convolution powers, parameter-descent relations,
partition sums, and determinant inversion.  Sweeping these routes against
the recurrence oracle is the package's core consistency check.

The composition-sum routes enumerate their index sets literally and are
exponential in n; they are verification tools, not bulk-table producers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from .exactnum import (
    CompositionSpec,
    binom,
    cauchy_product,
    enumerate_compositions,
    enumerate_partition_vectors,
    multinomial,
    rising,
)
from .hbnum import MemoStore, hb, hb_higher
from .hessenberg import ToeplitzHessenbergSpec, toeplitz_hessenberg_det

__all__ = [
    "RoutePreconditionError",
    "MrTable",
    "mr",
    "mr_table",
    "hb_explicit_comp",
    "hb_explicit_binom",
    "reciprocal_binom_inverse",
    "hb_higher_explicit",
    "hb_higher_convolution",
    "hb_descent_step",
    "hb_descent_nested",
    "hb_trudi",
    "recover_mr_det",
]


class RoutePreconditionError(ValueError):
    """An alternative route was invoked outside its domain (e.g. descent at N = 1)."""


@dataclass(frozen=True)
class MrTable:
    """Convolution weights for one (N, r): ``values[e]`` sums
    (N!)^r / ((N+i_1)! ... (N+i_r)!) over nonnegative r-part compositions of e."""

    N: int
    r: int
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.values or self.values[0] != 1:
            raise ValueError("weight tables start with value 1 at e = 0")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, e: int) -> Fraction:
        return self.values[e]


def mr(N: int, r: int, e: int) -> Fraction:
    """Convolution weight by literal enumeration of its composition sum.

    Every factor (N!)/(N+i)! is evaluated as 1/((N+1)...(N+i)) so the sum
    stays factorial-free.
    """
    if N < 1 or r < 1:
        raise ValueError("N and r must be >= 1")
    if e < 0:
        raise ValueError("e must be >= 0")
    recip = [Fraction(1, rising(N + 1, i)) for i in range(e + 1)]
    total = Fraction(0)
    for comp in enumerate_compositions(CompositionSpec(e, r, 0)):
        term = Fraction(1)
        for i in comp:
            if i:
                term *= recip[i]
        total += term
    return total


def mr_table(N: int, r: int, max_e: int) -> MrTable:
    """The weights of ``mr`` for e = 0..max_e, via iterated Cauchy products."""
    if N < 1 or r < 1:
        raise ValueError("N and r must be >= 1")
    if max_e < 0:
        raise ValueError("max_e must be >= 0")
    base = [Fraction(1, rising(N + 1, j)) for j in range(max_e + 1)]
    row = base
    for _ in range(r - 1):
        row = cauchy_product(row, base)
    return MrTable(N, r, tuple(row))


def hb_explicit_comp(N: int, n: int) -> Fraction:
    """Explicit route: n! sum over positive compositions i_1+...+i_k = n of
    (-1)^k / prod_j ((N+1)...(N+i_j))."""
    if N < 1 or n < 1:
        raise ValueError("N and n must be >= 1")
    recip = [Fraction(1, rising(N + 1, i)) for i in range(n + 1)]
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** k
        for comp in enumerate_compositions(CompositionSpec(n, k, 1)):
            term = Fraction(sign)
            for i in comp:
                term *= recip[i]
            total += term
    return factorial(n) * total


def hb_explicit_binom(N: int, n: int) -> Fraction:
    """Binomial-weighted route: n! sum_k binom(n+1, k+1) (-1)^k S_k, where S_k
    runs over nonnegative k-part compositions of n.

    Each inner sum S_k is the x^n entry of the k-fold Cauchy power of
    1/((N+1)...(N+j)) -- the same sum, grouped -- which keeps this route
    polynomial-time instead of enumerating the far larger weak-composition
    index set.
    """
    if N < 1 or n < 1:
        raise ValueError("N and n must be >= 1")
    base = [Fraction(1, rising(N + 1, j)) for j in range(n + 1)]
    power = base
    total = Fraction(0)
    for k in range(1, n + 1):
        if k > 1:
            power = cauchy_product(power, base)
        total += (-1) ** k * binom(n + 1, k + 1) * power[n]
    return factorial(n) * total


def reciprocal_binom_inverse(N: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Alternating multinomial convolution of the numbers themselves:

        sum_k (-1)^k sum_{i_1+...+i_k = n, i_j >= 1}
            multinomial(i) B_{N,i_1} ... B_{N,i_k}

    which collapses to 1 / binom(N+n, N)."""
    if N < 1 or n < 1:
        raise ValueError("N and n must be >= 1")
    values = [hb(N, i, store) for i in range(n + 1)]
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** k
        for comp in enumerate_compositions(CompositionSpec(n, k, 1)):
            term = Fraction(sign * multinomial(comp))
            for i in comp:
                term *= values[i]
            total += term
    return total


def hb_higher_explicit(N: int, r: int, n: int) -> Fraction:
    """Order-r explicit route: n! sum_k (-1)^k over positive compositions of n
    of products of convolution weights, each weight evaluated by its literal
    composition sum (see ``mr``)."""
    if N < 1 or r < 1 or n < 1:
        raise ValueError("N, r and n must be >= 1")
    weights = [mr(N, r, e) for e in range(n + 1)]
    total = Fraction(0)
    for k in range(1, n + 1):
        sign = (-1) ** k
        for comp in enumerate_compositions(CompositionSpec(n, k, 1)):
            term = Fraction(sign)
            for e in comp:
                term *= weights[e]
            total += term
    return factorial(n) * total


def hb_higher_convolution(N: int, r: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Order-r value as the multinomial convolution of r copies of the base
    sequence: sum over n_1+...+n_r = n of multinomial(n_i) B_{N,n_1}...B_{N,n_r}."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    values = [hb(N, i, store) for i in range(n + 1)]
    if r == 1:
        return values[n]
    total = Fraction(0)
    for comp in enumerate_compositions(CompositionSpec(n, r, 0)):
        term = Fraction(multinomial(comp))
        for i in comp:
            term *= values[i]
        total += term
    return total


def hb_descent_step(N: int, n: int, store: MemoStore | None = None) -> Fraction:
    """One-step descent in the parameter:

        B_{N,n} = N/(N+n) { B_{N-1,n}
                            + sum_{m=1}^{n-1} binom(n, n-m+1) B_{N,m} B_{N-1,n-m+1} }

    consuming parameter-(N-1) values and smaller parameter-N values."""
    if N < 2:
        raise RoutePreconditionError("descent requires N >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    acc = hb(N - 1, n, store)
    for m in range(1, n):
        acc += binom(n, n - m + 1) * hb(N, m, store) * hb(N - 1, n - m + 1, store)
    return Fraction(N, N + n) * acc


def hb_descent_nested(N: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Fully unrolled descent: expresses the value through parameter N-1 only,
    summing over strictly decreasing index chains n = i_0 > i_1 > ... > i_m >= 1."""
    if N < 2:
        raise RoutePreconditionError("descent requires N >= 2")
    if n < 1:
        raise ValueError("n must be >= 1")
    prev = [hb(N - 1, i, store) for i in range(n + 1)]
    total = Fraction(0)
    for m in range(n):
        for chain in combinations(range(1, n), m):
            idx = (n,) + tuple(reversed(chain))
            term = prev[idx[m]]
            for k in range(1, m + 1):
                step = idx[k - 1] - idx[k] + 1
                term *= prev[step] * binom(idx[k - 1], step) * Fraction(N, N + idx[k])
            total += term
    return Fraction(N, N + n) * total


def hb_trudi(N: int, r: int, n: int) -> Fraction:
    """Partition-sum route: n! sum over multiplicity vectors of n of
    multinomial(t) (-1)^{sum t} prod_i weight(i)^{t_i}, with the weights
    evaluated by their literal composition sums."""
    if N < 1 or r < 1 or n < 1:
        raise ValueError("N, r and n must be >= 1")
    weights = [mr(N, r, e) for e in range(n + 1)]
    total = Fraction(0)
    for vec in enumerate_partition_vectors(n):
        term = Fraction(multinomial(vec.multiplicities) * (-1) ** vec.part_count)
        for i, t in enumerate(vec.multiplicities, start=1):
            if t:
                term *= weights[i] ** t
        total += term
    return factorial(n) * total


def recover_mr_det(N: int, r: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Inverse direction of the determinant route: rebuild the convolution
    weight at e = n from the numbers themselves, as the Toeplitz-Hessenberg
    determinant with entries (-1)^k B^{(r)}_{N,k} / k!.

    At r = 1 this recovers 1/((N+1)...(N+n)); at r = N = 1 it is 1/(n+1)!.
    """
    if N < 1 or r < 1 or n < 1:
        raise ValueError("N, r and n must be >= 1")
    entries = tuple(
        (-1) ** k * hb_higher(N, r, k, store) / factorial(k) for k in range(1, n + 1)
    )
    return toeplitz_hessenberg_det(ToeplitzHessenbergSpec(Fraction(1), entries))
