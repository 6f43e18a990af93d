"""Exact arithmetic primitives shared by every computation route.

Rational values are plain :class:`fractions.Fraction` objects (automatically
kept in lowest terms with a positive denominator); this module adds the
``num/den`` serialization used in cache files and tables, the factorial-style
products and coefficient families every closed form consumes, and the
composition/partition enumerators the explicit summation routes run over.

No floating point anywhere: everything works on ``int`` and ``Fraction``.
"""

from __future__ import annotations

import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

__all__ = [
    "format_rational",
    "parse_rational",
    "falling",
    "rising",
    "binom",
    "multinomial",
    "stirling1_unsigned",
    "CompositionSpec",
    "enumerate_compositions",
    "PartitionVector",
    "enumerate_partition_vectors",
    "cauchy_product",
]

_RATIONAL_RE = re.compile(r"\A([+-]?\d+)(?:/([+-]?\d+))?\Z")


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``num/den`` in lowest terms; ``/1`` stays explicit."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``num`` or ``num/den`` with an optional sign; denominator must be nonzero."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def falling(a: int, k: int) -> int:
    """Falling factorial ``a (a-1) ... (a-k+1)``; the empty product is 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = 1
    for i in range(k):
        out *= a - i
    return out


def rising(a: int, k: int) -> int:
    """Rising factorial ``a (a+1) ... (a+k-1)``; the empty product is 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = 1
    for i in range(k):
        out *= a + i
    return out


def binom(a: int, k: int) -> int:
    """Binomial coefficient ``falling(a, k) / k!`` for arbitrary integer ``a``.

    The single falling-factorial definition yields every convention the
    closed forms below rely on: ``binom(n, k) == 0`` for ``0 <= n < k``,
    ``binom(-1, 0) == 1``, and e.g. ``binom(-1, 2) == 1``.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if a >= 0:
        return math.comb(a, k) if k <= a else 0
    # k consecutive integers always contain a multiple of each i <= k,
    # so the division is exact.
    return falling(a, k) // math.factorial(k)


def multinomial(parts: Sequence[int]) -> int:
    """Arrangements of ``sum(parts)`` items into ordered groups of the given sizes."""
    out = 1
    total = 0
    for p in parts:
        if p < 0:
            raise ValueError("parts must be >= 0")
        total += p
        out *= math.comb(total, p)
    return out


_STIRLING_ROWS: list[list[int]] = [[1]]  # row n holds values for k = 0..n
_STIRLING_LOCK = threading.Lock()  # growth must not interleave across threads


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind (n-permutations with k cycles).

    Built from the triangular recurrence ``s(n+1, k) = s(n, k-1) + n s(n, k)``
    with ``s(0, 0) = 1``; the row table is cached across calls.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be >= 0")
    if len(_STIRLING_ROWS) <= n:
        with _STIRLING_LOCK:
            while len(_STIRLING_ROWS) <= n:
                m = len(_STIRLING_ROWS) - 1
                prev = _STIRLING_ROWS[-1]
                row = []
                for j in range(m + 2):
                    val = prev[j - 1] if 1 <= j <= m + 1 else 0
                    if j <= m:
                        val += m * prev[j]
                    row.append(val)
                _STIRLING_ROWS.append(row)
    return _STIRLING_ROWS[n][k] if k <= n else 0


@dataclass(frozen=True)
class CompositionSpec:
    """Ordered decompositions ``total = i_1 + ... + i_parts`` with each part >= min_part."""

    total: int
    parts: int
    min_part: int = 1

    def __post_init__(self) -> None:
        if self.total < 0:
            raise ValueError("total must be >= 0")
        if self.parts < 1:
            raise ValueError("parts must be >= 1")
        if self.min_part not in (0, 1):
            raise ValueError("min_part must be 0 or 1")

    def count(self) -> int:
        """Closed-form number of compositions (stars and bars)."""
        if self.min_part == 1:
            if self.total < self.parts:
                return 0
            return math.comb(self.total - 1, self.parts - 1)
        return math.comb(self.total + self.parts - 1, self.parts - 1)


def enumerate_compositions(spec: CompositionSpec) -> Iterator[tuple[int, ...]]:
    """Yield the compositions of ``spec`` in lexicographic order."""

    def rec(remaining: int, parts_left: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if parts_left == 1:
            if remaining >= spec.min_part:
                yield prefix + (remaining,)
            return
        hi = remaining - spec.min_part * (parts_left - 1)
        for head in range(spec.min_part, hi + 1):
            yield from rec(remaining - head, parts_left - 1, prefix + (head,))

    yield from rec(spec.total, spec.parts, ())


@dataclass(frozen=True)
class PartitionVector:
    """Multiplicity encoding of a partition: ``multiplicities[i-1]`` parts of size i.

    The weighted sum ``sum(i * t_i)`` must equal the vector length, so a
    vector describing m always carries exactly m slots.
    """

    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(t < 0 for t in self.multiplicities):
            raise ValueError("multiplicities must be >= 0")
        if self.weight != len(self.multiplicities):
            raise ValueError("sum(i * t_i) must equal the declared size")

    @property
    def weight(self) -> int:
        return sum(i * t for i, t in enumerate(self.multiplicities, start=1))

    @property
    def part_count(self) -> int:
        """Total number of parts ``t_1 + ... + t_m``."""
        return sum(self.multiplicities)


def enumerate_partition_vectors(m: int) -> Iterator[PartitionVector]:
    """Yield every multiplicity vector of weight m, lexicographically by (t_1, t_2, ...)."""
    if m < 1:
        raise ValueError("m must be >= 1")

    def rec(part: int, remaining: int, acc: list[int]) -> Iterator[PartitionVector]:
        if part > m:
            if remaining == 0:
                yield PartitionVector(tuple(acc))
            return
        for t in range(remaining // part + 1):
            acc.append(t)
            yield from rec(part + 1, remaining - part * t, acc)
            acc.pop()

    yield from rec(1, m, [])


def cauchy_product(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    """Prefix of the Cauchy product of two coefficient sequences.

    Entry e is ``sum(xs[i] * ys[e-i])``; the result is truncated to the
    shorter input, matching truncated power-series multiplication.
    """
    limit = min(len(xs), len(ys))
    out = []
    for e in range(limit):
        acc = Fraction(0)
        for i in range(e + 1):
            acc += xs[i] * ys[e - i]
        out.append(acc)
    return out
