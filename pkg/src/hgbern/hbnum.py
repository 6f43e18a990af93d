"""Hypergeometric Bernoulli numbers from their defining recurrences.

``hb(N, n)`` is n! times the x^n coefficient of the reciprocal of the
confluent hypergeometric function 1F1(1; N+1; x); ``hb_higher(N, r, n)`` is
the analogue for the r-th power of that reciprocal.  Both satisfy linear
recurrences that cost O(n^2) exact rational operations, which makes this
module the reference oracle: every alternative route in :mod:`altforms`,
:mod:`hessenberg` and :mod:`contfrac` is verified against these values.

At N = 1 the numbers reduce to the classical Bernoulli numbers
(convention B_1 = -1/2).
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path

from .exactnum import binom, cauchy_product, format_rational, parse_rational, rising

__all__ = [
    "CacheError",
    "HBKey",
    "Series",
    "MemoStore",
    "default_store",
    "hb",
    "classical",
    "signed_variant",
    "hb_higher",
    "hb_series",
    "recurrence_residual",
]


class CacheError(ValueError):
    """A cache file is malformed or disagrees with fresh recomputation."""


@dataclass(frozen=True, order=True)
class HBKey:
    """Index triple (N, r, n) of a higher-order hypergeometric Bernoulli number."""

    N: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError("N must be >= 1")
        if self.r < 1:
            raise ValueError("r must be >= 1")
        if self.n < 0:
            raise ValueError("n must be >= 0")


@dataclass(frozen=True)
class Series:
    """Truncated power series: coefficients[i] is the x^i coefficient, plus O(x^order)."""

    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self) -> None:
        if len(self.coefficients) != self.order:
            raise ValueError("a series carries exactly `order` coefficients")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)


class MemoStore:
    """Cache of computed values keyed by (N, r, n), optionally file backed.

    File records are whitespace-separated lines ``N r n num/den`` in any
    order; duplicate keys must carry identical values or loading fails.
    Reads are plain dict lookups and need no lock; writes are serialized,
    and since values are immutable Fractions a concurrent reader always
    sees either the old or the new complete entry.
    """

    def __init__(self, path: str | Path | None = None):
        self.path = Path(path) if path is not None else None
        self._values: dict[HBKey, Fraction] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: HBKey) -> bool:
        return key in self._values

    def get(self, key: HBKey) -> Fraction | None:
        return self._values.get(key)

    def put(self, key: HBKey, value: Fraction) -> None:
        with self._lock:
            self._values[key] = value

    def items(self) -> list[tuple[HBKey, Fraction]]:
        return sorted(self._values.items())

    def load(self, audit_samples: int = 3, rng: random.Random | None = None) -> int:
        """Read the backing file, then spot-audit a few random entries.

        Returns the number of records read.  Raises :class:`CacheError` on
        malformed lines, conflicting duplicates, or an audit mismatch.
        """
        if self.path is None:
            raise CacheError("store has no backing file")
        loaded: dict[HBKey, Fraction] = {}
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                fields = line.split()
                if len(fields) != 4:
                    raise CacheError(f"{self.path}:{lineno}: expected 'N r n num/den'")
                try:
                    key = HBKey(int(fields[0]), int(fields[1]), int(fields[2]))
                    value = parse_rational(fields[3])
                except ValueError as exc:
                    raise CacheError(f"{self.path}:{lineno}: {exc}") from exc
                if key in loaded and loaded[key] != value:
                    raise CacheError(
                        f"{self.path}:{lineno}: duplicate key {key.N} {key.r} {key.n} "
                        "with conflicting values"
                    )
                loaded[key] = value
        with self._lock:
            self._values.update(loaded)
        self.audit(samples=audit_samples, rng=rng, keys=list(loaded))
        return len(loaded)

    def save(self) -> None:
        if self.path is None:
            raise CacheError("store has no backing file")
        lines = [f"{k.N} {k.r} {k.n} {format_rational(v)}\n" for k, v in self.items()]
        self.path.write_text("".join(lines), encoding="utf-8")

    def audit(
        self,
        samples: int = 3,
        rng: random.Random | None = None,
        keys: list[HBKey] | None = None,
    ) -> list[HBKey]:
        """Recompute a few randomly chosen entries from scratch; raise on mismatch."""
        pool = list(keys) if keys is not None else list(self._values)
        if not pool:
            return []
        rng = rng if rng is not None else random.Random()
        chosen = rng.sample(pool, min(samples, len(pool)))
        for key in chosen:
            expected = hb_higher(key.N, key.r, key.n, store=MemoStore())
            stored = self._values[key]
            if stored != expected:
                raise CacheError(
                    f"cache audit failed at {key.N} {key.r} {key.n}: stored "
                    f"{format_rational(stored)}, recomputed {format_rational(expected)}"
                )
        return chosen


_DEFAULT_STORE = MemoStore()


def default_store() -> MemoStore:
    """The module-wide in-memory store used when no explicit store is passed."""
    return _DEFAULT_STORE


def _weight_row(N: int, r: int, upto: int) -> list[Fraction]:
    """Recurrence weights: entry e collects (N!)^r / ((N+i_1)! ... (N+i_r)!)
    over nonnegative r-part compositions of e, computed as an r-fold Cauchy
    power of 1/((N+1)...(N+j)) so huge N stays factorial-free."""
    base = [Fraction(1, rising(N + 1, j)) for j in range(upto + 1)]
    row = base
    for _ in range(r - 1):
        row = cauchy_product(row, base)
    return row


def _row(N: int, r: int, n: int, store: MemoStore | None) -> list[Fraction]:
    """Values for indices 0..n of the (N, r) family, consulting and filling `store`."""
    store = store if store is not None else _DEFAULT_STORE
    row: list[Fraction] = []
    weights: list[Fraction] | None = None
    for m in range(n + 1):
        key = HBKey(N, r, m)
        cached = store.get(key)
        if cached is not None:
            row.append(cached)
            continue
        if m == 0:
            value = Fraction(1)
        elif r == 1:
            # sum_{k <= m} binom(N+m, k) B_{N,k} = 0, solved for the top term
            acc = Fraction(0)
            for k in range(m):
                acc += binom(N + m, k) * row[k]
            value = -acc / binom(N + m, m)
        else:
            if weights is None:
                weights = _weight_row(N, r, n)
            acc = Fraction(0)
            for k in range(m):
                acc += row[k] * weights[m - k] / factorial(k)
            value = -factorial(m) * acc
        store.put(key, value)
        row.append(value)
    return row


def hb(N: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Hypergeometric Bernoulli number for parameter N at index n.

    Defined by B_0 = 1 and the recurrence sum_{m<=n} binom(N+n, m) B_m = 0
    for n >= 1.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return _row(N, 1, n, store)[n]


def classical(n: int, store: MemoStore | None = None) -> Fraction:
    """Classical Bernoulli number B_n (generating function x/(e^x - 1), B_1 = -1/2)."""
    return hb(1, n, store)


def signed_variant(n: int, store: MemoStore | None = None) -> Fraction:
    """Bernoulli numbers of x/(1 - e^{-x}); equals (-1)^n times ``classical(n)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (-1) ** n * classical(n, store)


def hb_higher(N: int, r: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Order-r value: n! times the x^n coefficient of the r-th power of the
    base generating function; reduces to ``hb`` at r = 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    if r < 1:
        raise ValueError("r must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    return _row(N, r, n, store)[n]


def hb_series(N: int, r: int, order: int, store: MemoStore | None = None) -> Series:
    """Truncated generating series: coefficient i is the index-i value over i!."""
    if order < 1:
        raise ValueError("order must be >= 1")
    if N < 1 or r < 1:
        raise ValueError("N and r must be >= 1")
    row = _row(N, r, order - 1, store)
    return Series(tuple(v / factorial(i) for i, v in enumerate(row)), order)


def recurrence_residual(N: int, r: int, n: int, store: MemoStore | None = None) -> Fraction:
    """Left side of the defining linear relation at index n; zero by construction.

    For r = 1 this is sum_{m<=n} binom(N+n, m) B_{N,m}.  For r >= 2 the
    analogous composition-weighted sum is returned rescaled by n! (N!)^r,
    which preserves vanishing while keeping huge N factorial-free.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    row = _row(N, r, n, store)
    if r == 1:
        acc = Fraction(0)
        for m in range(n + 1):
            acc += binom(N + n, m) * row[m]
        return acc
    weights = _weight_row(N, r, n)
    acc = Fraction(0)
    for m in range(n + 1):
        acc += row[m] * weights[n - m] / factorial(m)
    return factorial(n) * acc
