"""p-adic valuations and Kummer-style congruence checks.

Congruence of rationals mod p^k is taken as ord_p(lhs - rhs) >= k, which
agrees with the usual notion on p-integral values and keeps every check
total.  ``math.inf`` serves as the +infinity marker for ord_p(0) and for the
"exact equality" modulus that appears at N = 1; it is never used in
arithmetic on values.

When a statement's hypotheses are violated the checks raise
:class:`HypothesisViolation` with the failed hypothesis named, rather than
reporting a meaningless verdict.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, inf

from .exactnum import rising
from .hbnum import MemoStore, classical, hb

__all__ = [
    "HypothesisViolation",
    "PadicVal",
    "is_prime",
    "ordp",
    "residue",
    "CongruenceVerdict",
    "congruent",
    "kummer_classical",
    "ord_threshold",
    "hb_factorial_congruence",
    "hb_kummer_corollary",
    "hb_kummer_pair",
]

# int, or math.inf for ord_p(0)
PadicVal = int | float


class HypothesisViolation(ValueError):
    """A congruence statement's hypothesis is not met; the message names it."""


_SMALL_PRIME_LIMIT = 10**6
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _miller_rabin(n: int) -> bool:
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Trial division up to 10^6, then Miller-Rabin for larger candidates.

    Deterministic for n < 10^12 and for all n below the known bound of the
    fixed witness set (~3.3e24); a strong probabilistic test beyond.
    """
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    limit = min(math.isqrt(n), _SMALL_PRIME_LIMIT)
    f = 5
    while f <= limit:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    if math.isqrt(n) <= _SMALL_PRIME_LIMIT:
        return True
    return _miller_rabin(n)


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def _ord_int(m: int, p: int) -> PadicVal:
    if m == 0:
        return inf
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return v


def _ord_factorial(j: int, p: int) -> int:
    """ord_p(j!) by Legendre's formula."""
    total = 0
    q = p
    while q <= j:
        total += j // q
        q *= p
    return total


def ordp(x: Fraction | int, p: int) -> PadicVal:
    """p-adic valuation of an exact rational; ord_p(0) = inf, negatives allowed."""
    _require_prime(p)
    x = Fraction(x)
    if x == 0:
        return inf
    return _ord_int(x.numerator, p) - _ord_int(x.denominator, p)


def residue(x: Fraction | int, p: int, k: int) -> int | None:
    """Canonical residue of x in [0, p^k), or None when p divides the denominator."""
    x = Fraction(x)
    if x.denominator % p == 0:
        return None
    mod = p**k
    return x.numerator * pow(x.denominator, -1, mod) % mod


@dataclass(frozen=True)
class CongruenceVerdict:
    """Outcome of a mod-p^k comparison of two exact rationals.

    ``modulus_exponent`` may be inf, in which case the check demanded exact
    equality and the residues are omitted.  Residues are also omitted when a
    side has p in its denominator.
    """

    holds: bool
    p: int
    modulus_exponent: PadicVal
    difference_ord: PadicVal
    lhs_residue: int | None
    rhs_residue: int | None

    def __bool__(self) -> bool:
        return self.holds


def congruent(a: Fraction | int, b: Fraction | int, p: int, k: PadicVal) -> CongruenceVerdict:
    """Check a ≡ b (mod p^k), i.e. ord_p(a - b) >= k.

    ``k = inf`` demands exact equality; ``k = 0`` merely checks that the
    difference is p-integral.
    """
    _require_prime(p)
    if k != inf and (not isinstance(k, int) or k < 0):
        raise ValueError("k must be a nonnegative integer or inf")
    a, b = Fraction(a), Fraction(b)
    diff_ord = ordp(a - b, p)
    if k == inf or k == 0:
        lhs_res = rhs_res = None
    else:
        lhs_res = residue(a, p, k)
        rhs_res = residue(b, p, k)
    return CongruenceVerdict(diff_ord >= k, p, k, diff_ord, lhs_res, rhs_res)


def kummer_classical(
    p: int, m: int, n: int, nu: int, store: MemoStore | None = None
) -> CongruenceVerdict:
    """Kummer's congruence for the classical Bernoulli numbers:

        (1 - p^{m-1}) B_m / m  ≡  (1 - p^{n-1}) B_n / n   (mod p^{nu+1})

    for positive even m, n with m ≡ n (mod (p-1) p^nu) and m, n not
    divisible by p-1."""
    _require_prime(p)
    if nu < 0:
        raise ValueError("nu must be >= 0")
    for name, v in (("m", m), ("n", n)):
        if v < 1 or v % 2 != 0:
            raise HypothesisViolation(f"hypothesis {name} positive even violated: {name} = {v}")
        if v % (p - 1) == 0:
            raise HypothesisViolation(
                f"hypothesis {name} ≢ 0 (mod p-1) violated: {v} ≡ 0 (mod {p - 1})"
            )
    step = (p - 1) * p**nu
    if (m - n) % step != 0:
        raise HypothesisViolation(
            f"hypothesis m ≡ n (mod (p-1)p^nu) violated: {m} ≢ {n} (mod {step})"
        )
    lhs = (1 - p ** (m - 1)) * classical(m, store) / m
    rhs = (1 - p ** (n - 1)) * classical(n, store) / n
    return congruent(lhs, rhs, p, nu + 1)


def ord_threshold(p: int, n: int, nu: int, m: int | None = None) -> int:
    """Required lower bound on ord_p(N-1) for the transfer congruences.

    Single-index form (m omitted):
        nu + 1 + ord_p(prod_{k=0..n} (1+k)!) + ord_p(n).
    Pair form (m given, m >= n):
        nu + 1 + ord_p(prod_{k=0..m} (1+k)!) + max(ord_p(m), ord_p(n)).
    """
    _require_prime(p)
    if n < 1:
        raise ValueError("n must be >= 1")
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if m is not None and m < n:
        raise ValueError("m must be >= n")
    top = n if m is None else m
    fact_ord = sum(_ord_factorial(k + 1, p) for k in range(top + 1))
    if m is None:
        tail = _ord_int(n, p)
    else:
        tail = max(_ord_int(m, p), _ord_int(n, p))
    return nu + 1 + fact_ord + tail


def hb_factorial_congruence(
    p: int, N: int, n: int, store: MemoStore | None = None
) -> CongruenceVerdict:
    """Factorial-ladder comparison with the classical numbers:

        prod_{k=0..n} (N+k)!/N! * B_{N,n}  ≡  prod_{k=0..n} (1+k)! * B_n
                                              (mod p^{ord_p(N-1)}).

    Each (N+k)!/N! is evaluated as (N+1)...(N+k) so huge N stays cheap.
    N = 1 turns the modulus exponent into inf and the check into exact
    equality."""
    _require_prime(p)
    if N < 1:
        raise ValueError("N must be >= 1")
    if n < 0:
        raise ValueError("n must be >= 0")
    t: PadicVal = inf if N == 1 else _ord_int(N - 1, p)
    lhs = hb(N, n, store)
    for k in range(n + 1):
        lhs *= rising(N + 1, k)
    rhs = classical(n, store)
    for k in range(n + 1):
        rhs *= factorial(k + 1)
    return congruent(lhs, rhs, p, t)


def hb_kummer_corollary(
    p: int, N: int, n: int, nu: int, store: MemoStore | None = None
) -> CongruenceVerdict:
    """Direct transfer B_{N,n}/n ≡ B_n/n (mod p^{nu+1}), valid once N is
    p-adically close enough to 1 (see :func:`ord_threshold`)."""
    _require_prime(p)
    if N < 1 or n < 1:
        raise ValueError("N and n must be >= 1")
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if n % (p - 1) == 0:
        raise HypothesisViolation(
            f"hypothesis n ≢ 0 (mod p-1) violated: {n} ≡ 0 (mod {p - 1})"
        )
    need = ord_threshold(p, n, nu)
    have: PadicVal = inf if N == 1 else _ord_int(N - 1, p)
    if have < need:
        raise HypothesisViolation(
            f"hypothesis ord_{p}(N-1) >= {need} violated: ord_{p}(N-1) = {have}"
        )
    return congruent(hb(N, n, store) / n, classical(n, store) / n, p, nu + 1)


def hb_kummer_pair(
    p: int, N: int, m: int, n: int, nu: int, store: MemoStore | None = None
) -> CongruenceVerdict:
    """Kummer pairing within the parameter-N family:

        (1 - p^{m-1}) B_{N,m} / m  ≡  (1 - p^{n-1}) B_{N,n} / n  (mod p^{nu+1})

    under the classical hypotheses on (m, n, nu) plus the valuation threshold
    on N-1 (pair form of :func:`ord_threshold`)."""
    _require_prime(p)
    if N < 1:
        raise ValueError("N must be >= 1")
    if nu < 0:
        raise ValueError("nu must be >= 0")
    if m < n:
        raise HypothesisViolation(f"hypothesis m >= n violated: m = {m}, n = {n}")
    for name, v in (("m", m), ("n", n)):
        if v < 1 or v % 2 != 0:
            raise HypothesisViolation(f"hypothesis {name} positive even violated: {name} = {v}")
        if v % (p - 1) == 0:
            raise HypothesisViolation(
                f"hypothesis {name} ≢ 0 (mod p-1) violated: {v} ≡ 0 (mod {p - 1})"
            )
    step = (p - 1) * p**nu
    if (m - n) % step != 0:
        raise HypothesisViolation(
            f"hypothesis m ≡ n (mod (p-1)p^nu) violated: {m} ≢ {n} (mod {step})"
        )
    need = ord_threshold(p, n, nu, m=m)
    have: PadicVal = inf if N == 1 else _ord_int(N - 1, p)
    if have < need:
        raise HypothesisViolation(
            f"hypothesis ord_{p}(N-1) >= {need} violated: ord_{p}(N-1) = {have}"
        )
    lhs = (1 - p ** (m - 1)) * hb(N, m, store) / m
    rhs = (1 - p ** (n - 1)) * hb(N, n, store) / n
    return congruent(lhs, rhs, p, nu + 1)
