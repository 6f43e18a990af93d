"""Continued-fraction convergents of the generating function.

Builds P_n/Q_n by the three-term recurrence and by the closed coefficient
formulas, shows the approximation property (the defect series vanishes to
order n), and samples the binomial identity families that follow from it.
"""

from hgbern import (
    approximation_defect,
    classical_identity,
    convergent_closed,
    convergent_rec,
    identity_even,
    identity_odd,
)

N = 2
print(f"convergents for parameter N = {N}:\n")
for n in range(0, 7):
    rec = convergent_rec(N, n)
    closed = convergent_closed(N, n)
    assert rec.P == closed.P and rec.Q == closed.Q
    defect = approximation_defect(rec)
    assert defect.is_zero()
    print(f"  n = {n}:  P = {rec.P}")
    print(f"         Q = {rec.Q}   (defect vanishes mod x^{n + 1})")

print("\nidentity families extracted from the approximation property:")
for h in range(0, 5):
    lhs, rhs = identity_even(N, 2, h)
    print(f"  even n=2, h={h}: lhs = {lhs} = rhs = {rhs}")
    assert lhs == rhs

# the odd family is guaranteed one order less; h = 2n genuinely breaks it
lhs, rhs = identity_odd(3, 2, 4)
print(f"\n  odd family at its edge (N=3, n=2, h=4): lhs = {lhs}, rhs = {rhs} "
      "(equality is only promised for h <= 2n-1)")
assert lhs != rhs

print("\nclassical specializations, including the reduced single-sum forms:")
for variant in ("even", "odd", "even-reduced", "odd-reduced"):
    n = 3
    top = {"even": 2 * n, "odd": 2 * n - 1, "even-reduced": 2 * n + 1, "odd-reduced": 2 * n}[variant]
    lo = 0 if variant in ("even", "odd") else 1
    ok = all(
        classical_identity(variant, n, h)[0] == classical_identity(variant, n, h)[1]
        for h in range(lo, top + 1)
    )
    print(f"  {variant:13s} holds for {lo} <= h <= {top}: {ok}")
    assert ok
