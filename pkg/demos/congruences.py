"""p-adic congruences between the parameter-N and the classical numbers.

Reproduces the two worked transfer examples: with ord_5(N-1) >= 4 the index-6
and index-2 values agree with their classical counterparts mod 5 (residue 3),
and with ord_5(N-1) >= 48 the Kummer-weighted pair at (m, n) = (22, 2) agrees
mod 25 (residue 8, which is 3 mod 5).
"""

from hgbern import (
    classical,
    hb,
    hb_factorial_congruence,
    hb_kummer_corollary,
    hb_kummer_pair,
    kummer_classical,
    ord_threshold,
    ordp,
)

print("classical Kummer congruence, p = 5, (m, n) = (6, 2), nu = 0:")
v = kummer_classical(5, 6, 2, 0)
print(f"  (1-5^5) B_6/6 = {(1 - 5**5) * classical(6) / 6}")
print(f"  (1-5)   B_2/2 = {(1 - 5) * classical(2) / 2}")
print(f"  both have residue {v.lhs_residue} mod 5; ord_5 of the difference is "
      f"{v.difference_ord}\n")
assert v.holds

print("transfer to the parameter family, single index:")
need = ord_threshold(5, 6, 0)
N = 1 + 5**need
print(f"  threshold: ord_5(N-1) >= {need}; take N = 1 + 5^{need}")
for n in (6, 2):
    v = hb_kummer_corollary(5, N, n, 0)
    print(f"  B_(N,{n})/{n} has residue {v.lhs_residue} mod 5 "
          f"(classical side {v.rhs_residue})")
    assert v.holds and v.lhs_residue == 3

print("\ntransfer of the Kummer pair (m, n) = (22, 2) at nu = 1:")
need = ord_threshold(5, 2, 1, m=22)
N = 1 + 5**need
print(f"  threshold: ord_5(N-1) >= {need}; take N = 1 + 5^{need}")
v = hb_kummer_pair(5, N, 22, 2, 1)
print(f"  both Kummer-weighted sides have residue {v.lhs_residue} mod 25")
assert v.holds and v.lhs_residue == v.rhs_residue == 8
v = hb_kummer_pair(5, N, 22, 2, 0)
print(f"  ... and residue {v.lhs_residue} mod 5\n")
assert v.lhs_residue == 3

print("the factorial-ladder congruence that powers the transfer:")
for p, t in ((3, 2), (5, 2)):
    N = 1 + p**t
    v = hb_factorial_congruence(p, N, 6)
    print(f"  p = {p}, N = 1 + {p}^{t}: ladder products agree mod {p}^{t} "
          f"(ord of difference: {v.difference_ord})")
    assert v.holds

big = hb(1 + 5**48, 22)
print(f"\nfor scale: the index-22 value at N = 1 + 5^48 is exact, with a "
      f"{len(str(big.numerator))}-digit numerator, and ord_5 = {ordp(big, 5)}.")
