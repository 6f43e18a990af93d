from fractions import Fraction
from math import factorial
from random import Random

import pytest

from hgbern.altforms import mr, mr_table
from hgbern.hbnum import classical, hb, hb_higher
from hgbern.hessenberg import (
    InversionVerdict,
    ToeplitzHessenbergSpec,
    hb_det,
    hb_higher_det,
    inversion_pair_check,
    toeplitz_hessenberg_det,
    trudi_expand,
)
from oracles import cofactor_det


def random_spec(rng: Random, m: int, a0_one: bool = False) -> ToeplitzHessenbergSpec:
    def frac() -> Fraction:
        return Fraction(rng.randint(-6, 6), rng.randint(1, 6))

    a0 = Fraction(1) if a0_one else frac()
    return ToeplitzHessenbergSpec(a0, tuple(frac() for _ in range(m)))


def test_one_by_one():
    spec = ToeplitzHessenbergSpec(Fraction(1), (Fraction(5, 7),))
    assert toeplitz_hessenberg_det(spec) == Fraction(5, 7)


def test_classical_two_by_two():
    # [[1/2, 1], [1/6, 1/2]] -> 1/12; times (-1)^2 2! gives B_2 = 1/6
    spec = ToeplitzHessenbergSpec(Fraction(1), (Fraction(1, 2), Fraction(1, 6)))
    det = toeplitz_hessenberg_det(spec)
    assert det == Fraction(1, 12)
    assert 2 * det == classical(2)
    assert cofactor_det(spec.matrix()) == det


def test_matrix_layout():
    spec = ToeplitzHessenbergSpec(Fraction(7), (1, 2, 3))
    assert spec.matrix() == [
        [Fraction(1), Fraction(7), Fraction(0)],
        [Fraction(2), Fraction(1), Fraction(7)],
        [Fraction(3), Fraction(2), Fraction(1)],
    ]


def test_determinant_matches_cofactor_oracle():
    rng = Random(20240817)
    for m in range(1, 7):
        for _ in range(10):
            spec = random_spec(rng, m)
            assert toeplitz_hessenberg_det(spec) == cofactor_det(spec.matrix())


def test_trudi_expand_simple_cases():
    assert trudi_expand(ToeplitzHessenbergSpec(Fraction(1), (Fraction(3, 4),))) == Fraction(3, 4)
    spec = ToeplitzHessenbergSpec(Fraction(1), (Fraction(1, 2), Fraction(1, 6)))
    assert trudi_expand(spec) == Fraction(1, 12)


def test_trudi_expand_matches_determinant():
    rng = Random(5)
    for m in range(1, 8):
        for _ in range(10):
            spec = random_spec(rng, m)
            assert trudi_expand(spec) == toeplitz_hessenberg_det(spec)


def test_trudi_expand_non_unit_superdiagonal():
    # a0 != 1 exercises the general (Trudi, not just Brioschi) weights
    rng = Random(99)
    for _ in range(20):
        spec = random_spec(rng, 4)
        assert trudi_expand(spec) == cofactor_det(spec.matrix())
    spec = ToeplitzHessenbergSpec(Fraction(2), (1, 1, 1, 1))
    assert trudi_expand(spec) == cofactor_det(spec.matrix())


def test_hb_det_values():
    assert hb_det(2, 4) == Fraction(-1, 270)
    assert hb_det(1, 6) == Fraction(1, 42)
    assert hb_higher_det(1, 2, 1) == -1
    with pytest.raises(ValueError):
        hb_det(1, 0)


def test_determinant_route_matches_recurrence():
    for N in range(1, 5):
        for n in range(1, 13):
            assert hb_det(N, n) == hb(N, n)
    for N in (1, 2, 3):
        for r in (2, 3):
            for n in range(1, 10):
                assert hb_higher_det(N, r, n) == hb_higher(N, r, n)


def test_inversion_pair_with_number_weights():
    for N, r in ((2, 1), (1, 2), (3, 2)):
        alphas = [(-1) ** k * hb_higher(N, r, k) / factorial(k) for k in range(1, 6)]
        rs = [mr(N, r, e) for e in range(1, 6)]
        verdict = inversion_pair_check(alphas, rs)
        assert bool(verdict), verdict.failures


def test_inversion_pair_zero_sequences():
    verdict = inversion_pair_check([Fraction(0)] * 5, [Fraction(0)] * 5)
    assert bool(verdict)


def test_inversion_pair_random_r():
    rng = Random(123)
    rs = [Fraction(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(6)]
    # build alpha by the determinant direction, then everything must verify
    alphas = [
        toeplitz_hessenberg_det(ToeplitzHessenbergSpec(Fraction(1), tuple(rs[:m])))
        for m in range(1, 7)
    ]
    verdict = inversion_pair_check(alphas, rs)
    assert bool(verdict), verdict.failures


def test_inversion_pair_reports_failure():
    rs = [mr(2, 1, e) for e in range(1, 5)]
    alphas = [(-1) ** k * hb(2, k) / factorial(k) for k in range(1, 5)]
    alphas[2] += 1
    verdict = inversion_pair_check(alphas, rs)
    assert not verdict
    assert "convolution" in verdict.failures
    assert isinstance(verdict, InversionVerdict)
    with pytest.raises(ValueError):
        inversion_pair_check(alphas, rs[:-1])


def test_banded_matrix_inverse_identity():
    for N, r in ((2, 1), (2, 2)):
        n = 12
        table = mr_table(N, r, n)
        alphas = [(-1) ** k * hb_higher(N, r, k) / factorial(k) for k in range(1, n + 1)]
        rs = [table[e] for e in range(1, n + 1)]
        verdict = inversion_pair_check(alphas, rs)
        assert verdict.product_ok
