import random

import pytest

from gsinterp.field import PrimeField
import gsinterp.unipoly as up
from gsinterp.unipoly import (
    NEG_INF,
    UniPoly,
    _mul_kara,
    _mul_kron,
    _mul_ntt,
    _mul_school,
    count_scalar_mults,
)
from util import rand_unipoly, schoolbook_product

F5 = PrimeField(5)
F101 = PrimeField(101)


def P(field, *coeffs):
    return UniPoly(field, list(coeffs))


# -- multiplication ----------------------------------------------------------


def test_mul_example_gf5():
    # (x+1)(x+4) = x^2 + 5x + 4 = x^2 + 4 over GF(5)
    assert P(F5, 1, 1) * P(F5, 4, 1) == P(F5, 4, 0, 1)


def test_mul_by_zero():
    rng = random.Random(1)
    a = rand_unipoly(F101, rng, 10)
    assert (a * UniPoly.zero(F101)).is_zero()
    assert (UniPoly.zero(F101) * a).is_zero()


def test_mul_matches_schoolbook_oracle():
    rng = random.Random(2)
    for _ in range(5):
        a = rand_unipoly(F101, rng, 200)
        b = rand_unipoly(F101, rng, 200)
        assert a * b == schoolbook_product(a, b)


def test_mul_degree_adds():
    rng = random.Random(3)
    a = rand_unipoly(F101, rng, 37)
    b = rand_unipoly(F101, rng, 54)
    assert (a * b).degree == 91


def test_kernels_agree():
    rng = random.Random(4)
    FN = PrimeField(754974721)
    for field in (F101, FN, PrimeField(2)):
        p = field.p
        for da, db in ((5, 90), (130, 130), (257, 61)):
            a = [field.rand(rng) for _ in range(da)] + [1]
            b = [field.rand(rng) for _ in range(db)] + [1]
            ref = _mul_school(a, b, p)
            assert _mul_kara(a, b, p) == ref
            assert _mul_kron(a, b, p) == ref
            if field.supports_ntt(1 << (da + db + 1).bit_length()):
                assert _mul_ntt(a, b, field) == ref


def test_ntt_dispatch_flag(monkeypatch):
    rng = random.Random(5)
    FN = PrimeField(754974721)
    a = rand_unipoly(FN, rng, 300)
    b = rand_unipoly(FN, rng, 300)
    expected = schoolbook_product(a, b)
    assert a * b == expected
    monkeypatch.setattr(up, "USE_NTT", True)
    assert a * b == expected


def test_scalar_op_counts_subquadratic():
    # counted on the executed dispatch path
    rng = random.Random(6)
    counts = {}
    for d in (256, 512, 1024):
        a = rand_unipoly(F101, rng, d)
        b = rand_unipoly(F101, rng, d)
        with count_scalar_mults() as ctr:
            a * b
        counts[d] = ctr.mults
    assert counts[512] / counts[256] <= 3.3
    assert counts[1024] / counts[512] <= 3.3
    # and on the explicit Karatsuba kernel, whose ratio sits near 3
    kara = {}
    for d in (256, 512, 1024):
        a = [F101.rand(rng) for _ in range(d)] + [1]
        b = [F101.rand(rng) for _ in range(d)] + [1]
        with count_scalar_mults() as ctr:
            _mul_kara(a, b, F101.p)
        kara[d] = ctr.mults
    assert kara[512] / kara[256] <= 3.3
    assert kara[1024] / kara[512] <= 3.3
    # genuinely subquadratic: doubling the degree must not quadruple the work
    assert kara[1024] < 4 * kara[512] * 0.9


# -- ring axioms ----------------------------------------------------------------


def test_ring_axioms_random_triples():
    rng = random.Random(7)
    for _ in range(1000):
        a = rand_unipoly(F101, rng, rng.randint(0, 64))
        b = rand_unipoly(F101, rng, rng.randint(0, 64))
        c = rand_unipoly(F101, rng, rng.randint(0, 64))
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a


# -- division ----------------------------------------------------------------


def test_rem_examples_gf5():
    m = P(F5, 1, 3, 1)  # (x-1)^2 = x^2 - 2x + 1 = x^2 + 3x + 1
    assert m == UniPoly.x_minus(F5, 1).pow(2)
    assert P(F5, 0, 0, 1) % m == P(F5, 4, 2)  # x^2 -> 2x + 4
    assert P(F5, 0, 0, 0, 1) % m == P(F5, 3, 3)  # x^3 -> 3x + 3


def test_rem_already_reduced():
    rng = random.Random(8)
    m = rand_unipoly(F101, rng, 9)
    a = rand_unipoly(F101, rng, 5)
    assert a % m == a


def test_division_by_zero_raises():
    with pytest.raises(ZeroDivisionError):
        P(F5, 1, 1) % UniPoly.zero(F5)


def test_divmod_reconstructs():
    rng = random.Random(9)
    for da, dm in ((20, 7), (150, 60), (400, 150), (260, 130)):
        a = rand_unipoly(F101, rng, da)
        m = rand_unipoly(F101, rng, dm)
        q, r = a.divmod(m)
        assert q * m + r == a
        assert r.degree < m.degree


def test_newton_and_synthetic_division_agree():
    rng = random.Random(10)
    old = up.NEWTON_REM_MIN
    a = rand_unipoly(F101, rng, 300)
    m = rand_unipoly(F101, rng, 120)
    fast = a.divmod(m)
    try:
        up.NEWTON_REM_MIN = 10**9
        slow = a.divmod(m)
    finally:
        up.NEWTON_REM_MIN = old
    assert fast == slow


# -- taylor shift and evaluation ----------------------------------------------


def test_taylor_shift_example():
    F7 = PrimeField(7)
    assert P(F7, 0, 0, 1).taylor_shift(1) == P(F7, 1, 2, 1)


def test_taylor_shift_by_zero_is_identity():
    rng = random.Random(11)
    a = rand_unipoly(F101, rng, 20)
    assert a.taylor_shift(0) == a


def test_taylor_shift_coefficient_formula():
    rng = random.Random(12)
    a = rand_unipoly(F101, rng, 50)
    c = F101.rand_nonzero(rng)
    shifted = a.taylor_shift(c)
    p = F101.p
    for k in range(len(a.coeffs)):
        want = 0
        for i in range(k, len(a.coeffs)):
            want = (want + F101.binom(i, k) * a.coeffs[i] % p * pow(c, i - k, p)) % p
        got = shifted.coeffs[k] if k < len(shifted.coeffs) else 0
        assert got == want


def test_taylor_shift_roundtrip():
    rng = random.Random(13)
    for _ in range(20):
        a = rand_unipoly(F101, rng, rng.randint(0, 40))
        c = F101.rand(rng)
        assert a.taylor_shift(c).taylor_shift(-c % 101) == a


def test_taylor_coeffs_matches_reduce_then_shift():
    rng = random.Random(14)
    for _ in range(50):
        a = rand_unipoly(F101, rng, rng.randint(0, 60))
        x0 = F101.rand(rng)
        s = rng.randint(1, 5)
        explicit = (a % UniPoly.x_minus(F101, x0).pow(s)).taylor_shift(x0)
        want = (explicit.coeffs + [0] * s)[:s]
        assert a.taylor_coeffs(x0, s) == want


def test_hasse_deriv_matches_taylor_shift():
    rng = random.Random(15)
    for _ in range(30):
        a = rand_unipoly(F101, rng, rng.randint(0, 30))
        x0 = F101.rand(rng)
        shifted = a.taylor_shift(x0)
        for k in range(len(a.coeffs) + 2):
            want = shifted.coeffs[k] if k < len(shifted.coeffs) else 0
            assert a.hasse_deriv(k, x0) == want


def test_eval():
    assert P(F5, 1, 1).eval(4) == 0
    assert UniPoly.zero(F5).eval(3) == 0
    rng = random.Random(16)
    a = rand_unipoly(F101, rng, 25)
    c = F101.rand(rng)
    assert a.eval(c) == sum(v * pow(c, i, 101) for i, v in enumerate(a.coeffs)) % 101


# -- misc helpers --------------------------------------------------------------


def test_zero_degree_is_minus_infinity():
    z = UniPoly.zero(F5)
    assert z.degree == NEG_INF
    assert z.degree < -(10**9)


def test_mul_linear_and_sub_scaled():
    rng = random.Random(17)
    a = rand_unipoly(F101, rng, 12)
    b = rand_unipoly(F101, rng, 9)
    x0 = F101.rand(rng)
    c = F101.rand(rng)
    assert a.mul_linear(x0) == a * UniPoly.x_minus(F101, x0)
    assert a.sub_scaled(c, b) == a - b.scale(c)
    assert b.sub_scaled(c, a) == b - a.scale(c)


def test_pow_and_shift_up():
    f = UniPoly.x_minus(F5, 2)
    assert f.pow(3) == f * f * f
    assert f.pow(0) == UniPoly.one(F5)
    rng = random.Random(18)
    a = rand_unipoly(F5, rng, 4)
    assert a.shift_up(3) == a * UniPoly.monomial(F5, 3)


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        P(F5, 1) + P(F101, 1)
