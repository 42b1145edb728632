import math
import random

import pytest

from gsinterp.field import PrimeField


def test_modular_identities():
    F7 = PrimeField(7)
    assert F7.add(3, 5) == 1
    assert F7.mul(3, 5) == 1
    assert PrimeField(2).add(1, 1) == 0


def test_inverse_examples():
    assert PrimeField(7).inv(3) == 5
    assert PrimeField(13).inv(1) == 1
    assert PrimeField(101).inv(2) == 51


def test_inverse_exhaustive_small_fields():
    for p in (2, 3, 5, 7, 11, 101):
        F = PrimeField(p)
        for a in range(1, p):
            assert F.mul(a, F.inv(a)) == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        PrimeField(7).inv(0)


def test_nonprime_modulus_rejected():
    for bad in (0, 1, 4, 9, 91, 2**20):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_binom_examples():
    assert PrimeField(7).binom(2, 1) == 2
    assert PrimeField(2).binom(4, 2) == 0  # C(4,2) = 6
    assert PrimeField(5).binom(5, 2) == 0  # C(5,2) = 10
    assert PrimeField(7).binom(3, 5) == 0  # k > i


def test_binom_pascal_identity():
    rng = random.Random(0)
    for p in (2, 5, 101):
        F = PrimeField(p)
        for _ in range(200):
            i = rng.randint(1, 300)
            k = rng.randint(0, i)
            assert F.binom(i, k) == (F.binom(i - 1, k - 1) + F.binom(i - 1, k)) % p


def test_binom_lucas_matches_integer_binomial():
    for p in (2, 3, 5):
        F = PrimeField(p)
        for i in range(65):
            for k in range(i + 1):
                assert F.binom(i, k) == math.comb(i, k) % p


def test_binom_column():
    F = PrimeField(13)
    for k in range(5):
        col = F.binom_column(k, 40)
        assert col == [math.comb(i, k) % 13 for i in range(41)]


def test_binom_large_arguments_take_lucas_path():
    p = 754974721
    F = PrimeField(p)
    # single-digit case exercised by big row indices
    assert F.binom(1024, 2) == 1024 * 1023 // 2 % p
    # and genuinely multi-digit arguments
    i = 3 * p + 5
    assert F.binom(i, p) == math.comb(3, 1) * math.comb(5, 0) % p


def test_ntt_roots():
    F = PrimeField(754974721)
    assert F.two_adicity == 24
    assert F.supports_ntt(1 << 10)
    assert not F.supports_ntt(1 << 25)
    assert not F.supports_ntt(3)
    root = F.ntt_root(8)
    assert pow(root, 8, F.p) == 1
    assert pow(root, 4, F.p) != 1
    with pytest.raises(ValueError):
        PrimeField(101).ntt_root(64)


def test_field_identity():
    assert PrimeField(7) == PrimeField(7)
    assert PrimeField(7) != PrimeField(11)
    assert hash(PrimeField(13)) == hash(PrimeField(13))
