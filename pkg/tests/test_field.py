"""Exact field arithmetic: axioms, inverses, extensions, sampling.

The axioms are property-tested over every field kind in use; the
extension constructor is pinned against hand-checkable moduli and the
Frobenius identity a^(p^k) = a.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fanolines import QQ, PrimeField, build_extension
from fanolines.field import embedding, is_prime, relative_extension
from fanolines.errors import NotPrime, ZeroInversion

FIELDS = [PrimeField(7), PrimeField(10007), build_extension(3, 2),
          build_extension(7, 3), QQ]
FIELD_IDS = ["F7", "F10007", "F9", "F343", "QQ"]


def sample_many(field, seed, count):
    rng = random.Random(seed)
    return [field.sample(rng) for _ in range(count)]


@pytest.mark.parametrize("field", FIELDS, ids=FIELD_IDS)
def test_field_axioms_random_triples(field):
    # associativity, commutativity, distributivity, inverses; 1000 triples
    rng = random.Random(17)
    one = field.one()
    zero = field.zero()
    for _ in range(1000):
        a, b, c = (field.sample(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inverse() == one


def test_inverse_examples(f7):
    assert f7.one().inverse() == f7.one()
    assert f7.from_int(3).inverse() == f7.from_int(5)
    assert QQ.from_fraction(Fraction(-2, 3)).inverse() == \
        QQ.from_fraction(Fraction(-3, 2))


@pytest.mark.parametrize("field", FIELDS, ids=FIELD_IDS)
def test_zero_inversion_raises(field):
    with pytest.raises(ZeroInversion):
        field.zero().inverse()


def test_from_int_reduces(f7):
    assert f7.from_int(15) == f7.one()
    assert f7.from_int(-1) == f7.from_int(6)


def test_is_prime_small_cases():
    assert [n for n in range(2, 30) if is_prime(n)] == \
        [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(1)
    assert is_prime(10007)


def test_build_extension_degenerate_is_prime_field():
    assert build_extension(5, 1) == PrimeField(5)


def test_build_extension_rejects_composite():
    with pytest.raises(NotPrime):
        build_extension(6, 2)


def test_extension_modulus_irreducible_3_2():
    # degree-2 modulus over F_3 may not have a root in F_3
    ext = build_extension(3, 2)
    f3 = PrimeField(3)
    assert ext.degree == 2 and ext.order() == 9
    for a in range(3):
        value = sum(c * pow(a, i, 3) for i, c in enumerate(ext.modulus)) % 3
        assert value != 0
    assert f3.characteristic() == ext.characteristic() == 3


def test_extension_modulus_irreducible_7_3():
    # gcd(t^(7^j) - t, m) = 1 for j < 3 certifies irreducibility of a cubic
    ext = build_extension(7, 3)
    assert ext.degree == 3 and ext.order() == 343
    t = ext.generator()
    for j in (1, 2):
        power = t ** (7 ** j)
        assert power != t  # t^(p^j) = t would expose a degree-j subfield root


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (7, 3)])
def test_frobenius_fixes_whole_field(p, k):
    ext = build_extension(p, k)
    rng = random.Random(3)
    for _ in range(60):
        a = ext.sample(rng)
        assert a ** (p ** k) == a
    # the order-k automorphism fixes exactly the prime field
    fixed = [a for a in ext.elements() if ext.frobenius(a) == a]
    assert len(fixed) == p


def test_sample_determinism():
    for field in FIELDS:
        assert sample_many(field, 42, 20) == sample_many(field, 42, 20)
        assert sample_many(field, 42, 20) != sample_many(field, 43, 20)


def test_sample_uniformity_f7():
    # 7000 draws, each residue within 5 sigma of 1000
    f7 = PrimeField(7)
    rng = random.Random(0)
    counts = [0] * 7
    for _ in range(7000):
        counts[f7.sample(rng).payload] += 1
    sigma = (7000 * (1 / 7) * (6 / 7)) ** 0.5
    for c in counts:
        assert abs(c - 1000) <= 5 * sigma


def test_rational_sample_bound():
    rng = random.Random(1)
    for _ in range(200):
        e = QQ.sample(rng, bound=1)
        assert e.payload in (Fraction(-1), Fraction(0), Fraction(1))


def test_embedding_is_ring_homomorphism():
    src = build_extension(3, 2)
    dst = build_extension(3, 4)
    embed = embedding(src, dst)
    rng = random.Random(9)
    for _ in range(50):
        a, b = src.sample(rng), src.sample(rng)
        assert embed(a + b) == embed(a) + embed(b)
        assert embed(a * b) == embed(a) * embed(b)
    images = {embed(a) for a in src.elements()}
    assert len(images) == 9  # injective
    assert embed(src.one()) == dst.one()


def test_relative_extension_tower():
    ground = build_extension(5, 2)
    ext, embed = relative_extension(ground, 3)
    assert ext.degree == 6
    a = ground.sample(random.Random(2))
    assert embed(a) ** (5 ** 2) == embed(a ** (5 ** 2))


@given(st.integers(min_value=-200, max_value=200))
@settings(max_examples=60)
def test_prime_field_canonical_form(n):
    f = PrimeField(11)
    e = f.from_int(n)
    assert 0 <= e.payload < 11
    assert f.from_int(e.payload) == e
