"""Ring arithmetic, the projection oracle, inversion, and roots."""

import math
import random

import pytest

from alphagroup import (IMU, MU, ONE, ZERO, AlphaNumber, ComplexPair, I,
                        ZeroDivisorError)
from helpers import random_alpha


def A(a, b, c, d):
    return AlphaNumber(a, b, c, d)


# -- construction -----------------------------------------------------------

def test_components_coerced_to_float():
    x = A(1, 2, 3, 4)
    assert x.a == 1.0 and isinstance(x.a, float)


def test_nonfinite_components_rejected():
    with pytest.raises(OverflowError):
        A(float("nan"), 0, 0, 0)
    with pytest.raises(OverflowError):
        A(0, float("inf"), 0, 0)


def test_equality_is_componentwise():
    assert A(1, 2, 3, 4) == A(1, 2, 3, 4)
    assert A(1, 2, 3, 4) != A(1, 2, 3, 5)


# -- addition ---------------------------------------------------------------

def test_additive_identity():
    assert A(1, 2, 3, 4) + ZERO == A(1, 2, 3, 4)


def test_additive_inverse():
    assert A(1, 0, 1, 0) + A(-1, 0, -1, 0) == ZERO


def test_componentwise_sum():
    assert A(1, 2, 3, 4) + A(5, 6, 7, 8) == A(6, 8, 10, 12)


def test_add_overflow_is_an_error():
    big = A(1e308, 0, 0, 0)
    with pytest.raises(OverflowError):
        big + big


# -- multiplication table ---------------------------------------------------

def test_i_squared_is_minus_one():
    assert I * I == A(-1, 0, 0, 0)


def test_mu_squared_is_mu():
    assert MU * MU == MU


def test_imu_squared_is_minus_mu():
    assert IMU * IMU == A(0, 0, -1, 0)


def test_idempotent_inverse_pair():
    assert A(1, 0, 1, 0) * A(1, 0, -0.5, 0) == ONE


def test_zero_annihilates_exactly():
    rng = random.Random(7)
    for _ in range(100):
        assert random_alpha(rng, 1000.0) * ZERO == ZERO


def test_scalar_multiplication():
    assert 2.0 * A(1, 2, 3, 4) == A(2, 4, 6, 8)
    assert A(1, 2, 3, 4) * 0.5 == A(0.5, 1, 1.5, 2)


def test_mul_overflow_is_an_error():
    with pytest.raises(OverflowError):
        A(1e308, 0, 0, 0) * A(10, 0, 0, 0)


# -- split / reconstruct -----------------------------------------------------

def test_split_of_mu():
    pair = MU.split()
    assert pair.p1 == 1 and pair.p2 == 0


def test_split_of_one():
    pair = ONE.split()
    assert pair.p1 == 1 and pair.p2 == 1


def test_split_projection_formula():
    pair = A(1, 2, 3, 4).split()
    assert pair.p1 == complex(4, 6)
    assert pair.p2 == complex(1, 2)


def test_reconstruct_examples():
    assert ComplexPair(1, 0).reconstruct() == MU
    assert ComplexPair(1, 1).reconstruct() == ONE
    assert ComplexPair(complex(4, 6), complex(1, 2)).reconstruct() == A(1, 2, 3, 4)


def test_split_reconstruct_round_trip_is_bit_exact():
    rng = random.Random(11)
    for _ in range(500):
        x = random_alpha(rng, 1000.0)
        assert x.split().reconstruct() == x


def test_split_is_a_homomorphism():
    rng = random.Random(13)
    for _ in range(2000):
        x = random_alpha(rng, 1000.0)
        y = random_alpha(rng, 1000.0)
        lhs = (x * y).split()
        px, py = x.split(), y.split()
        for got, want, scale in ((lhs.p1, px.p1 * py.p1, abs(px.p1) * abs(py.p1)),
                                 (lhs.p2, px.p2 * py.p2, abs(px.p2) * abs(py.p2))):
            assert abs(got - want) <= 1e-12 * max(1.0, scale)


# -- ring axioms --------------------------------------------------------------

def test_ring_axioms_small_range_absolute():
    rng = random.Random(17)
    for _ in range(2000):
        x, y, z = (random_alpha(rng, 10.0) for _ in range(3))
        assert ((x + y) + z).isclose(x + (y + z), 1e-9)
        assert ((x * y) * z).isclose(x * (y * z), 1e-9)
        assert (x * y).isclose(y * x, 1e-9)
        assert (x * (y + z)).isclose(x * y + x * z, 1e-9)
        assert (x * ONE).isclose(x, 0.0)
        assert (x + ZERO) == x


def test_ring_axioms_wide_range_scaled():
    # At component magnitudes up to 1e3 the composed products reach ~1e10,
    # so the comparison has to scale with the operands.
    rng = random.Random(19)
    for _ in range(500):
        x, y, z = (random_alpha(rng, 1000.0) for _ in range(3))
        scale = max(1.0, *(abs(v) for w in (x, y, z)
                           for v in (w.a, w.b, w.c, w.d))) ** 3
        assert ((x * y) * z).isclose(x * (y * z), 1e-12 * scale)
        assert (x * (y + z)).isclose(x * y + x * z, 1e-12 * scale)


# -- inversion ----------------------------------------------------------------

def test_invert_zero_divisor_raises():
    with pytest.raises(ZeroDivisorError):
        MU.invert()
    with pytest.raises(ZeroDivisorError):
        (ONE - MU).invert()
    with pytest.raises(ZeroDivisorError):
        ZERO.invert()


def test_invert_one_plus_i():
    assert A(1, 1, 0, 0).invert().isclose(A(0.5, -0.5, 0, 0), 1e-15)


def test_invert_one_plus_mu():
    inv = A(1, 0, 1, 0).invert()
    assert inv.isclose(A(1, 0, -0.5, 0), 1e-15)
    assert (A(1, 0, 1, 0) * inv).isclose(ONE, 1e-15)


def test_invert_succeeds_iff_projections_clear_tolerance():
    rng = random.Random(23)
    hits = 0
    for _ in range(1000):
        x = random_alpha(rng, 1000.0)
        pair = x.split()
        smallest = min(abs(pair.p1), abs(pair.p2))
        if smallest > 1e-12:
            assert (x * x.invert()).isclose(ONE, 1e-9)
            hits += 1
        else:
            with pytest.raises(ZeroDivisorError):
                x.invert()
    assert hits > 900  # random draws are almost never singular


def test_invert_tolerance_is_overridable():
    nearly_singular = A(0.5, 0, -0.5 + 1e-9, 0)  # p1 = 1e-9
    nearly_singular.invert(tol=1e-12)
    with pytest.raises(ZeroDivisorError):
        nearly_singular.invert(tol=1e-6)


# -- square root ---------------------------------------------------------------

def test_sqrt_positive_real():
    assert A(25, 0, 0, 0).sqrt() == A(5, 0, 0, 0)


def test_sqrt_of_mu_is_mu():
    assert MU.sqrt() == MU


def test_sqrt_of_minus_one_is_i():
    assert A(-1, 0, 0, 0).sqrt() == I


def test_sqrt_squares_back():
    rng = random.Random(29)
    for _ in range(1000):
        x = random_alpha(rng, 1000.0)
        r = x.sqrt()
        assert (r * r).isclose(x, 1e-9)


# -- collapse -------------------------------------------------------------------

def test_collapse_examples():
    assert A(1, 2, 3, 4).collapse() == 10
    assert ZERO.collapse() == 0
    assert A(1, 0, -1, 0).collapse() == 0


# -- rendering ---------------------------------------------------------------

def test_str_rendering():
    assert str(A(1, 2, 3, 4)) == "1.0 + 2.0*i + 3.0*mu + 4.0*i*mu"
    assert str(A(1, -0.5, 0, 0)) == "1.0 + -0.5*i + 0.0*mu + 0.0*i*mu"


def test_json_rendering():
    assert A(1, 2, 3, 4).to_json() == {"a": 1.0, "b": 2.0, "c": 3.0, "d": 4.0}


def test_isclose_uses_absolute_per_component_tolerance():
    assert A(1, 1, 1, 1).isclose(A(1 + 5e-10, 1, 1, 1 - 5e-10), 1e-9)
    assert not A(1, 1, 1, 1).isclose(A(1 + 2e-9, 1, 1, 1), 1e-9)


def test_values_are_hashable_and_immutable():
    x = A(1, 2, 3, 4)
    assert hash(x) == hash(A(1, 2, 3, 4))
    with pytest.raises(Exception):
        x.a = 5.0
