import cmath
import math

import pytest
from hypothesis import given, strategies as st

from hermite_multisect.errors import DomainError
from hermite_multisect.expsums import (MultisectIndex, s_closed, s_derivative_check,
                                       s_series)

# reference sums by brute force in 40-digit arithmetic (mpmath)
S_5_3 = complex(0.04161561093668858180, 0.22913411441006056956)  # z = 1 + 0.5i
S_3_1 = 1.2871126565670924882  # z = 1.2
S_3_0 = complex(1.0108111857544624249, 0.023692302623776942705)  # z = 0.5 + 0.2i

GRID = [complex(a, b) for a in (-3, -1, 0, 1, 3) for b in (-3, -1, 0, 1, 3)]
small_z = st.complex_numbers(max_magnitude=4, allow_nan=False, allow_infinity=False)


def test_index_validation():
    with pytest.raises(DomainError):
        MultisectIndex(0, 0)
    with pytest.raises(DomainError):
        MultisectIndex(2, -1)
    assert list(MultisectIndex(3, 7).head_indices()) == [1, 4]


def test_s10_is_exp():
    assert s_closed(MultisectIndex(1, 0), 0.8) == pytest.approx(2.225540928492468, rel=1e-15)


def test_s20_is_cosh():
    assert s_closed((2, 0), 1) == pytest.approx(1.543080634815244, rel=1e-15)


def test_head_correction():
    assert s_closed((2, 2), 1) == pytest.approx(math.cosh(1) - 1, rel=1e-14)
    assert s_series((2, 2), 1)[0] == pytest.approx(math.cosh(1) - 1, rel=1e-14)


def test_s30_three_root_form():
    z = 0.5 + 0.2j
    w = cmath.exp(2j * math.pi / 3)
    expected = (cmath.exp(z * w) + cmath.exp(z * w * w) + cmath.exp(z)) / 3
    assert abs(s_closed((3, 0), z) - expected) <= 1e-15
    assert abs(s_closed((3, 0), z) - S_3_0) <= 1e-15


def test_s31_known_formula():
    # S(3,1) = e^z/3 - (2/3) e^{-z/2} cos(sqrt(3) z/2 + pi/3)
    z = 1.2
    expected = math.exp(z) / 3 - 2 / 3 * math.exp(-z / 2) * math.cos(math.sqrt(3) * z / 2 + math.pi / 3)
    assert s_closed((3, 1), z) == pytest.approx(expected, rel=1e-14)


def test_series_trivial():
    assert s_series((5, 0), 0) == (1 + 0j, 6)  # the unit term, then a quiet window
    assert s_series((4, 3), 0)[0] == 0


def test_series_against_reference():
    value, used = s_series((3, 1), 1.2)
    assert abs(value - S_3_1) <= 1e-12
    assert abs(s_closed((3, 1), 1.2) - value) <= 1e-12
    assert abs(s_series((5, 3), 1 + 0.5j)[0] - S_5_3) <= 1e-15


def test_derivative_examples():
    assert s_derivative_check((3, 1), 0.9) <= 1e-12
    assert s_derivative_check((2, 1), 0) == 0.0
    assert s_derivative_check((5, 3), 1 + 0.5j) <= 1e-12
    with pytest.raises(DomainError):
        s_derivative_check((3, 0), 0.3)


def test_derivative_finite_difference():
    # secondary oracle: central difference of the series
    h = 1e-6
    z = 1 + 0.5j
    fd = (s_series((5, 3), z + h)[0] - s_series((5, 3), z - h)[0]) / (2 * h)
    assert abs(fd - s_closed((5, 2), z)) <= 1e-7


@pytest.mark.parametrize("j", range(1, 7))
def test_derivative_chain_including_head(j):
    for k in range(1, j + 4):
        for z in (0.3, -1 + 2j, 2.5 - 0.5j):
            scale = 1 + abs(s_closed((j, k - 1), z))
            assert s_derivative_check((j, k), z) <= 1e-12 * scale


@pytest.mark.parametrize("j", range(1, 7))
def test_oracle_grid(j):
    for k in range(0, j + 3):
        for z in GRID:
            c = s_closed((j, k), z)
            s, _ = s_series((j, k), z)
            assert abs(c - s) <= 1e-11 * (1 + abs(c)), (j, k, z)


@pytest.mark.parametrize("j", range(1, 9))
def test_partition_identity(j):
    for z in GRID:
        total = sum(s_closed((j, k), z) for k in range(j))
        assert abs(total - cmath.exp(z)) <= 1e-12 * abs(cmath.exp(z))


@given(st.integers(1, 8), st.integers(0, 12), small_z)
def test_conjugation_symmetry(j, k, z):
    a = s_closed((j, k), z.conjugate())
    b = s_closed((j, k), z).conjugate()
    assert abs(a - b) <= 1e-13 * (1 + abs(b))


@given(st.integers(1, 8), st.integers(0, 12), st.floats(-4, 4))
def test_real_argument_gives_real_value(j, k, x):
    v = s_closed((j, k), x)
    assert abs(v.imag) <= 1e-12 * (1 + abs(v))


@given(st.integers(1, 8), st.integers(0, 20), small_z)
def test_k_reduction(j, k, z):
    head = sum(z ** m / math.factorial(m) for m in range(k % j, k, j))
    expected = s_closed((j, k % j), z) - head
    assert abs(s_closed((j, k), z) - expected) <= 1e-12 * (1 + abs(expected))


@pytest.mark.parametrize("j,k", [(1, 0), (2, 1), (3, 2), (4, 5), (6, 0)])
def test_value_at_zero(j, k):
    assert abs(s_closed((j, k), 0) - (1 if k == 0 else 0)) <= 1e-15
