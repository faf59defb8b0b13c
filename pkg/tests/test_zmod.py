import pytest
from hypothesis import given
from hypothesis import strategies as st

from quditctx.errors import EvenDimensionError, NotPrimeError, ZeroInverseError
from quditctx.zmod import (
    PrimeDim,
    is_prime,
    legendre,
    mod_inverse,
    smallest_nonresidue,
)

ODD_PRIMES = [3, 5, 7, 11, 13, 31]


def test_prime_dim_accepts_primes():
    for d in [2] + ODD_PRIMES:
        assert PrimeDim(d).d == d


@pytest.mark.parametrize("bad", [0, 1, 4, 6, 9, 15, 21])
def test_prime_dim_rejects_composites(bad):
    with pytest.raises(NotPrimeError):
        PrimeDim(bad)


@pytest.mark.parametrize(
    "a,d,expected",
    [(1, 5, 1), (2, 3, 2), (2, 7, 4)],
)
def test_mod_inverse_examples(a, d, expected):
    assert mod_inverse(a, d) == expected


def test_mod_inverse_zero_raises():
    with pytest.raises(ZeroInverseError):
        mod_inverse(0, 5)
    with pytest.raises(ZeroInverseError):
        mod_inverse(10, 5)


@pytest.mark.parametrize("x,d,expected", [(0, 5, 0), (4, 5, 1), (2, 3, -1)])
def test_legendre_examples(x, d, expected):
    assert legendre(x, d) == expected


def test_legendre_even_dim_raises():
    with pytest.raises(EvenDimensionError):
        legendre(1, 2)
    with pytest.raises(EvenDimensionError):
        smallest_nonresidue(2)


@pytest.mark.parametrize("d,expected", [(3, 2), (5, 2), (7, 3)])
def test_smallest_nonresidue_examples(d, expected):
    assert smallest_nonresidue(d) == expected


@given(st.sampled_from(ODD_PRIMES), st.integers(min_value=1, max_value=1000))
def test_inverse_property(d, a):
    if a % d == 0:
        return
    assert a * mod_inverse(a, d) % d == 1


@pytest.mark.parametrize("d", ODD_PRIMES)
def test_residue_balance(d):
    values = [legendre(x, d) for x in range(1, d)]
    assert values.count(1) == (d - 1) // 2
    assert values.count(-1) == (d - 1) // 2


@given(
    st.sampled_from(ODD_PRIMES),
    st.integers(min_value=1, max_value=100),
    st.integers(min_value=1, max_value=100),
)
def test_legendre_multiplicative(d, x, y):
    if x % d == 0 or y % d == 0:
        return
    assert legendre(x * y, d) == legendre(x, d) * legendre(y, d)


def test_is_prime_small_table():
    primes_below_40 = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}
    assert {n for n in range(40) if is_prime(n)} == primes_below_40
