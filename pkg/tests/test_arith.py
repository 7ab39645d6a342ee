import pytest

from dimerq.arith import divisors, factorize, is_perfect_square, is_prime, mobius, next_prime


def test_perfect_squares_small():
    squares = {n * n for n in range(100)}
    for n in range(2000):
        assert is_perfect_square(n) == (n in squares)


def test_perfect_squares_big():
    big = 10**60 + 12345
    assert is_perfect_square(big * big)
    assert not is_perfect_square(big * big + 1)
    assert not is_perfect_square(-4)


def test_is_prime_against_sieve():
    limit = 2000
    sieve = [True] * limit
    sieve[0] = sieve[1] = False
    for i in range(2, limit):
        if sieve[i]:
            for j in range(i * i, limit, i):
                sieve[j] = False
    for n in range(limit):
        assert is_prime(n) == sieve[n], n


def test_is_prime_large():
    assert is_prime(2**61 - 1)
    assert not is_prime(2**61 + 1)


def test_next_prime():
    assert next_prime(1) == 2
    assert next_prime(2) == 3
    assert next_prime(13) == 17
    assert is_prime(next_prime(1 << 62))


def test_factorize_and_divisors():
    assert factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert divisors(360) == [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 20, 24,
                             30, 36, 40, 45, 60, 72, 90, 120, 180, 360]
    assert divisors(1) == [1]
    with pytest.raises(ValueError):
        factorize(0)


def test_mobius_table():
    expected = {1: 1, 2: -1, 3: -1, 4: 0, 5: -1, 6: 1, 7: -1, 8: 0, 9: 0,
                10: 1, 30: -1, 210: 1}
    for n, mu in expected.items():
        assert mobius(n) == mu


def test_mobius_dirichlet_identity():
    # sum of mobius over divisors is the unit function
    for n in range(1, 200):
        total = sum(mobius(d) for d in divisors(n))
        assert total == (1 if n == 1 else 0)
