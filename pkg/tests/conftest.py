import pytest

from omegalab import primes_up_to, spf_table


@pytest.fixture(scope="session")
def table_1e3():
    return primes_up_to(1_000)


@pytest.fixture(scope="session")
def table_1e4():
    return primes_up_to(10_000)


@pytest.fixture(scope="session")
def table_1e5():
    return primes_up_to(100_000)


@pytest.fixture(scope="session")
def table_1e6():
    return primes_up_to(1_000_000)


@pytest.fixture(scope="session")
def spf_1e5():
    return spf_table(100_000)
