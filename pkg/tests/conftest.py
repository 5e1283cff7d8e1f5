import pytest

from activita.corpus import builtin_corpus, m5


@pytest.fixture(scope="session")
def m5_matroid():
    return m5()


@pytest.fixture(scope="session")
def corpus():
    return builtin_corpus()
