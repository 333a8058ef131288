import pytest
from hypothesis import strategies as st

from wcqsym.compositions import enumerate_compositions
from wcqsym.monoid import EPS

entries = st.one_of(st.just(EPS), st.integers(min_value=1, max_value=3))


def compositions(max_len=4):
    return st.lists(entries, max_size=max_len).map(tuple)


@pytest.fixture(scope="session")
def comps42():
    return enumerate_compositions(4, 2)


@pytest.fixture(scope="session")
def comps32():
    return enumerate_compositions(3, 2)
