import pytest
from hypothesis import strategies as st

from mixsat.mixed_radix import Base

# Bases used throughout: constant, paper examples, and a few irregular heads.
TEST_BASES = ["2", "3", "3,2,5,4", "6,2", "5,2"]


@pytest.fixture(params=TEST_BASES)
def base(request):
    return Base.parse(request.param)


bases = st.builds(
    Base,
    st.lists(st.integers(2, 9), max_size=4).map(tuple),
    st.integers(2, 9),
)
