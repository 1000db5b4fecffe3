import pytest
from hypothesis import HealthCheck, settings, strategies as st

from tfmzv.fp import PrimeCtx
from tfmzv.words import WordCombo, z_encode

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def index_st(max_weight=6, max_depth=None, min_size=1):
    """Indices with total weight <= max_weight."""
    depth = max_depth or max_weight
    return (st.lists(st.integers(1, max_weight), min_size=min_size, max_size=depth)
            .filter(lambda k: sum(k) <= max_weight).map(tuple))


def word_st(max_len=6, min_len=0):
    return st.text(alphabet="xy", min_size=min_len, max_size=max_len)


def h1_word_st(max_weight=5):
    return index_st(max_weight, min_size=0).map(z_encode)


def h1_combo_st(max_weight=4, max_terms=3):
    """Small combinations in H^1_t with coefficients in Z[t]."""
    coeff = st.lists(st.integers(-3, 3), min_size=1, max_size=2)
    term = st.tuples(h1_word_st(max_weight), coeff)
    return st.lists(term, max_size=max_terms).map(
        lambda ts: WordCombo.from_graded((w, d, c) for w, cs in ts for d, c in enumerate(cs)))


@pytest.fixture(scope="session")
def ctx5():
    return PrimeCtx(5)


@pytest.fixture(scope="session")
def ctx7():
    return PrimeCtx(7)
