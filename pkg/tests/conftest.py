import pytest
from hypothesis import strategies as st

from twelvepoint.classify import GENERATORS, IDENTITY, UnimodularMap, enumerate_polygons, enumerate_reflexive
from twelvepoint.lattice import LatticePoint, validate_reflexive

SQUARE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
DIAMOND = [(1, 0), (0, 1), (-1, 0), (0, -1)]
BIG_TRIANGLE = [(-1, -1), (2, -1), (-1, 2)]
SMALL_TRIANGLE = [(-1, -1), (1, 0), (0, 1)]

_ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def square():
    return validate_reflexive(SQUARE)


@pytest.fixture
def diamond():
    return validate_reflexive(DIAMOND)


@pytest.fixture
def big_triangle():
    return validate_reflexive(BIG_TRIANGLE)


@pytest.fixture
def small_triangle():
    return validate_reflexive(SMALL_TRIANGLE)


@pytest.fixture(scope="session")
def classes():
    return enumerate_reflexive(4)


@pytest.fixture(scope="session")
def representatives(classes):
    return [c.representative for c in classes]


@pytest.fixture(scope="session")
def corpus3():
    return enumerate_polygons(3)


@pytest.fixture(scope="session")
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(_ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def _compose(gens, offset):
    u = IDENTITY
    for g in gens:
        u = u.then(g)
    return UnimodularMap(u.a, u.b, u.c, u.d, LatticePoint(*offset))


# products of elementary shears and flips, plus a translation
unimodular_maps = st.builds(
    _compose,
    st.lists(st.sampled_from(GENERATORS), max_size=8),
    st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
)
