from itertools import product

import pytest

from reflexfan import polytope as pt

E1, E2, E3, E4 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
UNIT = [E1, E2, E3, E4]

# the worked seven-vertex smooth Fano polytope and its two special fans
SEVEN_VERTICES = [
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (1, 1, 1, 1), (-1, -1, -1, -1), (0, 0, 0, -1),
]

C1 = [E1, E2, E3, (0, 0, 0, -1)]
C2 = [E1, E2, E3, (1, 1, 1, 1)]
C3 = [E1, E2, E3, (-1, -1, -1, -1)]
C4 = [E1, E2, E3, E4]
C5 = [E1, E2, (1, 1, 1, 1), (0, 0, 0, -1)]
C6 = [E1, E3, (1, 1, 1, 1), (0, 0, 0, -1)]
C7 = [E2, E3, (1, 1, 1, 1), (0, 0, 0, -1)]


@pytest.fixture(scope="session")
def cross():
    return pt.hull(UNIT + [tuple(-x for x in v) for v in UNIT])


@pytest.fixture(scope="session")
def cube():
    return pt.hull(list(product((-1, 1), repeat=4)))


@pytest.fixture(scope="session")
def seven(
):
    return pt.hull(SEVEN_VERTICES)


@pytest.fixture(scope="session")
def p4_simplex():
    return pt.hull(UNIT + [(-1, -1, -1, -1)])


@pytest.fixture(scope="session")
def square_sum():
    return pt.hull([
        (1, 1, 0, 0), (1, -1, 0, 0), (-1, 1, 0, 0), (-1, -1, 0, 0),
        (0, 0, 1, 1), (0, 0, 1, -1), (0, 0, -1, 1), (0, 0, -1, -1),
    ])


def cone_indices(fan_points, vectors):
    """Index tuple of the given generator vectors in a fan point table."""
    return tuple(sorted(fan_points.index(tuple(v)) for v in vectors))
