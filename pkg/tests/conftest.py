from __future__ import annotations

import pytest
from hypothesis import strategies as st

from localelab.catalog import downset_lattice, generate_catalog
from localelab.frame import builtin


@pytest.fixture(scope="session")
def catalog():
    return generate_catalog(3)


@pytest.fixture(scope="session")
def C2():
    return builtin("C2")


@pytest.fixture(scope="session")
def C3():
    return builtin("C3")


@pytest.fixture(scope="session")
def C4():
    return builtin("C4")


@pytest.fixture(scope="session")
def B4():
    return builtin("B4")


@st.composite
def posets(draw, max_points=4):
    """Random poset as below-bitmasks: point j may sit over any earlier points."""
    k = draw(st.integers(1, max_points))
    below = []
    for j in range(k):
        mask = draw(st.integers(0, (1 << j) - 1)) if j else 0
        # transitive closure
        for i in range(j):
            if mask >> i & 1:
                mask |= below[i]
        below.append(mask)
    return k, tuple(below)


@st.composite
def frames(draw, max_points=4):
    k, below = draw(posets(max_points))
    return downset_lattice(k, below)
