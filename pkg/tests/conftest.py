import numpy as np
import pytest
from hypothesis import strategies as st

from osbornkit.corpus import builtin, iter_reduced_tables
from osbornkit.loop import Loop


@pytest.fixture(scope="session")
def z2():
    return builtin("Z2")


@pytest.fixture(scope="session")
def z3():
    return builtin("Z3")


@pytest.fixture(scope="session")
def z4():
    return builtin("Z4")


@pytest.fixture(scope="session")
def v4():
    return builtin("Z2xZ2")


@pytest.fixture(scope="session")
def s3():
    return builtin("S3")


@pytest.fixture(scope="session")
def n5():
    return builtin("N5")


@pytest.fixture(scope="session")
def m12():
    return builtin("M(S3,2)")


SMALL_TABLES = [t for n in range(1, 6) for t in iter_reduced_tables(n)]


def relabel(loop: Loop, perm) -> Loop:
    """Isomorphic copy of ``loop`` under the relabeling ``x -> perm[x]``."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    return Loop(perm[loop.table[inv[:, None], inv[None, :]]])


@st.composite
def small_loops(draw, max_order=5):
    """A reduced loop of order <= max_order, randomly relabeled so e need not be 0."""
    tables = [t for t in SMALL_TABLES if len(t) <= max_order]
    table = draw(st.sampled_from(tables))
    n = len(table)
    perm = draw(st.permutations(range(n)))
    return relabel(Loop(table), perm)
