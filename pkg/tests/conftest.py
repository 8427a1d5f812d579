import numpy as np
import pytest

from sp4osc.fock import FockSpace
from sp4osc.lie_matrix import sp4_generators
from sp4osc.quantization import dirac_representation, pipeline_representation


@pytest.fixture(scope="session")
def gens():
    return sp4_generators()


@pytest.fixture(scope="session")
def space8():
    return FockSpace(2, 8)


@pytest.fixture(scope="session")
def dirac8(space8):
    return dirac_representation(space8)


@pytest.fixture(scope="session")
def pipeline8(space8):
    return pipeline_representation(space8)


def dense_ladders(modes, cutoff):
    """Independent reference: a_k as Kronecker products of a single-mode matrix."""
    single = np.diag(np.sqrt(np.arange(1, cutoff + 1)), k=1).astype(complex)
    eye = np.eye(cutoff + 1)
    out = []
    for k in range(modes):
        m = np.array([[1.0]])
        for j in range(modes):
            m = np.kron(m, single if j == k else eye)
        out.append(m)
    return out
