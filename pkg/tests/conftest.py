import pytest

from quasiatom import kernels
from quasiatom.solver import find_bound_states
from quasiatom.units import make_unit_system

BACKENDS = [kernels.python_backend]
if kernels.compiled_backend() is not None:
    BACKENDS.append(kernels.compiled_backend())


@pytest.fixture(params=BACKENDS, ids=lambda b: b.BACKEND)
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    monkeypatch.setattr(kernels, "backend", request.param)
    return request.param


@pytest.fixture(scope="session")
def units():
    return make_unit_system()


@pytest.fixture(scope="session")
def solutions(units):
    return find_bound_states(units)


@pytest.fixture(scope="session")
def bohr(solutions):
    return solutions[0]


@pytest.fixture(scope="session")
def relativistic(solutions):
    return solutions[1]
