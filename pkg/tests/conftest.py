import pytest

import jjarray as jj


@pytest.fixture(scope="session")
def triangle():
    return jj.builtin_topology("triangle-stack-4")


@pytest.fixture(scope="session")
def triangle_system(triangle):
    return jj.assemble(triangle)


@pytest.fixture(scope="session")
def triangle_pi_system():
    return jj.assemble(jj.builtin_topology("triangle-stack-4-pi"))


@pytest.fixture(scope="session")
def single_loop():
    return jj.ArrayTopology("loop", (jj.Plaquette(1, 3),))


@pytest.fixture(scope="session")
def single_loop_system(single_loop):
    return jj.assemble(single_loop)


@pytest.fixture(scope="session")
def builtin_systems():
    return {name: jj.assemble(jj.builtin_topology(name)) for name in jj.BUILTIN_NAMES}
