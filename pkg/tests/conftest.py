import pytest

from sympcoh import acx, catalog, cec, symplectic


@pytest.fixture(scope="session")
def structures():
    """One validated symplectic structure per catalog entry that has one."""
    out = {}
    for name in catalog.names():
        entry = catalog.get(name)
        if entry.default_omega is not None:
            out[name] = symplectic.make(entry.algebra, entry.default_omega)
    return out


@pytest.fixture(scope="session")
def reports(structures):
    return {name: symplectic.report(s) for name, s in structures.items()}


@pytest.fixture(scope="session")
def acs_structures():
    out = {}
    for name in catalog.names():
        entry = catalog.get(name)
        if entry.default_j is not None:
            out[name] = acx.AlmostComplexStructure(entry.algebra, entry.default_j)
    return out


@pytest.fixture(scope="session")
def betti_tables():
    return {name: cec.betti(catalog.get(name).algebra) for name in catalog.names()}
