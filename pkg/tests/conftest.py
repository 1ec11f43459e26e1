"""Shared fixtures: root systems are built once per session."""
import pytest

from wonderful.lie.root_system import build_root_system


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A1")


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A2")


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A3")


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B2")


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G2")


@pytest.fixture(scope="session")
def all_types(a1, a2, a3, b2, g2):
    return [a1, a2, a3, b2, g2]
