"""Shared fixtures: standard sequences for the four families."""

import pytest

from polyreal import AlgebraType, build_adapted, build_root_system


def make_seq(family: str, n: int, word=None):
    if word is None:
        word = [1, 2] if n == 2 else [2, 1] + list(range(3, n + 1))
    return build_adapted(build_root_system(AlgebraType(family, n)), word)


@pytest.fixture
def a1_n2():
    return make_seq("A1", 2)


@pytest.fixture
def a1_n3():
    return make_seq("A1", 3)


@pytest.fixture
def a2_n3():
    return make_seq("A2", 3)


@pytest.fixture
def c1_n3():
    return make_seq("C1", 3)


@pytest.fixture
def d2_n3():
    return make_seq("D2", 3)
