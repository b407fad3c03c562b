import pytest

from helpers import (
    make_mono16_spec,
    make_pair2_css,
    make_rm_spec,
    make_steane7_css,
)


@pytest.fixture(scope="session")
def mono16_spec():
    return make_mono16_spec()


@pytest.fixture(scope="session")
def mono16_css(mono16_spec):
    return mono16_spec.induced_css()


@pytest.fixture(scope="session")
def rm_spec():
    return make_rm_spec()


@pytest.fixture(scope="session")
def rm_css(rm_spec):
    return rm_spec.induced_css()


@pytest.fixture(scope="session")
def pair2_css():
    return make_pair2_css()


@pytest.fixture(scope="session")
def steane7_css():
    return make_steane7_css()
