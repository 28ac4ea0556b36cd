import pytest

from axialcheck.fields import FieldDescriptor


@pytest.fixture(scope="session")
def Q():
    return FieldDescriptor.rationals()


@pytest.fixture(scope="session")
def QETA():
    return FieldDescriptor.rational_functions("eta")


@pytest.fixture(scope="session")
def GF5():
    return FieldDescriptor.prime(5)


@pytest.fixture(scope="session")
def GF7():
    return FieldDescriptor.prime(7)


@pytest.fixture(scope="session")
def NF():
    # eta^2 + 2*eta - 1 = 0
    return FieldDescriptor.number_field((-1, 2, 1))
