import random

import pytest

from leibniz_homology import Signature, build_affine


@pytest.fixture
def rng():
    return random.Random(20240811)


@pytest.fixture(params=[(2, 2), (3, 1), (1, 3)], ids=lambda pq: f"{pq[0]}_{pq[1]}")
def sig4(request):
    return Signature(*request.param)


@pytest.fixture
def sig22():
    return Signature(2, 2)


@pytest.fixture
def sig31():
    return Signature(3, 1)


@pytest.fixture
def h22(sig22):
    return build_affine(sig22)


@pytest.fixture
def h31(sig31):
    return build_affine(sig31)
