import pytest

from src.services.basic_pair import BasicPair


@pytest.fixture
def witness_pair() -> BasicPair:
    """(2, ⊩, 3), x ⊩ y ⇔ x = y ∨ y = 2: ext 0 = {0}, ext 1 = {1}, ext 2 = {0,1}."""
    return BasicPair.from_masks(2, 3, (0b101, 0b110))


@pytest.fixture
def identity_pair() -> BasicPair:
    return BasicPair.identity(2)


@pytest.fixture
def coarse_pair() -> BasicPair:
    """(2, ⊩, 1) с единственной окрестностью ext 0 = X — не хаусдорфово."""
    return BasicPair.from_masks(2, 1, (0b1, 0b1))
