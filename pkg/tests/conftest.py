import pytest
from hypothesis import settings

from secmod import lattice

# the first call in a test may build a lattice, which is slow relative to the rest
settings.register_profile("secmod", deadline=None)
settings.load_profile("secmod")


@pytest.fixture
def fresh_lattices():
    """Drop cached lattices (and their per-lattice memo tables) around a test."""
    lattice._enumerate_cached.cache_clear()
    yield
    lattice._enumerate_cached.cache_clear()
