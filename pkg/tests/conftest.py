import gc

import pytest


@pytest.fixture(autouse=True, scope="session")
def _no_gc():
    # the engine's state is cycle-free; collector passes over the large
    # live dicts dominate runtime on big streams
    gc.disable()
    yield
    gc.enable()
