# Copyright (c) 2025 natrep authors.
#   Licensed under the MIT license.

import pytest
from hypothesis import settings

settings.register_profile("natrep", deadline=None, max_examples=200)
settings.load_profile("natrep")


@pytest.fixture(scope="session")
def small_levels():
    from natrep.tree import level
    return {h: level(h) for h in range(1, 10)}
