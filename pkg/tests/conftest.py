import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from lamphoro import bfs_ball  # noqa: E402


@pytest.fixture(scope="session")
def ball4():
    return bfs_ball(4)


@pytest.fixture(scope="session")
def ball6():
    return bfs_ball(6)
