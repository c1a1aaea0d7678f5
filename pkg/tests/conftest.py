import sys
from pathlib import Path

import pytest

# make the sibling oracle module importable from every test file
sys.path.insert(0, str(Path(__file__).parent))

from bergesat import make


@pytest.fixture
def two_level_tree():
    """3-uniform linear tree on 19 vertices: three edges through vertex 0,
    then two further edges hanging off one vertex of each of them."""
    edges = [
        (0, 1, 2), (0, 3, 4), (0, 5, 6),
        (1, 7, 8), (1, 9, 10),
        (3, 11, 12), (3, 13, 14),
        (5, 15, 16), (5, 17, 18),
    ]
    return make(19, 3, edges)


@pytest.fixture
def tight_cycle_7():
    """3-uniform tight cycle on 7 vertices, every vertex in 3 edges."""
    edges = [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 2) % 7))) for i in range(7)]
    return make(7, 3, edges)
