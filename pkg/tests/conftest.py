import sys
from pathlib import Path

import pytest

from cartanbundle.sampling import make_rng

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable


@pytest.fixture
def rng():
    return make_rng(20260823, 0)


def rng_for(stream):
    return make_rng(20260823, stream)
