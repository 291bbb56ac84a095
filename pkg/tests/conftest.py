import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from stringy_calc import hilbert_euler_table  # noqa: E402


@pytest.fixture(scope="session")
def a_table():
    """a_0..a_120; long enough for the Vafa-Witten index 4n-3 up to n = 30."""
    return hilbert_euler_table(120)
