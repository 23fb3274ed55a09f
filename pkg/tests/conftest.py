from pathlib import Path

import pytest

from evocrib import parse_chromosome
from helpers import make_instance

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def synth():
    return make_instance(0)


@pytest.fixture(scope="session")
def reversal_elites():
    lines = (DATA_DIR / "reversal_elites.txt").read_text(encoding="utf-8").splitlines()
    chromosomes = [parse_chromosome(line) for line in lines if line and not line.startswith("#")]
    assert len(chromosomes) == 10
    return chromosomes
