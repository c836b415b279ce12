import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest

from lnq.geometry import enumerate_poset
from lnq.gfq import field_for_order
from lnq.operators import OperatorSet
from lnq.qscalar import Params

ORACLE = json.loads((Path(__file__).parent / "oracle_values.json").read_text())


@lru_cache(maxsize=None)
def poset(n, q):
    return enumerate_poset(n, field_for_order(q))


@lru_cache(maxsize=None)
def operators(n, q, phi=1):
    return OperatorSet(poset(n, q), Params(n, q, Fraction(phi)))


def frac(x):
    return Fraction(x) if not isinstance(x, Fraction) else x


@pytest.fixture
def oracle():
    return ORACLE


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import OUTCOMES, outcome_line

    if OUTCOMES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(OUTCOMES):
            terminalreporter.write_line(outcome_line(k))
