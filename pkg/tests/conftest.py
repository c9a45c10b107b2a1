import random
import sys
import re
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

from polarize import RationalMap, parse_poly1, parse_poly2
from polarize.poly import Poly1, Poly2

DATA = Path(__file__).parent / "data"

ROSE_X = "4 t (1 - t^2)^2 (1 - 14 t^2 + t^4)"
ROSE_Y = "8 t^2 (1 - t^2) (3 - 10 t^2 + 3 t^4)"
ROSE_DEN = "(1 + t^2)^5"

PROJ_COORDS = [
    "16 u v^2 (1 - u^2)",
    "8 u v (u^2 + 1) (v^2 - 1)",
    "4 v (1 - u^4) (v^2 - 1)",
    "4 v^2 (u^4 - 6 u^2 + 1)",
]
PROJ_DEN = "(u^2 + 1)^2 (v^2 + 1)^2"

ENNEPER = ["u - u^3/3 + u v^2", "v - v^3/3 + u^2 v", "u^2 - v^2"]


def load_listing(name):
    """Rows of a brace listing such as ``{{0, 0, 1}, {2/5, 0, 1}}``."""
    text = (DATA / f"{name}.txt").read_text()
    rows = re.findall(r"\{([^{}]*)\}", text)
    return [tuple(Fraction(x.strip()) for x in row.split(",")) for row in rows]


def rose_map():
    return RationalMap([parse_poly1(ROSE_X), parse_poly1(ROSE_Y)], parse_poly1(ROSE_DEN))


def proj_map():
    return RationalMap([parse_poly2(c) for c in PROJ_COORDS], parse_poly2(PROJ_DEN))


def enneper_map():
    return RationalMap([parse_poly2(c) for c in ENNEPER])


def rand_ratio(rng, lo=-5, hi=5, maxden=7):
    return Fraction(rng.randint(lo * maxden, hi * maxden), rng.randint(1, maxden))


def rand_poly1(rng, deg, terms=None):
    terms = terms if terms is not None else rng.randint(1, deg + 1)
    return Poly1((rng.randint(0, deg), rand_ratio(rng)) for _ in range(terms))


def rand_poly2_bideg(rng, p, q, terms=4):
    return Poly2(((rng.randint(0, p), rng.randint(0, q)), rand_ratio(rng)) for _ in range(terms))


def rand_poly2_total(rng, m, terms=4):
    out = []
    for _ in range(terms):
        h = rng.randint(0, m)
        out.append(((h, rng.randint(0, m - h)), rand_ratio(rng)))
    return Poly2(out)


ratios = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@pytest.fixture
def rng():
    return random.Random(20240517)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
