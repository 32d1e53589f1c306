import random

import pytest
from hypothesis import strategies as st

from pderiv.poly import Poly, VarContext

X = VarContext(["x"])
XY = VarContext(["x", "y"])
XYZ = VarContext(["x", "y", "z"])


def random_poly(rng, ctx, max_terms=5, max_deg=4, coeff=16):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        while True:
            mono = tuple(rng.randint(0, max_deg) for _ in range(ctx.arity))
            if sum(mono) <= max_deg:
                break
        terms[mono] = rng.randint(-coeff, coeff)
    return Poly(ctx, terms)


@pytest.fixture
def rng():
    return random.Random(20261015)


@st.composite
def polys(draw, ctx=XY, max_terms=5, max_deg=4, coeff=20):
    n = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(n):
        mono = tuple(draw(st.integers(0, max_deg)) for _ in range(ctx.arity))
        terms[mono] = draw(st.integers(-coeff, coeff))
    return Poly(ctx, terms)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
