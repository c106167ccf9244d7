import pytest
from hypothesis import strategies as st

from softalg.setrep import Cof, Fin, SubsetRep, UniverseCtx
from softalg.softset import make_softset

FINITE = UniverseCtx.finite(["u1", "u2", "u3"], ["e1", "e2", "e3"])
COUNTABLE = UniverseCtx.countable(["e1", "e2", "e3"])
POOL = [str(i) for i in range(8)]


@pytest.fixture
def fin_ctx():
    return FINITE


@pytest.fixture
def cnt_ctx():
    return COUNTABLE


def subsets(ctx):
    if ctx.is_finite:
        return st.sets(st.sampled_from(ctx.elements)).map(lambda a: Fin(*a))
    atoms = st.sets(st.sampled_from(POOL), max_size=4)
    return st.one_of(atoms.map(lambda a: Fin(*a)), atoms.map(lambda a: Cof(*a)))


@st.composite
def softsets(draw, ctx, domain=None):
    if domain is None:
        domain = draw(st.sets(st.sampled_from(ctx.param_space)))
    return make_softset(domain, {p: draw(subsets(ctx)) for p in domain}, ctx)


any_ctx = st.sampled_from([FINITE, COUNTABLE])


def probe_window(ctx, *sets):
    """Atoms on which two representations must agree to be equal."""
    if ctx.is_finite:
        return list(ctx.elements)
    seen = {a for s in sets for a in s.atoms}
    fresh = [str(i) for i in range(100, 110)]
    return sorted(seen) + fresh


def members(s: SubsetRep, window):
    return {a for a in window if a in s}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
