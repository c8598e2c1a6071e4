import pytest
from hypothesis import settings, strategies as st

from dowkerlab.relation import make_relation

# oracles here are exponential; timing is covered by the acceptance criteria instead
settings.register_profile("default", deadline=None)
settings.load_profile("default")


TOY_PAIRS = [
    ("a", "2"), ("a", "4"), ("b", "1"), ("b", "2"),
    ("c", "1"), ("c", "4"), ("d", "1"), ("d", "3"),
]


@pytest.fixture
def toy():
    return make_relation(["a", "b", "c", "d"], ["1", "2", "3", "4"], TOY_PAIRS)


@st.composite
def relations(draw, max_x=5, max_y=5, min_x=0, min_y=0):
    nx = draw(st.integers(min_x, max_x))
    ny = draw(st.integers(min_y, max_y))
    xs = [f"x{i}" for i in range(nx)]
    ys = [f"y{j}" for j in range(ny)]
    cells = [(x, y) for x in xs for y in ys]
    mask = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
    return make_relation(xs, ys, [c for c, keep in zip(cells, mask) if keep])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("tests.test_acceptance") or sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(lines):
        terminalreporter.write_line(lines[n])
