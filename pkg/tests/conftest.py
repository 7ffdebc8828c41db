import math

import numpy as np
import pytest
from hypothesis import strategies as st

from circledigons import kernels
from circledigons.geom import Circle

BACKENDS = sorted(kernels.BACKENDS)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
radii = st.floats(0.1, 10, allow_nan=False, allow_infinity=False)


@st.composite
def crossing_pairs(draw):
    """Two circles that properly cross, well away from tangency."""
    c = Circle.at(draw(coords), draw(coords), draw(radii))
    r2 = draw(radii)
    lo, hi = abs(c.radius - r2), c.radius + r2
    margin = 1e-3 * (hi - lo)
    d = draw(st.floats(lo + margin, hi - margin))
    phi = draw(st.floats(0, 2 * math.pi))
    return c, Circle.at(c.x + d * math.cos(phi), c.y + d * math.sin(phi), r2)


def sample_circle(c, count=64, offset=0.0):
    """Points on ``c`` at evenly spaced angles (shifted by ``offset`` of a step)."""
    t = (np.arange(count) + offset) * 2 * math.pi / count
    return np.column_stack([c.x + c.radius * np.cos(t), c.y + c.radius * np.sin(t)])


# --- acceptance report ------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    number, title = mark.args
    detail = dict(item.user_properties).get("detail", "")
    _criteria[number] = (title, "PASS" if rep.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict, detail = _criteria[number]
        line = f"criterion {number} {verdict}: {title}"
        terminalreporter.write_line(f"{line} ({detail})" if detail else line)
