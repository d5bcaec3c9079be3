from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from orbits.groups import GroupId, Point
from orbits.scalar import TAU, Scalar

settings.register_profile("default", deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

GROUPS = [g.value for g in GroupId]

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, fractions, fractions)
small_ints = st.integers(min_value=0, max_value=4)


def rational_points(lo=-6, hi=6):
    f = st.fractions(min_value=lo, max_value=hi, max_denominator=6)
    return st.builds(Point, f, f)


# nonnegative values in Q(tau), kept small so brute force stays cheap
_nonneg = st.builds(lambda a, b: Scalar(a) + Scalar(b) * TAU,
                    st.integers(0, 3), st.integers(0, 2)) | \
    st.sampled_from([Scalar(0), Scalar(Fraction(1, 2)), TAU - 1, 2 - TAU, 2 * TAU - 3])


def dominant_points(group: str):
    if group == "H2":
        return st.builds(Point, _nonneg, _nonneg)
    return st.builds(Point, small_ints, small_ints)


@pytest.fixture(params=GROUPS)
def group(request):
    return request.param


def pytest_configure(config):
    config.acceptance_lines = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
