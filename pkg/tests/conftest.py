from __future__ import annotations

import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from peterson_paving.rootsys import root_system
from peterson_paving.weyl import from_word

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2"]
ALL_TYPES = SMALL_TYPES + ["B4", "C4", "D5", "F4", "E6", "E7", "E8"]

small_types = st.sampled_from(SMALL_TYPES)
all_types = st.sampled_from(ALL_TYPES)


@st.composite
def weyl_elements(draw, type_name: str | None = None, max_len: int = 14):
    name = type_name or draw(small_types)
    rs = root_system(name)
    word = draw(st.lists(st.integers(1, rs.rank), max_size=max_len))
    return rs, from_word(rs, word)


@st.composite
def subsets_of(draw, rank: int):
    return frozenset(draw(st.sets(st.integers(1, rank))))


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record(number: int, passed: bool | None, detail: str) -> None:
    status = "SKIP" if passed is None else ("PASS" if passed else "FAIL")
    ACCEPTANCE[number] = (status, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {detail}")
