from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("ci", max_examples=200, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_RESULTS: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the summary.

    Usage: ``criterion(3, "delta-2 engine")`` at the start of the test and
    ``criterion.note("...")`` to attach measured values.
    """

    class Recorder:
        number = 0
        title = ""
        detail = ""

        def __call__(self, number: int, title: str) -> Recorder:
            self.number, self.title = number, title
            return self

        def note(self, text: str) -> None:
            self.detail = text

    rec = Recorder()
    yield rec
    call = getattr(request.node, "rep_call", None)
    if rec.number:
        passed = call is not None and call.passed
        _RESULTS[rec.number] = (rec.title, passed, rec.detail)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, f"rep_{rep.when}", rep)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, passed, detail = _RESULTS[number]
        status = "PASS" if passed else "FAIL"
        line = f"criterion {number:2d} {status}  {title}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
