import pytest

from intervalpow import _kernels

ACCEPTANCE_LINES = []


def record(criterion, passed, detail=""):
    """Queue one acceptance line for the terminal summary."""
    line = f"{'PASS' if passed else 'FAIL'}  {criterion}"
    if detail:
        line += f"  ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section(f"acceptance criteria (kernel backend: {_kernels.BACKEND})")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(params=sorted(_kernels.backends()))
def backend(request, monkeypatch):
    """Run a test once per available sampling backend."""
    impl = _kernels.backends()[request.param]
    monkeypatch.setattr(_kernels, "odd_fractions", impl.odd_fractions)
    monkeypatch.setattr(_kernels, "power_samples", impl.power_samples)
    return request.param
