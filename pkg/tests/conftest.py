import time

from hypothesis import HealthCheck, settings

# fixed seed: every run draws the same examples
settings.register_profile("repro", derandomize=True, deadline=None, max_examples=150,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")

ACCEPTANCE_LINES = []
_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    elapsed = time.perf_counter() - _START
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
    status = "PASS" if elapsed < 300 else "FAIL"
    terminalreporter.write_line(
        f"criterion 8 (suite runtime): {status} whole session took {elapsed:.1f} s (limit 300 s)")
