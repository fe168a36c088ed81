import pytest

# (criterion number, passed, one-line description) filled by test_acceptance
ACCEPTANCE: list[tuple[int, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", help="also run tests marked slow")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running smoke test, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow; pass --runslow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, text in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'} criterion {number}: {text}")


@pytest.fixture
def record_criterion():
    def record(number: int, passed: bool, text: str) -> None:
        ACCEPTANCE.append((number, bool(passed), text))
        print(f"{'PASS' if passed else 'FAIL'} criterion {number}: {text}")
        assert passed, text

    return record
