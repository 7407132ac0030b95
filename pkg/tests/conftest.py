import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--hard",
        action="store_true",
        default=False,
        help="run the long complete-search stretch checks",
    )


@pytest.fixture
def hard_mode(request):
    return request.config.getoption("--hard")


def pytest_runtest_logreport(report):
    # One visible line per acceptance criterion, pass or fail.
    if report.when == "call" and "test_acceptance" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        status = "PASS" if report.passed else ("FAIL" if report.failed else "SKIP")
        print(f"\n[acceptance] {name}: {status}")
