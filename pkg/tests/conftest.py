import pytest

from cwrinv.catalog import bundled_records, find_record, load_catalog, bundled_path


@pytest.fixture(scope="session")
def records():
    return bundled_records()


@pytest.fixture(scope="session")
def table_records():
    return load_catalog(bundled_path("knots_upto8"))


@pytest.fixture(scope="session")
def knot(records):
    def get(name):
        return find_record(name, records).diagram()
    return get


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.summary_lines():
            terminalreporter.write_line(line)
