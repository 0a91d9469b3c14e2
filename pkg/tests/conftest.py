import pytest

from singlish_translit.corpus import fixture_lexicon
from singlish_translit.rules import load_default_rules


@pytest.fixture(scope="session")
def table():
    return load_default_rules()


@pytest.fixture(scope="session")
def lexicon():
    return fixture_lexicon()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, status, detail in RESULTS:
        terminalreporter.write_line(f"{status}  {name}: {detail}")
