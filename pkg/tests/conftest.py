import pytest

from afmatrix import parse_af

X_APX = "arg(a). arg(b). arg(c). arg(d). att(a,b). att(b,c). att(c,d). att(d,a)."


@pytest.fixture
def x_af():
    return parse_af(X_APX)


@pytest.fixture
def chain_af():
    return parse_af("arg(a). arg(b). arg(c). att(a,b). att(b,c).")


@pytest.fixture
def cycle3_af():
    return parse_af("arg(a). arg(b). arg(c). att(a,b). att(b,c). att(c,a).")


def ids(af, *names):
    return {af.index[n] for n in names}


# (criterion, passed, detail) rows filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
