import pytest

from sbpart import typeb


@pytest.fixture
def parse():
    return typeb.parse_partition


# partitions with known reference statistic values
PI7 = "0 2 -2/-1 7/1 -7/-3 -6/3 6/-4 5/4 -5"
PI8 = "0 1 -1 3 -3/-2 4/2 -4/-5/5/-6 -8/6 8/-7/7"
# n=9 partition behind the rcb and lcs worked values
PI9 = "0 -1 1 3 -3/-2 4/2 -4/-5/5/-6 -8/6 8/-7 9/7 -9"


# filled by test_acceptance.criterion(); printed after the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[num])
