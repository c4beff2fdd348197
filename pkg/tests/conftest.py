import pytest

from foonplan import KitchenItem, ObjectNode, merge, parse_subgraph

SWEET_TEA_TEXT = """\
//
O tea cup 0
S unsweetened tea { tea, sugar }
O spoon 1
S clean
M stir Assumed
O tea 0
S sweetened tea
O tea cup 0
S sweetened tea { tea, sugar }
O spoon 1
S dirty
//
"""

TEA_KITCHEN = (
    KitchenItem("tea cup", ["unsweetened tea"], ["tea", "sugar"]),
    KitchenItem("spoon", ["clean"]),
)
SWEET_TEA = ObjectNode("tea", ["sweetened tea"])


def obj(name, state="s", flag=0, ingredients=()):
    return ObjectNode(name, [state], ingredients, flag)


def stock(*names, state="s"):
    return tuple(KitchenItem(n, [state]) for n in names)


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, outcome = _criteria[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line("[%s] %d. %s" % (status, number, title))


@pytest.fixture
def tea_units():
    return parse_subgraph(SWEET_TEA_TEXT)


@pytest.fixture
def tea_foon(tea_units):
    return merge([tea_units])
