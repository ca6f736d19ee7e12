from collections import OrderedDict

_results = OrderedDict()


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): numbered acceptance criterion")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args))


def pytest_runtest_logreport(report):
    crit = dict(report.user_properties).get("criterion")
    if crit is None:
        return
    n, title = crit
    entry = _results.setdefault(n, {"title": title, "failed": [], "ran": False})
    if report.when == "call" or report.outcome != "passed":
        entry["ran"] = True
    if report.outcome == "failed":
        entry["failed"].append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        e = _results[n]
        status = "FAIL" if e["failed"] else "PASS"
        line = f"AC{n:<2} {status}  {e['title']}"
        if e["failed"]:
            line += f"  [failed: {', '.join(e['failed'])}]"
        terminalreporter.write_line(line)
