def pytest_runtest_logreport(report):
    # One visible pass/fail line per acceptance criterion.
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        print(f"\n[acceptance] {name}: {'PASS' if report.passed else 'FAIL'}", flush=True)
    elif report.failed:  # setup/teardown error
        print(f"\n[acceptance] {name}: FAIL ({report.when})", flush=True)
