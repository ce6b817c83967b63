from hypothesis import settings

settings.register_profile("desk", max_examples=60, deadline=None)
settings.load_profile("desk")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
