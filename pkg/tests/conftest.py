ACCEPTANCE = {}


def record(num: int, name: str, ok: bool, detail: str = ""):
    ACCEPTANCE[num] = (name, ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num}: {name} {detail}".rstrip())
