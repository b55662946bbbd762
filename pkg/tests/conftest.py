"""Shared pytest plumbing: acceptance criteria summary lines.

The acceptance tests record one line per criterion; the terminal summary
hook prints them uncaptured so every pytest invocation shows the verdicts.
"""

from __future__ import annotations

_criterion_lines: dict[int, str] = {}


def record_criterion(num: int, label: str, ok: bool, detail: str = "") -> None:
    verdict = "PASS" if ok else "FAIL"
    tail = f" [{detail}]" if detail else ""
    _criterion_lines[num] = f"criterion {num} ({label}): {verdict}{tail}"


def pytest_terminal_summary(terminalreporter):
    if _criterion_lines:
        terminalreporter.section("acceptance criteria")
        for num in sorted(_criterion_lines):
            terminalreporter.line(_criterion_lines[num])
