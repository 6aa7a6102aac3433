from __future__ import annotations

import pytest

from pseudalg import bundled_spec, load_spec
from pseudalg.literal import parse_hexpr, parse_pseudotensor, parse_tensor


class Ctx:
    """A parsed algebra section plus literal helpers bound to its module."""

    def __init__(self, name: str):
        self.spec = load_spec(bundled_spec(name))
        self.section = self.spec.section()
        self.bundle = self.section.bundle()
        self.alg = self.bundle.alg
        self.hopf = self.alg.hopf
        self.module = self.alg.module

    def t(self, text: str, arity: int = 2):
        return parse_tensor(self.hopf, text, self.module, arity)

    def p(self, text: str, shape=(2, 1)):
        return parse_pseudotensor(self.hopf, text, self.module, shape)

    def h(self, text: str):
        return parse_hexpr(self.hopf, text)

    def gen(self, label: str):
        return self.module.gen(label)


@pytest.fixture
def cob() -> Ctx:
    return Ctx("coboundary")


@pytest.fixture
def tw() -> Ctx:
    return Ctx("twisted")


@pytest.fixture
def tw_dsq() -> Ctx:
    return Ctx("twisted_dsq")


@pytest.fixture
def load():
    return Ctx


_CRITERIA: dict = {}


def record_criterion(number: int, title: str, passed: bool, failed=()) -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
    if failed:
        line += f"  [failing: {'; '.join(failed)}]"
    _CRITERIA[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
