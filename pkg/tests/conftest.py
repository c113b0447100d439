"""Shared fixtures: the enumeration corpus, reference braces, and a summary
hook that prints one PASS/FAIL line per acceptance criterion."""

import numpy as np
import pytest

from braceforge.brace import brace_from_group, validate_brace
from braceforge.constructions import (
    CocycleDatum,
    brace_from_cocycle,
    brace_from_ring,
    enumerate_braces,
)
from braceforge.groups import abelian, cyclic, dihedral


@pytest.fixture(scope="session")
def corpus18():
    """Every brace of orders 1 through 8, labeled, built once per session."""
    out = []
    for n in range(1, 9):
        for i, A in enumerate(enumerate_braces(n, cap=8)):
            out.append((f"order {n} #{i}", A))
    return out


def build_funny_brace():
    """The order-16 brace on Z/8 x Z/2 induced by a bijective 1-cocycle on
    the dihedral group of order 16; encodes m*a + n*b as 2m + n."""
    G = dihedral(16)  # index of r^i s^j is i + 8j
    X = abelian([8, 2])

    def xenc(m, n):
        return 2 * (m % 8) + (n % 2)

    r_act = [0] * 16
    s_act = [0] * 16
    for m in range(8):
        for n in range(2):
            r_act[xenc(m, n)] = xenc(m + 4 * n, m + n)
            s_act[xenc(m, n)] = xenc(3 * m + 4 * n, n)

    def compose(p, q):
        return [p[q[k]] for k in range(16)]

    rows = [None] * 16
    for i in range(8):
        for j in range(2):
            p = list(range(16))
            for _ in range(i):
                p = compose(r_act, p)
            if j:
                p = compose(p, s_act)
            rows[i + 8 * j] = p
    pi = (0, 2, 5, 15, 8, 10, 13, 7, 3, 12, 14, 1, 11, 4, 6, 9)
    return CocycleDatum(G=G, X=X, action=np.array(rows), pi=pi)


@pytest.fixture(scope="session")
def funny_brace():
    return brace_from_cocycle(build_funny_brace())


def build_fix_brace():
    """Z/3 x| Z/2 with inversion action, pairs (x, y) at index 3y + x."""
    def enc(x, y):
        return 3 * (y % 2) + (x % 3)

    add = np.zeros((6, 6), dtype=int)
    circ = np.zeros((6, 6), dtype=int)
    for x1 in range(3):
        for y1 in range(2):
            for x2 in range(3):
                for y2 in range(2):
                    i, j = enc(x1, y1), enc(x2, y2)
                    add[i, j] = enc(x1 + x2, y1 + y2)
                    s = 1 if y1 == 0 else -1
                    circ[i, j] = enc(x1 + s * x2, y1 + y2)
    return validate_brace(add, circ)


@pytest.fixture(scope="session")
def fix_brace():
    return build_fix_brace()


def build_ring_brace():
    """Adjoint brace of the commutative F2-ring on x, y with x^2 = y^2 = 0;
    the element ax + by + cxy sits at index 4a + 2b + c."""
    def bits(i):
        return (i >> 2) & 1, (i >> 1) & 1, i & 1

    def idx(a, b, c):
        return 4 * (a % 2) + 2 * (b % 2) + (c % 2)

    add = np.zeros((8, 8), dtype=int)
    mul = np.zeros((8, 8), dtype=int)
    for i in range(8):
        a1, b1, c1 = bits(i)
        for j in range(8):
            a2, b2, c2 = bits(j)
            add[i, j] = idx(a1 + a2, b1 + b2, c1 + c2)
            mul[i, j] = idx(0, 0, a1 * b2 + b1 * a2)
    return brace_from_ring(add, mul)


@pytest.fixture(scope="session")
def ring_brace():
    return build_ring_brace()


@pytest.fixture(scope="session")
def trivial_z2():
    return brace_from_group(cyclic(2))


# ------------------------------------------------- acceptance summary lines

_CRITERIA = {
    "01": "order-16 golden strong series",
    "02": "fix example verdicts",
    "03": "ring brace orbit and restriction",
    "04": "corpus sweep star/YBE/involutive",
    "05": "strong iff left and right nilpotent",
    "06": "mpl iff right nilpotent and nilpotent type",
    "07": "left nilpotent iff circle nilpotent",
    "08": "sylow product decomposition",
    "09": "A_p star A_q vanishing",
    "10": "wreath socle",
    "11": "opposite A5 perfect with zero socle",
    "12": "integer window checks",
    "13": "theorem property suites",
}

_acceptance_outcomes: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    num = report.nodeid.split("test_criterion_")[1][:2]
    if report.when == "call":
        _acceptance_outcomes[num] = "PASS" if report.passed else "FAIL"
    elif report.when == "setup" and (report.failed or report.skipped):
        _acceptance_outcomes[num] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for num in sorted(_acceptance_outcomes):
        name = _CRITERIA.get(num, "?")
        verdict = _acceptance_outcomes[num]
        terminalreporter.write_line(f"ACCEPTANCE {num} {name}: {verdict}")
