import cmath
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))


def numeric(x):
    """Complex value of a field element at q = exp(2 pi i / d)."""
    q = cmath.exp(2j * cmath.pi / x.ctx.d)
    return sum(float(c) * q ** k for k, c in enumerate(x.coeffs))


def close(a, b, tol=1e-9):
    return abs(a - b) < tol


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
