from pathlib import Path

import pytest

from semiprim.freealg import Alphabet, MonomialOrder, Poly
from semiprim.monomial import ObstructionSet
from semiprim.textio import parse_presentation

ROOT = Path(__file__).resolve().parent.parent
PRESENTATIONS = ROOT / "presentations"
GOLDEN = Path(__file__).resolve().parent / "golden"

XY = Alphabet(("x", "y"))


def words(alphabet, *texts):
    """'xyy' -> (0, 1, 1) for single-character letter names."""
    return tuple(alphabet.word(*t) for t in texts)


def W(text, alphabet=XY):
    return alphabet.word(*text)


def omega(*texts, alphabet=XY):
    return ObstructionSet(words(alphabet, *texts), alphabet)


def poly(text, order):
    """Parse a polynomial over the order's alphabet."""
    from semiprim.textio import parse_polynomial

    return parse_polynomial(text, order.alphabet)


@pytest.fixture
def yx_order():
    """deglex on {x, y} with y < x."""
    return MonomialOrder(XY, (1, 0))


@pytest.fixture
def pres():
    def load(name):
        return parse_presentation((PRESENTATIONS / name).read_text())
    return load


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split("[")[1].split("]")[0])):
        terminalreporter.write_line(line)
