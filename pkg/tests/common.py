"""Shared fixtures: the four reference structures and small helpers."""

from pathlib import Path

from superbrackets import Manifold, HigherPoissonStructure, GradedPolynomial
from superbrackets.dsl import Session, parse_expr

ROOT = Path(__file__).resolve().parent.parent
FIXTURE_DIR = ROOT / "fixtures"

M2 = Manifold([("x", 0), ("y", 0)])
M3 = Manifold([("x", 0), ("y", 0), ("th", 1)])
M1 = Manifold([("x", 0)])


def e(M, text):
    """Parse an expression over M."""
    return parse_expr(text, Session(M))


def var(v):
    return GradedPolynomial.var(v)


def structure(M, text):
    return HigherPoissonStructure(e(M, text), M)


def f1():
    return structure(M2, "s(x)*s(y)")


def f2():
    return structure(M3, "s(x)*s(y)*s(th)")


def f3():
    return structure(M1, "x")


def f4():
    return structure(M2, "x*s(x)*s(y)")


FIXTURES = {"F1": f1, "F2": f2, "F3": f3, "F4": f4}


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = []
