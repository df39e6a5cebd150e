"""
Higher Poisson structures
=========================

An even multivector P with [[P, P]] = 0.  The Schouten bracket is
normalised so that [[s(x), x]] = 1.
"""

from superbrackets import (
    Manifold, HigherPoissonStructure, MasterEquationViolation, NotEven,
    schouten, higher_poisson_bracket, hamiltonian_vector_field,
)
from superbrackets.dsl import Session, parse_expr

M = Manifold([("x", 0), ("y", 0), ("th", 1)])
e = lambda text: parse_expr(text, Session(M))

print("[[s(x), x]] =", schouten(e("s(x)"), e("x"), M))
print("[[x, s(x)]] =", schouten(e("x"), e("s(x)"), M))

# a trivector on R^{2|1}; constant coefficients, so it self-commutes
P = HigherPoissonStructure(e("s(x)*s(y)*s(th)"), M)
print("degree of P =", P.degree)

# the ternary bracket of coordinate functions
print("{x, y, th}  =", higher_poisson_bracket(P, [e("x"), e("y"), e("th")]))
print("{x, y}      =", higher_poisson_bracket(P, [e("x"), e("y")]))

# Q_P = -[[P, .]] is homological
Q = hamiltonian_vector_field(P)
print("Q_P         =", Q)
print("Q(Q(s(x)))  =", Q(Q(e("s(x)"))))

# structures are checked when built
for text in ["s(x)", "s(x)*s(y) + x"]:
    try:
        HigherPoissonStructure(e(text), M)
    except (NotEven, MasterEquationViolation) as err:
        print("rejected %-14s %s" % (text + ":", err))
