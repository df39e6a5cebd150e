"""
Graded polynomials
==================

Even and odd variables, Koszul signs, derivatives and hbar bookkeeping.
"""

from superbrackets import Manifold, GradedPolynomial, partial, substitute, hbar_coefficient
from superbrackets.dsl import Session, parse_expr

# R^{2|1}: two even coordinates and one odd one
M = Manifold([("x", 0), ("y", 0), ("th", 1)])
S = Session(M)
e = lambda text: parse_expr(text, S)

# s(x) is odd because x is even, so s(y)*s(x) picks up a sign
print("s(y)*s(x)        =", e("s(y)*s(x)"))
# th is odd, it squares to zero
print("(x + th)*th      =", e("(x + th)*th"))
# d(th) is even and can be raised to powers
print("d(th)^3          =", e("d(th)^3"))
# coefficients are exact rationals
print("1/2*s(x)*(2*s(y)) =", e("1/2*s(x)*(2*s(y))"))

# left derivative: move the variable to the front, then strip it
print("d/ds(y) s(x)s(y) =", partial(e("s(x)*s(y)"), M.s("y")))

# restricting a multivector to M kills the fibre coordinates
zero = GradedPolynomial()
print("restrict to M    =", substitute(e("x + y*s(x)"), {M.s("x"): zero}))

# hbar is just another even variable; limits are coefficient extraction
h = GradedPolynomial.var(M.hbar)
print("coef of hbar^2   =", hbar_coefficient(3 + h ** 2 * e("s(x)*s(y)"), 2))
