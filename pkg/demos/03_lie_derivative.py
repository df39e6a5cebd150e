"""
Lie derivative along a multivector
==================================

L_X = [d, i_X] is a differential operator on forms whose order is the
degree of X.  For a higher Poisson structure it squares to zero.
"""

from superbrackets import (
    Manifold, HigherPoissonStructure, exterior_derivative, interior_product,
    lie_derivative, compose, commutator, apply, schouten, total_symbol,
)
from superbrackets.dsl import Session, parse_expr

M = Manifold([("x", 0), ("y", 0)])
e = lambda text: parse_expr(text, Session(M))

d = exterior_derivative(M)
print("d            =", d)
print("d o d        =", compose(d, d))

P = e("x*s(x)*s(y)")
print("i_P          =", interior_product(P, M))
L = lie_derivative(P, M)
print("L_P          =", L)
print("order of L_P =", L.order)
print("(L_P)^2      =", compose(L, L))
print("[d, L_P]     =", commutator(d, L))

# L_P acting on a form
print("L_P(x*d(y))  =", apply(L, e("x*d(y)")))

# how the Lie derivative sees the Schouten bracket, on a pair where it is nonzero
X, Y = e("x*s(y)"), e("y*s(x)*s(y)")
lhs = lie_derivative(schouten(X, Y, M), M)
rhs = commutator(lie_derivative(X, M), lie_derivative(Y, M))
print("L_[[X,Y]] + [L_X, L_Y] =", lhs + rhs)
print("L_[[X,Y]] - [L_X, L_Y] =", lhs - rhs)

# total symbol: d/dx -> p(x), d/d(dx) -> pi(x)
print("K_P          =", total_symbol(L, M))
