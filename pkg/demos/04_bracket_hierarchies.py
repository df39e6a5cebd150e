"""
Three hierarchies from one structure
====================================

Higher Poisson brackets on functions, Koszul--Schouten brackets on forms
and their classical limit, the higher Schouten brackets.
"""

from superbrackets import (
    Manifold, HigherPoissonStructure, higher_poisson_bracket, ks_bracket,
    higher_schouten_bracket, jacobiator, check_prop3, check_lemma_poisson,
)
from superbrackets.sampling import random_form, rng
from superbrackets.dsl import Session, parse_expr

M = Manifold([("x", 0), ("y", 0), ("th", 1)])
e = lambda text: parse_expr(text, Session(M))
P = HigherPoissonStructure(e("x*s(x)*s(y) + s(x)*s(y)*s(th)"), M)
print("P has components of degree", sorted(P.degree_components))

x, y, th = e("x"), e("y"), e("th")
print("{x, y}_P           =", higher_poisson_bracket(P, [x, y]))
print("{x, y, th}_P       =", higher_poisson_bracket(P, [x, y, th]))

# forms: the binary bracket is not a derivation, the ternary one measures it
a, b = e("x*d(y)"), e("d(x)")
print("[x d(y), d(x)]_P   =", ks_bracket(P, [a, b]))
print("(x d(y), d(x))_P   =", higher_schouten_bracket(P, [a, b]))
print("4-bracket          =", ks_bracket(P, [a, b, x, y]))

# the relations between functions and forms
print(check_lemma_poisson(P, [x, y, th]).line())
print(check_prop3(P, [x, y, th]).line())

# L-infinity relations on random arguments
r = rng(1)
for kind in ("poisson", "ks", "schouten"):
    for n in (1, 2, 3):
        if kind == "poisson":
            args = [x, y, th][:n]
        else:
            args = [random_form(r, M, max_terms=1) for _ in range(n)]
        print(jacobiator(P, kind, args).line())
