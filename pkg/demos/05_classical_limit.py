"""
Classical limit and the linear Hamiltonian
==========================================

Deform P by hbar, take the leading coefficient of the Koszul--Schouten
brackets, and compare with brackets generated by the total symbol K_P.
Pulled back to T*(PiT*M), K_P is the linear Hamiltonian of Q_P.
"""

from superbrackets import (
    Manifold, HigherPoissonStructure, deform, higher_schouten_bracket,
    r_pullback, linear_hamiltonian, hamiltonian_vector_field, kp_display,
    check_theorem_symbol_form,
)
from superbrackets.operators import structure_symbol
from superbrackets.dsl import Session, parse_expr

M = Manifold([("x", 0), ("y", 0)])
e = lambda text: parse_expr(text, Session(M))
P = HigherPoissonStructure(e("x*s(x)*s(y)"), M)

print("P[hbar]         =", deform(P.P, M))
args = [e("x^2*d(y)"), e("y*d(x)")]
for route in ("hbar", "component", "symbol"):
    print("%-9s route  =" % route, higher_schouten_bracket(P, args, route=route))
print(check_theorem_symbol_form(P, args).line())

K = structure_symbol(P)
print("K_P             =", K)
print("R*K_P           =", r_pullback(K, M))
print("H_Q             =", linear_hamiltonian(hamiltonian_vector_field(P)))
print("explicit form   =", kp_display(P))
