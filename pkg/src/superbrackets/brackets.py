"""
Bracket hierarchies of a higher Poisson structure and their identities.

Three hierarchies are built from a structure P:

* higher Poisson brackets on functions, nested Schouten brackets with P
  restricted to M;
* higher Koszul--Schouten brackets on forms, derived brackets of the odd
  operator L_P evaluated on 1;
* higher Schouten brackets on forms, the hbar-leading part of the
  Koszul--Schouten brackets of the deformed structure.

All brackets are graded symmetric.  Koszul--Schouten and Schouten brackets
are symmetric in the parities of their arguments; higher Poisson brackets
in the shifted parities |f| + 1 (they are nested odd brackets).
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, product

from .grading import (
    GradedPolynomial, Kind, Parity, ZERO, ONE, hbar_coefficient, partial,
)
from .phase import (
    Bundle, HigherPoissonStructure, schouten, canonical_poisson, deform,
    restrict_to_base, restrict_to_zero_momenta, hamiltonian_vector_field,
    linear_hamiltonian, r_pullback, FIBER_D,
)
from .operators import (
    apply, exterior_derivative, lie_derivative, structure_lie_derivative,
    structure_symbol, total_symbol,
)
from .report import BracketReport, combine


class NotABaseFunction(Exception):
    pass


class ArityMismatch(Exception):
    pass


class Hierarchy(Enum):
    HIGHER_POISSON = "poisson"
    KOSZUL_SCHOUTEN = "ks"
    HIGHER_SCHOUTEN = "schouten"


@dataclass
class BracketHierarchy:
    kind: Hierarchy
    source: HigherPoissonStructure

    @property
    def max_arity(self):
        return self.source.degree

    def __call__(self, *args):
        return bracket(self.source, self.kind, list(args))


# -- helpers -----------------------------------------------------------------

def _check_base(args):
    for f in args:
        for v in f.variables():
            if v.kind is not Kind.BASE:
                raise NotABaseFunction("%s involves %s" % (f, v))


def _check_forms(structure, args):
    system = structure.manifold.system(Bundle.PI_T)
    system.check(*args)


def _split(args):
    """Expand a multilinear call into parity-homogeneous pieces."""
    choices = []
    for a in args:
        parts = [(p, h) for p, h in a.homogeneous_parts() if h]
        if not parts:
            return []
        choices.append(parts)
    return list(product(*choices))


def ext_d(alpha, manifold):
    """Exterior derivative of a form."""
    return apply(exterior_derivative(manifold), alpha)


def derived_bracket(apply_op, op_parity, args):
    """[...[[D, a1], a2], ..., ar](1) for an operator given by its action.

    [T, a](w) = T(a w) - (-1)^{|T||a|} a T(w), unrolled recursively; the
    arguments must be parity-homogeneous polynomials.
    """
    pars = [a.parity for a in args]

    def ev(k, w):
        if k == 0:
            return apply_op(w)
        a = args[k - 1]
        t = (op_parity + sum(pars[:k - 1])) % 2
        first = ev(k - 1, a * w)
        second = a * ev(k - 1, w)
        return first + second if t and pars[k - 1] else first - second

    return ev(len(args), ONE)


def koszul_bracket(L, args):
    """Derived bracket of the operator L on forms, multilinear in ``args``."""
    out = ZERO
    for pieces in _split(args):
        hs = [h for _, h in pieces]
        for pL, Lh in L.parts():
            if Lh:
                out = out + derived_bracket(lambda w: apply(Lh, w), pL, hs)
    return out


# -- the three hierarchies ---------------------------------------------------

def higher_poisson_bracket(structure, args):
    """{f1, ..., fr}_P = [[...[[P, f1]], ..., fr]] restricted to M."""
    _check_base(args)
    M = structure.manifold
    X = structure.P
    for f in args:
        X = schouten(X, f, M)
        if not X:
            return ZERO
    return restrict_to_base(X)


def ks_bracket(structure, args):
    """[a1, ..., ar]_P = [...[[L_P, a1], a2], ..., ar] 1."""
    _check_forms(structure, args)
    return koszul_bracket(structure_lie_derivative(structure), args)


def ks_bracket_of(X, manifold, args):
    """Koszul--Schouten bracket generated by an arbitrary multivector X."""
    manifold.system(Bundle.PI_T).check(*args)
    return koszul_bracket(lie_derivative(X, manifold), args)


def higher_schouten_bracket(structure, args, route="hbar"):
    """(a1, ..., ar)_P, the hbar^r coefficient of [a1..ar]_{P[hbar]}.

    ``route="component"`` computes it instead as the bracket generated by
    the degree-r component of P alone.
    """
    _check_forms(structure, args)
    r = len(args)
    if route == "hbar":
        key = ("L", "hbar")
        if key not in structure._cache:
            Ph = deform(structure.P, structure.manifold)
            structure._cache[key] = lie_derivative(Ph, structure.manifold)
        return hbar_coefficient(koszul_bracket(structure._cache[key], args), r)
    if route == "component":
        return koszul_bracket(structure_lie_derivative(structure, r), args)
    if route == "symbol":
        return schouten_bracket_via_symbol(structure, args)
    raise ValueError("unknown route %r" % route)


def schouten_bracket_via_symbol(structure, args):
    """{...{{K_P, a1}, a2}, ..., ar} restricted to PiTM (momenta set to 0)."""
    M = structure.manifold
    system = M.system(Bundle.COT_PI_T)
    F = structure_symbol(structure)
    for a in args:
        F = canonical_poisson(F, a, system)
        if not F:
            return ZERO
    return restrict_to_zero_momenta(F)


def bracket(structure, kind, args):
    kind = Hierarchy(kind)
    if kind is Hierarchy.HIGHER_POISSON:
        return higher_poisson_bracket(structure, args)
    if kind is Hierarchy.KOSZUL_SCHOUTEN:
        return ks_bracket(structure, args)
    return higher_schouten_bracket(structure, args, route="component")


def effective_parity(kind, a):
    """Parity governing the symmetry of a hierarchy's arguments."""
    p = a.parity
    if Hierarchy(kind) is Hierarchy.HIGHER_POISSON:
        return p + 1
    return p


def koszul_sign(parities, perm):
    """Sign of reordering elements of the given parities into ``perm``."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j] and parities[perm[i]] and parities[perm[j]]:
                sign = -sign
    return sign


def unshuffles(n, i):
    """(i, n-i)-unshuffles as index tuples."""
    for first in combinations(range(n), i):
        rest = tuple(k for k in range(n) if k not in first)
        yield first + rest


def jacobiator(structure, kind, args, n=None):
    """n-th generalised Jacobi expression of a hierarchy, with the 0-bracket.

    J^n(a) = sum_{i=0}^{n} sum_{(i,n-i)-unshuffles s} eps(s; a)
             Phi^{n-i+1}(Phi^i(a_s1..a_si), a_s(i+1)..a_sn)
    """
    kind = Hierarchy(kind)
    if n is None:
        n = len(args)
    if n != len(args):
        raise ArityMismatch("arity %d with %d arguments" % (n, len(args)))
    if kind is Hierarchy.HIGHER_POISSON:
        _check_base(args)
    else:
        _check_forms(structure, args)

    out = ZERO
    for pieces in _split(args):
        hs = [h for _, h in pieces]
        out = out + _jacobiator_homogeneous(structure, kind, hs)
    return BracketReport("jacobiator[%s,%d]" % (kind.value, n), list(args), out)


def _jacobiator_homogeneous(structure, kind, args):
    n = len(args)
    pars = [effective_parity(kind, a) for a in args]
    inner = {}
    out = ZERO
    for i in range(n + 1):
        for perm in unshuffles(n, i):
            first, rest = perm[:i], perm[i:]
            if first not in inner:
                inner[first] = bracket(structure, kind, [args[k] for k in first])
            b = inner[first]
            if not b:
                continue
            term = bracket(structure, kind, [b] + [args[k] for k in rest])
            if term:
                out = out + term.scale(koszul_sign(pars, perm))
    return out


# -- identity checks ---------------------------------------------------------

def check_strict_leibniz(structure, args, extra):
    """(a1..a_{r-1}, a_r b) = (a1..a_r) b + (-1)^{(1+|a1..a_{r-1}|)|a_r|} a_r (a1..a_{r-1}, b)."""
    r = len(args)
    if r < 1:
        raise ArityMismatch("strict Leibniz needs at least one argument")
    out = ZERO
    for pieces in _split(list(args) + [extra]):
        hs = [h for _, h in pieces]
        head, ar, b = hs[:r - 1], hs[r - 1], hs[r]
        delta = (1 + sum(a.parity for a in head)) % 2
        sign = -1 if delta * ar.parity else 1
        hsb = lambda xs: higher_schouten_bracket(structure, xs)
        res = (hsb(head + [ar * b]) - hsb(head + [ar]) * b
               - (ar * hsb(head + [b])).scale(sign))
        out = out + res
    return BracketReport("strict_leibniz", list(args) + [extra], out)


def check_ks_recursion(structure, args, extra):
    """The (r+1)-bracket is the Leibniz defect of the r-bracket.

    [a1..a_r, b] = [a1..a_{r-1}, a_r b] - [a1..a_r] b
                   - (-1)^{(1+|a1..a_{r-1}|)|a_r|} a_r [a1..a_{r-1}, b]
    """
    r = len(args)
    out = ZERO
    for pieces in _split(list(args) + [extra]):
        hs = [h for _, h in pieces]
        head, ar, b = hs[:r - 1], hs[r - 1], hs[r]
        delta = (1 + sum(a.parity for a in head)) % 2
        sign = -1 if delta * ar.parity else 1
        ks = lambda xs: ks_bracket(structure, xs)
        defect = (ks(head + [ar * b]) - ks(head + [ar]) * b
                  - (ar * ks(head + [b])).scale(sign))
        out = out + defect - ks(hs)
    return BracketReport("ks_recursion", list(args) + [extra], out)


def check_d_derivation_rule(structure, args):
    """d[a1..ar] + sum_i (-1)^{eps_i} [a1..d a_i..ar] = 0, eps_i = |a1|+..+|a_{i-1}|."""
    M = structure.manifold
    out = ZERO
    for pieces in _split(args):
        hs = [h for _, h in pieces]
        res = ext_d(ks_bracket(structure, hs), M)
        eps = 0
        for i, a in enumerate(hs):
            term = ks_bracket(structure, hs[:i] + [ext_d(a, M)] + hs[i + 1:])
            res = res + (term.scale(-1) if eps % 2 else term)
            eps += a.parity
        out = out + res
    return BracketReport("d_derivation_rule", list(args), out)


def _wedge_d(fs, M, first_plain=False):
    out = ONE
    for i, f in enumerate(fs):
        out = out * (f if (first_plain and i == 0) else ext_d(f, M))
    return out


def check_lemma_poisson(structure, args):
    """{f1..fr}_P = -L_{P_r}(f1 df2 .. dfr) = i_{P_r}(df1 .. dfr)."""
    from .operators import interior_product
    _check_base(args)
    M = structure.manifold
    r = len(args)
    if r < 1:
        raise ArityMismatch("the lemma concerns r >= 1")
    Pr = structure.component(r)
    a = higher_poisson_bracket(structure, args)
    b = -apply(structure_lie_derivative(structure, r), _wedge_d(args, M, True))
    c = apply(interior_product(Pr, M), _wedge_d(args, M))
    reports = [BracketReport("lemma: bracket = -L(f1 df..)", args, a - b),
               BracketReport("lemma: bracket = i(df..)", args, a - c)]
    return combine("lemma_poisson", list(args), reports)


def check_prop3(structure, args):
    """The four relations between Poisson and Koszul--Schouten brackets."""
    _check_base(args)
    M = structure.manifold
    r = len(args)
    reps = []
    hp = higher_poisson_bracket(structure, args)
    if r >= 1:
        lhs = ks_bracket(structure, [args[0]] + [ext_d(f, M) for f in args[1:]])
        reps.append(BracketReport("prop3.1", args, lhs + hp))
    if r > 1:
        reps.append(BracketReport("prop3.2", args, ks_bracket(structure, args)))
    empty = ks_bracket(structure, []) - ext_d(higher_poisson_bracket(structure, []), M)
    reps.append(BracketReport("prop3.3", [], empty))
    lhs = ks_bracket(structure, [ext_d(f, M) for f in args])
    reps.append(BracketReport("prop3.4", args, lhs - ext_d(hp, M)))
    return combine("prop3", list(args), reps)


def check_theorem_symbol_form(structure, args):
    """hbar-coefficient, degree-component and symbol routes agree."""
    if len(args) < 1:
        raise ArityMismatch("the theorem concerns r >= 1")
    a = higher_schouten_bracket(structure, args, route="hbar")
    b = higher_schouten_bracket(structure, args, route="component")
    c = higher_schouten_bracket(structure, args, route="symbol")
    reps = [BracketReport("theorem: hbar = component", args, a - b),
            BracketReport("theorem: hbar = symbol", args, a - c)]
    return combine("theorem_symbol_form", list(args), reps)


def kp_display(structure):
    """R*K_P written directly from P, no operators involved.

    Coefficient of piup(x): (-1)^{|x|} dP/dx;  coefficient of p(x): minus
    the right derivative of P by s(x), i.e. (-1)^{|x|} dP/ds(x) for even P.
    """
    M = structure.manifold
    P = structure.P
    out = ZERO
    for v in M.base:
        sign = -1 if v.parity else 1
        out = out + partial(P, v).scale(sign) * GradedPolynomial.var(M.piup(v.name))
        out = out + partial(P, M.s(v.name)).scale(sign) * GradedPolynomial.var(M.p(v.name))
    return out


def check_kp_display(structure):
    """R*(total symbol of L_P) equals the explicit formula for R*K_P."""
    M = structure.manifold
    RK = r_pullback(structure_symbol(structure), M)
    return BracketReport("kp_display", [structure.P], RK - kp_display(structure))


def check_kp_hamiltonian(structure):
    """R*K_P equals the linear Hamiltonian of Q_P = -[[P, .]].

    Also compares both against the explicit formula, term by term.
    """
    M = structure.manifold
    RK = r_pullback(structure_symbol(structure), M)
    H = linear_hamiltonian(hamiltonian_vector_field(structure))
    shown = kp_display(structure)
    reps = [BracketReport("kp_hamiltonian: R*K = H_Q", [structure.P], RK - H),
            BracketReport("kp_hamiltonian: H_Q = display", [structure.P], H - shown)]
    return combine("kp_hamiltonian", [structure.P], reps)


def check_termination(structure, args):
    """Koszul--Schouten brackets of arity above deg P vanish."""
    return BracketReport("termination", list(args), ks_bracket(structure, args))
