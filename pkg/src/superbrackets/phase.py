"""
Coordinate bundles over a supermanifold and their canonical brackets.

A :class:`Manifold` is a single global chart with named even/odd base
coordinates.  From it we build the variables of

* ``PiT``        -- differential forms, fibre coordinates ``d(x)``
* ``PiTStar``    -- multivector fields, fibre coordinates ``s(x)``
* ``CotPiT``     -- ``x, d(x), p(x), pi(x)``
* ``CotPiTStar`` -- ``x, s(x), p(x), piup(x)``

Variables are shared between bundles of the same manifold, so restricting
to a submanifold is plain substitution.
"""

from enum import Enum
from .grading import (
    GradedPolynomial, GradedVariable, Kind, Parity, MixedCoordinateSystems,
    ZERO, partial, substitute, restrict, key_degree,
)


class WrongBundle(Exception):
    pass


class InvalidStructure(Exception):
    pass


class NotEven(InvalidStructure):
    pass


class MasterEquationViolation(InvalidStructure):
    pass


class Bundle(Enum):
    BASE = "M"
    PI_T = "PiT"
    PI_T_STAR = "PiTStar"
    COT_PI_T = "CotPiT"
    COT_PI_T_STAR = "CotPiTStar"


_FIBER_KINDS = {
    Bundle.BASE: (),
    Bundle.PI_T: (Kind.ANTITANGENT_FIBER,),
    Bundle.PI_T_STAR: (Kind.ANTICOTANGENT_FIBER,),
    Bundle.COT_PI_T: (Kind.ANTITANGENT_FIBER, Kind.MOMENTUM, Kind.FORM_MOMENTUM),
    Bundle.COT_PI_T_STAR: (Kind.ANTICOTANGENT_FIBER, Kind.MOMENTUM,
                           Kind.MULTIVECTOR_MOMENTUM),
}

_PREFIX = {
    Kind.ANTITANGENT_FIBER: "d",
    Kind.ANTICOTANGENT_FIBER: "s",
    Kind.MOMENTUM: "p",
    Kind.FORM_MOMENTUM: "pi",
    Kind.MULTIVECTOR_MOMENTUM: "piup",
}

# parity shift of a derived variable relative to its base coordinate
_SHIFT = {
    Kind.ANTITANGENT_FIBER: 1,
    Kind.ANTICOTANGENT_FIBER: 1,
    Kind.MOMENTUM: 0,
    Kind.FORM_MOMENTUM: 1,
    Kind.MULTIVECTOR_MOMENTUM: 1,
}

FIBER_D = (Kind.ANTITANGENT_FIBER,)
FIBER_S = (Kind.ANTICOTANGENT_FIBER,)
MOMENTA = (Kind.MOMENTUM, Kind.FORM_MOMENTUM, Kind.MULTIVECTOR_MOMENTUM)


class Manifold:
    """A supermanifold given by one global chart.

    >>> M = Manifold([("x", 0), ("y", 0), ("th", 1)])
    >>> M.s("x").parity
    <Parity.ODD: 1>
    """

    def __init__(self, coords):
        names = [n for n, _ in coords]
        if len(set(names)) != len(names):
            raise ValueError("duplicate coordinate names: %s" % names)
        self.coords = [(n, Parity(int(p))) for n, p in coords]
        self.base = [GradedVariable(n, p, Kind.BASE, n, i)
                     for i, (n, p) in enumerate(self.coords)]
        self._by_name = {v.name: v for v in self.base}
        self._derived = {}
        for kind in _PREFIX:
            for v in self.base:
                w = GradedVariable("%s(%s)" % (_PREFIX[kind], v.name),
                                   v.parity + _SHIFT[kind], kind, v.name, v.index)
                self._derived[kind, v.name] = w
        self.hbar = GradedVariable("hbar", Parity.EVEN, Kind.HBAR, None, 0)

    def __repr__(self):
        return "Manifold(%r)" % ([(n, int(p)) for n, p in self.coords],)

    def __eq__(self, other):
        return isinstance(other, Manifold) and self.coords == other.coords

    def __hash__(self):
        return hash(tuple(self.coords))

    # variable accessors
    def x(self, name):
        return self._by_name[name]

    def d(self, name):
        return self._derived[Kind.ANTITANGENT_FIBER, name]

    def s(self, name):
        return self._derived[Kind.ANTICOTANGENT_FIBER, name]

    def p(self, name):
        return self._derived[Kind.MOMENTUM, name]

    def pi(self, name):
        return self._derived[Kind.FORM_MOMENTUM, name]

    def piup(self, name):
        return self._derived[Kind.MULTIVECTOR_MOMENTUM, name]

    def derived(self, kind, name):
        return self._derived[kind, name]

    def names(self):
        return [n for n, _ in self.coords]

    def system(self, bundle):
        return CoordinateSystem(self, Bundle(bundle))

    # polynomial shortcuts
    def X(self, name):
        return GradedPolynomial.var(self.x(name))

    def D(self, name):
        return GradedPolynomial.var(self.d(name))

    def S(self, name):
        return GradedPolynomial.var(self.s(name))


class CoordinateSystem:
    """Natural coordinates on one of the bundles over ``manifold``."""

    def __init__(self, manifold, bundle):
        self.manifold = manifold
        self.bundle = Bundle(bundle)
        vs = list(manifold.base)
        for kind in _FIBER_KINDS[self.bundle]:
            vs.extend(manifold.derived(kind, v.name) for v in manifold.base)
        self.variables = tuple(vs)
        self._set = frozenset(vs)

    def __contains__(self, v):
        return v in self._set

    def __repr__(self):
        return "CoordinateSystem(%r, %s)" % (self.manifold, self.bundle.value)

    def check(self, *polys):
        for p in polys:
            for v in p.variables():
                if v not in self._set and v.kind is not Kind.HBAR:
                    raise MixedCoordinateSystems(
                        "%s is not a coordinate of %s" % (v, self))

    def conjugate_pairs(self):
        """(coordinate, momentum) pairs of a cotangent-type bundle."""
        M = self.manifold
        if self.bundle is Bundle.COT_PI_T:
            fiber, fmom = Kind.ANTITANGENT_FIBER, Kind.FORM_MOMENTUM
        elif self.bundle is Bundle.COT_PI_T_STAR:
            fiber, fmom = Kind.ANTICOTANGENT_FIBER, Kind.MULTIVECTOR_MOMENTUM
        else:
            raise WrongBundle("%s carries no canonical even Poisson bracket"
                              % self.bundle.value)
        pairs = [(v, M.p(v.name)) for v in M.base]
        pairs += [(M.derived(fiber, v.name), M.derived(fmom, v.name)) for v in M.base]
        return pairs


# -- generic bracket from generator values -----------------------------------

def _bracket(F, G, table, shift):
    """Bracket fixed by generator values, antisymmetry and Leibniz.

    ``table[(z, w)]`` holds {z, w} for generators; ``shift`` is the parity of
    the bracket (0 for Poisson, 1 for Schouten).  The bracket satisfies
    {F, G} = -(-1)^{(F+s)(G+s)} {G, F} and is a derivation of parity F+s in
    its second argument, so {F, G} = sum_z {F, z} dG/dz (left derivative).
    """
    gens = {}
    for (z, w), val in table.items():
        gens.setdefault(z, []).append((w, val))
    out = ZERO
    for pF, Fh in F.homogeneous_parts():
        if not Fh:
            continue
        for z in gens:
            dG = partial(G, z)
            if not dG:
                continue
            # {z, F} = sum_w {z, w} dF/dw
            zF = ZERO
            for w, val in gens[z]:
                zF = zF + partial(Fh, w).scale(val)
            if not zF:
                continue
            sign = -1 if (pF + shift) * (z.parity + shift) % 2 == 0 else 1
            out = out + zF.scale(sign) * dG
    return out


def _table(pairs, shift):
    """Generator table with {momentum, coordinate} = 1 for every pair.

    The reversed value follows from antisymmetry.
    """
    t = {}
    for q, m in pairs:
        t[m, q] = 1
        # {q, m} = -(-1)^{(m+s)(q+s)} {m, q}
        t[q, m] = -1 if (m.parity + shift) * (q.parity + shift) % 2 == 0 else 1
    return t


def _schouten_table(manifold):
    return _table([(v, manifold.s(v.name)) for v in manifold.base], 1)


def schouten(X, Y, manifold):
    """Schouten--Nijenhuis bracket on multivector fields.

    Normalised by [[s(x), x]] = 1, hence [[x, s(x)]] = -1.  With this sign
    the higher Poisson brackets satisfy {f1..fr} = i_{P_r}(df1..dfr) for
    every r, and the Lie derivative is an anti-homomorphism:
    L_{[[X,Y]]} = -[L_X, L_Y].
    """
    manifold.system(Bundle.PI_T_STAR).check(X, Y)
    return _bracket(X, Y, _schouten_table(manifold), 1)


def canonical_poisson(F, G, system):
    """Canonical even Poisson bracket on T*(PiTM) or T*(PiT*M).

    Normalised by {p(z), z} = 1 for every coordinate z (momentum first), so
    that {sum_z Q(z) p(z), G} = Q(G) and commutators of normal-ordered
    operators map to brackets of their total symbols.
    """
    pairs = system.conjugate_pairs()
    system.check(F, G)
    return _bracket(F, G, _table(pairs, 0), 0)


# -- multivector fields -----------------------------------------------------

def multivector_degree(X):
    return X.degree_in(FIBER_S)


def degree_component(X, r):
    """Part of X of homogeneous degree r in the s(.) variables."""
    return GradedPolynomial._from_clean(
        {k: c for k, c in X.terms.items() if key_degree(k, FIBER_S) == r})


def form_degree(alpha):
    return alpha.degree_in(FIBER_D)


def deform(X, manifold):
    """Multiply the degree-i component of X by hbar**i."""
    out = {}
    h = manifold.hbar
    for k, c in X.terms.items():
        r = key_degree(k, FIBER_S)
        if r:
            k = k + ((h, r),)
        out[k] = c
    return GradedPolynomial._from_clean(out)


def restrict_to_base(p):
    """Restriction |_M : every fibre coordinate and momentum set to zero."""
    return restrict(p, FIBER_S + FIBER_D + MOMENTA)


def restrict_to_zero_momenta(p):
    """Restriction to PiTM (or PiT*M) inside its cotangent bundle."""
    return restrict(p, MOMENTA)


class HigherPoissonStructure:
    """An even multivector field P with [[P, P]] = 0.

    The master equation is checked on construction.
    """

    def __init__(self, P, manifold, check=True):
        self.manifold = manifold
        self.P = P
        manifold.system(Bundle.PI_T_STAR).check(P)
        if check:
            if not P.is_homogeneous() or P.parity != Parity.EVEN:
                raise NotEven("structure must be even: %s" % P)
            PP = schouten(P, P, manifold)
            if PP:
                raise MasterEquationViolation("[[P,P]] = %s" % PP)
        degs = sorted(multivector_degree(P))
        self.degree_components = {r: degree_component(P, r) for r in degs}
        self._cache = {}

    @property
    def degree(self):
        return max(self.degree_components, default=0)

    def component(self, r):
        return self.degree_components.get(r, ZERO)

    def __repr__(self):
        return "HigherPoissonStructure(%s)" % self.P


# -- vector fields and Hamiltonians -----------------------------------------

class VectorField:
    """Vector field on PiT*M, stored by its values on coordinates."""

    def __init__(self, manifold, components):
        self.manifold = manifold
        system = manifold.system(Bundle.PI_T_STAR)
        self.components = {z: components.get(z, ZERO) for z in system.variables}

    def __call__(self, G):
        out = ZERO
        for z, c in self.components.items():
            if c:
                out = out + c * partial(G, z)
        return out

    def __repr__(self):
        return "VectorField({%s})" % ", ".join(
            "%s: %s" % (z, c) for z, c in self.components.items() if c)


def hamiltonian_vector_field(structure):
    """Q_P = -[[P, .]], stored by components."""
    P, M = structure.P, structure.manifold
    system = M.system(Bundle.PI_T_STAR)
    comps = {z: -schouten(P, GradedPolynomial.var(z), M) for z in system.variables}
    return VectorField(M, comps)


def linear_hamiltonian(Q):
    """H_Q = sum_z Q(z) * (momentum conjugate to z) on T*(PiT*M)."""
    M = Q.manifold
    out = ZERO
    for z, m in M.system(Bundle.COT_PI_T_STAR).conjugate_pairs():
        c = Q.components.get(z, ZERO)
        if c:
            out = out + c * GradedPolynomial.var(m)
    return out


def r_pullback(K, manifold):
    """Pull back along R: T*(PiT*M) -> T*(PiTM).

    d(x) -> (-1)^{|x|} piup(x),  pi(x) -> s(x);  x and p(x) are fixed.
    """
    M = manifold
    assignment = {}
    for v in M.base:
        sign = -1 if v.parity else 1
        assignment[M.d(v.name)] = GradedPolynomial.var(M.piup(v.name)).scale(sign)
        assignment[M.pi(v.name)] = GradedPolynomial.var(M.s(v.name))
    return substitute(K, assignment)
