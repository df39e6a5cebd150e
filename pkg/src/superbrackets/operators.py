"""
Normal-ordered differential operators on differential forms.

An operator is a finite sum of terms ``c * a * D`` where ``a`` is a monomial
in the coordinates of PiTM (multiplication, on the left) and ``D`` is a
canonically ordered word of derivative symbols d/dv (on the right).  The
symbol d/dv carries the parity of v, so derivative words multiply with the
same Koszul signs as monomials.
"""

from fractions import Fraction
from functools import lru_cache

from .grading import (
    GradedPolynomial, Kind, ZERO, Parity, key_parity, mono_mul, _partial_key,
)
from .phase import Bundle, schouten, canonical_poisson
from .report import BracketReport


class DiffOperator:

    __slots__ = ("terms", "_apply_cache")

    def __init__(self, terms=None):
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}
        self._apply_cache = {}

    @classmethod
    def multiplication(cls, poly):
        return cls({(k, ()): c for k, c in poly.terms.items()})

    @classmethod
    def identity(cls):
        return cls({((), ()): 1})

    @classmethod
    def derivative(cls, v):
        return cls({((), ((v, 1),)): 1})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, sign):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + sign * c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DiffOperator(out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return DiffOperator({k: -c for k, c in self.terms.items()})

    def scale(self, c):
        return DiffOperator({k: c * v for k, v in self.terms.items()})

    def __matmul__(self, other):
        return compose(self, other)

    def __call__(self, form):
        return apply(self, form)

    def parts(self):
        even, odd = {}, {}
        for (a, D), c in self.terms.items():
            (odd if key_parity(a) + key_parity(D) else even)[a, D] = c
        return [(Parity.EVEN, DiffOperator(even)), (Parity.ODD, DiffOperator(odd))]

    @property
    def parity(self):
        ps = {key_parity(a) + key_parity(D) for a, D in self.terms}
        if len(ps) > 1:
            raise ValueError("operator is not parity-homogeneous")
        return ps.pop() if ps else Parity.EVEN

    @property
    def order(self):
        return max((sum(e for _, e in D) for _, D in self.terms), default=0)

    def __str__(self):
        from .dsl import format_operator
        return format_operator(self)

    __repr__ = __str__


def _symbols(D):
    """Expand a derivative word into single symbols, left to right."""
    out = []
    for v, e in D:
        out.extend([v] * e)
    return out


@lru_cache(maxsize=None)
def _push(D, b):
    """Normal order of (derivative word D) composed with (monomial b).

    Returns a tuple of (coef, left_key, right_key).
    """
    if not D:
        return ((1, b, ()),)
    v, e = D[0]
    rest = ((v, e - 1),) + D[1:] if e > 1 else D[1:]
    acc = {}
    for c, a, K in _push(rest, b):
        # d/dv applied to a:  (da/dv) K  +  (-1)^{|v||a|} a (d/dv K)
        r = _partial_key(a, v)
        if r is not None:
            f, a2 = r
            acc[a2, K] = acc.get((a2, K), 0) + f * c
        r = mono_mul(((v, 1),), K)
        if r is not None:
            sign, K2 = r
            if v.parity and key_parity(a):
                sign = -sign
            acc[a, K2] = acc.get((a, K2), 0) + sign * c
    return tuple((c, a, K) for (a, K), c in acc.items() if c)


def compose(A, B):
    """Operator product A o B in normal order."""
    out = {}
    for (a, I), c1 in A.terms.items():
        for (b, J), c2 in B.terms.items():
            for c, m, K in _push(I, b):
                r1 = mono_mul(a, m)
                if r1 is None:
                    continue
                r2 = mono_mul(K, J)
                if r2 is None:
                    continue
                key = (r1[1], r2[1])
                out[key] = out.get(key, 0) + r1[0] * r2[0] * c * c1 * c2
    return DiffOperator(out)


def commutator(A, B):
    """Graded commutator A B - (-1)^{|A||B|} B A, extended bilinearly."""
    out = DiffOperator()
    for pa, Ah in A.parts():
        if not Ah:
            continue
        for pb, Bh in B.parts():
            if not Bh:
                continue
            AB = compose(Ah, Bh)
            BA = compose(Bh, Ah)
            out = out + (AB + BA if pa and pb else AB - BA)
    return out


def _apply_word(D, key):
    """Apply a derivative word to a monomial, rightmost symbol first."""
    cur = {key: 1}
    for v in reversed(_symbols(D)):
        nxt = {}
        for k, c in cur.items():
            r = _partial_key(k, v)
            if r is None:
                continue
            f, k2 = r
            nxt[k2] = nxt.get(k2, 0) + f * c
        cur = {k: c for k, c in nxt.items() if c}
        if not cur:
            break
    return cur


def _apply_monomial(A, key):
    out = ZERO
    for (a, D), c in A.terms.items():
        for k, f in _apply_word(D, key).items():
            r = mono_mul(a, k)
            if r is not None:
                out = out + GradedPolynomial._from_clean({r[1]: r[0] * f * c})
    return out


def apply(A, form):
    """Action of an operator on a form (or any polynomial)."""
    out = ZERO
    cache = A._apply_cache
    for k, c in form.terms.items():
        v = cache.get(k)
        if v is None:
            v = cache[k] = _apply_monomial(A, k)
        out = out + v.scale(c)
    return out


def exterior_derivative(manifold):
    """d = sum_A d(x^A) d/dx^A."""
    return DiffOperator({(((manifold.d(v.name), 1),), ((v, 1),)): 1
                         for v in manifold.base})


def interior_product(X, manifold):
    """i_X = (-1)^{|X|} X(x, d/d(dx)), per homogeneous term.

    Each s(x) is replaced by d/d(dx) in place; the canonical order of s(.)
    factors maps to the canonical order of the derivative symbols.
    """
    terms = {}
    for k, c in X.terms.items():
        left, right = [], []
        for v, e in k:
            if v.kind is Kind.ANTICOTANGENT_FIBER:
                right.append((manifold.d(v.base), e))
            else:
                left.append((v, e))
        sign = -1 if key_parity(k) else 1
        key = (tuple(left), tuple(right))
        terms[key] = terms.get(key, 0) + sign * c
    return DiffOperator(terms)


def lie_derivative(X, manifold):
    """L_X = [d, i_X]."""
    return commutator(exterior_derivative(manifold), interior_product(X, manifold))


def total_symbol(A, manifold):
    """Replace d/dx -> p(x), d/d(dx) -> pi(x) in every normal-ordered term."""
    out = ZERO
    for (a, D), c in A.terms.items():
        term = GradedPolynomial.monomial(a, c)
        for v in _symbols(D):
            if v.kind is Kind.BASE:
                m = manifold.p(v.name)
            else:
                m = manifold.pi(v.base)
            term = term * GradedPolynomial.var(m)
        out = out + term
    return out


# -- operator identities -----------------------------------------------------

def check_lie_morphism(X, Y, manifold):
    """L_{[[X,Y]]} = [L_X, L_Y]."""
    lhs = lie_derivative(schouten(X, Y, manifold), manifold)
    rhs = commutator(lie_derivative(X, manifold), lie_derivative(Y, manifold))
    return BracketReport("lie_morphism", [X, Y], lhs - rhs)


def check_nilpotent(structure):
    """(L_P)^2 = 0."""
    L = structure_lie_derivative(structure)
    return BracketReport("nilpotent", [structure.P], compose(L, L))


def check_naturality(X, manifold):
    """[d, L_X] = 0."""
    res = commutator(exterior_derivative(manifold), lie_derivative(X, manifold))
    return BracketReport("naturality", [X], res)


def structure_lie_derivative(structure, r=None):
    """Cached L_P, or L of the degree-r component when ``r`` is given."""
    key = ("L", r)
    if key not in structure._cache:
        X = structure.P if r is None else structure.component(r)
        structure._cache[key] = lie_derivative(X, structure.manifold)
    return structure._cache[key]


def structure_symbol(structure):
    """K_P, the total symbol of L_P."""
    if "K" not in structure._cache:
        structure._cache["K"] = total_symbol(structure_lie_derivative(structure),
                                             structure.manifold)
    return structure._cache["K"]


def check_symbol_squares_to_zero(structure):
    """{K_P, K_P} = 0 on T*(PiTM)."""
    M = structure.manifold
    K = structure_symbol(structure)
    res = canonical_poisson(K, K, M.system(Bundle.COT_PI_T))
    return BracketReport("symbol_squares_to_zero", [structure.P], res)
