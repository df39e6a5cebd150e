"""
Exact graded-commutative polynomial algebra.

Polynomials live in a supercommutative algebra generated by even and odd
variables.  Monomials are kept in a canonical order (a fixed global order on
variables); every reordering of odd variables is paid for with a Koszul sign
and odd variables square to zero.  Coefficients are ``fractions.Fraction``.
"""

from enum import Enum, IntEnum
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache


class GradedAlgebraError(Exception):
    pass


class UnknownVariable(GradedAlgebraError):
    pass


class MixedCoordinateSystems(GradedAlgebraError):
    pass


class ParityMismatch(GradedAlgebraError):
    pass


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    __radd__ = __add__


class Kind(Enum):
    BASE = 0
    ANTITANGENT_FIBER = 1       # d(x)
    ANTICOTANGENT_FIBER = 2     # s(x)
    MOMENTUM = 3                # p(x)
    FORM_MOMENTUM = 4           # pi(x), conjugate to d(x)
    MULTIVECTOR_MOMENTUM = 5    # piup(x), conjugate to s(x)
    HBAR = 6


@dataclass(frozen=True)
class GradedVariable:
    name: str
    parity: Parity
    kind: Kind = Kind.BASE
    base: str = None
    index: int = 0
    order: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "parity", Parity(self.parity))
        object.__setattr__(self, "order", (self.kind.value, self.index))

    @property
    def odd(self):
        return self.parity == Parity.ODD

    def __lt__(self, other):
        return self.order < other.order

    def __str__(self):
        return self.name


# A monomial key is a tuple of (variable, exponent) pairs sorted by variable
# order.  The empty tuple is the unit monomial.

def key_parity(key):
    n = 0
    for v, e in key:
        if v.parity:
            n += e
    return Parity(n % 2)


def key_degree(key, kinds):
    return sum(e for v, e in key if v.kind in kinds)


@lru_cache(maxsize=None)
def mono_mul(k1, k2):
    """Multiply two canonical monomial keys.

    Returns ``(sign, key)`` or ``None`` when the product vanishes.
    """
    if not k1:
        return 1, k2
    if not k2:
        return 1, k1
    out = []
    sign = 1
    i = j = 0
    # number of odd variables of k1 not yet emitted
    odd_left = sum(1 for v, e in k1 if v.parity)
    while i < len(k1) and j < len(k2):
        v1, e1 = k1[i]
        v2, e2 = k2[j]
        if v1.order < v2.order:
            out.append(k1[i])
            if v1.parity:
                odd_left -= 1
            i += 1
        elif v2.order < v1.order:
            if v2.parity and odd_left % 2:
                sign = -sign
            out.append(k2[j])
            j += 1
        else:
            if v1 != v2:
                raise MixedCoordinateSystems("%s and %s collide" % (v1, v2))
            if v1.parity:
                return None
            out.append((v1, e1 + e2))
            i += 1
            j += 1
    out.extend(k1[i:])
    out.extend(k2[j:])
    return sign, tuple(out)


def _coerce_coef(c):
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError("coefficients must be exact rationals, got %r" % (c,))


class GradedPolynomial:
    """A polynomial with exact rational coefficients in graded variables.

    Instances are immutable; ``terms`` maps canonical monomial keys to
    nonzero ``Fraction`` coefficients.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                if c:
                    clean[k] = _coerce_coef(c)
        self.terms = clean
        self._hash = None

    # -- constructors

    @classmethod
    def const(cls, c):
        c = _coerce_coef(c)
        return cls({(): c}) if c else cls()

    @classmethod
    def var(cls, v):
        return cls({((v, 1),): Fraction(1)})

    @classmethod
    def monomial(cls, key, coef=1):
        return cls({key: _coerce_coef(coef)})

    @staticmethod
    def _from_clean(terms):
        p = GradedPolynomial.__new__(GradedPolynomial)
        p.terms = terms
        p._hash = None
        return p

    # -- structure

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def variables(self):
        out = set()
        for k in self.terms:
            out.update(v for v, e in k)
        return out

    def parts(self):
        """Split into (even part, odd part)."""
        even, odd = {}, {}
        for k, c in self.terms.items():
            (odd if key_parity(k) else even)[k] = c
        return GradedPolynomial._from_clean(even), GradedPolynomial._from_clean(odd)

    def homogeneous_parts(self):
        even, odd = self.parts()
        return [(Parity.EVEN, even), (Parity.ODD, odd)]

    def is_homogeneous(self):
        return len({key_parity(k) for k in self.terms}) <= 1

    @property
    def parity(self):
        """Parity of a homogeneous polynomial (zero counts as even)."""
        ps = {key_parity(k) for k in self.terms}
        if len(ps) > 1:
            raise ParityMismatch("polynomial is not parity-homogeneous: %s" % self)
        return ps.pop() if ps else Parity.EVEN

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def degree_in(self, kinds):
        """Set of total degrees in variables of the given kinds."""
        return {key_degree(k, kinds) for k in self.terms}

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, GradedPolynomial):
            return other
        return GradedPolynomial.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GradedPolynomial._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return GradedPolynomial._from_clean({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c):
        c = _coerce_coef(c)
        if not c:
            return GradedPolynomial()
        return GradedPolynomial._from_clean({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                r = mono_mul(k1, k2)
                if r is None:
                    continue
                sign, k = r
                s = out.get(k, 0) + sign * c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return GradedPolynomial._from_clean(out)

    def __rmul__(self, other):
        # scalars are even and central
        return self.scale(other)

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = GradedPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            try:
                other = GradedPolynomial.const(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        from .dsl import format_poly
        return format_poly(self)

    def __repr__(self):
        return "GradedPolynomial(%s)" % self


Poly = GradedPolynomial
ZERO = GradedPolynomial()
ONE = GradedPolynomial.const(1)


def normalize(raw_product, declared=None):
    """Canonical form of a product of variables and rationals, in the order given.

    ``declared``, when supplied, is the collection of admissible variables.
    """
    out = ONE
    for f in raw_product:
        if isinstance(f, GradedVariable):
            if declared is not None and f not in declared:
                raise UnknownVariable(f.name)
            out = out * GradedPolynomial.var(f)
        else:
            out = out.scale(f)
    return out


def mul(a, b):
    return a * b


@lru_cache(maxsize=None)
def _partial_key(key, v):
    """Left derivative of a monomial: (sign*exponent, key) or None."""
    n_odd_before = 0
    for i, (w, e) in enumerate(key):
        if w == v:
            if v.parity:
                sign = -1 if n_odd_before % 2 else 1
                return sign, key[:i] + key[i + 1:]
            rest = key[:i] + (((v, e - 1),) if e > 1 else ()) + key[i + 1:]
            return e, rest
        if w.order == v.order:
            raise MixedCoordinateSystems("%s and %s collide" % (w, v))
        if w.order > v.order:
            return None
        if w.parity:
            n_odd_before += e
    return None


def partial(p, v):
    """Left partial derivative: move ``v`` to the front, then strip it."""
    out = {}
    for k, c in p.terms.items():
        r = _partial_key(k, v)
        if r is None:
            continue
        f, k2 = r
        s = out.get(k2, 0) + f * c
        if s:
            out[k2] = s
        else:
            del out[k2]
    return GradedPolynomial._from_clean(out)


def right_partial(p, v):
    """Right partial derivative, via the sign rule on homogeneous terms."""
    if not v.parity:
        return partial(p, v)
    out = ZERO
    for parity, part in p.homogeneous_parts():
        if part:
            # (-1)^{v(p+v)} with v odd
            out = out + (partial(part, v) if parity else -partial(part, v))
    return out


def substitute(p, assignment):
    """Simultaneous substitution of variables by polynomials of equal parity."""
    assignment = dict(assignment)
    for v, image in assignment.items():
        if not isinstance(image, GradedPolynomial):
            image = GradedPolynomial.const(image)
            assignment[v] = image
        if image and (not image.is_homogeneous() or image.parity != v.parity):
            raise ParityMismatch("cannot substitute %s by %s" % (v, image))
    out = ZERO
    for k, c in p.terms.items():
        term = GradedPolynomial.const(c)
        for v, e in k:
            f = assignment.get(v)
            if f is None:
                f = GradedPolynomial.var(v)
            term = term * f ** e
            if not term:
                break
        out = out + term
    return out


def restrict(p, kinds):
    """Set every variable of the given kinds to zero."""
    return GradedPolynomial._from_clean(
        {k: c for k, c in p.terms.items() if not any(v.kind in kinds for v, e in k)})


def hbar_coefficient(p, k):
    """Coefficient of hbar**k, with hbar removed."""
    out = {}
    for key, c in p.terms.items():
        e = 0
        rest = []
        for v, n in key:
            if v.kind is Kind.HBAR:
                e = n
            else:
                rest.append((v, n))
        if e == k:
            out[tuple(rest)] = c
    return GradedPolynomial._from_clean(out)
