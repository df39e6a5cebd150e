"""Seeded random polynomials for property checks."""

import random
from fractions import Fraction

from .grading import GradedPolynomial, ZERO, key_parity


_COEFS = [Fraction(n) for n in (1, -1, 2, -2, 3)] + [Fraction(1, 2), Fraction(-1, 3)]


def rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_monomial(r, variables, max_total=3, max_power=2):
    total = r.randint(0, max_total)
    chosen = {}
    for _ in range(total):
        v = r.choice(variables)
        if v.parity and v in chosen:
            continue
        if chosen.get(v, 0) >= max_power:
            continue
        chosen[v] = chosen.get(v, 0) + 1
    return tuple(sorted(chosen.items(), key=lambda t: t[0].order))


def random_poly(r, variables, parity=None, max_terms=3, max_total=3,
                max_power=2, nonzero=True):
    """Random polynomial in ``variables`` with given parity (None: any)."""
    r = rng(r)
    for _ in range(100):
        terms = {}
        for _ in range(r.randint(1, max_terms)):
            k = random_monomial(r, variables, max_total, max_power)
            if parity is not None and key_parity(k) != parity:
                continue
            terms[k] = terms.get(k, 0) + r.choice(_COEFS)
        p = GradedPolynomial(terms)
        if p or not nonzero:
            return p
    return ZERO


def random_function(r, M, parity=None, **kw):
    return random_poly(r, list(M.base), parity, **kw)


def random_form(r, M, parity=None, **kw):
    vs = list(M.base) + [M.d(n) for n in M.names()]
    return random_poly(r, vs, parity, **kw)


def random_multivector(r, M, parity=None, max_degree=3, **kw):
    """Random multivector field of degree at most ``max_degree`` in s(.)."""
    r = rng(r)
    s_vars = [M.s(n) for n in M.names()]
    for _ in range(100):
        p = random_poly(r, list(M.base) + s_vars, parity, **kw)
        degs = p.degree_in((s_vars[0].kind,))
        if p and max(degs) <= max_degree:
            return p
    return ZERO
