from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superbrackets import (
    GradedPolynomial, Parity, Kind, normalize, mul, partial, substitute,
    hbar_coefficient, right_partial, Manifold, MixedCoordinateSystems,
    ParityMismatch, UnknownVariable,
)
from superbrackets.sampling import random_poly, rng

from common import M2, M3, e, var

x, y, th = M3.x("x"), M3.x("y"), M3.x("th")
sx, sy = M3.s("x"), M3.s("y")


def test_parity_addition_is_mod_two():
    assert Parity.EVEN + Parity.EVEN == Parity.EVEN
    assert Parity.EVEN + Parity.ODD == Parity.ODD
    assert Parity.ODD + Parity.ODD == Parity.EVEN


def test_fiber_and_momentum_parities():
    for name in ("x", "th"):
        b = M3.x(name)
        assert M3.d(name).parity == b.parity + 1
        assert M3.s(name).parity == b.parity + 1
        assert M3.p(name).parity == b.parity
        assert M3.pi(name).parity == M3.d(name).parity
        assert M3.piup(name).parity == M3.s(name).parity
    assert M3.hbar.parity == Parity.EVEN
    assert M3.s("x").kind is Kind.ANTICOTANGENT_FIBER


def test_normalize_odd_square_vanishes():
    assert normalize([th, th]).is_zero()


def test_normalize_even_commute():
    assert normalize([y, x]) == var(x) * var(y)
    assert str(normalize([y, x])) == "x*y"


def test_normalize_odd_anticommute():
    assert normalize([sy, sx]) == -(var(sx) * var(sy))


def test_normalize_with_coefficients():
    assert normalize([Fraction(1, 2), sx, 2, sy]) == var(sx) * var(sy)


def test_normalize_rejects_undeclared():
    with pytest.raises(UnknownVariable):
        normalize([x, th], declared=M2.base)


def test_mul_examples():
    assert mul(var(x) + var(th), var(th)) == var(x) * var(th)
    assert mul(var(sx), var(sy)) == -mul(var(sy), var(sx))


def test_mixed_coordinate_systems_detected():
    other = Manifold([("z", 0)])
    with pytest.raises(MixedCoordinateSystems):
        var(M2.x("x")) * var(other.x("z"))


def test_partial_examples():
    assert partial(var(x) ** 2, x) == var(x).scale(2)
    assert partial(var(sx) * var(sy), sy) == -var(sx)
    assert partial(var(th), x).is_zero()


def test_right_partial_sign():
    p = var(sx) * var(sy)
    # d_R/ds(y) strips from the right: no sign
    assert right_partial(p, sy) == var(sx)
    assert right_partial(p, sx) == -var(sy)


def test_substitute_examples():
    p = var(sx) * var(sy)
    assert substitute(p, {sx: GradedPolynomial(), sy: GradedPolynomial()}).is_zero()
    q = var(x) + var(sx)
    assert substitute(q, {sx: var(sx)}) == q
    px, dx, piup = M2.p("x"), M2.d("x"), M2.piup("x")
    out = substitute(var(dx) * var(px), {dx: -var(piup)})
    assert out == -(var(piup) * var(px))


def test_substitute_parity_mismatch():
    with pytest.raises(ParityMismatch):
        substitute(var(sx), {sx: var(x)})


def test_substitute_does_not_mutate_assignment():
    a = {sx: var(sy)}
    substitute(var(sx) * var(x), a)
    assert a == {sx: var(sy)}


def test_hbar_coefficient_examples():
    h = var(M2.hbar)
    P = var(M2.s("x")) * var(M2.s("y"))
    assert hbar_coefficient(h ** 2 * P, 2) == P
    assert hbar_coefficient(h ** 2 * P, 1).is_zero()
    assert hbar_coefficient(GradedPolynomial.const(3) + h * var(M2.x("x")), 0) == GradedPolynomial.const(3)


def test_inhomogeneous_parity_raises():
    with pytest.raises(ParityMismatch):
        (var(x) + var(th)).parity


# -- properties --------------------------------------------------------------

VARS = list(M3.base) + [M3.s(n) for n in M3.names()] + [M3.d(n) for n in M3.names()]
seeds = st.integers(min_value=0, max_value=10 ** 9)
parities = st.sampled_from([Parity.EVEN, Parity.ODD])


@settings(max_examples=150, deadline=None)
@given(seeds, parities, parities)
def test_graded_commutativity(seed, pa, pb):
    r = rng(seed)
    a = random_poly(r, VARS, pa)
    b = random_poly(r, VARS, pb)
    sign = -1 if pa and pb else 1
    assert mul(a, b) == mul(b, a).scale(sign)
    ab = mul(a, b)
    if ab:
        assert ab.parity == pa + pb


@settings(max_examples=150, deadline=None)
@given(seeds, st.sampled_from(VARS), st.sampled_from(VARS))
def test_partials_graded_commute(seed, u, v):
    p = random_poly(rng(seed), VARS, max_terms=5, max_total=4)
    sign = -1 if u.parity and v.parity else 1
    assert partial(partial(p, u), v) == partial(partial(p, v), u).scale(sign)


@settings(max_examples=100, deadline=None)
@given(seeds)
def test_normalize_idempotent(seed):
    p = random_poly(rng(seed), VARS, max_terms=5)
    assert GradedPolynomial(p.terms) == p
    for key, c in p.terms.items():
        factors = [c]
        for v, k in key:
            factors.extend([v] * k)
        assert normalize(factors) == GradedPolynomial.monomial(key, c)


@settings(max_examples=100, deadline=None)
@given(seeds, st.sampled_from(VARS))
def test_partial_is_graded_derivation(seed, v):
    r = rng(seed)
    a = random_poly(r, VARS, Parity.ODD if seed % 2 else Parity.EVEN)
    b = random_poly(r, VARS)
    sign = -1 if v.parity and a.parity else 1
    assert partial(a * b, v) == partial(a, v) * b + (a * partial(b, v)).scale(sign)
