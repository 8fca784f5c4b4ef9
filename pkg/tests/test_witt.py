"""Rational Witt vectors: ring operations, ghost oracle, group-ring maps, descent."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from wittlink.errors import DomainViolation, NotSplit, UnsupportedRing
from wittlink.rings import Polynomial, RingElement, RingSpec
from wittlink.witt import (
    GroupRingElement,
    WittVector,
    frobenius,
    galois_conjugate,
    galois_fixed_check,
    ghost,
    groupring_to_witt,
    series_coefficients,
    split_counit,
    teichmuller,
    witt_add,
    witt_mul,
    witt_neg,
    witt_to_groupring,
)

Z = RingSpec.integers()
F5 = RingSpec.prime_field(5)
F7 = RingSpec.prime_field(7)
C5 = RingSpec.cyclotomic(5)


def w(num, den=(1,)):
    return WittVector.from_ints(Z, num, den)


# --------------------------------------------------------------------------
# addition, negation


def test_add_is_series_product():
    assert witt_add(w([1, -2]), w([1, -3])) == w([1, -5, 6])


def test_add_identity():
    f = w([1, 3, -4, 7])
    assert witt_add(f, WittVector.zero(Z)) == f


def test_add_inverse_pair():
    f = w([1, -2])
    assert witt_add(f, w([1], [1, -2])) == WittVector.zero(Z)


def test_neg_is_reciprocal():
    f = w([1, -2])
    assert witt_neg(f) == w([1], [1, -2])
    assert witt_add(f, witt_neg(f)) == WittVector.zero(Z)
    assert witt_neg(witt_neg(f)) == f
    assert witt_neg(WittVector.zero(Z)) == WittVector.zero(Z)


def test_equality_ignores_representation():
    # cross-multiplied equality sees through unreduced parts
    raw = WittVector.from_polys(
        Polynomial.from_ints(Z, [1, -5, 6]), Polynomial.from_ints(Z, [1, -3]), normalize=False
    )
    assert raw == w([1, -2])
    assert raw != w([1, -3])


def test_normalization_reduces_common_factor():
    f = WittVector.from_polys(
        Polynomial.from_ints(Z, [1, -5, 6]), Polynomial.from_ints(Z, [1, -3])
    )
    assert f.num == Polynomial.from_ints(Z, [1, -2]) and f.den.is_one
    Q = RingSpec.rationals()
    g = WittVector.from_ints(Q, [1, -5, 6], [1, -3])
    assert g.num == Polynomial.from_ints(Q, [1, -2]) and g.den.is_one
    F7 = RingSpec.prime_field(7)
    h = WittVector.from_ints(F7, [1, -5, 6], [1, -3])
    assert h.num == Polynomial.from_ints(F7, [1, -2]) and h.den.is_one


# --------------------------------------------------------------------------
# multiplication


def test_mul_on_lifts():
    assert witt_mul(w([1, -2]), w([1, -3])) == w([1, -6])


def test_mul_degree_two():
    # ghost oracle: (5,13,35,...) * (2,4,8,...) matches (1-4t)(1-6t)
    lhs = witt_mul(w([1, -5, 6]), w([1, -2]))
    assert lhs == w([1, -10, 24])
    gl = ghost(lhs, 3)
    gr = ghost(w([1, -5, 6]), 3) * ghost(w([1, -2]), 3)
    assert gl.components == gr.components


def test_mul_identity_is_teichmuller_one():
    f = w([1, 4, -1, 3], [1, -5])
    assert witt_mul(f, WittVector.one(Z)) == f


def test_mul_with_denominators():
    f = w([1, -2], [1, -3])
    g = w([1, -5], [1, -7])
    prod = witt_mul(f, g)
    # inverse roots: (2 - 3) times (5 - 7) -> (10, 14; 15, 21) with signs
    expected = witt_mul(w([1, -2]), w([1, -5]))
    expected = witt_add(expected, witt_mul(w([1, -3]), w([1, -7])))
    expected = witt_add(expected, witt_neg(witt_mul(w([1, -2]), w([1, -7]))))
    expected = witt_add(expected, witt_neg(witt_mul(w([1, -3]), w([1, -5]))))
    assert prod == expected


# --------------------------------------------------------------------------
# Frobenius


def test_frobenius_on_lift():
    assert frobenius(2, w([1, -3])) == w([1, -9])


def test_frobenius_ghost_shift():
    f = w([1, -5, 6])
    assert frobenius(2, f) == w([1, -13, 36])
    g = ghost(f, 8)
    gf = ghost(frobenius(2, f), 4)
    assert gf.components == tuple(g.components[2 * k - 1] for k in range(1, 5))


def test_frobenius_identity_and_errors():
    f = w([1, 2, 3])
    assert frobenius(1, f) == f
    with pytest.raises(DomainViolation):
        frobenius(0, f)


def test_frobenius_composition():
    f = w([1, -2, 7], [1, 3])
    assert frobenius(2, frobenius(3, f)) == frobenius(6, f)


def test_frobenius_composition_random():
    rng = random.Random(17)
    for _ in range(10):
        f = w(
            [1] + [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))],
            [1] + [rng.randint(-5, 5) for _ in range(rng.randint(0, 3))],
        )
        for n in range(1, 6):
            for m in range(1, 6):
                assert frobenius(n, frobenius(m, f)) == frobenius(n * m, f)


# --------------------------------------------------------------------------
# Teichmueller and the counit


def test_teichmuller_values():
    assert teichmuller(RingElement.of(Z, 2)) == w([1, -2])
    assert teichmuller(RingElement.of(Z, 0)) == WittVector.zero(Z)
    assert teichmuller(RingElement.of(Z, 1)) == WittVector.one(Z)


def test_teichmuller_multiplicative():
    for a in range(-5, 6):
        for b in range(-5, 6):
            ta = teichmuller(RingElement.of(Z, a))
            tb = teichmuller(RingElement.of(Z, b))
            assert witt_mul(ta, tb) == teichmuller(RingElement.of(Z, a * b))


def test_split_counit():
    assert split_counit(w([1, -5, 6])).payload == 5
    assert split_counit(WittVector.zero(Z)).payload == 0
    for a in range(-3, 4):
        assert split_counit(teichmuller(RingElement.of(Z, a))).payload == a


# --------------------------------------------------------------------------
# ghost components


def test_ghost_geometric():
    assert ghost(w([1, -2]), 3).components == (2, 4, 8)


def test_ghost_zero():
    assert ghost(WittVector.zero(Z), 3).components == (0, 0, 0)


def test_ghost_newton():
    assert ghost(w([1, -5, 6]), 2).components == (5, 13)


def test_ghost_default_precision_separates():
    f, g = w([1, -2, 5]), w([1, -2, 4])
    assert ghost(f).components != ghost(g).components


@given(st.lists(st.integers(-6, 6), max_size=3), st.lists(st.integers(-6, 6), max_size=3))
@settings(max_examples=50, deadline=None)
def test_ghost_additive(a, b):
    f, g = w([1] + a), w([1] + b)
    gf, gg = ghost(f, 10), ghost(g, 10)
    assert ghost(witt_add(f, g), 10).components == (gf + gg).components


# --------------------------------------------------------------------------
# group-ring correspondence


def test_groupring_to_witt_examples():
    Q = RingSpec.rationals()
    x = GroupRingElement.of(Q, [(2, 1), (3, 1)])
    assert groupring_to_witt(x) == WittVector.from_ints(Q, [1, -5, 6])
    assert groupring_to_witt(GroupRingElement.of(Q, [])) == WittVector.zero(Q)
    assert groupring_to_witt(GroupRingElement.of(Q, [(2, -1)])) == WittVector.from_ints(
        Q, [1], [1, -2]
    )


def test_groupring_requires_units():
    from wittlink.errors import NotAUnit

    with pytest.raises(NotAUnit):
        GroupRingElement.of(F5, [(0, 1)])


def test_witt_to_groupring_roots_mod7():
    f = WittVector.from_ints(F7, [1, -5, 6])
    assert witt_to_groupring(f).terms == ((2, 1), (3, 1))


def test_witt_to_groupring_lift_of_one():
    assert witt_to_groupring(WittVector.one(F7)).terms == ((1, 1),)


def test_witt_to_groupring_not_split():
    with pytest.raises(NotSplit):
        witt_to_groupring(WittVector.from_ints(F5, [1, 1, 1]), 1)


def test_witt_to_groupring_extension_decode():
    f = WittVector.from_ints(F5, [1, 1, 1])
    x = witt_to_groupring(f, 2)
    assert x.spec == RingSpec.ext_field(5, 2)
    lifted = WittVector.from_polys(
        Polynomial.from_ints(x.spec, [1, 1, 1]), Polynomial.one(x.spec)
    )
    assert groupring_to_witt(x) == lifted


def test_groupring_map_is_ring_homomorphism():
    # sums go to Witt sums, convolutions to Witt products
    rng = random.Random(41)
    for p in (5, 7):
        spec = RingSpec.prime_field(p)
        for _ in range(15):
            x = GroupRingElement.of(
                spec, [(b, rng.choice([-2, -1, 1, 2])) for b in rng.sample(range(1, p), 2)]
            )
            y = GroupRingElement.of(
                spec, [(b, rng.choice([-2, -1, 1, 2])) for b in rng.sample(range(1, p), 2)]
            )
            assert groupring_to_witt(x + y) == witt_add(groupring_to_witt(x), groupring_to_witt(y))
            assert groupring_to_witt(x * y) == witt_mul(groupring_to_witt(x), groupring_to_witt(y))


def test_roundtrip_random():
    rng = random.Random(11)
    for p in (5, 7, 11):
        spec = RingSpec.prime_field(p)
        for _ in range(20):
            bases = rng.sample(range(1, p), rng.randint(0, 3))
            x = GroupRingElement.of(spec, [(b, rng.choice([-2, -1, 1, 2])) for b in bases])
            assert witt_to_groupring(groupring_to_witt(x)) == x


# --------------------------------------------------------------------------
# Galois descent


def zeta_power(k):
    e = [0, 0, 0, 0]
    e[k % 4] = 1  # valid for exponents < 4 only
    return tuple(e)


def orbit_product():
    num = Polynomial.one(C5)
    for k in (1, 2, 3):
        num = num * Polynomial.from_payloads(C5, [C5.one(), C5.neg(zeta_power(k))])
    # the k = 4 factor: zeta^4 = -1 - z - z^2 - z^3
    num = num * Polynomial.from_payloads(C5, [C5.one(), (1, 1, 1, 1)])
    return WittVector.from_polys(num)


def test_orbit_product_is_rational():
    f = orbit_product()
    assert f == WittVector.from_ints(C5, [1, 1, 1, 1, 1])
    assert galois_fixed_check(f)


def test_galois_fixed_examples():
    assert galois_fixed_check(WittVector.from_ints(C5, [1, 1, 1, 1, 1]))
    zt = WittVector.from_polys(
        Polynomial.from_payloads(C5, [C5.one(), C5.neg((0, 1, 0, 0))])
    )
    assert not galois_fixed_check(zt)
    assert galois_conjugate(zt, 2) != zt
    assert galois_fixed_check(WittVector.from_ints(C5, [1, -4, 7], [1, 2]))


def test_galois_fixed_wrong_ring():
    with pytest.raises(UnsupportedRing):
        galois_fixed_check(w([1, -2]))


def test_series_coefficients():
    f = w([1, -2], [1, -3])
    # (1-2t)/(1-3t) = 1 + t + 3t^2 + 9t^3 + ...
    assert series_coefficients(f, 3) == [1, 1, 3, 9]


# --------------------------------------------------------------------------
# reconstruction oracle: rebuild product/power polynomials from power sums
# over Q by Newton's identities, entirely independent of the resultant path


def _poly_from_power_sums(s, d):
    from fractions import Fraction

    e = [Fraction(1)]
    for k in range(1, d + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * Fraction(s[i - 1])
        e.append(acc / k)
    coeffs = [(-1) ** j * e[j] for j in range(d + 1)]
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def _random_part(rng, dmax):
    deg = rng.randint(1, dmax)
    c = [1] + [rng.randint(-6, 6) for _ in range(deg - 1)] + [rng.choice([1, 2, 3, -1, -2, -3])]
    return Polynomial.from_ints(Z, c)


def test_mul_matches_newton_reconstruction():
    rng = random.Random(123)
    for _ in range(40):
        a, b = _random_part(rng, 3), _random_part(rng, 3)
        prod = witt_mul(WittVector.from_polys(a), WittVector.from_polys(b))
        d = a.degree * b.degree
        gf = ghost(WittVector.from_polys(a), d)
        gg = ghost(WittVector.from_polys(b), d)
        s = [x * y for x, y in zip(gf.components, gg.components)]
        assert prod.den.is_one
        assert list(prod.num.coeffs) == _poly_from_power_sums(s, d)


def test_frobenius_matches_newton_reconstruction():
    rng = random.Random(124)
    for _ in range(40):
        a = _random_part(rng, 4)
        d = a.degree
        f = WittVector.from_polys(a)
        n = rng.randint(2, 5)
        Ff = frobenius(n, f)
        s = ghost(f, n * d).components
        assert Ff.den.is_one
        assert list(Ff.num.coeffs) == _poly_from_power_sums(
            [s[n * k - 1] for k in range(1, d + 1)], d
        )


def test_product_resultant_routes_agree_over_polynomial_ring():
    # the remainder-sequence and determinant routes on the exact R[t][y]
    # resultants behind the product must agree coefficient for coefficient
    from wittlink.rings import _PolyRingOps, _lp_resultant_det, _lp_resultant_prs

    rng = random.Random(125)
    pops = _PolyRingOps(Z)
    for _ in range(25):
        a = _random_part(rng, 3)
        b = _random_part(rng, 3)
        d = a.degree
        zero = Z.zero()
        rev = list(reversed(a.coeffs))
        A = [Polynomial.from_payloads(Z, [zero] * (d - i) + [rev[i]]) for i in range(d + 1)]
        B = [Polynomial.constant(Z, c) for c in b.coeffs]
        assert _lp_resultant_prs(list(A), list(B), pops) == _lp_resultant_det(list(A), list(B), pops)


# --------------------------------------------------------------------------
# cross-cutting ring laws (small seeded sample; the full run is acceptance)


def test_ring_laws_sample():
    rng = random.Random(3)

    def rnd():
        deg = rng.randint(0, 3)
        num = [1] + [rng.randint(-4, 4) for _ in range(deg)]
        den = [1] + [rng.randint(-4, 4) for _ in range(rng.randint(0, 3))]
        return w(num, den)

    for _ in range(12):
        f, g, h = rnd(), rnd(), rnd()
        assert witt_mul(f, g) == witt_mul(g, f)
        assert witt_mul(witt_mul(f, g), h) == witt_mul(f, witt_mul(g, h))
        assert witt_mul(f, witt_add(g, h)) == witt_add(witt_mul(f, g), witt_mul(f, h))
        gf, gg = ghost(f, 10), ghost(g, 10)
        assert ghost(witt_mul(f, g), 10).components == (gf * gg).components
