"""Class field data: symbols, fields, conductors, splitting, CRT."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from wittlink.cft import (
    AbelianField,
    Coset,
    ModUnit,
    all_subgroups,
    artin_symbol,
    at_conductor,
    conductor,
    crt_combine,
    cyclotomic_factor_degrees,
    cyclotomic_field,
    legendre,
    linking_hom,
    quadratic_field_subgroup,
    ramified_set,
    ramified_set_via_inertia,
    rationals_field,
    split_invariants,
    subgroup_generated,
    unit_group,
)
from wittlink.errors import DomainViolation, NotCoprime, RamifiedPrime
from wittlink.rings import euler_phi, primes_below


# --------------------------------------------------------------------------
# legendre / linking / unit groups


def test_legendre_values():
    assert legendre(5, 11) == 1  # 4^2 = 16 = 5 mod 11
    assert legendre(3, 7) == -1  # squares mod 7: {1, 2, 4}
    assert legendre(7, 7) == 0


def test_legendre_square_enumeration_oracle():
    for p in (3, 5, 7, 11, 13):
        squares = {a * a % p for a in range(1, p)}
        for q in range(1, p):
            assert legendre(q, p) == (1 if q in squares else -1)


def test_legendre_rejects_even_prime():
    with pytest.raises(DomainViolation):
        legendre(3, 2)


def test_linking_hom():
    assert linking_hom(3, 20) == ModUnit(3, 20)
    assert linking_hom(7, 10) == ModUnit(7, 10)
    with pytest.raises(NotCoprime):
        linking_hom(3, 6)


def test_linking_level_compatibility():
    for p in (3, 7, 11):
        for m in (20, 40, 60):
            if math.gcd(p, m) != 1:
                continue
            for d in (2, 4, 5, 10, 20):
                if m % d == 0 and math.gcd(p, d) == 1:
                    assert linking_hom(p, m).reduce(d) == linking_hom(p, d)


def test_unit_group():
    assert unit_group(5) == (1, 2, 3, 4)
    assert unit_group(1) == (0,)
    assert unit_group(12) == (1, 5, 7, 11)


def test_subgroup_generated():
    assert subgroup_generated(5, [4]) == frozenset({1, 4})
    assert subgroup_generated(5, []) == frozenset({1})
    assert subgroup_generated(5, [2]) == frozenset({1, 2, 3, 4})
    with pytest.raises(NotCoprime):
        subgroup_generated(10, [5])


def test_crt_combine():
    assert crt_combine([(0, 9), (2, 5)]) == (27, 45)
    assert crt_combine([(3, 7)]) == (3, 7)
    with pytest.raises(NotCoprime):
        crt_combine([(1, 4), (1, 6)])


# --------------------------------------------------------------------------
# fields, conductors, ramification


def test_quadratic_fields():
    q5 = quadratic_field_subgroup(5)
    assert (q5.level, q5.subgroup) == (5, frozenset({1, 4}))
    q13 = quadratic_field_subgroup(13)
    assert q13.level == 13
    assert q13.subgroup == frozenset({1, 3, 4, 9, 10, 12})
    q3 = quadratic_field_subgroup(3)
    assert (q3.level, q3.subgroup) == (12, frozenset({1, 11}))
    with pytest.raises(DomainViolation):
        quadratic_field_subgroup(2)
    with pytest.raises(DomainViolation):
        quadratic_field_subgroup(9)


def test_quadratic_field_reciprocity_consistency():
    # the character-kernel construction must reproduce the Legendre symbol
    # through the Artin map on 20 unramified primes
    for q in (3, 5, 7, 11, 13):
        F = quadratic_field_subgroup(q)
        count = 0
        for p in primes_below(200):
            if p == 2 or p == q:
                continue
            assert artin_symbol(F, p).is_identity == (legendre(q, p) == 1)
            count += 1
            if count >= 20:
                break


def test_subgroup_validation():
    with pytest.raises(DomainViolation):
        AbelianField(5, frozenset({1, 2}))  # not closed
    with pytest.raises(DomainViolation):
        AbelianField(5, frozenset({2, 3}))  # missing identity


def test_conductor_examples():
    assert conductor(AbelianField(5, frozenset(unit_group(5)))) == 1
    assert conductor(AbelianField(5, frozenset({1, 4}))) == 5
    assert conductor(AbelianField(10, frozenset({1}))) == 5
    assert conductor(rationals_field()) == 1


def test_at_conductor_re_presentation():
    F = AbelianField(10, frozenset({1}))
    G = at_conductor(F)
    assert G.level == 5 and G.subgroup == frozenset({1})
    assert G.degree == F.degree


def test_ramified_sets():
    assert ramified_set(cyclotomic_field(5)) == frozenset({5})
    assert ramified_set(rationals_field()) == frozenset()
    assert ramified_set(cyclotomic_field(12)) == frozenset({2, 3})


def test_ramified_two_routes_agree():
    fields = [
        cyclotomic_field(5),
        cyclotomic_field(12),
        cyclotomic_field(8),
        quadratic_field_subgroup(3),
        quadratic_field_subgroup(7),
        AbelianField(10, frozenset({1})),
        AbelianField(24, frozenset({1, 23})),
        rationals_field(),
    ]
    for F in fields:
        assert ramified_set(F) == ramified_set_via_inertia(F)


# --------------------------------------------------------------------------
# Artin symbols and splitting


def test_artin_symbol_examples():
    a = artin_symbol(cyclotomic_field(5), 7)
    assert a.rep == 2 and a.order == 4
    assert artin_symbol(cyclotomic_field(5), 11).is_identity
    assert artin_symbol(quadratic_field_subgroup(5), 11).is_identity


def test_artin_symbol_ramified_rejected():
    with pytest.raises(RamifiedPrime):
        artin_symbol(cyclotomic_field(5), 5)


def test_artin_symbol_level_with_unramified_divisor():
    # p = 2 divides the level 10 but not the conductor 5
    F = AbelianField(10, frozenset({1}))
    a = artin_symbol(F, 2)
    assert a.modulus == 5 and a.rep == 2


def test_artin_depends_only_on_conductor_class():
    F = cyclotomic_field(7)
    for p, q in ((11, 53), (3, 17), (5, 19)):
        assert p % 7 == q % 7
        assert artin_symbol(F, p) == artin_symbol(F, q)


def test_split_invariants_examples():
    s = split_invariants(cyclotomic_field(5), 7)
    assert (s.residue_degree, s.num_primes, s.norm) == (4, 1, 2401)
    s = split_invariants(cyclotomic_field(5), 11)
    assert (s.residue_degree, s.num_primes) == (1, 4)
    s = split_invariants(rationals_field(), 7)
    assert (s.residue_degree, s.num_primes) == (1, 1)


def test_split_times_count_is_degree():
    for n in range(1, 16):
        for H in all_subgroups(n):
            F = AbelianField(n, H)
            for p in primes_below(30):
                if p in ramified_set(F):
                    continue
                s = split_invariants(F, p)
                assert s.residue_degree * s.num_primes == F.degree


def test_cyclotomic_factor_degrees_examples():
    assert cyclotomic_factor_degrees(5, 7) == (4, 1)
    assert cyclotomic_factor_degrees(5, 11) == (1, 4)
    assert cyclotomic_factor_degrees(1, 7) == (1, 1)
    with pytest.raises(NotCoprime):
        cyclotomic_factor_degrees(10, 5)


def test_split_double_oracle_small_grid():
    for n in range(1, 16):
        F = cyclotomic_field(n)
        for p in primes_below(20):
            if math.gcd(n, p) != 1:
                continue
            s = split_invariants(F, p)
            assert (s.residue_degree, s.num_primes) == cyclotomic_factor_degrees(n, p)
            assert s.residue_degree * s.num_primes == euler_phi(n)


# --------------------------------------------------------------------------
# subgroup lattice and cosets


def test_all_subgroups():
    assert {frozenset(s) for s in all_subgroups(5)} == {
        frozenset({1}),
        frozenset({1, 4}),
        frozenset({1, 2, 3, 4}),
    }
    assert len(all_subgroups(12)) == 5  # (Z/12)^* = C2 x C2
    for s in all_subgroups(24):
        F = AbelianField(24, s)  # validates closure
        assert euler_phi(24) % len(s) == 0


def test_coset_order():
    H = frozenset({1})
    assert Coset.of(5, H, 2).order == 4
    assert Coset.of(5, frozenset({1, 4}), 4).order == 1
    assert Coset.of(1, frozenset({0}), 0).order == 1


@given(st.sampled_from([2, 3, 5, 7, 11, 13]), st.integers(2, 60))
@settings(max_examples=60, deadline=None)
def test_linking_matches_reduction(p, m):
    if math.gcd(p, m) != 1:
        return
    assert linking_hom(p, m).value == p % m
