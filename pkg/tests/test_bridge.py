"""The comparison map: residues, equivariance, structural reports."""

import math
import random
from fractions import Fraction

import pytest

from wittlink.bridge import (
    bridge_compare,
    check_anti_equivariance,
    check_frobenius_equivariance,
    check_galois_equivariance,
    level_reduction_compatible,
    psi_level,
)
from wittlink.cft import (
    ModUnit,
    cyclotomic_field,
    quadratic_field_subgroup,
    rationals_field,
    unit_group,
)
from wittlink.errors import DomainViolation, NotCoprime, RamifiedPrime
from wittlink.orbits import DeningerPointFL, normalize_point


# --------------------------------------------------------------------------
# the level map


def test_psi_examples():
    r = psi_level(DeningerPointFL(3, ModUnit(2, 5), 1, 2))
    assert (r.residue, r.modulus) == (27, 45)
    r = psi_level(DeningerPointFL(3, ModUnit(2, 5), 2, 2))
    assert (r.residue, r.modulus) == (9, 45)
    r = psi_level(DeningerPointFL(3, ModUnit(1, 5), 1, 1))
    assert (r.residue, r.modulus) == (6, 15)


def test_psi_rejects_unnormalized():
    with pytest.raises(DomainViolation):
        psi_level(DeningerPointFL(3, ModUnit(2, 5), 9))


def test_psi_p_part_vanishes():
    rng = random.Random(2)
    for _ in range(200):
        p = rng.choice([2, 3, 5, 7, 11])
        m = rng.choice([m for m in range(2, 50) if math.gcd(m, p) == 1])
        a = rng.choice(unit_group(m))
        x = normalize_point(DeningerPointFL(p, ModUnit(a, m), rng.randint(1, 99), rng.randint(1, 3)))
        r = psi_level(x)
        assert r.residue % r.zero_part == 0
        assert r.residue % r.prime_to_p_modulus == (x.unit.value * x.scale) % m


def test_psi_well_defined_on_classes():
    # equivalent points normalize to the same representative, hence equal residues
    x = DeningerPointFL(3, ModUnit(2, 5), 1, 2)
    y = DeningerPointFL(3, ModUnit(2 * 3 % 5, 5), 3, 2)
    assert psi_level(normalize_point(x)) == psi_level(normalize_point(y))


# --------------------------------------------------------------------------
# equivariance


def test_frobenius_equivariance_examples():
    assert check_frobenius_equivariance(DeningerPointFL(3, ModUnit(2, 5), 1), 2)
    assert check_frobenius_equivariance(DeningerPointFL(3, ModUnit(1, 5), 1), 5)
    with pytest.raises(DomainViolation):
        check_frobenius_equivariance(DeningerPointFL(3, ModUnit(1, 5), 1), 3)


def test_galois_equivariance_examples():
    x = DeningerPointFL(3, ModUnit(2, 5), 1)
    assert check_galois_equivariance(x, 1)
    assert check_galois_equivariance(x, 3)  # exponent 6 = 1 = 3*2 mod 5
    with pytest.raises(DomainViolation):
        check_galois_equivariance(x, 5)


def test_galois_equivariance_accepts_character():
    from wittlink.bridge import CyclCharacter

    x = DeningerPointFL(3, ModUnit(2, 5), 1)
    chi = CyclCharacter(ModUnit(3, 5))
    assert chi.value == 3 and chi.modulus == 5  # identity on residues
    assert check_galois_equivariance(x, chi)


def test_anti_equivariance_examples():
    x = DeningerPointFL(3, ModUnit(2, 5), 1)
    assert check_anti_equivariance(x, 1)
    assert check_anti_equivariance(x, 3)  # one full loop
    assert check_anti_equivariance(x, Fraction(9, 2))
    with pytest.raises(DomainViolation):
        check_anti_equivariance(x, Fraction(-1, 2))


def test_equivariance_random_suite():
    rng = random.Random(9)
    for _ in range(150):
        p = rng.choice([2, 3, 5, 7])
        m = rng.choice([m for m in range(2, 40) if math.gcd(m, p) == 1])
        x = DeningerPointFL(p, ModUnit(rng.choice(unit_group(m)), m), rng.randint(1, 60))
        k = rng.choice([k for k in range(1, 30) if k % p])
        assert check_frobenius_equivariance(x, k)
        assert check_galois_equivariance(x, rng.choice(unit_group(m)))
        assert check_anti_equivariance(x, Fraction(rng.randint(1, 30), rng.randint(1, 30)))


# --------------------------------------------------------------------------
# reports


def test_bridge_quadratic_split():
    r = bridge_compare(quadratic_field_subgroup(5), 11, 5)
    assert (r.cc_side.count, r.deninger_side.count) == (2, 2)
    assert (r.cc_side.covering_degree, r.deninger_side.covering_degree) == (1, 1)
    assert r.cc_monodromy.is_identity and r.monodromy_match
    assert r.match


def test_bridge_cyclotomic():
    r = bridge_compare(cyclotomic_field(5), 7, 45)
    assert (r.cc_side.count, r.deninger_side.count) == (1, 1)
    assert (r.cc_side.covering_degree, r.deninger_side.covering_degree) == (4, 4)
    assert r.cc_monodromy.rep == 2
    assert r.match


def test_bridge_base_field():
    for p in (3, 7, 13):
        r = bridge_compare(rationals_field(), p, 10 if p != 5 else 12)
        assert r.match
        assert r.cc_side.count == 1 and r.cc_side.covering_degree == 1


def test_bridge_rejects_bad_levels():
    with pytest.raises(RamifiedPrime):
        bridge_compare(cyclotomic_field(5), 5, 45)
    with pytest.raises(DomainViolation):
        bridge_compare(cyclotomic_field(5), 7, 9)  # not a conductor multiple
    with pytest.raises(NotCoprime):
        bridge_compare(cyclotomic_field(5), 7, 35)


def test_bridge_report_dict_is_exact():
    r = bridge_compare(quadratic_field_subgroup(5), 11, 5)
    doc = r.to_dict()
    floats = [k for k, v in doc["cc"].items() if isinstance(v, float)]
    assert floats == ["circle_length_display"]
    assert doc["match"] is True
    assert doc["psi_samples"]
    for _, residue, modulus in doc["psi_samples"]:
        assert residue % 11 == 0 and modulus == 55


def test_level_reduction_compatibility():
    assert level_reduction_compatible(quadratic_field_subgroup(5), 11, 5, 15)
    assert level_reduction_compatible(cyclotomic_field(5), 7, 5, 45)
    assert level_reduction_compatible(cyclotomic_field(8), 3, 8, 40)
    with pytest.raises(DomainViolation):
        level_reduction_compatible(cyclotomic_field(5), 7, 5, 12)
