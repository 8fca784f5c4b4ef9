"""The comparison map from flow-side points to finite-adele residues.

A normalized point (p; a mod m'; n) restricts its character to roots of
unity: the prime-to-p exponent is a*n (the character normalization fixes
the exponent of the reference character to 1), and the p-power component
vanishes because reduction modulo a prime over p kills the p-power roots
of unity.  At level p^e * m' this is the residue

    psi(p; a; n)  =  CRT(0 mod p^e,  a*n mod m').

The map is checked to commute with inverse-root powering (exponent k
multiplies the residue by k), with the Galois action (sigma multiplies
the residue by sigma), and to be flow-anti-equivariant: multiplying the
flow coordinate by an exact positive rational t corresponds to
multiplying the archimedean coordinate on the adele side by 1/t, with one
full positive loop (t = p) transporting the fiber coordinate by the
inverse monodromy on both sides.

bridge_compare assembles the structural report: component counts and
covering degrees of the fiber over a prime computed on both sides, the
monodromy coset pushed through the restriction character, the vanishing
p-part of psi on sample points, and randomized equivariance runs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainViolation, NotCoprime
from .cft import (
    AbelianField,
    Coset,
    ModUnit,
    artin_symbol,
    at_conductor,
    conductor,
    crt_combine,
    ramified_set,
    unit_group,
)
from .orbits import (
    DeningerPointFL,
    FiberDecomposition,
    cc_fiber,
    closed_orbit_labels,
    decompose,
    deninger_packet,
    normalize_point,
    packet_fiber_over_label,
)
from .rings import is_prime

# --------------------------------------------------------------------------
# the level map


@dataclass(frozen=True)
class FiniteAdeleFL:
    """A level p^e * m' residue whose p-part is forced to vanish.

    The archimedean place is carried as an exact positive rational
    multiplicative coordinate; logarithms appear only in display code.
    """

    modulus: int
    residue: int
    prime: int
    p_exponent: int
    arch: Fraction = Fraction(1)

    def __post_init__(self):
        if not (0 <= self.residue < self.modulus):
            raise DomainViolation("residue out of range")
        if self.arch <= 0:
            raise DomainViolation("archimedean coordinate must be positive")

    @property
    def zero_part(self) -> int:
        return self.prime**self.p_exponent

    @property
    def prime_to_p_modulus(self) -> int:
        return self.modulus // self.zero_part

    @property
    def prime_to_p_residue(self) -> int:
        return self.residue % self.prime_to_p_modulus

    def reduce_prime_to_p(self, m_small: int) -> int:
        """Residue at a divisor level of the prime-to-p part (compatibility checks)."""
        if self.prime_to_p_modulus % m_small:
            raise DomainViolation(f"{m_small} does not divide {self.prime_to_p_modulus}")
        return self.residue % m_small

    def __str__(self) -> str:
        return f"{self.residue} mod {self.modulus} (p-part 0 mod {self.zero_part})"


def psi_level(x: DeningerPointFL, p_exponent: int | None = None) -> FiniteAdeleFL:
    """The finite-adele residue of a normalized point.

    Rejects non-normalized scales (p | n): at a fixed level the map is
    well-defined only on canonical representatives of the fiber relation.
    """
    if not x.is_normalized:
        raise DomainViolation("apply normalize_point first: the scale carries a p factor")
    e = x.p_exponent_budget if p_exponent is None else p_exponent
    if e < 1:
        raise DomainViolation("p-exponent must be >= 1")
    m2 = x.unit.modulus
    exponent = x.unit.value * x.scale % m2 if m2 > 1 else 0
    residue, modulus = crt_combine([(0, x.prime**e), (exponent, m2)])
    assert residue % x.prime**e == 0
    return FiniteAdeleFL(modulus, residue, x.prime, e)


# --------------------------------------------------------------------------
# equivariance checks (exact; False is a verification failure, not an error)


@dataclass(frozen=True)
class CyclCharacter:
    """A finite-level Galois element seen through the cyclotomic character.

    The identification sends the automorphism zeta -> zeta^sigma to the
    unit sigma itself, so value is the identity on residues; the type
    exists to mark where a unit is being used as a Galois action.
    """

    sigma: ModUnit

    @property
    def value(self) -> int:
        return self.sigma.value

    @property
    def modulus(self) -> int:
        return self.sigma.modulus


def check_frobenius_equivariance(x: DeningerPointFL, k: int) -> bool:
    """Scaling the point by k multiplies the residue by k (prime-to-p part)."""
    if k < 1 or math.gcd(k, x.prime) != 1:
        raise DomainViolation("the scaling index must be positive and prime to p")
    x = normalize_point(x)
    base = psi_level(x)
    scaled = DeningerPointFL(x.prime, x.unit, x.scale * k, x.p_exponent_budget)
    lhs = psi_level(scaled)
    return lhs.residue % lhs.modulus == (k * base.residue) % base.modulus


def check_galois_equivariance(x: DeningerPointFL, sigma) -> bool:
    """Acting by sigma on the unit coordinate multiplies the residue by cycl(sigma).

    Accepts a plain unit or a CyclCharacter; the identification is the
    identity on residues either way.
    """
    if isinstance(sigma, CyclCharacter):
        sigma = sigma.value
    m2 = x.unit.modulus
    if m2 > 1 and math.gcd(sigma, m2) != 1:
        raise DomainViolation(f"{sigma} is not a unit mod {m2}")
    x = normalize_point(x)
    base = psi_level(x)
    moved = DeningerPointFL(
        x.prime, x.unit.mul(sigma % m2 if m2 > 1 else 0) if m2 > 1 else x.unit, x.scale, x.p_exponent_budget
    )
    lhs = psi_level(moved)
    return lhs.residue % lhs.modulus == (sigma * base.residue) % base.modulus


def check_anti_equivariance(x: DeningerPointFL, t) -> bool:
    """Flow by t on one side matches flow by 1/t on the other, exactly.

    The archimedean coordinates invert through the bridge; the net p-power
    crossings j = v_p(t) transport the fiber coordinate by the inverse
    monodromy on both sides: unit a -> a * p^-j against residue ->
    p^-j * residue mod m'.
    """
    t = Fraction(t)
    if t <= 0:
        raise DomainViolation("flow increments are positive rationals")
    x = normalize_point(x)
    u = Fraction(1)
    flowed = t * u
    if 1 / flowed != (1 / t) * (1 / u):
        return False  # pragma: no cover - exact rational arithmetic
    j = 0
    num, den = t.numerator, t.denominator
    while num % x.prime == 0:
        num //= x.prime
        j += 1
    while den % x.prime == 0:
        den //= x.prime
        j -= 1
    m2 = x.unit.modulus
    base = psi_level(x)
    if m2 == 1:
        return True
    transported_unit = x.unit.mul(pow(x.prime, -j, m2))
    lhs = psi_level(DeningerPointFL(x.prime, transported_unit, x.scale, x.p_exponent_budget))
    rhs = pow(x.prime, -j, m2) * base.residue % m2
    return lhs.residue % m2 == rhs


# --------------------------------------------------------------------------
# the structural comparison


@dataclass(frozen=True)
class BridgeReport:
    """Side-by-side fiber structure over one prime, plus the psi conditions."""

    field_label: str
    prime: int
    level: int
    conductor: int
    deninger_side: FiberDecomposition
    cc_side: FiberDecomposition
    deninger_monodromy: Coset
    cc_monodromy: Coset
    monodromy_match: bool
    psi_zero_ok: bool
    psi_samples: tuple  # ((unit, residue, modulus), ...)
    equivariance_checks: tuple  # ((name, bool), ...)
    anti_equivariance: bool
    character_unit: int = 1  # chosen normalization of the reference character

    @property
    def match(self) -> bool:
        return (
            self.deninger_side.count == self.cc_side.count
            and self.deninger_side.covering_degree == self.cc_side.covering_degree
            and self.monodromy_match
            and self.psi_zero_ok
            and all(ok for _, ok in self.equivariance_checks)
            and self.anti_equivariance
        )

    def to_dict(self) -> dict:
        def side(d: FiberDecomposition) -> dict:
            return {
                "count": d.count,
                "covering_degree": d.covering_degree,
                "components": [list(c) for c in d.components],
                "circle_length": {"prime": d.circle_length[0], "exponent": d.circle_length[1]},
                "circle_length_display": round(d.circle_length_display(), 6),
            }

        return {
            "field": self.field_label,
            "prime": self.prime,
            "level": self.level,
            "conductor": self.conductor,
            "deninger": side(self.deninger_side),
            "cc": side(self.cc_side),
            "deninger_monodromy": {
                "rep": self.deninger_monodromy.rep,
                "modulus": self.deninger_monodromy.modulus,
            },
            "cc_monodromy": {
                "rep": self.cc_monodromy.rep,
                "modulus": self.cc_monodromy.modulus,
            },
            "monodromy_match": self.monodromy_match,
            "psi_zero_ok": self.psi_zero_ok,
            "psi_samples": [list(s) for s in self.psi_samples],
            "equivariance": {name: ok for name, ok in self.equivariance_checks},
            "anti_equivariance": self.anti_equivariance,
            "character_unit": self.character_unit,
            "match": self.match,
        }


def bridge_compare(
    F: AbelianField,
    p: int,
    m: int,
    *,
    seed: int = 0,
    samples: int = 20,
    p_exponent: int = 1,
) -> BridgeReport:
    """Compare the fiber structure over p computed along both routes.

    The covering side decomposes Gal(F/Q) under the Artin monodromy at the
    field's own level; the flow side builds the level-m packet, restricts
    to each closed-orbit label, and pushes through the character; the
    report also verifies the vanishing p-part of psi and randomized
    equivariance at this (p, m).
    """
    if not is_prime(p):
        raise DomainViolation(f"{p} is not prime")
    c = conductor(F)
    if p in ramified_set(F):
        artin_symbol(F, p)  # raises RamifiedPrime with a helpful message
    if m % c:
        raise DomainViolation(f"level {m} must be a multiple of the conductor {c}")
    if math.gcd(p, m) != 1:
        raise NotCoprime(f"level {m} must be coprime to {p}")

    cc = decompose(cc_fiber(F, p))
    T = deninger_packet(F, p, m)
    labels = closed_orbit_labels(p, m)
    fibers = [packet_fiber_over_label(T, lab) for lab in labels]
    shapes = {(f.count, f.covering_degree, f.components) for f in fibers}
    assert len(shapes) == 1  # label independence
    den = fibers[0]

    pres = at_conductor(F)
    cc_mono = Coset.of(pres.level, pres.subgroup, artin_symbol(F, p).rep % pres.level)
    den_mono = Coset.of(pres.level, pres.subgroup, T.monodromy % pres.level)
    monodromy_match = cc_mono == den_mono

    rng = random.Random(seed)
    units = unit_group(m)
    pool = list(units) if len(units) <= samples else rng.sample(list(units), samples)
    psi_samples = []
    psi_zero_ok = True
    for a in pool:
        x = DeningerPointFL(p, ModUnit(a, m), 1, p_exponent)
        r = psi_level(x)
        psi_zero_ok &= r.residue % r.zero_part == 0
        psi_samples.append((a, r.residue, r.modulus))

    def random_point() -> DeningerPointFL:
        a = rng.choice(units)
        n = rng.randint(1, 60)
        while n % p == 0:
            n = rng.randint(1, 60)
        return DeningerPointFL(p, ModUnit(a, m), n, p_exponent)

    frob_ok = all(
        check_frobenius_equivariance(random_point(), rng.choice([k for k in range(1, 30) if k % p]))
        for _ in range(samples)
    )
    galois_ok = all(
        check_galois_equivariance(random_point(), rng.choice(units)) for _ in range(samples)
    )
    anti_ok = all(
        check_anti_equivariance(
            random_point(), Fraction(rng.randint(1, 40), rng.randint(1, 40))
        )
        for _ in range(samples)
    ) and all(check_anti_equivariance(random_point(), p) for _ in range(3))

    return BridgeReport(
        field_label=F.describe(),
        prime=p,
        level=m,
        conductor=c,
        deninger_side=den,
        cc_side=cc,
        deninger_monodromy=den_mono,
        cc_monodromy=cc_mono,
        monodromy_match=monodromy_match,
        psi_zero_ok=psi_zero_ok,
        psi_samples=tuple(psi_samples),
        equivariance_checks=(("frobenius", frob_ok), ("galois", galois_ok)),
        anti_equivariance=anti_ok,
    )


def level_reduction_compatible(F: AbelianField, p: int, m_small: int, m_big: int, *, seed: int = 0) -> bool:
    """Level-m_big data reduces to level-m_small data under residue reduction.

    Both levels must be multiples of the conductor and coprime to p with
    m_small | m_big.  Checks equal component shapes and monodromy cosets,
    and reduction of psi residues on every unit of the big level.
    """
    if m_big % m_small:
        raise DomainViolation(f"{m_small} does not divide {m_big}")
    big = bridge_compare(F, p, m_big, seed=seed, samples=5)
    small = bridge_compare(F, p, m_small, seed=seed, samples=5)
    if (big.cc_side.count, big.cc_side.covering_degree) != (
        small.cc_side.count,
        small.cc_side.covering_degree,
    ):
        return False
    if (big.deninger_side.count, big.deninger_side.covering_degree) != (
        small.deninger_side.count,
        small.deninger_side.covering_degree,
    ):
        return False
    if big.deninger_monodromy != small.deninger_monodromy:
        return False
    e = 1
    for a in unit_group(m_big):
        x_big = DeningerPointFL(p, ModUnit(a, m_big), 1, e)
        x_small = DeningerPointFL(p, ModUnit(a % m_small, m_small), 1, e)
        r_big = psi_level(x_big)
        r_small = psi_level(x_small)
        if r_big.residue % r_small.modulus != r_small.residue:
            return False
    return True
