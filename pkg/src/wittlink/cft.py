"""Finite-level class field theory for abelian extensions of Q.

An abelian field F is presented by a level n and a subgroup H of (Z/n)^*:
F is the subfield of the n-th cyclotomic field fixed by H, and its Galois
group over Q is the quotient (Z/n)^*/H.  Everything downstream (Artin
symbols, splitting invariants, fibers) is finite quotient-group
arithmetic; level 1 presents Q itself with the one-element unit group
(0,), the canonical residue of 1 mod 1.

Two independent routes compute the splitting shape (f, r) of an
unramified prime p: the order of the Artin coset in the quotient group,
and a distinct-degree factorization of the n-th cyclotomic polynomial
over F_p.  Their agreement is one of the acceptance suites.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import (
    DomainViolation,
    NotCoprime,
    RamifiedPrime,
)
from .rings import (
    Polynomial,
    RingSpec,
    cyclotomic_polynomial,
    divisors,
    is_prime,
    poly_divmod,
    poly_gcd_monic,
    poly_pow_mod,
)

# --------------------------------------------------------------------------
# elementary pieces


def legendre(q: int, p: int) -> int:
    """Legendre symbol (q|p) by Euler's criterion; p an odd prime."""
    if p == 2 or not is_prime(p):
        raise DomainViolation(f"{p} is not an odd prime")
    q %= p
    if q == 0:
        return 0
    e = pow(q, (p - 1) // 2, p)
    return 1 if e == 1 else -1


@functools.lru_cache(maxsize=None)
def unit_group(n: int) -> tuple[int, ...]:
    """Units mod n, sorted.  unit_group(1) is the trivial group (0,)."""
    if n < 1:
        raise DomainViolation(f"level must be >= 1, got {n}")
    if n == 1:
        return (0,)
    return tuple(u for u in range(1, n) if math.gcd(u, n) == 1)


def subgroup_generated(n: int, gens) -> frozenset:
    """Smallest multiplicatively closed subset of (Z/n)^* containing 1 and gens."""
    if n == 1:
        return frozenset({0})
    closure = {1}
    gens = [g % n for g in gens]
    for g in gens:
        if math.gcd(g, n) != 1:
            raise NotCoprime(f"{g} is not a unit mod {n}")
    frontier = [1]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                v = a * g % n
                if v not in closure:
                    closure.add(v)
                    nxt.append(v)
        frontier = nxt
    return frozenset(closure)


def crt_combine(residues) -> tuple[int, int]:
    """Combine (value, modulus) pairs with pairwise coprime moduli."""
    residues = list(residues)
    if not residues:
        raise DomainViolation("nothing to combine")
    value, modulus = residues[0]
    value %= modulus
    for v, m in residues[1:]:
        if math.gcd(modulus, m) != 1:
            raise NotCoprime(f"moduli {modulus} and {m} share a factor")
        inv = pow(modulus, -1, m)
        k = (v - value) * inv % m
        value = value + modulus * k
        modulus *= m
        value %= modulus
    return value, modulus


@dataclass(frozen=True)
class ModUnit:
    """A unit residue: the level-m truncation of a prime-to-m idele class."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainViolation(f"modulus must be >= 1, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)
        if math.gcd(self.value, self.modulus) != 1:
            raise NotCoprime(f"{self.value} is not a unit mod {self.modulus}")

    def mul(self, other: "ModUnit | int") -> "ModUnit":
        v = other.value if isinstance(other, ModUnit) else other
        return ModUnit(self.value * v % self.modulus, self.modulus)

    def pow(self, k: int) -> "ModUnit":
        return ModUnit(pow(self.value, k, self.modulus), self.modulus)

    def inv(self) -> "ModUnit":
        return self.pow(-1)

    def reduce(self, m: int) -> "ModUnit":
        if self.modulus % m:
            raise DomainViolation(f"{m} does not divide the level {self.modulus}")
        return ModUnit(self.value % m, m)

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def linking_hom(p: int, m: int) -> ModUnit:
    """Level-m truncation of the diagonal image of p in the prime-to-p units."""
    if not is_prime(p):
        raise DomainViolation(f"{p} is not prime")
    if math.gcd(p, m) != 1:
        raise NotCoprime(f"{p} divides the level {m}")
    return ModUnit(p % m, m)


# --------------------------------------------------------------------------
# abelian fields


@dataclass(frozen=True)
class AbelianField:
    """Subfield of the level-n cyclotomic field fixed by H <= (Z/n)^*."""

    level: int
    subgroup: frozenset
    label: str = ""

    def __post_init__(self):
        units = set(unit_group(self.level))
        H = set(self.subgroup)
        if not H or not H.issubset(units):
            raise DomainViolation("subgroup members must be units at the level")
        ident = 1 % self.level
        if ident not in H:
            raise DomainViolation("subgroup must contain the identity")
        for a in H:
            for b in H:
                if a * b % self.level not in H:
                    raise DomainViolation("subgroup is not multiplicatively closed")

    @property
    def degree(self) -> int:
        return len(unit_group(self.level)) // len(self.subgroup)

    def describe(self) -> str:
        if self.label:
            return self.label
        if len(self.subgroup) == len(unit_group(self.level)):
            return "Q"
        if len(self.subgroup) == 1:
            return f"Q(mu_{self.level})"
        return f"level {self.level} subgroup {sorted(self.subgroup)}"

    def __str__(self) -> str:
        return self.describe()


def rationals_field() -> AbelianField:
    return AbelianField(1, frozenset({0}), label="Q")


def cyclotomic_field(n: int) -> AbelianField:
    return AbelianField(n, frozenset({1 % n}), label=f"Q(mu_{n})")


def abelian_field(level: int, subgroup_elements, label: str = "") -> AbelianField:
    return AbelianField(level, frozenset(e % level for e in subgroup_elements), label)


def quadratic_field_subgroup(q: int) -> AbelianField:
    """Q(sqrt(q)) for an odd prime q, as a kernel-of-character subgroup.

    Level q with the squares when q = 1 mod 4; level 4q with the kernel of
    a -> (a|q) * (-1)^((a-1)/2) when q = 3 mod 4 (the character of the
    discriminant 4q).  Validated against the Legendre symbol through the
    reciprocity suite rather than trusted.
    """
    if q == 2 or not is_prime(q):
        raise DomainViolation(f"{q} must be an odd prime")
    if q % 4 == 1:
        H = frozenset(u for u in unit_group(q) if legendre(u, q) == 1)
        return AbelianField(q, H, label=f"Q(sqrt({q}))")
    level = 4 * q
    H = frozenset(
        u
        for u in unit_group(level)
        if legendre(u % q, q) * (-1) ** ((u - 1) // 2) == 1
    )
    return AbelianField(level, H, label=f"Q(sqrt({q}))")


@functools.lru_cache(maxsize=None)
def _conductor_cached(level: int, subgroup: frozenset) -> int:
    units = unit_group(level)
    for c in divisors(level):
        kernel = [u for u in units if u % c == 1 % c]
        if all(u in subgroup for u in kernel):
            return c
    raise AssertionError("level divides itself")  # unreachable


def conductor(F: AbelianField) -> int:
    """Least c | level with the reduction kernel inside H; 1 encodes Q."""
    return _conductor_cached(F.level, F.subgroup)


def at_conductor(F: AbelianField) -> AbelianField:
    """Re-present the same field at its conductor level."""
    c = conductor(F)
    if c == F.level:
        return F
    H = frozenset(u % c for u in F.subgroup)
    return AbelianField(c, H, label=F.label)


def ramified_set(F: AbelianField) -> frozenset:
    """Primes ramified in F: exactly the prime divisors of the conductor."""
    c = conductor(F)
    return frozenset(p for p in range(2, c + 1) if c % p == 0 and is_prime(p))


def ramified_set_via_inertia(F: AbelianField) -> frozenset:
    """Cross-check: p ramifies iff the level-p inertia units leave H."""
    n = F.level
    out = set()
    for p in range(2, n + 1):
        if n % p or not is_prime(p):
            continue
        pe = 1
        while n % (pe * p) == 0:
            pe *= p
        cofactor = n // pe
        inertia = [u for u in unit_group(n) if u % cofactor == 1 % cofactor]
        if any(u not in F.subgroup for u in inertia):
            out.add(p)
    return frozenset(out)


# --------------------------------------------------------------------------
# cosets, Artin symbols, splitting invariants


@dataclass(frozen=True)
class Coset:
    """A coset of H in (Z/m)^*, stored by its least member."""

    modulus: int
    subgroup: frozenset
    rep: int

    @classmethod
    def of(cls, modulus: int, subgroup: frozenset, element: int) -> "Coset":
        e = element % modulus
        members = {e * h % modulus for h in subgroup} if modulus > 1 else {0}
        return cls(modulus, subgroup, min(members))

    @property
    def members(self) -> frozenset:
        if self.modulus == 1:
            return frozenset({0})
        return frozenset(self.rep * h % self.modulus for h in self.subgroup)

    @property
    def is_identity(self) -> bool:
        return (1 % self.modulus) in self.members

    @property
    def order(self) -> int:
        """Order of the coset in the quotient group."""
        if self.modulus == 1:
            return 1
        f, cur = 1, self.rep
        while cur not in self.subgroup:
            cur = cur * self.rep % self.modulus
            f += 1
        return f

    def __str__(self) -> str:
        return f"{self.rep}*H mod {self.modulus}"


def artin_symbol(F: AbelianField, p: int) -> Coset:
    """The Frobenius coset of the unramified prime p: (p mod n) * H.

    When p divides the level but not the conductor, the field is
    re-presented at the conductor first.
    """
    if not is_prime(p):
        raise DomainViolation(f"{p} is not prime")
    if p in ramified_set(F):
        raise RamifiedPrime(f"{p} ramifies in {F.describe()} (ramified set {sorted(ramified_set(F))})")
    pres = F if math.gcd(p, F.level) == 1 else at_conductor(F)
    return Coset.of(pres.level, pres.subgroup, p)


@dataclass(frozen=True)
class SplitData:
    """Shape of the splitting of p: r primes of residue degree f, norm p^f."""

    prime: int
    artin_class: Coset
    residue_degree: int
    num_primes: int
    norm: int


def split_invariants(F: AbelianField, p: int) -> SplitData:
    art = artin_symbol(F, p)
    f = art.order
    degree = len(unit_group(F.level)) // len(F.subgroup)
    assert degree % f == 0
    return SplitData(p, art, f, degree // f, p**f)


def cyclotomic_factor_degrees(n: int, p: int) -> tuple[int, int]:
    """(f, r) from the distinct-degree factorization of Phi_n over F_p.

    Repeated squaring of x^p modulo Phi_n with gcd extraction; no full
    factorization is materialized.  Independent of the Artin-order route.
    """
    if not is_prime(p):
        raise DomainViolation(f"{p} is not prime")
    if math.gcd(n, p) != 1:
        raise NotCoprime(f"{p} divides the level {n}")
    spec = RingSpec.prime_field(p)
    A = Polynomial.from_ints(spec, cyclotomic_polynomial(n))
    x = Polynomial.from_ints(spec, [0, 1])
    shapes: list[tuple[int, int]] = []
    cur = poly_divmod(x, A)[1]
    k = 0
    while A.degree >= 1:
        k += 1
        if k > A.degree // 2 and A.degree > 0 and k > 1:
            shapes.append((A.degree, 1))
            break
        cur = poly_pow_mod(cur, p, A)
        g = poly_gcd_monic(A, cur - poly_divmod(x, A)[1])
        if g.degree >= 1:
            assert g.degree % k == 0
            shapes.append((k, g.degree // k))
            A = poly_divmod(A, g)[0]
            cur = poly_divmod(cur, A)[1] if A.degree >= 1 else cur
        if A.degree == 0:
            break
    if not shapes:
        shapes.append((1, 1))
    degrees = {f for f, _ in shapes}
    assert len(degrees) == 1, f"mixed factor degrees {shapes} for Phi_{n} mod {p}"
    f = degrees.pop()
    r = sum(count for _, count in shapes)
    return f, r


# --------------------------------------------------------------------------
# subgroup enumeration (acceptance grids)


@functools.lru_cache(maxsize=None)
def all_subgroups(n: int) -> tuple[frozenset, ...]:
    """Every subgroup of (Z/n)^*, as frozensets, by closing cyclic joins."""
    units = unit_group(n)
    if n == 1:
        return (frozenset({0}),)
    cyclics = {subgroup_generated(n, [u]) for u in units}
    cyclics.add(frozenset({1}))
    subs = set(cyclics)
    changed = True
    while changed:
        changed = False
        for s in list(subs):
            for c in cyclics:
                joined = subgroup_generated(n, list(s | c))
                if joined not in subs:
                    subs.add(joined)
                    changed = True
    return tuple(sorted(subs, key=lambda s: (len(s), sorted(s))))
