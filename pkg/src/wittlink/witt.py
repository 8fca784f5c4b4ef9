"""The ring of rational Witt vectors over an exact coefficient ring.

A rational Witt vector is a rational function num/den over R with
num(0) = den(0) = 1.  Addition is multiplication of rational functions
(identity: the constant 1); the product extends (1-a*t) (x) (1-b*t) =
(1-a*b*t) biadditively and is computed on polynomial parts through exact
resultants, never by root extraction.  For parts p, q with inverse-root
multisets {a_i}, {b_j}:

    (p x q)(t) = Res_y(p~(y), q(y)),   p~(y) = sum_i p_rev[i] t^(d-i) y^i

where p~ is monic in y with roots t*a_i, so the resultant equals
prod q(t*a_i) without any sign correction.  The inverse-root n-th power
map reduces rev(p) modulo y^n - u (a monic divisor, so plain division)
and finishes with a small resultant; reversing the u-variable output
recovers prod (1 - a_i^n t).

Ghost components (power sums of inverse roots, numerator minus
denominator) come from a division-free Newton recurrence and are the
independent oracle: they turn Witt (+) and (x) into componentwise + and *.

Equality never relies on normal forms: f == g iff
f.num * g.den == g.num * f.den, valid because denominators with constant
term 1 are power-series units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainViolation, NotSplit, SpecMismatch, UnsupportedRing
from .rings import (
    Polynomial,
    RingElement,
    RingSpec,
    _KIND_C,
    _KIND_FP,
    _KIND_FQ,
    _KIND_Z,
    _PolyRingOps,
    _lp_resultant,
    _qx_divmod,
    _qx_invmod,
    _qx_mul,
    _qx_rem,
    _qx_trim,
    conjugate_polynomial,
    cyclotomic_polynomial,
    poly_divmod,
)

# --------------------------------------------------------------------------
# normalization helpers


def _probe_coprime_mod_p(num: Polynomial, den: Polynomial) -> bool:
    """Certify gcd(num, den) = 1 over Z by a gcd modulo large primes.

    deg(gcd mod q) >= deg(gcd over Q) whenever q preserves both leading
    coefficients, so a constant gcd modulo one good prime proves
    coprimality.  Returns False when no probe certifies (unknown).
    """
    for q in (2147483629, 1000003):
        if num.lc % q == 0 or den.lc % q == 0:
            continue
        a = [c % q for c in num.coeffs]
        b = [c % q for c in den.coeffs]
        while b and any(b):
            # remainder of a by b over F_q
            while b and b[-1] == 0:
                b.pop()
            if not b:
                break
            inv = pow(b[-1], -1, q)
            r = list(a)
            while len(r) >= len(b) and any(r):
                while r and r[-1] == 0:
                    r.pop()
                if len(r) < len(b):
                    break
                coef = r[-1] * inv % q
                shift = len(r) - len(b)
                for i, bc in enumerate(b):
                    r[i + shift] = (r[i + shift] - coef * bc) % q
            while r and r[-1] == 0:
                r.pop()
            a, b = b, r
        if len(a) == 1:
            return True
    return False


def _fraction_coeffs(poly: Polynomial) -> list[Fraction]:
    return [Fraction(c) for c in poly.coeffs]


def _qx_gcd_monic(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _qx_trim(list(a)), _qx_trim(list(b))
    while b:
        a, b = b, _qx_rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _normalize_int_parts(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    spec = num.spec
    if _probe_coprime_mod_p(num, den):
        return num, den
    fn, fd = _fraction_coeffs(num), _fraction_coeffs(den)
    g = _qx_gcd_monic(fn, fd)
    if len(g) <= 1:
        return num, den
    g = [c / g[0] for c in g]  # constant term 1; nonzero since num(0) = 1
    qn, rn = _qx_divmod(fn, g)
    qd, rd = _qx_divmod(fd, g)
    assert not rn and not rd
    assert all(c.denominator == 1 for c in qn + qd)  # Gauss: quotients stay integral
    return (
        Polynomial.from_payloads(spec, [int(c) for c in qn]),
        Polynomial.from_payloads(spec, [int(c) for c in qd]),
    )


def _normalize_field_parts(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    spec = num.spec
    a, b = num, den
    while not b.is_zero:
        a, b = b, poly_divmod(a, b)[1]
    if a.degree <= 0:
        return num, den
    g = a.scale(spec.inv(a.constant_term))
    qn = poly_divmod(num, g)[0]
    qd = poly_divmod(den, g)[0]
    return qn, qd


def _normalize_cyclotomic_parts(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Reduce over Q(zeta); keep the reduction only if it stays integral."""
    spec = num.spec
    phi = [Fraction(v) for v in cyclotomic_polynomial(spec.n)]
    d = len(phi) - 1

    def fvec(payload):
        return [Fraction(v) for v in payload]

    def f_is_zero(v):
        return all(x == 0 for x in v)

    def f_mul(x, y):
        return _qx_rem(_qx_mul(list(x), list(y)), phi)

    def f_sub(x, y):
        out = [Fraction(0)] * max(len(x), len(y))
        for i, c in enumerate(x):
            out[i] += c
        for i, c in enumerate(y):
            out[i] -= c
        return out

    def f_inv(x):
        inv = _qx_invmod(list(x), phi)
        assert inv is not None
        return inv

    def rem(a, b):
        r = [list(c) for c in a]
        inv_lead = f_inv(b[-1])
        while r and len(r) >= len(b):
            if f_is_zero(r[-1]):
                r.pop()
                continue
            coef = f_mul(r[-1], inv_lead)
            shift = len(r) - len(b)
            for i, bc in enumerate(b):
                r[i + shift] = f_sub(r[i + shift], f_mul(coef, bc))
            while r and f_is_zero(r[-1]):
                r.pop()
        return r

    a = [fvec(c) for c in num.coeffs]
    b = [fvec(c) for c in den.coeffs]
    while b:
        a, b = b, rem(a, b)
        while b and f_is_zero(b[-1]):
            b.pop()
    if len(a) <= 1:
        return num, den
    g = [f_mul(c, f_inv(a[0])) for c in a]  # constant term 1

    def divide(coeffs):
        r = [fvec(c) for c in coeffs]
        q = [None] * (len(r) - len(g) + 1)
        inv_lead = f_inv(g[-1])
        while r and len(r) >= len(g):
            coef = f_mul(r[-1], inv_lead)
            q[len(r) - len(g)] = coef
            shift = len(r) - len(g)
            for i, gc in enumerate(g):
                r[i + shift] = f_sub(r[i + shift], f_mul(coef, gc))
            while r and f_is_zero(r[-1]):
                r.pop()
        if r:
            return None
        return q

    qn, qd = divide(num.coeffs), divide(den.coeffs)
    if qn is None or qd is None:
        return num, den
    flat = [x for c in qn + qd for x in c]
    if any(f.denominator != 1 for f in flat):
        return num, den  # reduced form leaves Z[zeta]; keep the given parts
    to_payload = lambda c: tuple([int(v) for v in c] + [0] * (d - len(c)))
    return (
        Polynomial.from_payloads(spec, [to_payload(c) for c in qn]),
        Polynomial.from_payloads(spec, [to_payload(c) for c in qd]),
    )


def _normalize_parts(num: Polynomial, den: Polynomial) -> tuple[Polynomial, Polynomial]:
    spec = num.spec
    if num == den:
        return Polynomial.one(spec), Polynomial.one(spec)
    if den.is_one or num.is_one:
        return num, den
    if spec.kind == _KIND_Z:
        return _normalize_int_parts(num, den)
    if spec.is_field:
        return _normalize_field_parts(num, den)
    if spec.kind == _KIND_C:
        return _normalize_cyclotomic_parts(num, den)
    return num, den  # Zn: no division available; equality is cross-multiplied


# --------------------------------------------------------------------------
# WittVector


@dataclass(frozen=True, eq=False)
class WittVector:
    """An element of the rational Witt ring, stored as num/den."""

    spec: RingSpec
    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        if self.num.spec != self.spec or self.den.spec != self.spec:
            raise SpecMismatch("polynomial parts disagree with the ring")
        if not self.spec.is_one(self.num.constant_term) or not self.spec.is_one(
            self.den.constant_term
        ):
            raise DomainViolation("numerator and denominator need constant term 1")

    # ---------------------------------------------------------- builders
    @classmethod
    def from_polys(cls, num: Polynomial, den: Polynomial | None = None, normalize: bool = True) -> "WittVector":
        spec = num.spec
        if den is None:
            den = Polynomial.one(spec)
        if normalize:
            num, den = _normalize_parts(num, den)
        return cls(spec, num, den)

    @classmethod
    def from_ints(cls, spec: RingSpec, num_ints, den_ints=(1,)) -> "WittVector":
        return cls.from_polys(
            Polynomial.from_ints(spec, num_ints), Polynomial.from_ints(spec, den_ints)
        )

    @classmethod
    def zero(cls, spec: RingSpec) -> "WittVector":
        """Additive identity: the constant power series 1."""
        return cls(spec, Polynomial.one(spec), Polynomial.one(spec))

    @classmethod
    def one(cls, spec: RingSpec) -> "WittVector":
        """Multiplicative identity: the Teichmueller lift 1 - t."""
        return cls(spec, Polynomial.from_ints(spec, [1, -1]), Polynomial.one(spec))

    # ---------------------------------------------------------- equality
    def __eq__(self, other) -> bool:
        if not isinstance(other, WittVector):
            return NotImplemented
        if self.spec != other.spec:
            return False
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is by cross-multiplication, not by parts

    def _check(self, other: "WittVector") -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"mixed rings {self.spec} and {other.spec}")

    def __add__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, other)

    def __neg__(self) -> "WittVector":
        return witt_neg(self)

    def __sub__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, witt_neg(other))

    def __mul__(self, other: "WittVector") -> "WittVector":
        return witt_mul(self, other)

    @property
    def is_additive_identity(self) -> bool:
        return self.num == self.den

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"WittVector({self})"


# --------------------------------------------------------------------------
# ring operations


def witt_add(f: WittVector, g: WittVector) -> WittVector:
    """f (+) g: the product of the underlying power series."""
    f._check(g)
    return WittVector.from_polys(f.num * g.num, f.den * g.den)


def witt_neg(f: WittVector) -> WittVector:
    """Additive inverse: the reciprocal series, again rational."""
    return WittVector(f.spec, f.den, f.num)


def _star_polys(p: Polynomial, q: Polynomial) -> Polynomial:
    """Polynomial with inverse roots {a*b} for a over p, b over q.

    Computed as Res_y(p~, q) with p~(y) = sum p_rev[i] t^(d-i) y^i, monic in
    y with roots t*a_i; q keeps constant (t-degree 0) coefficients, which
    keeps the remainder sequence cheap.
    """
    spec = p.spec
    d, e = p.degree, q.degree
    if d <= 0 or e <= 0:
        return Polynomial.one(spec)
    pops = _PolyRingOps(spec)
    zero = spec.zero()
    rev = list(reversed(p.coeffs))  # rev[i] = coefficient of y^i in rev(p)
    A = [Polynomial.from_payloads(spec, [zero] * (d - i) + [rev[i]]) for i in range(d + 1)]
    B = [Polynomial.constant(spec, c) for c in q.coeffs]
    res = _lp_resultant(A, B, pops)
    return _rescale_constant_to_one(res)


def _power_roots(p: Polynomial, n: int) -> Polynomial:
    """Polynomial with inverse roots {a^n} for a over p.

    rev(p) is reduced modulo the monic y^n - u (substituting y^n -> u), a
    small resultant in u finishes, and reversing u-coefficients with the
    sign (-1)^d turns prod (a_i^n - u) into prod (1 - a_i^n t).
    """
    spec = p.spec
    d = p.degree
    if d <= 0:
        return Polynomial.one(spec)
    if n == 1:
        return p
    pops = _PolyRingOps(spec)
    zero = spec.zero()
    rev = list(reversed(p.coeffs))
    # rev(p) mod (y^n - u): y^(q*n + r) contributes u^q to the y^r slot
    width = d // n + 1
    buckets = [[zero] * width for _ in range(min(n, d + 1))]
    for i, c in enumerate(rev):
        buckets[i % n][i // n] = spec.add(buckets[i % n][i // n], c)
    R = [Polynomial.from_payloads(spec, b) for b in buckets]
    B = [Polynomial.from_ints(spec, [0, -1])] + [Polynomial.zero(spec)] * (n - 1) + [
        Polynomial.one(spec)
    ]
    res = _lp_resultant(B, R, pops)  # Res(y^n - u, rev(p) mod (y^n - u))
    if (d * n) % 2:
        res = -res
    g = list(res.coeffs) + [zero] * (d + 1 - len(res.coeffs))
    out = [g[d - m] for m in range(d + 1)]
    if d % 2:
        out = [spec.neg(c) for c in out]
    return _rescale_constant_to_one(Polynomial.from_payloads(spec, out))


def _rescale_constant_to_one(poly: Polynomial) -> Polynomial:
    spec = poly.spec
    c0 = poly.constant_term
    if spec.is_one(c0):
        return poly
    return poly.scale(spec.inv(c0))


def witt_mul(f: WittVector, g: WittVector) -> WittVector:
    """f (x) g: the biadditive extension of (1-at)(x)(1-bt) = (1-abt)."""
    f._check(g)
    n1, d1, n2, d2 = f.num, f.den, g.num, g.den
    num = _star_polys(n1, n2) * _star_polys(d1, d2)
    den = _star_polys(n1, d2) * _star_polys(d1, n2)
    return WittVector.from_polys(num, den)


def frobenius(n: int, f: WittVector) -> WittVector:
    """F_n: raise every inverse root to the n-th power; F_1 is the identity."""
    if n < 1:
        raise DomainViolation(f"Frobenius index must be >= 1, got {n}")
    if n == 1:
        return f
    return WittVector.from_polys(_power_roots(f.num, n), _power_roots(f.den, n))


def teichmuller(a: RingElement) -> WittVector:
    """The multiplicative lift a -> 1 - a*t."""
    spec = a.spec
    return WittVector(
        spec,
        Polynomial.from_payloads(spec, [spec.one(), spec.neg(a.payload)]),
        Polynomial.one(spec),
    )


def split_counit(f: WittVector) -> RingElement:
    """The splitting f -> -f'(0) of the Teichmueller lift; a ring map to R."""
    spec = f.spec
    dn = f.num.coefficient(1)
    dd = f.den.coefficient(1)
    return RingElement(spec, spec.sub(dd, dn))


# --------------------------------------------------------------------------
# ghost components


@dataclass(frozen=True)
class GhostVector:
    """First N power-sum coordinates of a Witt vector (exact payloads)."""

    spec: RingSpec
    components: tuple

    @classmethod
    def from_ints(cls, spec: RingSpec, ints) -> "GhostVector":
        return cls(spec, tuple(spec.from_int(v) for v in ints))

    def __add__(self, other: "GhostVector") -> "GhostVector":
        assert self.spec == other.spec and len(self.components) == len(other.components)
        s = self.spec
        return GhostVector(s, tuple(s.add(a, b) for a, b in zip(self.components, other.components)))

    def __mul__(self, other: "GhostVector") -> "GhostVector":
        assert self.spec == other.spec and len(self.components) == len(other.components)
        s = self.spec
        return GhostVector(s, tuple(s.mul(a, b) for a, b in zip(self.components, other.components)))

    def __getitem__(self, i: int):
        return self.components[i]

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        return " ".join(self.spec.render(c) for c in self.components)


def _power_sums(p: Polynomial, N: int) -> list:
    """s_1..s_N for the inverse roots of p, by Newton's identities.

    With p = 1 + c_1 t + ... + c_d t^d:  s_k = -(k*c_k + sum c_i s_{k-i}),
    division-free, valid over every coefficient ring.
    """
    spec = p.spec
    out = []
    for k in range(1, N + 1):
        acc = spec.mul_int(p.coefficient(k), k)
        for i in range(1, k):
            acc = spec.add(acc, spec.mul(p.coefficient(i), out[k - i - 1]))
        out.append(spec.neg(acc))
    return out


def default_ghost_precision(f: WittVector) -> int:
    """Enough components to separate Witt vectors of the given degrees."""
    return 2 * (f.num.degree + f.den.degree) + 4


def ghost(f: WittVector, N: int | None = None) -> GhostVector:
    """First N ghost components, the series -t f'(t)/f(t), exactly."""
    if N is None:
        N = default_ghost_precision(f)
    if N < 1:
        raise DomainViolation("ghost precision must be >= 1")
    spec = f.spec
    sn = _power_sums(f.num, N)
    sd = _power_sums(f.den, N)
    return GhostVector(spec, tuple(spec.sub(a, b) for a, b in zip(sn, sd)))


# --------------------------------------------------------------------------
# group-ring correspondence


@dataclass(frozen=True)
class GroupRingElement:
    """Finite multiset of unit bases with integer multiplicities."""

    spec: RingSpec
    terms: tuple  # ((payload, multiplicity), ...) sorted, no zeros

    @classmethod
    def of(cls, spec: RingSpec, pairs) -> "GroupRingElement":
        combined: dict = {}
        for base, mult in pairs:
            payload = spec.canon(base if not isinstance(base, RingElement) else base.payload)
            combined[payload] = combined.get(payload, 0) + int(mult)
        terms = []
        for payload, mult in combined.items():
            if mult == 0:
                continue
            spec.inv(payload)  # raises NotAUnit for non-units
            terms.append((payload, mult))
        terms.sort(key=lambda pm: spec.sort_key(pm[0]))
        return cls(spec, tuple(terms))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.spec != other.spec:
            raise SpecMismatch("mixed group rings")
        return GroupRingElement.of(self.spec, list(self.terms) + list(other.terms))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        """Convolution: (sum n_a a)(sum m_b b) = sum n_a m_b (ab)."""
        if self.spec != other.spec:
            raise SpecMismatch("mixed group rings")
        pairs = [
            (self.spec.mul(a, b), na * mb)
            for a, na in self.terms
            for b, mb in other.terms
        ]
        return GroupRingElement.of(self.spec, pairs)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{m}*[{self.spec.render(b)}]" if m != 1 else f"[{self.spec.render(b)}]")
            for b, m in self.terms
        )


def groupring_to_witt(x: GroupRingElement) -> WittVector:
    """sum n_a * a  ->  prod (1 - a t)^(n_a), negative powers to the denominator."""
    spec = x.spec
    num = Polynomial.one(spec)
    den = Polynomial.one(spec)
    for payload, mult in x.terms:
        factor = Polynomial.from_payloads(spec, [spec.one(), spec.neg(payload)])
        for _ in range(abs(mult)):
            if mult > 0:
                num = num * factor
            else:
                den = den * factor
    return WittVector.from_polys(num, den)


def _roots_with_multiplicity(poly: Polynomial) -> list[tuple[object, int]] | None:
    """All roots (with multiplicity) of a monic-reversed part over its field.

    Exhaustive search over the finite field; returns None when the polynomial
    does not split into linear factors there.
    """
    spec = poly.spec
    if poly.degree <= 0:
        return []
    rev = poly.reversed_coeffs()  # monic, roots = inverse roots of poly
    found = []
    remaining = rev
    if spec.kind == _KIND_FP:
        candidates = (c for c in range(1, spec.n))
    else:
        import itertools as _it

        candidates = (
            tuple(v)
            for v in _it.product(range(spec.n), repeat=spec.k)
            if any(v)
        )
    for cand in candidates:
        payload = spec.canon(cand) if not isinstance(cand, int) else cand
        mult = 0
        while remaining.degree >= 1 and spec.is_zero(remaining.evaluate(payload)):
            divisor = Polynomial.from_payloads(spec, [spec.neg(payload), spec.one()])
            remaining = poly_divmod(remaining, divisor)[0]
            mult += 1
        if mult:
            found.append((payload, mult))
        if remaining.degree == 0:
            break
    if remaining.degree >= 1:
        return None
    return found


def witt_to_groupring(f: WittVector, splitting_degree_bound: int = 1) -> GroupRingElement:
    """Decode a Witt vector over F_p into its inverse-root multiset.

    Roots are searched exhaustively in F_{p^k} for k = 1..bound (each k uses
    a fixed irreducible modulus found by sieve; decoding fixes a single k).
    Raises NotSplit when the parts do not split by the bound.  The result
    ring is PrimeField(p) when k = 1 and the internal extension field
    otherwise.
    """
    spec = f.spec
    if spec.kind not in (_KIND_FP, _KIND_FQ):
        raise UnsupportedRing("group-ring decoding runs over prime fields")
    if splitting_degree_bound < 1:
        raise DomainViolation("splitting degree bound must be >= 1")
    p = spec.n
    if spec.kind == _KIND_FQ:
        # an extension-field vector only decodes in its own field: padding
        # coefficients is not a homomorphism between different degrees
        ks = [spec.k]
    else:
        ks = list(range(1, splitting_degree_bound + 1))
    for k in ks:
        if k == 1:
            target = spec
            num, den = f.num, f.den
        else:
            target = RingSpec.ext_field(p, k)
            lift = lambda poly: Polynomial.from_payloads(
                target, [target.canon((c,) if isinstance(c, int) else c) for c in poly.coeffs]
            )
            num, den = lift(f.num), lift(f.den)
        rn = _roots_with_multiplicity(num)
        rd = _roots_with_multiplicity(den)
        if rn is None or rd is None:
            continue
        pairs = [(b, m) for b, m in rn] + [(b, -m) for b, m in rd]
        return GroupRingElement.of(target, pairs)
    raise NotSplit(
        f"parts do not split into linear factors over F_{p}^k for k <= {splitting_degree_bound}"
    )


# --------------------------------------------------------------------------
# Galois descent


def _unit_generators(n: int) -> list[int]:
    if n <= 2:
        return []
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    gens: list[int] = []
    closure = {1}
    for u in units:
        if u in closure:
            continue
        gens.append(u)
        frontier = list(closure)
        for g in frontier:
            cur = g
            while True:
                cur = cur * u % n
                if cur in closure:
                    break
                closure.add(cur)
        # rebuild closure properly (small n, plain fixpoint)
        closure = {1}
        again = True
        while again:
            again = False
            for a in list(closure):
                for g in gens:
                    v = a * g % n
                    if v not in closure:
                        closure.add(v)
                        again = True
        if len(closure) == len(units):
            break
    return gens


def galois_conjugate(f: WittVector, sigma: int) -> WittVector:
    """Apply the coefficient automorphism x -> x^sigma to both parts."""
    return WittVector(
        f.spec, conjugate_polynomial(f.num, sigma), conjugate_polynomial(f.den, sigma)
    )


def galois_fixed_check(f: WittVector) -> bool:
    """True iff every generator of (Z/n)^* fixes f as a Witt vector.

    By descent this holds exactly when f lies in the image of the rational
    Witt ring of the fixed subring.
    """
    if f.spec.kind != _KIND_C:
        raise UnsupportedRing("the descent check runs over cyclotomic rings")
    for sigma in _unit_generators(f.spec.n):
        if galois_conjugate(f, sigma) != f:
            return False
    return True


def series_coefficients(f: WittVector, N: int) -> list:
    """Power-series coefficients of f through t^N (constant term included).

    Denominator inversion is division-free because den(0) = 1.
    """
    spec = f.spec
    inv = [spec.one()]
    for k in range(1, N + 1):
        acc = spec.zero()
        for i in range(1, k + 1):
            acc = spec.add(acc, spec.mul(f.den.coefficient(i), inv[k - i]))
        inv.append(spec.neg(acc))
    out = []
    for k in range(N + 1):
        acc = spec.zero()
        for i in range(0, k + 1):
            acc = spec.add(acc, spec.mul(f.num.coefficient(i), inv[k - i]))
        out.append(acc)
    return out
