"""Exact coefficient rings and polynomial arithmetic.

Every ring element is a plain payload interpreted through a RingSpec:

    Z         arbitrary-precision int
    Q         fractions.Fraction (lowest terms, positive denominator)
    Zn        int in [0, n), n >= 2 (composite allowed, no general division)
    Fp        int in [0, p), p prime
    C(n)      tuple of deg(Phi_n) ints: a residue mod the n-th cyclotomic
              polynomial Phi_n, i.e. an element of Z[x]/Phi_n(x)
    Fq(p, k)  tuple of k ints mod p: a residue mod a fixed irreducible
              polynomial of degree k over F_p.  This sixth variant is the
              internal extension point used by the group-ring decoder; the
              public surface needs only the first five.

Polynomials are dense tuples of payloads, constant term first, with no
trailing zero coefficients.  No floating point appears anywhere.

Resultants use the convention

    Res(f, g) = lc(f)^deg(g) * prod of g(alpha) over the roots alpha of f

which equals the determinant of the Sylvester matrix built from deg(g)
rows of f over deg(f) rows of g.  The primary route is a scalar-tracked
subresultant remainder sequence (exact over any integral domain, controls
coefficient growth); a division-free Berkowitz determinant of the
Sylvester matrix backs rings without exact division and serves as an
independent oracle in the tests.  Both routes run over the base ring or
over polynomial rings R[t] (needed by the Witt multiplication), selected
through a small ops adapter.
"""

from __future__ import annotations

import functools
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainViolation, NotAUnit, SpecMismatch, UnsupportedRing

# --------------------------------------------------------------------------
# small number theory helpers

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(bound: int) -> list[int]:
    """All primes strictly below ``bound`` (simple sieve)."""
    if bound <= 2:
        return []
    sieve = bytearray([1]) * bound
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound - 1) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(bound) if sieve[i]]


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending."""
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@functools.lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    if n == 1:
        return 1
    phi, m = 1, n
    for p in range(2, math.isqrt(n) + 1):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            phi *= (p - 1) * p ** (e - 1)
    if m > 1:
        phi *= m - 1
    return phi


# --------------------------------------------------------------------------
# integer coefficient lists (used for cyclotomic polynomials)


def _ilist_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _ilist_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ilist_trim(out)


def _ilist_divmod_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Divide by a monic integer polynomial; exact integer arithmetic."""
    assert b and b[-1] == 1
    r = list(a)
    db = len(b) - 1
    q = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        lead = r[-1]
        shift = len(r) - 1 - db
        q[shift] = lead
        for i, bc in enumerate(b):
            r[i + shift] -= lead * bc
        _ilist_trim(r)
    return q, r


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending, computed exactly.

    Phi_1 = x - 1; for n > 1, Phi_n = (x^n - 1) / prod of Phi_d over the
    proper divisors d of n.  Cached; safe for concurrent reads since the
    cache only ever inserts values.
    """
    if n == 1:
        return (-1, 1)
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly, rem = _ilist_divmod_monic(poly, list(cyclotomic_polynomial(d)))
        assert not rem
    return tuple(poly)


# --------------------------------------------------------------------------
# F_p[x] on int lists (irreducible modulus sieve for the Fq variant)


def _fpx_trim(c: list[int], p: int) -> list[int]:
    for i in range(len(c)):
        c[i] %= p
    while c and c[-1] == 0:
        c.pop()
    return c


def _fpx_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fpx_trim(out, p)


def _fpx_rem(a: list[int], m: list[int], p: int) -> list[int]:
    r = [c % p for c in a]
    _fpx_trim(r, p)
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(r) - 1 >= dm and r:
        coef = r[-1] * inv_lead % p
        shift = len(r) - 1 - dm
        for i, mc in enumerate(m):
            r[i + shift] = (r[i + shift] - coef * mc) % p
        _fpx_trim(r, p)
    return r


def _fpx_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    b = _fpx_rem(base, m, p)
    while e:
        if e & 1:
            result = _fpx_rem(_fpx_mul(result, b, p), m, p)
        b = _fpx_rem(_fpx_mul(b, b, p), m, p)
        e >>= 1
    return result


def _fpx_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = [c % p for c in a], [c % p for c in b]
    _fpx_trim(a, p)
    _fpx_trim(b, p)
    while b:
        a, b = b, _fpx_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _fpx_is_irreducible(h: list[int], p: int) -> bool:
    k = len(h) - 1
    x = [0, 1]
    if _fpx_powmod(x, p**k, h, p) != _fpx_rem(x, h, p):
        return False
    for q in {q for q in range(2, k + 1) if k % q == 0 and is_prime(q)}:
        xp = _fpx_powmod(x, p ** (k // q), h, p)
        diff = _fpx_trim([(xc - bc) % p for xc, bc in itertools.zip_longest(xp, x, fillvalue=0)], p)
        if len(_fpx_gcd(h, diff, p)) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _ext_field_modulus(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over F_p."""
    if k == 1:
        return (0, 1)
    for tail in itertools.product(range(p), repeat=k):
        h = list(tail) + [1]
        if h[0] == 0:
            continue
        if _fpx_is_irreducible(h, p):
            return tuple(h)
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _fpx_invmod(a: list[int], m: list[int], p: int) -> list[int] | None:
    r0, r1 = [c % p for c in m], _fpx_rem(a, m, p)
    s0, s1 = [], [1]
    _fpx_trim(r0, p)
    while r1:
        # r0 = q*r1 + r2
        r2 = list(r0)
        q = [0] * max(len(r2) - len(r1) + 1, 1)
        inv_lead = pow(r1[-1], -1, p)
        while len(r2) >= len(r1) and r2:
            coef = r2[-1] * inv_lead % p
            shift = len(r2) - len(r1)
            q[shift] = coef
            for i, rc in enumerate(r1):
                r2[i + shift] = (r2[i + shift] - coef * rc) % p
            _fpx_trim(r2, p)
        _fpx_trim(q, p)
        qs1 = _fpx_mul(q, s1, p)
        s2 = _fpx_trim(
            [(sc - qc) % p for sc, qc in itertools.zip_longest(s0, qs1, fillvalue=0)], p
        )
        r0, r1, s0, s1 = r1, r2, s1, s2
    if len(r0) != 1:
        return None
    inv_lead = pow(r0[0], -1, p)
    return _fpx_trim([c * inv_lead % p for c in s0], p)


# --------------------------------------------------------------------------
# Q[x] on Fraction lists (cyclotomic unit inversion, gcd reduction)


def _qx_trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _qx_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _qx_trim(out)


def _qx_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    r = _qx_trim(list(a))
    b = _qx_trim(list(b))
    db = len(b) - 1
    inv_lead = 1 / b[-1]
    q = [Fraction(0)] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        coef = r[-1] * inv_lead
        shift = len(r) - 1 - db
        q[shift] = coef
        for i, bc in enumerate(b):
            r[i + shift] -= coef * bc
        _qx_trim(r)
    return _qx_trim(q), r


def _qx_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    return _qx_divmod(a, b)[1]


def _qx_invmod(a: list[Fraction], m: list[Fraction]) -> list[Fraction] | None:
    """Inverse of a modulo m in Q[x], or None when gcd(a, m) != 1."""
    r0, r1 = list(m), _qx_rem(a, m)
    s0: list[Fraction] = []
    s1: list[Fraction] = [Fraction(1)]
    while r1:
        q, r2 = _qx_divmod(r0, r1)
        qs1 = _qx_mul(q, s1)
        s2 = _qx_trim([sc - qc for sc, qc in itertools.zip_longest(s0, qs1, fillvalue=Fraction(0))])
        r0, r1, s0, s1 = r1, r2, s1, s2
    if len(r0) != 1:
        return None
    inv_lead = 1 / r0[0]
    return _qx_trim([c * inv_lead for c in s0])


# --------------------------------------------------------------------------
# RingSpec

_KIND_Z = "Z"
_KIND_Q = "Q"
_KIND_ZN = "Zn"
_KIND_FP = "Fp"
_KIND_C = "C"
_KIND_FQ = "Fq"


@dataclass(frozen=True)
class RingSpec:
    """Descriptor of an exact coefficient ring; all element ops live here.

    Payloads are plain Python values (see module docstring); RingSpec
    methods operate on payloads so the polynomial layer stays allocation
    light.  RingElement wraps a payload for the public element API.
    """

    kind: str
    n: int = 0
    k: int = 0

    # ---------------------------------------------------------- factories
    @classmethod
    def integers(cls) -> "RingSpec":
        return cls(_KIND_Z)

    @classmethod
    def rationals(cls) -> "RingSpec":
        return cls(_KIND_Q)

    @classmethod
    def mod_ring(cls, n: int) -> "RingSpec":
        if n < 2:
            raise DomainViolation(f"modulus must be >= 2, got {n}")
        return cls(_KIND_ZN, n)

    @classmethod
    def prime_field(cls, p: int) -> "RingSpec":
        if not is_prime(p):
            raise DomainViolation(f"{p} is not prime")
        return cls(_KIND_FP, p)

    @classmethod
    def cyclotomic(cls, n: int) -> "RingSpec":
        if n < 1:
            raise DomainViolation(f"cyclotomic level must be >= 1, got {n}")
        return cls(_KIND_C, n)

    @classmethod
    def ext_field(cls, p: int, k: int) -> "RingSpec":
        if not is_prime(p):
            raise DomainViolation(f"{p} is not prime")
        if k < 1:
            raise DomainViolation(f"extension degree must be >= 1, got {k}")
        return cls(_KIND_FQ, p, k)

    # ---------------------------------------------------------- structure
    @property
    def is_field(self) -> bool:
        return self.kind in (_KIND_Q, _KIND_FP, _KIND_FQ)

    @property
    def is_domain(self) -> bool:
        # Zn is excluded wholesale: composite moduli have zero divisors and
        # the Zn contract promises no general division anyway.
        return self.kind in (_KIND_Z, _KIND_Q, _KIND_FP, _KIND_FQ, _KIND_C)

    @property
    def _cyc_len(self) -> int:
        return len(cyclotomic_polynomial(self.n)) - 1

    def __str__(self) -> str:
        if self.kind == _KIND_Z:
            return "Z"
        if self.kind == _KIND_Q:
            return "Q"
        if self.kind == _KIND_ZN:
            return f"Z/{self.n}"
        if self.kind == _KIND_FP:
            return f"F{self.n}"
        if self.kind == _KIND_C:
            return f"Z[zeta_{self.n}]"
        return f"F{self.n}^{self.k}"

    # ------------------------------------------------------- payload ops
    def zero(self):
        if self.kind == _KIND_Z:
            return 0
        if self.kind == _KIND_Q:
            return Fraction(0)
        if self.kind in (_KIND_ZN, _KIND_FP):
            return 0
        if self.kind == _KIND_C:
            return (0,) * self._cyc_len
        return (0,) * self.k

    def one(self):
        return self.from_int(1)

    def from_int(self, v: int):
        if self.kind == _KIND_Z:
            return int(v)
        if self.kind == _KIND_Q:
            return Fraction(v)
        if self.kind in (_KIND_ZN, _KIND_FP):
            return v % self.n
        if self.kind == _KIND_C:
            d = self._cyc_len
            if d == 1:
                # x == a single rational residue (Phi_1 or Phi_2 quotient)
                return (int(v),)
            return (int(v),) + (0,) * (d - 1)
        return (v % self.n,) + (0,) * (self.k - 1)

    def canon(self, payload):
        """Canonical form of a raw payload; validates shape."""
        if self.kind == _KIND_Z:
            return int(payload)
        if self.kind == _KIND_Q:
            return Fraction(payload)
        if self.kind in (_KIND_ZN, _KIND_FP):
            return int(payload) % self.n
        if self.kind == _KIND_C:
            c = _ilist_trim([int(v) for v in payload])
            phi = list(cyclotomic_polynomial(self.n))
            if len(c) >= len(phi):
                c = _ilist_divmod_monic(c, phi)[1]
            c = c + [0] * (self._cyc_len - len(c))
            return tuple(c)
        c = [int(v) % self.n for v in payload]
        if len(c) > self.k:
            c = [v % self.n for v in _fpx_rem(c, list(_ext_field_modulus(self.n, self.k)), self.n)]
        return tuple(c + [0] * (self.k - len(c)))

    def add(self, a, b):
        if self.kind in (_KIND_Z, _KIND_Q):
            return a + b
        if self.kind in (_KIND_ZN, _KIND_FP):
            return (a + b) % self.n
        if self.kind == _KIND_C:
            return tuple(x + y for x, y in zip(a, b))
        return tuple((x + y) % self.n for x, y in zip(a, b))

    def sub(self, a, b):
        if self.kind in (_KIND_Z, _KIND_Q):
            return a - b
        if self.kind in (_KIND_ZN, _KIND_FP):
            return (a - b) % self.n
        if self.kind == _KIND_C:
            return tuple(x - y for x, y in zip(a, b))
        return tuple((x - y) % self.n for x, y in zip(a, b))

    def neg(self, a):
        if self.kind in (_KIND_Z, _KIND_Q):
            return -a
        if self.kind in (_KIND_ZN, _KIND_FP):
            return (-a) % self.n
        if self.kind == _KIND_C:
            return tuple(-x for x in a)
        return tuple((-x) % self.n for x in a)

    def mul(self, a, b):
        if self.kind in (_KIND_Z, _KIND_Q):
            return a * b
        if self.kind in (_KIND_ZN, _KIND_FP):
            return a * b % self.n
        if self.kind == _KIND_C:
            prod = _ilist_mul(list(a), list(b))
            phi = list(cyclotomic_polynomial(self.n))
            if len(prod) >= len(phi):
                prod = _ilist_divmod_monic(prod, phi)[1]
            return tuple(prod + [0] * (self._cyc_len - len(prod)))
        prod = _fpx_rem(_fpx_mul(list(a), list(b), self.n), list(_ext_field_modulus(self.n, self.k)), self.n)
        return tuple(prod + [0] * (self.k - len(prod)))

    def mul_int(self, a, m: int):
        return self.mul(a, self.from_int(m))

    def inv(self, a):
        if self.kind == _KIND_Z:
            if a in (1, -1):
                return a
            raise NotAUnit(f"{a} is not a unit in Z")
        if self.kind == _KIND_Q:
            if a == 0:
                raise NotAUnit("0 is not a unit")
            return 1 / a
        if self.kind in (_KIND_ZN, _KIND_FP):
            if math.gcd(a, self.n) != 1:
                raise NotAUnit(f"{a} is not a unit mod {self.n}")
            return pow(a, -1, self.n)
        if self.kind == _KIND_C:
            if self.is_zero(a):
                raise NotAUnit("0 is not a unit")
            inv = _qx_invmod([Fraction(v) for v in a], [Fraction(v) for v in cyclotomic_polynomial(self.n)])
            if inv is None or any(f.denominator != 1 for f in inv):
                raise NotAUnit(f"{self.render(a)} is not a unit in {self}")
            ints = [int(f) for f in inv]
            return tuple(ints + [0] * (self._cyc_len - len(ints)))
        if self.is_zero(a):
            raise NotAUnit("0 is not a unit")
        inv = _fpx_invmod(list(a), list(_ext_field_modulus(self.n, self.k)), self.n)
        assert inv is not None
        return tuple(inv + [0] * (self.k - len(inv)))

    def exact_div(self, a, b):
        """a / b when the quotient exists in the ring; raises otherwise."""
        if self.kind == _KIND_Z:
            if b == 0:
                raise DomainViolation("division by zero")
            q, r = divmod(a, b)
            if r:
                raise DomainViolation(f"{a} is not divisible by {b} in Z")
            return q
        if self.is_field:
            return self.mul(a, self.inv(b))
        if self.kind == _KIND_C:
            if self.is_zero(b):
                raise DomainViolation("division by zero")
            phi = [Fraction(v) for v in cyclotomic_polynomial(self.n)]
            binv = _qx_invmod([Fraction(v) for v in b], phi)
            assert binv is not None  # Phi_n is irreducible over Q
            quot = _qx_rem(_qx_mul([Fraction(v) for v in a], binv), phi)
            if any(f.denominator != 1 for f in quot):
                raise DomainViolation("inexact division in Z[zeta]")
            ints = [int(f) for f in quot]
            return tuple(ints + [0] * (self._cyc_len - len(ints)))
        raise UnsupportedRing(f"no exact division in {self}")

    def pow_payload(self, a, e: int):
        assert e >= 0
        result = self.one()
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_zero(self, a) -> bool:
        if self.kind in (_KIND_C, _KIND_FQ):
            return all(v == 0 for v in a)
        return a == 0

    def is_one(self, a) -> bool:
        return a == self.one()

    def sort_key(self, a):
        return a

    def render(self, a) -> str:
        if self.kind in (_KIND_Z, _KIND_ZN, _KIND_FP):
            return str(a)
        if self.kind == _KIND_Q:
            return str(a)
        var = "z" if self.kind == _KIND_C else "w"
        return _render_int_vector(a, var)


def _render_int_vector(vec, var: str) -> str:
    terms = []
    for i, c in enumerate(vec):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            coef = "" if c == 1 else ("-" if c == -1 else str(c))
            power = var if i == 1 else f"{var}^{i}"
            terms.append(f"{coef}{power}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += t if t.startswith("-") else "+" + t
    return out


# --------------------------------------------------------------------------
# RingElement


@dataclass(frozen=True)
class RingElement:
    """A single ring element: a payload tagged with its RingSpec."""

    spec: RingSpec
    payload: object

    @classmethod
    def of(cls, spec: RingSpec, value) -> "RingElement":
        if isinstance(value, RingElement):
            if value.spec != spec:
                raise SpecMismatch(f"element of {value.spec} used in {spec}")
            return value
        if isinstance(value, int) and spec.kind not in (_KIND_Z,):
            return cls(spec, spec.from_int(value))
        if isinstance(value, int):
            return cls(spec, value)
        return cls(spec, spec.canon(value))

    def _check(self, other: "RingElement") -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"mixed rings {self.spec} and {other.spec}")

    def __add__(self, other):
        other = RingElement.of(self.spec, other)
        return RingElement(self.spec, self.spec.add(self.payload, other.payload))

    def __sub__(self, other):
        other = RingElement.of(self.spec, other)
        return RingElement(self.spec, self.spec.sub(self.payload, other.payload))

    def __mul__(self, other):
        other = RingElement.of(self.spec, other)
        return RingElement(self.spec, self.spec.mul(self.payload, other.payload))

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.spec, self.spec.neg(self.payload))

    def inv(self) -> "RingElement":
        return RingElement(self.spec, self.spec.inv(self.payload))

    @property
    def is_zero(self) -> bool:
        return self.spec.is_zero(self.payload)

    @property
    def is_one(self) -> bool:
        return self.spec.is_one(self.payload)

    def __str__(self) -> str:
        return self.spec.render(self.payload)


def elem_arith(op: str, a: RingElement, b: RingElement | None = None) -> RingElement:
    """Dispatch basic element arithmetic: add, sub, mul, neg, inv."""
    if op in ("add", "sub", "mul"):
        if b is None:
            raise DomainViolation(f"{op} needs two operands")
        a._check(b)
        return {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__}[op](b)
    if op == "neg":
        return -a
    if op == "inv":
        return a.inv()
    raise DomainViolation(f"unknown operation {op!r}")


# --------------------------------------------------------------------------
# Polynomial


@dataclass(frozen=True)
class Polynomial:
    """Dense univariate polynomial; coefficients are payloads, ascending."""

    spec: RingSpec
    coeffs: tuple

    # ---------------------------------------------------------- builders
    @classmethod
    def from_payloads(cls, spec: RingSpec, seq) -> "Polynomial":
        c = [spec.canon(v) for v in seq]
        while c and spec.is_zero(c[-1]):
            c.pop()
        return cls(spec, tuple(c))

    @classmethod
    def from_ints(cls, spec: RingSpec, ints) -> "Polynomial":
        return cls.from_payloads(spec, [spec.from_int(v) for v in ints])

    @classmethod
    def constant(cls, spec: RingSpec, payload) -> "Polynomial":
        return cls.from_payloads(spec, [payload])

    @classmethod
    def zero(cls, spec: RingSpec) -> "Polynomial":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: RingSpec) -> "Polynomial":
        return cls(spec, (spec.one(),))

    # ---------------------------------------------------------- structure
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.spec.is_one(self.coeffs[0])

    def coefficient(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.spec.zero()

    @property
    def lc(self):
        if not self.coeffs:
            return self.spec.zero()
        return self.coeffs[-1]

    @property
    def constant_term(self):
        return self.coefficient(0)

    def _check(self, other: "Polynomial") -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"mixed rings {self.spec} and {other.spec}")

    # ---------------------------------------------------------- arithmetic
    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        s = self.spec
        out = [
            s.add(self.coefficient(i), other.coefficient(i))
            for i in range(max(len(self.coeffs), len(other.coeffs)))
        ]
        while out and s.is_zero(out[-1]):
            out.pop()
        return Polynomial(s, tuple(out))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        s = self.spec
        return Polynomial(s, tuple(s.neg(c) for c in self.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        s = self.spec
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero(s)
        out = [s.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if s.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = s.add(out[i + j], s.mul(a, b))
        while out and s.is_zero(out[-1]):
            out.pop()
        return Polynomial(s, tuple(out))

    def scale(self, payload) -> "Polynomial":
        s = self.spec
        out = [s.mul(payload, c) for c in self.coeffs]
        while out and s.is_zero(out[-1]):
            out.pop()
        return Polynomial(s, tuple(out))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return Polynomial(self.spec, (self.spec.zero(),) * k + self.coeffs)

    def derivative(self) -> "Polynomial":
        s = self.spec
        out = [s.mul_int(c, i) for i, c in enumerate(self.coeffs)][1:]
        while out and s.is_zero(out[-1]):
            out.pop()
        return Polynomial(s, tuple(out))

    def reversed_coeffs(self) -> "Polynomial":
        """rev(p)(x) = x^deg(p) * p(1/x); requires nonzero constant term."""
        return Polynomial(self.spec, tuple(reversed(self.coeffs)))

    def evaluate(self, payload):
        s = self.spec
        acc = s.zero()
        for c in reversed(self.coeffs):
            acc = s.add(s.mul(acc, payload), c)
        return acc

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact polynomial product (spec op surface; same as f * g)."""
    return f * g


def poly_divmod(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder; needs an invertible leading coefficient."""
    f._check(g)
    s = f.spec
    if g.is_zero:
        raise DomainViolation("division by the zero polynomial")
    inv_lead = s.inv(g.lc)
    r = list(f.coeffs)
    dg = g.degree
    q = [s.zero()] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        coef = s.mul(r[-1], inv_lead)
        shift = len(r) - 1 - dg
        q[shift] = coef
        for i, gc in enumerate(g.coeffs):
            r[i + shift] = s.sub(r[i + shift], s.mul(coef, gc))
        while r and s.is_zero(r[-1]):
            r.pop()
    return Polynomial.from_payloads(s, q), Polynomial(s, tuple(r))


def poly_mod(f: Polynomial, g: Polynomial) -> Polynomial:
    return poly_divmod(f, g)[1]


def poly_pow_mod(f: Polynomial, e: int, m: Polynomial) -> Polynomial:
    result = Polynomial.one(f.spec)
    base = poly_mod(f, m)
    while e:
        if e & 1:
            result = poly_mod(result * base, m)
        base = poly_mod(base * base, m)
        e >>= 1
    return result


def poly_gcd_monic(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd over a field coefficient ring."""
    if not f.spec.is_field:
        raise UnsupportedRing(f"gcd needs a field, got {f.spec}")
    a, b = f, g
    while not b.is_zero:
        a, b = b, poly_mod(a, b)
    if a.is_zero:
        return a
    return a.scale(a.spec.inv(a.lc))


def poly_exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly; works over any domain spec."""
    f._check(g)
    s = f.spec
    if g.is_zero:
        raise DomainViolation("division by the zero polynomial")
    r = list(f.coeffs)
    dg = g.degree
    q = [s.zero()] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        coef = s.exact_div(r[-1], g.lc)
        shift = len(r) - 1 - dg
        q[shift] = coef
        for i, gc in enumerate(g.coeffs):
            r[i + shift] = s.sub(r[i + shift], s.mul(coef, gc))
        while r and s.is_zero(r[-1]):
            r.pop()
    if r:
        raise DomainViolation("inexact polynomial division")
    return Polynomial.from_payloads(s, q)


# --------------------------------------------------------------------------
# generic resultant machinery over an ops adapter


class _ScalarOps:
    """Adapter exposing a RingSpec's payload ops to the generic routines."""

    __slots__ = ("spec",)

    def __init__(self, spec: RingSpec):
        self.spec = spec

    @property
    def is_field(self):
        return self.spec.is_field

    @property
    def has_exact_div(self):
        return self.spec.is_domain

    @property
    def zero(self):
        return self.spec.zero()

    @property
    def one(self):
        return self.spec.one()

    def add(self, a, b):
        return self.spec.add(a, b)

    def sub(self, a, b):
        return self.spec.sub(a, b)

    def mul(self, a, b):
        return self.spec.mul(a, b)

    def neg(self, a):
        return self.spec.neg(a)

    def inv(self, a):
        return self.spec.inv(a)

    def exact_div(self, a, b):
        return self.spec.exact_div(a, b)

    def pow(self, a, e):
        return self.spec.pow_payload(a, e)

    def is_zero(self, a):
        return self.spec.is_zero(a)

    def is_one(self, a):
        return self.spec.is_one(a)


class _PolyRingOps:
    """Adapter treating Polynomial-over-spec as the coefficient ring R[t]."""

    __slots__ = ("spec",)
    is_field = False

    def __init__(self, spec: RingSpec):
        self.spec = spec

    @property
    def has_exact_div(self):
        return self.spec.is_domain

    @property
    def zero(self):
        return Polynomial.zero(self.spec)

    @property
    def one(self):
        return Polynomial.one(self.spec)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def exact_div(self, a, b):
        return poly_exact_div(a, b)

    def pow(self, a, e):
        result = self.one
        base = a
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self, a):
        return a.is_zero

    def is_one(self, a):
        return a.is_one


def _lp_trim(c: list, ops) -> list:
    while c and ops.is_zero(c[-1]):
        c.pop()
    return c


def _lp_prem(A: list, B: list, ops) -> list:
    """Pseudo-remainder: lc(B)^(degA-degB+1) * A mod B."""
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    lb_is_one = ops.is_one(lb)
    r = list(A)
    e = dA - dB + 1
    while r and len(r) - 1 >= dB:
        lr = r[-1]
        shift = len(r) - 1 - dB
        if not lb_is_one:
            r = [ops.mul(lb, c) for c in r]
        for i, bc in enumerate(B):
            r[i + shift] = ops.sub(r[i + shift], ops.mul(lr, bc))
        _lp_trim(r, ops)
        e -= 1
    if e > 0 and not lb_is_one:
        f = ops.pow(lb, e)
        r = [ops.mul(f, c) for c in r]
    return r


def _lp_resultant_field(A: list, B: list, ops):
    sign = 1
    acc = ops.one
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2:
            sign = -sign
        A, B = B, A
    while len(B) - 1 >= 1:
        dA, dB = len(A) - 1, len(B) - 1
        # remainder of A by B over the field
        r = list(A)
        inv_lead = ops.inv(B[-1])
        while r and len(r) - 1 >= dB:
            coef = ops.mul(r[-1], inv_lead)
            shift = len(r) - 1 - dB
            for i, bc in enumerate(B):
                r[i + shift] = ops.sub(r[i + shift], ops.mul(coef, bc))
            _lp_trim(r, ops)
        if not r:
            return ops.zero
        dR = len(r) - 1
        acc = ops.mul(acc, ops.pow(B[-1], dA - dR))
        if (dA * dB) % 2:
            sign = -sign
        A, B = B, r
    res = ops.mul(acc, ops.pow(B[0], len(A) - 1))
    return ops.neg(res) if sign < 0 else res


def _lp_resultant_prs(A: list, B: list, ops):
    """Resultant by a scalar-tracked subresultant remainder sequence.

    The recursion Res(A, B) = (-1)^(dA dB) lc(B)^(dA - dR - delta*dB)
    Res(B, R) with R = prem(A, B), delta = dA - dB + 1, is tracked through
    exact numerator/denominator scalars, so any exactly-dividing beta may
    rescale the remainders without touching correctness; the classical
    subresultant beta keeps coefficient growth polynomial.
    """
    sign = 1
    if len(A) < len(B):
        if ((len(A) - 1) * (len(B) - 1)) % 2:
            sign = -sign
        A, B = B, A
    if len(B) - 1 == 0:
        res = ops.pow(B[0], len(A) - 1)
        return ops.neg(res) if sign < 0 else res
    num = ops.one
    den = ops.one
    psi = None
    prev_gap = None
    prev_lc = None
    while True:
        dA, dB = len(A) - 1, len(B) - 1
        if dB == 0:
            base = ops.pow(B[0], dA)
            break
        lb = B[-1]
        R = _lp_prem(A, B, ops)
        if not R:
            return ops.zero
        dR = len(R) - 1
        delta = dA - dB + 1
        if (dA * dB) % 2:
            sign = -sign
        e = dA - dR - delta * dB
        if e >= 0:
            num = ops.mul(num, ops.pow(lb, e))
        else:
            den = ops.mul(den, ops.pow(lb, -e))
        # subresultant beta for size control
        gap = dA - dB
        if psi is None:
            beta = ops.one if (gap + 1) % 2 == 0 else ops.neg(ops.one)
            psi = ops.neg(ops.one)
        else:
            if prev_gap == 0:
                pass  # psi unchanged; only reachable while psi is a sign
            else:
                psi = ops.exact_div(ops.pow(ops.neg(prev_lc), prev_gap), ops.pow(psi, prev_gap - 1))
            beta = ops.neg(ops.mul(prev_lc, ops.pow(psi, gap)))
        prev_gap = gap
        prev_lc = lb
        try:
            R_small = [ops.exact_div(c, beta) for c in R]
            num = ops.mul(num, ops.pow(beta, dB))
            R = R_small
        except DomainViolation:  # pragma: no cover - beta always divides
            pass
        A, B = B, R
    total = ops.mul(num, base)
    res = ops.exact_div(total, den)
    return ops.neg(res) if sign < 0 else res


def _sylvester_matrix(A: list, B: list, ops) -> list[list]:
    m, n = len(A) - 1, len(B) - 1
    dim = m + n
    rows = []
    Ad = list(reversed(A))
    Bd = list(reversed(B))
    for i in range(n):
        rows.append([ops.zero] * i + Ad + [ops.zero] * (dim - m - 1 - i))
    for i in range(m):
        rows.append([ops.zero] * i + Bd + [ops.zero] * (dim - n - 1 - i))
    return rows


def _berkowitz_det(M: list[list], ops):
    """Division-free determinant (Berkowitz); works over any commutative ring."""
    n = len(M)
    if n == 0:
        return ops.one
    V = [ops.one, ops.neg(M[0][0])]
    for r in range(1, n):
        row = M[r][:r]
        col = [M[i][r] for i in range(r)]
        sums = []
        vec = col
        for j in range(r):
            acc = ops.zero
            for x, y in zip(row, vec):
                acc = ops.add(acc, ops.mul(x, y))
            sums.append(acc)
            if j < r - 1:
                vec = [
                    functools.reduce(
                        ops.add,
                        (ops.mul(M[i][t], vec[t]) for t in range(r)),
                        ops.zero,
                    )
                    for i in range(r)
                ]
        toep = [ops.one, ops.neg(M[r][r])] + [ops.neg(s) for s in sums]
        V_new = []
        for i in range(r + 2):
            acc = ops.zero
            for j in range(len(V)):
                k = i - j
                if 0 <= k < len(toep):
                    acc = ops.add(acc, ops.mul(toep[k], V[j]))
            V_new.append(acc)
        V = V_new
    det = V[n]
    return det if n % 2 == 0 else ops.neg(det)


def _lp_resultant_det(A: list, B: list, ops):
    return _berkowitz_det(_sylvester_matrix(A, B, ops), ops)


def _lp_resultant(A: list, B: list, ops):
    A = _lp_trim(list(A), ops)
    B = _lp_trim(list(B), ops)
    if not A and not B:
        raise DomainViolation("resultant of two zero polynomials")
    if not A or not B:
        return ops.zero
    if len(A) == 1 and len(B) == 1:
        return ops.one
    if ops.is_field:
        return _lp_resultant_field(A, B, ops)
    if ops.has_exact_div:
        return _lp_resultant_prs(A, B, ops)
    return _lp_resultant_det(A, B, ops)


def poly_resultant(f: Polynomial, g: Polynomial) -> RingElement:
    """Res(f, g) over the shared coefficient ring.

    Convention: Res(f, g) = lc(f)^deg(g) * product of g over the roots of
    f, the Sylvester determinant with deg(g) rows of f on top.  Returns 0
    when one argument is the zero polynomial; rejects two zeros.
    """
    f._check(g)
    ops = _ScalarOps(f.spec)
    return RingElement(f.spec, _lp_resultant(list(f.coeffs), list(g.coeffs), ops))


def poly_resultant_det(f: Polynomial, g: Polynomial) -> RingElement:
    """Sylvester-determinant route; independent cross-check of poly_resultant."""
    f._check(g)
    ops = _ScalarOps(f.spec)
    A = _lp_trim(list(f.coeffs), ops)
    B = _lp_trim(list(g.coeffs), ops)
    if not A and not B:
        raise DomainViolation("resultant of two zero polynomials")
    if not A or not B:
        return RingElement(f.spec, ops.zero)
    return RingElement(f.spec, _lp_resultant_det(A, B, ops))


# --------------------------------------------------------------------------
# Galois action on cyclotomic coefficients


def cyclotomic_conjugate_payload(spec: RingSpec, payload, sigma: int):
    if spec.kind != _KIND_C:
        raise UnsupportedRing(f"conjugation lives on cyclotomic rings, not {spec}")
    n = spec.n
    if math.gcd(sigma, n) != 1:
        raise NotAUnit(f"{sigma} is not a unit mod {n}")
    sigma %= n
    if n == 1:
        return spec.canon(payload)
    out = [0] * ((len(payload) - 1) * sigma + 1)
    for i, c in enumerate(payload):
        if c:
            out[i * sigma] += c
    return spec.canon(out)


def cyclotomic_conjugate(a: RingElement, sigma: int) -> RingElement:
    """Image of a under the coefficient automorphism x -> x^sigma mod Phi_n."""
    return RingElement(a.spec, cyclotomic_conjugate_payload(a.spec, a.payload, sigma))


def conjugate_polynomial(f: Polynomial, sigma: int) -> Polynomial:
    """Apply the cyclotomic conjugation coefficientwise."""
    return Polynomial.from_payloads(
        f.spec, [cyclotomic_conjugate_payload(f.spec, c, sigma) for c in f.coeffs]
    )


# --------------------------------------------------------------------------
# rendering


def format_polynomial(f: Polynomial, var: str = "t") -> str:
    """Render ascending, integer-style sign merging: ``1-5t+6t^2``."""
    s = f.spec
    if f.is_zero:
        return "0"
    simple = s.kind in (_KIND_Z, _KIND_ZN, _KIND_FP, _KIND_Q)
    parts: list[str] = []
    for i, c in enumerate(f.coeffs):
        if s.is_zero(c):
            continue
        power = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        body = c if simple else s.render(c)
        as_int = None
        if isinstance(body, (int, Fraction)):
            as_int = body
        elif isinstance(body, str):
            try:
                as_int = int(body)
            except ValueError:
                as_int = None
        if as_int is not None:
            sign = "-" if as_int < 0 else "+"
            mag = -as_int if as_int < 0 else as_int
            if i == 0:
                coef = str(mag)
            elif mag == 1:
                coef = ""
            else:
                coef = str(mag)
            parts.append((sign, f"{coef}{power}" if coef or power else str(mag)))
        else:
            if i == 0:
                parts.append(("+", body if "+" not in body and "-" not in body[1:] else f"({body})"))
            else:
                wrapped = "" if body == "1" else f"({body})"
                parts.append(("+", f"{wrapped}{power}"))
    out = ""
    for sign, body in parts:
        if not out:
            out = body if sign == "+" else f"-{body}"
        else:
            out += f"{sign}{body}"
    return out or "0"
