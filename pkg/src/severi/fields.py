"""Exact base fields and cyclic extensions with an explicit Galois generator.

The base field k is either Q (scalars are `fractions.Fraction`) or a prime
field F_p (scalars are ints in 0..p-1).  A cyclic extension L/k of degree
n+1 is k[x]/(f) together with a polynomial g of degree <= n such that
theta |-> g(theta) generates Gal(L/k); elements are stored in the power
basis 1, theta, ..., theta^n.  Normal bases are derived values, never the
internal representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import (
    InputError,
    InternalDescentFailure,
    NotGalois,
    NotIrreducible,
    SearchExhausted,
    WrongOrder,
    ZeroInput,
)

Scalar = Union[Fraction, int]

_RATIONAL_ROOT_DEGREE = 3          # rational-root test is complete up to here
_CERTIFICATE_PRIMES = 500          # mod-p irreducibility certificates tried below this


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _primes_below(bound: int) -> Iterator[int]:
    for p in range(2, bound):
        if _is_prime(p):
            yield p


class BaseField:
    """Q or F_p with exact scalar arithmetic."""

    def __init__(self, p: Optional[int] = None):
        if p is not None and not _is_prime(p):
            raise InputError(f"{p} is not prime")
        self.p = p

    @property
    def kind(self) -> str:
        return "rationals" if self.p is None else "prime_field"

    @property
    def char(self) -> int:
        return 0 if self.p is None else self.p

    def coerce(self, x) -> Scalar:
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            raise InputError(f"cannot coerce {x!r} into Q")
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InputError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        if isinstance(x, int):
            return x % self.p
        raise InputError(f"cannot coerce {x!r} into F_{self.p}")

    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def elements(self) -> Iterator[Scalar]:
        """All field elements; only valid over a prime field."""
        if self.p is None:
            raise InputError("Q is infinite")
        return iter(range(self.p))

    def value_sequence(self) -> Iterator[Scalar]:
        """Documented enumeration of scalars: 0,1,-1,2,-2,... over Q; 0..p-1 over F_p."""
        if self.p is not None:
            yield from range(self.p)
            return
        yield Fraction(0)
        k = 1
        while True:
            yield Fraction(k)
            yield Fraction(-k)
            k += 1

    def __eq__(self, other) -> bool:
        return isinstance(other, BaseField) and self.p == other.p

    def __hash__(self) -> int:
        return hash(("BaseField", self.p))

    def __repr__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"


QQ = BaseField()


def GF(p: int) -> BaseField:
    return BaseField(p)


# ---------------------------------------------------------------------------
# dense univariate polynomials over the base field (low degree first)
# ---------------------------------------------------------------------------

def poly_trim(field: BaseField, c: Sequence[Scalar]) -> tuple[Scalar, ...]:
    c = list(c)
    while c and field.is_zero(c[-1]):
        c.pop()
    return tuple(c)


def poly_add(field, a, b):
    n = max(len(a), len(b))
    out = [field.zero()] * n
    for i, x in enumerate(a):
        out[i] = field.add(out[i], x)
    for i, x in enumerate(b):
        out[i] = field.add(out[i], x)
    return poly_trim(field, out)


def poly_neg(field, a):
    return tuple(field.neg(x) for x in a)


def poly_sub(field, a, b):
    return poly_add(field, a, poly_neg(field, b))


def poly_mul(field, a, b):
    if not a or not b:
        return ()
    out = [field.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if field.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return poly_trim(field, out)


def poly_scale(field, a, s):
    return poly_trim(field, [field.mul(x, s) for x in a])


def poly_divmod(field, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [field.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = field.inv(b[-1])
    for i in range(len(a) - len(b), -1, -1):
        c = field.mul(a[i + len(b) - 1], inv_lead)
        if field.is_zero(c):
            continue
        q[i] = c
        for j, y in enumerate(b):
            a[i + j] = field.sub(a[i + j], field.mul(c, y))
    return poly_trim(field, q), poly_trim(field, a)


def poly_mod(field, a, b):
    return poly_divmod(field, a, b)[1]


def poly_gcd(field, a, b):
    while b:
        a, b = b, poly_mod(field, a, b)
    if a:
        a = poly_scale(field, a, field.inv(a[-1]))
    return a


def poly_ext_euclid(field, a, m):
    """u with u*a == 1 mod m; requires gcd(a, m) = 1."""
    r0, r1 = tuple(m), poly_mod(field, a, m)
    s0, s1 = (), (field.one(),)
    while r1:
        q, r = poly_divmod(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(field, s0, poly_mul(field, q, s1))
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo m")
    return poly_trim(field, poly_scale(field, s0, field.inv(r0[0])))


def poly_compose_mod(field, a, b, m):
    """a(b(x)) mod m by Horner on the coefficients of a."""
    out: tuple[Scalar, ...] = ()
    for c in reversed(a):
        out = poly_mod(field, poly_mul(field, out, b), m)
        out = poly_add(field, out, (c,))
    return out


def poly_powmod(field, a, e: int, m):
    out: tuple[Scalar, ...] = (field.one(),)
    a = poly_mod(field, a, m)
    while e > 0:
        if e & 1:
            out = poly_mod(field, poly_mul(field, out, a), m)
        a = poly_mod(field, poly_mul(field, a, a), m)
        e >>= 1
    return out


def poly_deriv(field, a):
    return poly_trim(field, [field.mul(field.coerce(i), a[i]) for i in range(1, len(a))])


def poly_eval(field, a, x: Scalar) -> Scalar:
    out = field.zero()
    for c in reversed(a):
        out = field.add(field.mul(out, x), c)
    return out


def _X(field) -> tuple[Scalar, ...]:
    return (field.zero(), field.one())


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def poly_is_irreducible_fp(field: BaseField, f) -> bool:
    """Rabin's test: x^(p^m) = x mod f and gcd(x^(p^(m/q)) - x, f) = 1."""
    p, m = field.p, len(f) - 1
    assert p is not None and m >= 1
    if m == 1:
        return True
    x = _X(field)
    for q in _prime_factors(m):
        h = poly_powmod(field, x, p ** (m // q), f)
        if len(poly_gcd(field, poly_sub(field, h, x), f)) > 1:
            return False
    h = poly_powmod(field, x, p ** m, f)
    return poly_sub(field, h, x) == ()


def _rational_roots_exist(f) -> bool:
    # clear denominators, then u/v with u | constant, v | leading
    den = 1
    for c in f:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    fi = [int(c * den) for c in f]
    if fi[0] == 0:
        return True  # 0 is a root
    for u in _divisors(fi[0]):
        for v in _divisors(fi[-1]):
            for s in (1, -1):
                r = Fraction(s * u, v)
                if poly_eval(QQ, f, r) == 0:
                    return True
    return False


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else abs(b)


def poly_check_irreducible(field: BaseField, f) -> None:
    """Raise NotIrreducible unless f is (certifiably) irreducible over field.

    Over F_p the test is exact.  Over Q it is exact up to degree 3 (rational
    root test); for higher degree we look for a prime p with f mod p
    irreducible, which certifies irreducibility.  Failure to certify raises,
    with a message distinguishing "reducible" from "uncertified".
    """
    deg = len(f) - 1
    if deg < 1:
        raise NotIrreducible("constant polynomial")
    if deg == 1:
        return
    if field.p is not None:
        if not poly_is_irreducible_fp(field, f):
            raise NotIrreducible(f"{f} factors over F_{field.p}")
        return
    if len(poly_gcd(field, f, poly_deriv(field, f))) > 1:
        raise NotIrreducible("not squarefree over Q")
    if _rational_roots_exist(f):
        raise NotIrreducible("rational root found")
    if deg <= _RATIONAL_ROOT_DEGREE:
        return
    den = 1
    for c in f:
        den = den * c.denominator // _gcd_int(den, c.denominator)
    fi = [int(c * den) for c in f]
    for p in _primes_below(_CERTIFICATE_PRIMES):
        if fi[-1] % p == 0:
            continue
        k = GF(p)
        fp = poly_trim(k, [k.coerce(c) for c in fi])
        if len(fp) != len(fi):
            continue
        if len(poly_gcd(k, fp, poly_deriv(k, fp))) > 1:
            continue
        if poly_is_irreducible_fp(k, fp):
            return
    raise NotIrreducible(
        "no mod-p certificate of irreducibility found (degree > 3 over Q)")


# ---------------------------------------------------------------------------
# cyclic extensions
# ---------------------------------------------------------------------------

class CyclicExtension:
    """k[x]/(f) with Galois generator sigma: theta |-> g(theta).

    `character_convention` records chi(sigma) as a unit mod n+1; the default
    is -1 mod n+1, the convention under which the stored generator is the one
    appearing in the companion-matrix cocycle.  sigma' with chi(sigma') = 1
    is then a documented power of the stored generator.
    """

    def __init__(self, base: BaseField, f: Sequence[Scalar], g: Sequence[Scalar],
                 character_convention: Optional[int] = None, _validate: bool = True):
        self.base = base
        self.f = poly_trim(base, [base.coerce(c) for c in f])
        self.g = poly_mod(base, [base.coerce(c) for c in g], self.f)
        self.degree = len(self.f) - 1
        if character_convention is None:
            character_convention = self.degree - 1
        self.character_convention = character_convention % self.degree
        if _validate:
            self._validate()

    def _validate(self) -> None:
        n1 = self.degree
        if n1 < 2:
            raise InputError("extension degree must be >= 2")
        if self.f[-1] != self.base.one():
            raise InputError("minimal polynomial must be monic")
        if _gcd_int(self.character_convention, n1) != 1:
            raise InputError("character convention must be a unit mod degree")
        poly_check_irreducible(self.base, self.f)
        fg = poly_compose_mod(self.base, self.f, self.g, self.f)
        if fg != ():
            raise NotGalois("g does not map the root to a root: f(g) != 0 mod f")
        it = self.g
        order = 1
        x = _X(self.base)
        while it != poly_trim(self.base, x):
            it = poly_compose_mod(self.base, self.g, it, self.f)
            order += 1
            if order > n1:
                break
        if order != n1:
            raise WrongOrder(f"generator has order {order}, expected {n1}")

    # -- cached structure ---------------------------------------------------

    @cached_property
    def _theta_pow_table(self) -> list[tuple[Scalar, ...]]:
        """theta^k mod f for k = 0 .. 2n, as coefficient tuples of length n+1."""
        n1 = self.degree
        table = []
        cur: tuple[Scalar, ...] = (self.base.one(),)
        for _ in range(2 * n1 - 1):
            table.append(self._pad(cur))
            cur = poly_mod(self.base, poly_mul(self.base, cur, _X(self.base)), self.f)
        return table

    @cached_property
    def _galois_iterates(self) -> list[tuple[Scalar, ...]]:
        """g composed with itself j times mod f, j = 0 .. n."""
        out = [poly_trim(self.base, _X(self.base))]
        for _ in range(self.degree - 1):
            out.append(poly_compose_mod(self.base, self.g, out[-1], self.f))
        return out

    @cached_property
    def _galois_coord_maps(self) -> list[list[tuple[Scalar, ...]]]:
        """maps[j][i] = coordinates of sigma^j(theta^i)."""
        maps = []
        for gj in self._galois_iterates:
            cols = []
            cur: tuple[Scalar, ...] = (self.base.one(),)
            for _ in range(self.degree):
                cols.append(self._pad(cur))
                cur = poly_mod(self.base, poly_mul(self.base, cur, gj), self.f)
            maps.append(cols)
        return maps

    def _pad(self, c: Sequence[Scalar]) -> tuple[Scalar, ...]:
        c = list(c)
        return tuple(list(c) + [self.base.zero()] * (self.degree - len(c)))

    # -- element constructors ----------------------------------------------

    def el(self, coeffs: Iterable) -> "ExtElement":
        c = [self.base.coerce(x) for x in coeffs]
        if len(c) > self.degree:
            c = list(poly_mod(self.base, c, self.f))
        return ExtElement(self, self._pad(c))

    def from_base(self, x) -> "ExtElement":
        return self.el([x])

    def zero(self) -> "ExtElement":
        return self.el([])

    def one(self) -> "ExtElement":
        return self.el([1])

    def theta(self) -> "ExtElement":
        return self.el([0, 1])

    def elements(self) -> Iterator["ExtElement"]:
        """All elements; finite fields only."""
        if self.base.p is None:
            raise InputError("infinite field")
        for tup in itertools.product(range(self.base.p), repeat=self.degree):
            yield self.el(tup)

    def enumerate_elements(self) -> Iterator["ExtElement"]:
        """Documented deterministic enumeration: coefficient vectors over the
        scalar sequence 0,1,-1,2,-2,... in little-endian odometer order by
        increasing maximum index (so 0, 1, theta, 1+theta, ... come early)."""
        seq: list[Scalar] = []
        src = self.base.value_sequence()
        h = 0
        while True:
            try:
                seq.append(next(src))
            except StopIteration:
                return
            h = len(seq) - 1
            if h == 0:
                yield self.zero()
                continue
            for tup in itertools.product(range(h + 1), repeat=self.degree):
                if max(tup) != h:
                    continue
                little = tup[::-1]  # first coordinate varies fastest
                yield self.el([seq[i] for i in little])

    def __eq__(self, other) -> bool:
        return (isinstance(other, CyclicExtension) and self.base == other.base
                and self.f == other.f and self.g == other.g)

    def __hash__(self) -> int:
        return hash((self.base, self.f, self.g))

    def __repr__(self) -> str:
        return f"CyclicExtension({self.base}, f={format_univariate(self.f)})"


@dataclass(frozen=True)
class ExtElement:
    """Element of a cyclic extension in power-basis coordinates."""

    ext: CyclicExtension
    coeffs: tuple[Scalar, ...]

    def __post_init__(self):
        assert len(self.coeffs) == self.ext.degree

    # -- ring structure -----------------------------------------------------

    def _coerce(self, other) -> "ExtElement":
        if isinstance(other, ExtElement):
            if other.ext != self.ext:
                raise InputError("elements of different extensions")
            return other
        return self.ext.from_base(other)

    def __add__(self, other):
        other = self._coerce(other)
        k = self.ext.base
        return ExtElement(self.ext, tuple(k.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        k = self.ext.base
        return ExtElement(self.ext, tuple(k.neg(a) for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        k, ext = self.ext.base, self.ext
        n1 = ext.degree
        acc = [k.zero()] * n1
        table = ext._theta_pow_table
        for i, a in enumerate(self.coeffs):
            if k.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if k.is_zero(b):
                    continue
                ab = k.mul(a, b)
                red = table[i + j]
                for t in range(n1):
                    if not k.is_zero(red[t]):
                        acc[t] = k.add(acc[t], k.mul(ab, red[t]))
        return ExtElement(ext, tuple(acc))

    __rmul__ = __mul__

    def inverse(self) -> "ExtElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in extension")
        k, ext = self.ext.base, self.ext
        u = poly_ext_euclid(k, poly_trim(k, self.coeffs), ext.f)
        return ExtElement(ext, ext._pad(u))

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = self.ext.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(self.ext.base.is_zero(c) for c in self.coeffs)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def in_base(self) -> bool:
        return all(self.ext.base.is_zero(c) for c in self.coeffs[1:])

    def base_value(self) -> Scalar:
        if not self.in_base():
            raise InternalDescentFailure(
                f"element {self.coeffs} has a nonzero theta-coordinate")
        return self.coeffs[0]

    def __repr__(self) -> str:
        return f"<{format_element(self)}>"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def make_extension(base: BaseField, f: Sequence, g: Sequence,
                   character_convention: Optional[int] = None) -> CyclicExtension:
    """Validated cyclic extension; raises NotIrreducible / NotGalois / WrongOrder."""
    return CyclicExtension(base, f, g, character_convention)


def make_shanks_cubic(t: int) -> CyclicExtension:
    """Shanks simplest cubic x^3 - t x^2 - (t+3) x - 1 over Q, with the
    closed-form generator sigma(theta) = -1/(1+theta)."""
    f = (Fraction(-1), Fraction(-(t + 3)), Fraction(-t), Fraction(1))
    inv_1_plus_x = poly_ext_euclid(QQ, (Fraction(1), Fraction(1)), f)
    g = poly_neg(QQ, inv_1_plus_x)
    return make_extension(QQ, f, g)


def frobenius_extension(p: int, degree: int) -> CyclicExtension:
    """F_{p^degree}/F_p with the first irreducible monic f in odometer order
    (constant coefficient varying fastest) and the Frobenius generator x^p."""
    k = GF(p)
    for rev in itertools.product(range(p), repeat=degree):
        tail = rev[::-1]  # constant coefficient varies fastest
        f = poly_trim(k, list(tail) + [1])
        if len(f) != degree + 1:
            continue
        if poly_is_irreducible_fp(k, f):
            g = poly_powmod(k, _X(k), p, f)
            return make_extension(k, f, g)
    raise SearchExhausted("no irreducible polynomial found")  # unreachable


def galois_apply(L: CyclicExtension, x: ExtElement, j: int) -> ExtElement:
    """sigma^j applied to x; sigma^0 is the identity."""
    j %= L.degree
    if j == 0:
        return x
    k = L.base
    cols = L._galois_coord_maps[j]
    acc = [k.zero()] * L.degree
    for i, c in enumerate(x.coeffs):
        if k.is_zero(c):
            continue
        col = cols[i]
        for t in range(L.degree):
            if not k.is_zero(col[t]):
                acc[t] = k.add(acc[t], k.mul(c, col[t]))
    return ExtElement(L, tuple(acc))


def conjugates(L: CyclicExtension, x: ExtElement) -> list[ExtElement]:
    return [galois_apply(L, x, j) for j in range(L.degree)]


def norm(L: CyclicExtension, x: ExtElement) -> Scalar:
    out = L.one()
    for c in conjugates(L, x):
        out = out * c
    return out.base_value()


def trace(L: CyclicExtension, x: ExtElement) -> Scalar:
    out = L.zero()
    for c in conjugates(L, x):
        out = out + c
    return out.base_value()


def _base_det(field: BaseField, rows: list[list[Scalar]]) -> Scalar:
    """Determinant over the base field, plain elimination with pivoting."""
    n = len(rows)
    m = [list(r) for r in rows]
    det = field.one()
    for c in range(n):
        piv = next((r for r in range(c, n) if not field.is_zero(m[r][c])), None)
        if piv is None:
            return field.zero()
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = field.neg(det)
        det = field.mul(det, m[c][c])
        inv = field.inv(m[c][c])
        for r in range(c + 1, n):
            if field.is_zero(m[r][c]):
                continue
            factor = field.mul(m[r][c], inv)
            for cc in range(c, n):
                m[r][cc] = field.sub(m[r][cc], field.mul(factor, m[c][cc]))
    return det


@dataclass(frozen=True)
class NormalBasis:
    """A full Galois orbit l_1, ..., l_{n+1} with sigma(l_i) = l_{i+1},
    linearly independent over k and of nonzero trace."""

    elements: tuple[ExtElement, ...]
    trace_value: Scalar

    def __post_init__(self):
        L = self.elements[0].ext
        assert len(self.elements) == L.degree
        for i in range(L.degree):
            nxt = self.elements[(i + 1) % L.degree]
            if galois_apply(L, self.elements[i], 1) != nxt:
                raise InputError("orbit is not sigma-cyclic")
        rows = [list(e.coeffs) for e in self.elements]
        if L.base.is_zero(_base_det(L.base, rows)):
            raise InputError("orbit is linearly dependent")
        if L.base.is_zero(self.trace_value):
            raise InputError("orbit has zero trace")

    @property
    def extension(self) -> CyclicExtension:
        return self.elements[0].ext


def _normal_basis_candidate(L: CyclicExtension, x: ExtElement) -> Optional[NormalBasis]:
    if x.is_zero():
        return None
    orbit = conjugates(L, x)
    rows = [list(e.coeffs) for e in orbit]
    if L.base.is_zero(_base_det(L.base, rows)):
        return None
    s = L.zero()
    for e in orbit:
        s = s + e
    tr = s.base_value()
    if L.base.is_zero(tr):
        return None
    return NormalBasis(tuple(orbit), tr)


def find_normal_basis(L: CyclicExtension, seed: Optional[ExtElement] = None,
                      bound: int = 100_000) -> NormalBasis:
    """First normal-basis generator in the documented enumeration seed,
    seed+1, seed+theta, ... (deltas from CyclicExtension.enumerate_elements)."""
    if seed is None:
        seed = L.zero()
    tried = 0
    for delta in L.enumerate_elements():
        cand = seed + delta
        nb = _normal_basis_candidate(L, cand)
        if nb is not None:
            return nb
        tried += 1
        if tried >= bound:
            raise SearchExhausted(f"no normal basis within {bound} candidates")
    raise SearchExhausted("element enumeration exhausted")


def _nth_root_fraction(r: Fraction, n: int) -> Optional[Fraction]:
    if r < 0:
        if n % 2 == 0:
            return None
        s = _nth_root_fraction(-r, n)
        return None if s is None else -s
    num = _int_nth_root(r.numerator, n)
    den = _int_nth_root(r.denominator, n)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _int_nth_root(x: int, n: int) -> Optional[int]:
    if x == 0:
        return 0
    r = round(x ** (1.0 / n))
    for c in (r - 1, r, r + 1):
        if c >= 0 and c ** n == x:
            return c
    return None


@dataclass
class WitnessResult:
    """Outcome of a norm-witness search; `none_found` over Q is not a proof."""

    status: str  # "witness" | "none_found"
    witness: Optional[ExtElement] = None
    tried: int = 0
    bound: int = 0


def norm_witness(L: CyclicExtension, a, bound: int = 1000) -> WitnessResult:
    """Search x with norm(x) = a.

    Over a prime field the norm is surjective, so a witness is always found
    by enumeration.  Over Q the search runs through the first `bound`
    candidates of the documented enumeration, also accepting x whose norm
    differs from a by an exact (n+1)-th power of a rational (the witness is
    then x rescaled); `none_found` only means the bound was exhausted.
    """
    a = L.base.coerce(a)
    if L.base.is_zero(a):
        raise ZeroInput("a must be nonzero")
    if L.base.p is not None:
        for tried, x in enumerate(L.enumerate_elements(), start=1):
            if x.is_zero():
                continue
            if norm(L, x) == a:
                return WitnessResult("witness", x, tried, bound)
        raise SearchExhausted("finite-field norm search failed")  # unreachable
    n1 = L.degree
    tried = 0
    for x in L.enumerate_elements():
        if tried >= bound:
            break
        if x.is_zero():
            tried += 1
            continue
        tried += 1
        nx = norm(L, x)
        if nx == a:
            return WitnessResult("witness", x, tried, bound)
        s = _nth_root_fraction(nx / a, n1)
        if s is not None and s != 0:
            y = x / L.from_base(s)
            assert norm(L, y) == a
            return WitnessResult("witness", y, tried, bound)
    return WitnessResult("none_found", None, tried, bound)


# ---------------------------------------------------------------------------
# plain-text formatting (the parsing side lives in severi.grammar)
# ---------------------------------------------------------------------------

def format_scalar(x: Scalar) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _format_terms(pairs: list[tuple[Scalar, str]]) -> str:
    out = []
    for c, mono in pairs:
        if c == 0:
            continue
        neg = c < 0 if isinstance(c, Fraction) else False
        mag = -c if neg else c
        body = format_scalar(mag)
        if "/" in body and mono:
            body = f"({body})"
        if mono:
            body = mono if body == "1" else f"{body}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(out) if out else "0"


def format_univariate(f: Sequence[Scalar], var: str = "x") -> str:
    pairs = []
    for i in range(len(f) - 1, -1, -1):
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        pairs.append((f[i], mono))
    return _format_terms(pairs)


def format_element(x: ExtElement, var: str = "t") -> str:
    pairs = []
    for i, c in enumerate(x.coeffs):
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        pairs.append((c, mono))
    return _format_terms(pairs)


# ---------------------------------------------------------------------------
# JSON scalars and extensions
# ---------------------------------------------------------------------------

def scalar_to_json(x: Scalar):
    """Fractions as canonical strings, prime-field scalars as ints."""
    if isinstance(x, Fraction):
        return format_scalar(x)
    return int(x)


def scalar_from_json(v) -> Fraction:
    """Always a Fraction; BaseField.coerce maps it into F_p when needed."""
    return Fraction(v)


def element_to_json(x: ExtElement) -> list:
    return [scalar_to_json(c) for c in x.coeffs]


def element_from_json(L: CyclicExtension, v: Sequence) -> ExtElement:
    return L.el([scalar_from_json(c) for c in v])


def extension_to_json(L: CyclicExtension) -> dict:
    return {
        "p": L.base.p,
        "f": [scalar_to_json(c) for c in L.f],
        "g": [scalar_to_json(c) for c in L.g],
        "character_convention": L.character_convention,
    }


def extension_from_json(obj: dict) -> CyclicExtension:
    base = BaseField(obj["p"])
    f = [scalar_from_json(c) for c in obj["f"]]
    g = [scalar_from_json(c) for c in obj["g"]]
    return CyclicExtension(base, f, g, obj["character_convention"])
