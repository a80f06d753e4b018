"""Sparse multivariate polynomials over cyclic-extension elements.

Terms map exponent vectors to nonzero coefficients and are kept in the
canonical monomial order (lexicographically descending exponent vectors,
the alphabetical order on monomial words shared with the Veronese basis).
Families of equal-degree polynomials are compared by exact row reduction
of their coefficient matrices; no ideal machinery is involved.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError, MixedDegrees, ShapeMismatch
from .fields import CyclicExtension, ExtElement, galois_apply
from .linalg import Matrix, from_rows, rref

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class MultiPoly:
    ext: CyclicExtension
    nvars: int
    terms: tuple[tuple[Exponents, ExtElement], ...]  # canonical order, no zeros

    def terms_dict(self) -> dict[Exponents, ExtElement]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e, _ in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e, _ in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps: Exponents) -> ExtElement:
        for e, c in self.terms:
            if e == exps:
                return c
        return self.ext.zero()

    def __add__(self, other):
        other = self._coerce(other)
        acc = self.terms_dict()
        for e, c in other.terms:
            cur = acc.get(e)
            acc[e] = c if cur is None else cur + c
        return make_poly(self.ext, self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ext, self.nvars, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            c = other if isinstance(other, ExtElement) else self.ext.from_base(other)
            return MultiPoly(self.ext, self.nvars,
                             tuple((e, x * c) for e, x in self.terms if not (x * c).is_zero()))
        if other.nvars != self.nvars:
            raise ShapeMismatch("polynomials in different rings")
        acc: dict[Exponents, ExtElement] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                cur = acc.get(e)
                acc[e] = prod if cur is None else cur + prod
        return make_poly(self.ext, self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise InputError("negative polynomial power")
        out = constant(self.ext, self.nvars, self.ext.one())
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ShapeMismatch("polynomials in different rings")
            return other
        c = other if isinstance(other, ExtElement) else self.ext.from_base(other)
        return constant(self.ext, self.nvars, c)

    def __repr__(self) -> str:
        from .grammar import format_poly
        return f"<{format_poly(self)}>"


def make_poly(ext: CyclicExtension, nvars: int,
              terms: Mapping[Exponents, ExtElement] | Iterable[tuple[Exponents, ExtElement]]
              ) -> MultiPoly:
    if isinstance(terms, Mapping):
        items = terms.items()
    else:
        items = list(terms)
    acc: dict[Exponents, ExtElement] = {}
    for e, c in items:
        e = tuple(int(x) for x in e)
        if len(e) != nvars or any(x < 0 for x in e):
            raise InputError(f"bad exponent vector {e}")
        cur = acc.get(e)
        acc[e] = c if cur is None else cur + c
    cleaned = tuple(sorted(((e, c) for e, c in acc.items() if not c.is_zero()),
                           key=lambda t: t[0], reverse=True))
    return MultiPoly(ext, nvars, cleaned)


def constant(ext: CyclicExtension, nvars: int, c) -> MultiPoly:
    if not isinstance(c, ExtElement):
        c = ext.from_base(c)
    if c.is_zero():
        return MultiPoly(ext, nvars, ())
    return MultiPoly(ext, nvars, (((0,) * nvars, c),))


def zero_poly(ext: CyclicExtension, nvars: int) -> MultiPoly:
    return MultiPoly(ext, nvars, ())


def variables(ext: CyclicExtension, nvars: int) -> tuple[MultiPoly, ...]:
    out = []
    for i in range(nvars):
        e = tuple(1 if j == i else 0 for j in range(nvars))
        out.append(MultiPoly(ext, nvars, ((e, ext.one()),)))
    return tuple(out)


def monomial(ext: CyclicExtension, exps: Sequence[int], coeff=None) -> MultiPoly:
    c = ext.one() if coeff is None else (coeff if isinstance(coeff, ExtElement)
                                         else ext.from_base(coeff))
    return make_poly(ext, len(exps), {tuple(exps): c})


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def substitute(F: MultiPoly, polys: Sequence[MultiPoly]) -> MultiPoly:
    """F with variable i replaced by polys[i]; all polys share one target ring."""
    if len(polys) != F.nvars:
        raise ShapeMismatch(f"{F.nvars} variables, {len(polys)} substitution polynomials")
    if not polys:
        return F
    ext, nv = polys[0].ext, polys[0].nvars
    power_memo: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, k: int) -> MultiPoly:
        key = (i, k)
        if key not in power_memo:
            power_memo[key] = polys[i] ** k
        return power_memo[key]

    out = zero_poly(ext, nv)
    for e, c in F.terms:
        term = constant(ext, nv, c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        out = out + term
    return out


def substitute_linear(F: MultiPoly, A: Matrix) -> MultiPoly:
    """F(A x): variable i becomes the linear form sum_j A[i][j] x_j."""
    if A.rows != A.cols or A.rows != F.nvars:
        raise ShapeMismatch(f"need a {F.nvars}x{F.nvars} matrix")
    xs = variables(F.ext, F.nvars)
    forms = []
    for i in range(F.nvars):
        form = zero_poly(F.ext, F.nvars)
        for j in range(F.nvars):
            c = A.at(i, j)
            if not c.is_zero():
                form = form + xs[j] * c
        forms.append(form)
    return substitute(F, forms)


def jacobian(F: MultiPoly) -> tuple[MultiPoly, ...]:
    out = []
    for i in range(F.nvars):
        acc: dict[Exponents, ExtElement] = {}
        for e, c in F.terms:
            if e[i] == 0:
                continue
            de = list(e)
            de[i] -= 1
            acc[tuple(de)] = c * F.ext.from_base(e[i])
        out.append(make_poly(F.ext, F.nvars, acc))
    return tuple(out)


def evaluate(F: MultiPoly, point: Sequence) -> ExtElement:
    if len(point) != F.nvars:
        raise ShapeMismatch(f"point length {len(point)} != nvars {F.nvars}")
    pt = [x if isinstance(x, ExtElement) else F.ext.from_base(x) for x in point]
    acc = F.ext.zero()
    for e, c in F.terms:
        v = c
        for i, k in enumerate(e):
            if k:
                v = v * pt[i] ** k
        acc = acc + v
    return acc


def galois_poly(L: CyclicExtension, F: MultiPoly, j: int) -> MultiPoly:
    """sigma^j applied to every coefficient."""
    return MultiPoly(F.ext, F.nvars,
                     tuple((e, galois_apply(L, c, j)) for e, c in F.terms))


def _common_degree(S: Sequence[MultiPoly]) -> Optional[int]:
    degs = set()
    for F in S:
        if F.is_zero():
            continue
        if not F.is_homogeneous():
            raise MixedDegrees("family member is not homogeneous")
        degs.add(F.degree())
    if len(degs) > 1:
        raise MixedDegrees(f"family mixes degrees {sorted(degs)}")
    return degs.pop() if degs else None


def coefficient_matrix(S: Sequence[MultiPoly]) -> tuple[Matrix, list[Exponents]]:
    """Rows = polynomials, columns = union monomial support in canonical order."""
    if not S:
        raise InputError("empty family")
    ext = S[0].ext
    support = sorted({e for F in S for e, _ in F.terms}, reverse=True)
    rows = []
    for F in S:
        d = F.terms_dict()
        rows.append([d.get(e, ext.zero()) for e in support])
    if not support:
        rows = [[ext.zero()] for _ in S]
        support = [(0,) * S[0].nvars]
    return from_rows(ext, rows), support


def span_reduce(S: Sequence[MultiPoly]) -> list[MultiPoly]:
    """Canonical spanning set: nonzero rows of the reduced row echelon form."""
    S = [F for F in S if not F.is_zero()]
    if not S:
        return []
    _common_degree(S)
    A, support = coefficient_matrix(S)
    R, pivots = rref(A)
    ext, nv = S[0].ext, S[0].nvars
    out = []
    for r in range(len(pivots)):
        terms = {support[j]: R.at(r, j) for j in range(len(support))
                 if not R.at(r, j).is_zero()}
        out.append(make_poly(ext, nv, terms))
    return out


def span_equal(S1: Sequence[MultiPoly], S2: Sequence[MultiPoly]) -> bool:
    """True iff the coefficient row spaces over L coincide."""
    R1 = span_reduce(list(S1))
    R2 = span_reduce(list(S2))
    return R1 == R2


def in_span(F: MultiPoly, S: Sequence[MultiPoly]) -> bool:
    if F.is_zero():
        return True
    base = span_reduce(list(S))
    return span_reduce(base + [F]) == base


# ---------------------------------------------------------------------------
# JSON form: list of [exponent-tuple, coefficient-coordinates]
# ---------------------------------------------------------------------------

def poly_to_json(F: MultiPoly) -> list:
    from .fields import scalar_to_json
    return [[list(e), [scalar_to_json(c) for c in coeff.coeffs]]
            for e, coeff in F.terms]


def poly_from_json(ext: CyclicExtension, nvars: int, obj: Sequence) -> MultiPoly:
    from .fields import scalar_from_json
    return make_poly(ext, nvars, {
        tuple(e): ext.el([scalar_from_json(c) for c in coeffs])
        for e, coeffs in obj})
