"""Degree-d Veronese combinatorics on P^n.

The monomial basis is kept in alphabetical order: exponent vectors sorted
so the words X0^a0...Xn^an read lexicographically (X0^d first, Xn^d last).
For the degree-(n+1) embedding the basis has m = C(2n+1, n) monomials and
every invertible (n+1)x(n+1) matrix induces an m x m matrix on it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .errors import DegreeTooSmall, InputError, Singular, ZeroPoint
from .fields import CyclicExtension, ExtElement
from .linalg import Matrix, det, from_rows
from .polyring import MultiPoly, make_poly, variables, zero_poly


@dataclass(frozen=True)
class MonomialBasis:
    n: int
    degree: int
    list: tuple[tuple[int, ...], ...]
    m: int

    def index(self, exps: Sequence[int]) -> int:
        return self.list.index(tuple(exps))

    def pure_power_indices(self) -> tuple[int, ...]:
        """Indices of X_i^degree for i = 0..n, in variable order."""
        out = []
        for i in range(self.n + 1):
            e = tuple(self.degree if j == i else 0 for j in range(self.n + 1))
            out.append(self.list.index(e))
        return tuple(out)


def monomial_basis(n: int, degree: int) -> MonomialBasis:
    if n < 1 or degree < 1:
        raise InputError("need n >= 1 and degree >= 1")
    exps = sorted(
        (e for e in itertools.product(range(degree + 1), repeat=n + 1)
         if sum(e) == degree),
        reverse=True)
    basis = MonomialBasis(n, degree, tuple(exps), len(exps))
    assert basis.m == comb(n + degree, degree)
    return basis


def canonical_embedding(d: int) -> MonomialBasis:
    """Plane curve of degree d >= 4: the canonical map is Ver_{d-3} on P^2,
    landing in P^{g-1} with g = (d-1)(d-2)/2."""
    if d < 4:
        raise DegreeTooSmall(f"canonical embedding needs degree >= 4, got {d}")
    basis = monomial_basis(2, d - 3)
    assert basis.m == (d - 1) * (d - 2) // 2
    return basis


def veronese_point(basis: MonomialBasis, point: Sequence,
                   ext: Optional[CyclicExtension] = None) -> tuple[ExtElement, ...]:
    if len(point) != basis.n + 1:
        raise InputError(f"point must have {basis.n + 1} coordinates")
    if ext is None:
        ext = next(x.ext for x in point if isinstance(x, ExtElement))
    pt = [x if isinstance(x, ExtElement) else ext.from_base(x) for x in point]
    if all(x.is_zero() for x in pt):
        raise ZeroPoint("the zero tuple is not a projective point")
    out = []
    for e in basis.list:
        v = ext.one()
        for i, k in enumerate(e):
            if k:
                v = v * pt[i] ** k
        out.append(v)
    return tuple(out)


def veronese_poly(basis: MonomialBasis, forms: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
    """Basis monomials evaluated symbolically at a tuple of polynomials."""
    if len(forms) != basis.n + 1:
        raise InputError(f"need {basis.n + 1} forms")
    ext, nv = forms[0].ext, forms[0].nvars
    out = []
    for e in basis.list:
        v = None
        for i, k in enumerate(e):
            if not k:
                continue
            p = forms[i] ** k
            v = p if v is None else v * p
        out.append(v if v is not None else zero_poly(ext, nv))
    return tuple(out)


def induced_matrix(basis: MonomialBasis, A: Matrix, normalize_by=None) -> Matrix:
    """The unique B with veronese_point(A x) = B veronese_point(x).

    Row i of B expands basis monomial i evaluated on the linear forms given
    by the rows of A.  Optionally divides every entry by normalize_by.
    """
    n1 = basis.n + 1
    if A.rows != n1 or A.cols != n1:
        raise InputError(f"matrix must be {n1}x{n1}")
    ext = A.ext
    if det(A).is_zero():
        raise Singular("induced matrix of a singular matrix")
    xs = variables(ext, n1)
    rows_as_forms = []
    for i in range(n1):
        form = zero_poly(ext, n1)
        for j in range(n1):
            c = A.at(i, j)
            if not c.is_zero():
                form = form + xs[j] * c
        rows_as_forms.append(form)
    images = veronese_poly(basis, rows_as_forms)
    col_of = {e: j for j, e in enumerate(basis.list)}
    rows = []
    for img in images:
        row = [ext.zero()] * basis.m
        for e, c in img.terms:
            row[col_of[e]] = c
        rows.append(row)
    B = from_rows(ext, rows)
    if normalize_by is not None:
        s = normalize_by if isinstance(normalize_by, ExtElement) else ext.from_base(normalize_by)
        if s.is_zero():
            raise InputError("normalize_by must be nonzero")
        si = s.inverse()
        B = B.scale(si)
    return B


def veronese_ideal(basis: MonomialBasis, ext: CyclicExtension) -> list[MultiPoly]:
    """Binomial quadric generators of the degree-2 part of the Veronese ideal.

    Pairs (i <= j) are grouped by the exponent sum e_i + e_j; each group
    contributes the differences against its first pair.  The result is
    linearly independent: every non-leading pair appears in exactly one
    generator.
    """
    if basis.degree != basis.n + 1:
        raise InputError("quadric generators are defined for the degree-(n+1) basis")
    quads = []
    one = ext.one()
    for (i0, j0, i, j) in _ideal_pairs(basis):
        e_lead = _pair_exp(basis.m, i0, j0)
        e_other = _pair_exp(basis.m, i, j)
        quads.append(make_poly(ext, basis.m, {e_lead: one, e_other: -one}))
    return quads


def _pair_exp(m: int, i: int, j: int) -> tuple[int, ...]:
    e = [0] * m
    e[i] += 1
    e[j] += 1
    return tuple(e)


def _ideal_pairs(basis: MonomialBasis) -> list[tuple[int, int, int, int]]:
    groups: dict[tuple[int, ...], list[tuple[int, int]]] = {}
    for i in range(basis.m):
        for j in range(i, basis.m):
            key = tuple(a + b for a, b in zip(basis.list[i], basis.list[j]))
            groups.setdefault(key, []).append((i, j))
    out = []
    for key in sorted(groups, reverse=True):
        pairs = groups[key]
        if len(pairs) < 2:
            continue
        (i0, j0) = pairs[0]
        for (i, j) in pairs[1:]:
            out.append((i0, j0, i, j))
    return out


@dataclass(frozen=True)
class ParametrizationMap:
    """The raw monomial map of `basis`, optionally followed by a matrix."""

    basis: MonomialBasis
    post_compose: Optional[Matrix] = None

    def __post_init__(self):
        if self.post_compose is not None:
            if self.post_compose.rows != self.basis.m or self.post_compose.cols != self.basis.m:
                raise InputError("post_compose must be m x m")
            if det(self.post_compose).is_zero():
                raise Singular("post_compose must be invertible")

    def apply_point(self, point: Sequence, ext: Optional[CyclicExtension] = None
                    ) -> tuple[ExtElement, ...]:
        v = veronese_point(self.basis, point, ext)
        if self.post_compose is None:
            return v
        return self.post_compose.apply(v)

    def symbolic(self, ext: CyclicExtension) -> tuple[MultiPoly, ...]:
        """Coordinate polynomials in the n+1 plane variables."""
        xs = variables(ext, self.basis.n + 1)
        polys = veronese_poly(self.basis, xs)
        if self.post_compose is None:
            return polys
        out = []
        for i in range(self.basis.m):
            acc = zero_poly(ext, self.basis.n + 1)
            for j in range(self.basis.m):
                c = self.post_compose.at(i, j)
                if not c.is_zero():
                    acc = acc + polys[j] * c
            out.append(acc)
        return tuple(out)
