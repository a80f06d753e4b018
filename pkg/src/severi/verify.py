"""Cross-cutting verification harness.

Point counts over small prime fields, Jacobian smoothness spot checks,
genus formulas, and suite runners producing machine-readable reports.
Exhaustive projective enumeration is capped at p = 3 for ten coordinates;
larger primes are counted through a base-rational form of the
parametrization obtained from a norm witness.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .algebra import (build_algebra, center_dimension, diagonal_table,
                      is_associative, left_multiplication_is_singular,
                      table_center_dimension, zero_divisor_from_witness)
from .cohomology import (cocycle_value, coboundary_from_witness,
                         cyclic_cocycle, lift_split_from_witness,
                         lift_to_veronese, split_generic, split_structured)
from .errors import InputError, InternalDescentFailure, SearchExhausted, TooLarge
from .fields import (CyclicExtension, find_normal_basis, frobenius_extension,
                     norm_witness)
from .grammar import parse_field_spec
from .linalg import Matrix, galois_matrix, identity, inverse, mul
from .polyring import MultiPoly, jacobian, make_poly, span_equal, substitute_linear
from .twisting import (SurfaceModel, appendix_model, fermat, picard_generator,
                       proportional, pullback_to_plane, surface_model,
                       verify_theorem1_equations)
from .veronese import monomial_basis, veronese_ideal

EXHAUSTIVE_MAX_P = 3


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass" | "fail" | "flagged"
    witness: Optional[str] = None


@dataclass(frozen=True)
class Report:
    suite: str
    checks: tuple[Check, ...]
    elapsed_ms: int

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)


def report_to_json(r: Report) -> dict:
    checks = []
    for c in r.checks:
        entry = {"name": c.name, "status": c.status}
        if c.witness is not None:
            entry["witness"] = c.witness
        checks.append(entry)
    return {"schema": 1, "suite": r.suite, "checks": checks,
            "elapsed_ms": r.elapsed_ms}


def report_from_json(obj: dict) -> Report:
    checks = tuple(Check(c["name"], c["status"], c.get("witness"))
                   for c in obj["checks"])
    return Report(obj["suite"], checks, obj["elapsed_ms"])


def genus_plane(d: int) -> int:
    """Genus of a smooth plane curve of degree d."""
    if d < 1:
        raise InputError("degree must be >= 1")
    return (d - 1) * (d - 2) // 2


# ---------------------------------------------------------------------------
# Point counting
# ---------------------------------------------------------------------------

def _require_prime_model(model: SurfaceModel, p: int) -> None:
    if model.extension.base.p != p:
        raise InputError(f"model is not over F_{p}")


def _int_equations(model: SurfaceModel, p: int) -> list[list[tuple[tuple[int, ...], int]]]:
    eqs = []
    for F in model.equations_over_k:
        eqs.append([(e, int(c.base_value()) % p) for e, c in F.terms])
    return eqs


def _eval_int(eq: list[tuple[tuple[int, ...], int]], pt: Sequence[int], p: int) -> int:
    total = 0
    for e, c in eq:
        t = c
        for i, k in enumerate(e):
            if k:
                t = t * pow(pt[i], k, p)
        total += t
    return total % p


def solve_points_exhaustive(model: SurfaceModel, p: int) -> list[tuple[int, ...]]:
    """All F_p-points of the model, by enumerating the monic representatives
    of P^{m-1}(F_p)."""
    _require_prime_model(model, p)
    if p > EXHAUSTIVE_MAX_P:
        raise TooLarge(f"exhaustive enumeration capped at p = {EXHAUSTIVE_MAX_P}")
    m = model.m
    arr = np.array(list(itertools.product(range(p), repeat=m)), dtype=np.int64)
    nonzero = arr.any(axis=1)
    first = (arr != 0).argmax(axis=1)
    lead = arr[np.arange(len(arr)), first]
    arr = arr[nonzero & (lead == 1)]
    keep = np.ones(len(arr), dtype=bool)
    for eq in _int_equations(model, p):
        acc = np.zeros(len(arr), dtype=np.int64)
        for e, c in eq:
            t = np.full(len(arr), c, dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    t = t * arr[:, i] ** k
            acc = (acc + t) % p
        keep &= acc == 0
    return sorted(tuple(int(v) for v in row) for row in arr[keep])


def _plane_reps(p: int, k: int):
    """Monic representatives of P^{k-1}(F_p)."""
    for tup in itertools.product(range(p), repeat=k):
        fi = next((i for i, v in enumerate(tup) if v), None)
        if fi is not None and tup[fi] == 1:
            yield tup


def base_change_matrix(model: SurfaceModel, lam=None) -> Matrix:
    """A Galois-fixed matrix carrying the standard Veronese image onto the
    model, built from a norm witness; exists whenever the class is split."""
    L = model.extension
    if lam is None:
        res = norm_witness(L, model.a)
        if res.status != "witness":
            raise SearchExhausted(
                f"no norm witness for a = {model.a} within bound {res.bound}")
        lam = res.witness
    Mw = lift_split_from_witness(L, model.a, lam)
    D = mul(inverse(model.splitting_matrix), Mw)
    for ent in D.entries:
        if not ent.in_base():
            raise InternalDescentFailure("base change matrix is not Galois-fixed")
    return D


def solve_points_image(model: SurfaceModel, p: int) -> list[tuple[int, ...]]:
    """F_p-points obtained as the image of P^n(F_p) under the base-rational
    parametrization; injectivity and the equations are asserted on the way."""
    _require_prime_model(model, p)
    L = model.extension
    D = base_change_matrix(model)
    dint = [[int(c.base_value()) % p for c in row] for row in D.as_rows()]
    basis = model.parametrization.basis
    eqs = _int_equations(model, p)
    pts: set[tuple[int, ...]] = set()
    n_reps = 0
    for u in _plane_reps(p, basis.n + 1):
        n_reps += 1
        v = [1] * basis.m
        for idx, exps in enumerate(basis.list):
            t = 1
            for i, k in enumerate(exps):
                if k:
                    t = t * pow(u[i], k, p)
            v[idx] = t % p
        y = [sum(dint[r][c] * v[c] for c in range(basis.m)) % p
             for r in range(basis.m)]
        fi = next(i for i, val in enumerate(y) if val)
        s = pow(y[fi], -1, p)
        yt = tuple(val * s % p for val in y)
        for eq in eqs:
            if _eval_int(eq, yt, p) != 0:
                raise InternalDescentFailure(
                    f"image point {yt} violates the model equations")
        pts.add(yt)
    if len(pts) != n_reps:
        raise InternalDescentFailure("parametrization image is not injective")
    return sorted(pts)


def rational_points(model: SurfaceModel, p: int,
                    method: str = "auto") -> list[tuple[int, ...]]:
    if method == "auto":
        method = "exhaustive" if p <= EXHAUSTIVE_MAX_P else "image"
    if method == "exhaustive":
        return solve_points_exhaustive(model, p)
    if method == "image":
        return solve_points_image(model, p)
    raise InputError(f"unknown point-count method {method!r}")


def count_points(model: SurfaceModel, p: int, method: str = "auto") -> int:
    return len(rational_points(model, p, method))


# ---------------------------------------------------------------------------
# Smoothness
# ---------------------------------------------------------------------------

def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    m = [[v % p for v in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [v * inv % p for v in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(v - f * w) % p for v, w in zip(m[r], m[rank])]
        rank += 1
    return rank


def jacobian_rank_at(equations: Sequence[MultiPoly], point: Sequence[int],
                     p: int) -> int:
    """Rank of the Jacobian of the system at a projective point, on the
    affine chart of the first nonzero coordinate."""
    fi = next((i for i, v in enumerate(point) if v % p), None)
    if fi is None:
        raise InputError("zero point")
    rows = []
    for F in equations:
        parts = jacobian(F)
        row = []
        for j, dF in enumerate(parts):
            if j == fi:
                continue
            val = 0
            for e, c in dF.terms:
                t = int(c.base_value()) % p
                for i, k in enumerate(e):
                    if k:
                        t = t * pow(point[i], k, p)
                val += t
            row.append(val % p)
        rows.append(row)
    return _rank_mod_p(rows, p)


def smoothness_spot(model: SurfaceModel, p: int,
                    sample: Optional[int] = None) -> Report:
    """Jacobian rank m-3 at each (or the first `sample`) F_p-points."""
    t0 = time.perf_counter()
    pts = rational_points(model, p)
    if sample is not None:
        pts = pts[:sample]
    target = model.m - 3
    checks = []
    for pt in pts:
        r = jacobian_rank_at(model.equations_over_k, pt, p)
        label = "jacobian-rank@(" + ",".join(str(v) for v in pt) + ")"
        if r == target:
            checks.append(Check(label, "pass"))
        else:
            checks.append(Check(label, "fail", f"rank {r}, expected {target}"))
    elapsed = int((time.perf_counter() - t0) * 1000)
    return Report(f"smoothness-p{p}", tuple(checks), elapsed)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

ALL_SUITES = ("cocycle", "split", "paper-eqs", "picard", "counts",
              "algebra", "triviality", "appendix")


@dataclass(frozen=True)
class VerifyConfig:
    field_spec: str = "shanks:t=1"
    a: str = "2"
    n: int = 2
    character_convention: Optional[int] = None
    dprime: int = 2
    seed: int = 0
    suites: tuple[str, ...] = ALL_SUITES
    witness_bound: int = 1000


def _parse_a(L: CyclicExtension, a) -> object:
    return L.base.coerce(Fraction(str(a)))


def _ok(name: str, cond: bool, witness: Optional[str] = None) -> Check:
    return Check(name, "pass" if cond else "fail",
                 None if cond else witness)


def _suite_cocycle(L, a, cfg) -> list[Check]:
    n1 = L.degree
    xi = cyclic_cocycle(L, a)
    power = cocycle_value(xi, n1)
    aI = identity(L, n1).scale(L.from_base(a))
    lift = lift_to_veronese(xi)
    lift_power = cocycle_value(lift, n1)
    return [
        _ok("companion-twisted-power-is-aI", power == aI),
        _ok("lift-twisted-power-is-identity",
            lift_power == identity(L, lift.size)),
    ]


def _suite_split(L, a, cfg) -> list[Check]:
    lift = lift_to_veronese(cyclic_cocycle(L, a))
    nb = find_normal_basis(L)
    xi = lift.at_generator
    checks = []

    def residual(M: Matrix) -> bool:
        return (mul(xi, galois_matrix(L, M, 1)) - M).is_zero()

    Ms = split_structured(lift, nb)
    checks.append(_ok("structured-residual-zero", residual(Ms)))
    for seed in range(5):
        Mg = split_generic(lift, rng_seed=seed)
        checks.append(_ok(f"generic-seed{seed}-residual-zero", residual(Mg)))
        diff = mul(inverse(Mg), Ms)
        fixed = all(e.in_base() for e in diff.entries)
        checks.append(_ok(f"generic-seed{seed}-differs-by-fixed-matrix", fixed))
    return checks


def _suite_paper_eqs(L, a, cfg) -> list[Check]:
    if L.degree != 3:
        return [Check("skipped", "pass", "requires a cubic extension")]
    checks = []
    for row in verify_theorem1_equations(L, a):
        checks.append(Check(row["name"], row["status"], row.get("note")))
    return checks


def _suite_picard(L, a, cfg) -> list[Check]:
    n = L.degree - 1
    nb = find_normal_basis(L)
    basis = monomial_basis(n, n + 1)
    checks = []
    g1 = picard_generator(L, a, nb, 1)
    hyper = make_poly(L, basis.m, {
        tuple(1 if t == i else 0 for t in range(basis.m)): L.one()
        for i in basis.pure_power_indices()})
    c = proportional(g1.equation, hyper)
    checks.append(_ok("dprime1-is-hyperplane-multiple",
                      c is not None and not c.is_zero()))
    model = surface_model(L, a, nb, rng_seed=cfg.seed)
    for dp in sorted({1, cfg.dprime}):
        g = picard_generator(L, a, nb, dp)
        pull = pullback_to_plane(model, g.equation)
        fer = fermat(L, dp, a)
        cc = proportional(pull, fer.poly)
        checks.append(_ok(f"dprime{dp}-pullback-is-fermat-multiple",
                          cc is not None and not cc.is_zero()))
        checks.append(_ok(f"dprime{dp}-genus-formula",
                          genus_plane((n + 1) * dp) == fer.genus))
    if n == 2:
        checks.append(_ok("genus-values-1-and-10",
                          genus_plane(3) == 1 and genus_plane(6) == 10))
    return checks


_COUNT_TOWERS = ((2, 1), (3, 2), (7, 3))


def _suite_counts(L, a, cfg) -> list[Check]:
    checks = []
    for p, ap in _COUNT_TOWERS:
        F = frobenius_extension(p, 3)
        model = surface_model(F, ap, rng_seed=cfg.seed)
        cnt = count_points(model, p)
        expected = p * p + p + 1
        checks.append(_ok(f"count-p{p}-is-{expected}", cnt == expected,
                          f"counted {cnt}"))
        if p <= EXHAUSTIVE_MAX_P:
            rep = smoothness_spot(model, p)
            checks.append(_ok(f"smooth-p{p}-rank-{model.m - 3}", rep.ok))
    return checks


def _suite_algebra(L, a, cfg) -> list[Check]:
    n1 = L.degree
    A = build_algebra(L, a)
    checks = [
        _ok(f"dimension-{n1 * n1}", A.dim == n1 * n1),
        _ok("associative-on-basis-triples", is_associative(A)),
        _ok("center-dimension-1", center_dimension(A) == 1),
    ]
    F5 = frobenius_extension(5, 3)
    A5 = build_algebra(F5, 2)
    checks.append(_ok("f5-center-dimension-1", center_dimension(A5) == 1))
    res5 = norm_witness(F5, F5.base.coerce(2))
    x5 = zero_divisor_from_witness(A5, res5.witness)
    checks.append(_ok("f5-witness-zero-divisor-singular",
                      left_multiplication_is_singular(A5, x5)))
    guard = diagonal_table(L.base, 3)
    checks.append(_ok("commutative-guard-center-3",
                      table_center_dimension(L.base, guard) == 3))
    return checks


def _suite_triviality(L, a, cfg) -> list[Check]:
    checks = []
    minus1 = L.base.coerce(-1)
    res1 = norm_witness(L, minus1, bound=cfg.witness_bound)
    if res1.status == "witness":
        coboundary_from_witness(L, minus1, res1.witness)
        checks.append(Check("norm-minus1-coboundary", "pass"))
    else:
        checks.append(Check("norm-minus1-coboundary", "fail",
                            "no witness found"))
    res = norm_witness(L, a, bound=cfg.witness_bound)
    if res.status == "witness":
        nb = find_normal_basis(L)
        model = surface_model(L, a, nb, rng_seed=cfg.seed)
        D = base_change_matrix(model, lam=res.witness)
        std = veronese_ideal(model.parametrization.basis, L)
        transported = [substitute_linear(Q, D) for Q in model.equations_over_k]
        checks.append(_ok("witness-transports-model-to-veronese",
                          span_equal(transported, std)))
    else:
        checks.append(Check(
            "nontrivial-class", "pass",
            f"no norm witness within bound {res.bound}; not a proof"))
    return checks


_APPENDIX_TOWERS = ((2, 1), (7, 3))


def _suite_appendix(L, a, cfg) -> list[Check]:
    checks = []
    for p, ap in _APPENDIX_TOWERS:
        F = frobenius_extension(p, 3)
        main = surface_model(F, ap, rng_seed=cfg.seed)
        app = appendix_model(F, ap, rng_seed=cfg.seed)
        pts_main = rational_points(main, p)
        pts_app = rational_points(app, p)
        checks.append(_ok(f"p{p}-counts-equal",
                          len(pts_main) == len(pts_app),
                          f"{len(pts_main)} vs {len(pts_app)}"))
        if p <= EXHAUSTIVE_MAX_P:
            checks.append(_ok(f"p{p}-point-sets-identical",
                              pts_main == pts_app))
    return checks


_SUITE_RUNNERS = {
    "cocycle": _suite_cocycle,
    "split": _suite_split,
    "paper-eqs": _suite_paper_eqs,
    "picard": _suite_picard,
    "counts": _suite_counts,
    "algebra": _suite_algebra,
    "triviality": _suite_triviality,
    "appendix": _suite_appendix,
}


def run_all(config: Optional[VerifyConfig] = None) -> Report:
    cfg = config or VerifyConfig()
    for name in cfg.suites:
        if name not in _SUITE_RUNNERS:
            raise InputError(f"unknown suite {name!r}")
    t0 = time.perf_counter()
    L = parse_field_spec(cfg.field_spec, degree=cfg.n + 1,
                     character_convention=cfg.character_convention)
    a = _parse_a(L, cfg.a)
    checks: list[Check] = []
    for name in cfg.suites:
        for c in _SUITE_RUNNERS[name](L, a, cfg):
            checks.append(Check(f"{name}:{c.name}", c.status, c.witness))
    elapsed = int((time.perf_counter() - t0) * 1000)
    return Report("+".join(cfg.suites), tuple(checks), elapsed)
