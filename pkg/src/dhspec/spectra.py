"""Eigenpair certificates, spectral-radius bounds, and theorem checkers.

Exact rational inputs give exact certificates: a certificate is marked
``exact`` only when its residual is identically zero under rational
arithmetic.  The iterative solvers (spectral radius and largest
Z-eigenvalue) work in floats and never produce more than an estimate; the
checks validate those estimates against row-sum and disk bounds instead
of trusting them.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Literal, Mapping, Optional, Sequence

import numpy as np

from .errors import (
    BadSupportSize,
    NegativeEntry,
    NoCommonVertex,
    NoConvergence,
    NotAPartition,
    NotHPlus,
    NotSymmetric,
    NotUniform,
    OddOrder,
    RankTooSmall,
    TooFewVertices,
    ZeroVector,
)
from .hypergraph import (
    DirectedEdge,
    DirectedHypergraph,
    degree_profile,
    is_out_regular,
    rank_corank,
    underlying_undirected,
)
from .hypermatrix import (
    Hypermatrix,
    Scalar,
    as_exact_vector,
    as_float_vector,
    gershgorin_disks,
    is_exact_vector,
    is_supersymmetric,
    is_weakly_irreducible,
    power_vector,
)
from . import builders

DEFAULT_SEED = 0x5EED


@dataclass(frozen=True)
class EigenCertificate:
    """A (value, vector) claim together with its measured residual.

    For kind "H" the residual is the max norm of A x^{m-1} - value * x^{[m-1]};
    for kind "Z" it adds the unit-norm violation of x.
    """

    kind: Literal["H", "Z"]
    value: Scalar
    vector: tuple[Scalar, ...]
    residual: Scalar
    exact: bool

    @property
    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.vector)

    @property
    def is_positive(self) -> bool:
        return all(c > 0 for c in self.vector)


@dataclass(frozen=True)
class BoundsReport:
    """Two-sided spectral-radius bound with provenance and witness rows."""

    lower: Scalar
    upper: Scalar
    method: str
    lower_witness: Optional[int] = None
    upper_witness: Optional[int] = None


@dataclass(frozen=True)
class StructuralVector:
    support: frozenset[int]
    coefficients: Mapping[int, Fraction]
    vector: tuple[Fraction, ...]


@dataclass
class SolverOptions:
    max_iterations: int = 100_000
    tolerance: float = 1e-10
    perturbation: float = 1e-8
    restarts: int = 20
    seed: int = DEFAULT_SEED
    shift: Optional[float] = None


def _scalar_record(value: Scalar) -> str:
    if isinstance(value, float):
        return repr(value)
    return str(Fraction(value))


def certificate_record(cert: EigenCertificate) -> str:
    """One-line serialization: kind, value, residual, exact flag, components."""
    fields = [
        cert.kind,
        _scalar_record(cert.value),
        _scalar_record(cert.residual),
        "exact" if cert.exact else "approx",
    ]
    fields.extend(_scalar_record(c) for c in cert.vector)
    return " ".join(fields)


def bounds_record(report: "BoundsReport") -> str:
    """One-line serialization: method, lower, upper."""
    return " ".join(
        [report.method, _scalar_record(report.lower), _scalar_record(report.upper)]
    )


# ---------------------------------------------------------------------------
# Eigenpair verification


def verify_h_eigenpair(a: Hypermatrix, value: Scalar, x: Sequence[Scalar]) -> EigenCertificate:
    if all(c == 0 for c in x):
        raise ZeroVector("eigenvector must be nonzero")
    exact_mode = is_exact_vector(x) and not isinstance(value, float)
    if exact_mode:
        xe = as_exact_vector(x)
        lam = Fraction(value)
        lhs = a.apply(xe)
        target = power_vector(xe, a.order - 1)
        residual = max(abs(lhs[i] - lam * target[i]) for i in range(a.dim))
        return EigenCertificate("H", lam, xe, residual, residual == 0)
    xf = as_float_vector(x)
    lam = float(value)
    lhs = a.apply(xf)
    residual = max(
        abs(lhs[i] - lam * xf[i] ** (a.order - 1)) for i in range(a.dim)
    )
    return EigenCertificate("H", lam, xf, residual, False)


def verify_z_eigenpair(a: Hypermatrix, value: Scalar, x: Sequence[Scalar]) -> EigenCertificate:
    if all(c == 0 for c in x):
        raise ZeroVector("eigenvector must be nonzero")
    exact_mode = is_exact_vector(x) and not isinstance(value, float)
    if exact_mode:
        xe = as_exact_vector(x)
        lam = Fraction(value)
        lhs = a.apply(xe)
        eq_residual = max(abs(lhs[i] - lam * xe[i]) for i in range(a.dim))
        norm_sq = sum(c * c for c in xe)
        if norm_sq == 1:
            return EigenCertificate("Z", lam, xe, eq_residual, eq_residual == 0)
        norm_violation = abs(math.sqrt(float(norm_sq)) - 1.0)
        return EigenCertificate(
            "Z", lam, xe, float(eq_residual) + norm_violation, False
        )
    xf = as_float_vector(x)
    lam = float(value)
    lhs = a.apply(xf)
    eq_residual = max(abs(lhs[i] - lam * xf[i]) for i in range(a.dim))
    norm_violation = abs(math.sqrt(sum(c * c for c in xf)) - 1.0)
    return EigenCertificate("Z", lam, xf, eq_residual + norm_violation, False)


# ---------------------------------------------------------------------------
# Structural zero eigenvectors


def support_zero_vector(
    hg: DirectedHypergraph, coefficients: Mapping[int, Scalar]
) -> tuple[StructuralVector, EigenCertificate]:
    """Vector supported on a small vertex set, certified as a zero H-eigenpair
    of the out-adjacency tensor.

    Every nonzero out entry drags in all but one vertex of its edge through
    the trailing slots, so a support smaller than corank - 1 cannot meet any
    of them and the contraction vanishes identically.  Support size is
    limited to rank - 2 for uniform input and corank - 2 otherwise.
    """
    info = rank_corank(hg)
    if info.rank < 3:
        raise RankTooSmall("zero eigenvectors need rank at least 3")
    k = len(coefficients)
    limit = (info.rank if info.uniform else info.corank) - 2
    if not (1 <= k <= limit):
        raise BadSupportSize(f"support size {k} outside [1, {limit}]")
    if any(Fraction(c) == 0 for c in coefficients.values()):
        raise BadSupportSize("coefficients must be nonzero")
    vec = _structural(hg.n, coefficients)
    cert = verify_h_eigenpair(builders.out_adjacency(hg), Fraction(0), vec.vector)
    return vec, cert


def edge_zero_vector(
    hg: DirectedHypergraph,
    edge_index: int,
    h: Sequence[int],
    coefficients: Mapping[int, Scalar],
) -> tuple[StructuralVector, EigenCertificate]:
    """Vector supported on an edge minus one head vertex, verified against
    the out-adjacency tensor with eigenvalue zero.

    The certificate, not a blanket claim, is the contract: another edge
    whose vertices all sit inside the support plus one of its own tail
    vertices can make a row contraction nonzero (see
    :func:`colliding_edges`), in which case the returned certificate simply
    reports the nonzero residual.
    """
    info = rank_corank(hg)
    if info.rank < 3:
        raise RankTooSmall("zero eigenvectors need rank at least 3")
    edge = hg.edges[edge_index]
    h_set = frozenset(h)
    if not (h_set < edge.head and len(h_set) == len(edge.head) - 1):
        raise BadSupportSize(
            "h must be a head subset omitting exactly one head vertex"
        )
    support = edge.tail | h_set
    coeffs = {v: Fraction(coefficients[v]) for v in support}
    if any(c == 0 for c in coeffs.values()):
        raise BadSupportSize("coefficients must be nonzero")
    vec = _structural(hg.n, coeffs)
    cert = verify_h_eigenpair(builders.out_adjacency(hg), Fraction(0), vec.vector)
    return vec, cert


def colliding_edges(
    hg: DirectedHypergraph, support: frozenset[int]
) -> list[tuple[int, int]]:
    """Pairs (edge index, row vertex) whose out entries can survive on a
    vector supported on ``support``: the edge's vertices minus that tail
    vertex all lie inside the support."""
    hits = []
    for pos, edge in enumerate(hg.edges):
        for i in sorted(edge.tail):
            if edge.vertices - {i} <= support:
                hits.append((pos, i))
    return hits


def _structural(n: int, coefficients: Mapping[int, Scalar]) -> StructuralVector:
    coeffs = {v: Fraction(c) for v, c in coefficients.items()}
    for v in coeffs:
        if not (1 <= v <= n):
            raise BadSupportSize(f"support vertex {v} outside [1, {n}]")
    vector = tuple(coeffs.get(i, Fraction(0)) for i in range(1, n + 1))
    return StructuralVector(
        support=frozenset(coeffs), coefficients=coeffs, vector=vector
    )


# ---------------------------------------------------------------------------
# Bounds


def row_sum_bounds(a: Hypermatrix) -> BoundsReport:
    """Min and max row sum bracket the spectral radius of a nonnegative tensor."""
    if any(v < 0 for v in a.entries.values()):
        raise NegativeEntry("row-sum bounds require a nonnegative tensor")
    sums = a.row_sums()
    lower = min(sums)
    upper = max(sums)
    return BoundsReport(
        lower=lower,
        upper=upper,
        method="row-sum",
        lower_witness=sums.index(lower) + 1,
        upper_witness=sums.index(upper) + 1,
    )


def degree_bounds(hg: DirectedHypergraph, direction: builders.Direction = "out") -> BoundsReport:
    profile = degree_profile(hg)
    degrees = profile.out_degrees if direction == "out" else profile.in_degrees
    lower = min(degrees)
    upper = max(degrees)
    return BoundsReport(
        lower=Fraction(lower),
        upper=Fraction(upper),
        method="degree",
        lower_witness=degrees.index(lower) + 1,
        upper_witness=degrees.index(upper) + 1,
    )


def refined_degree_bounds(hg: DirectedHypergraph) -> BoundsReport:
    """Sharper bracket mixing the extreme out-degrees with their neighbors
    in the sorted sequence, exponents 1/m and 1 - 1/m."""
    if hg.n < 2:
        raise TooFewVertices("the refined bound needs at least two vertices")
    m = rank_corank(hg).rank
    profile = degree_profile(hg)
    ordered = profile.sorted_out
    low, second_low = ordered[0], ordered[1]
    high, second_high = ordered[-1], ordered[-2]
    lower = low ** (1.0 / m) * second_low ** (1.0 - 1.0 / m)
    upper = high ** (1.0 / m) * second_high ** (1.0 - 1.0 / m)
    out = profile.out_degrees
    return BoundsReport(
        lower=lower,
        upper=upper,
        method="refined-degree",
        lower_witness=out.index(low) + 1,
        upper_witness=out.index(high) + 1,
    )


def gershgorin_bounds(a: Hypermatrix) -> BoundsReport:
    """Real-eigenvalue bracket from the disk union."""
    disks = gershgorin_disks(a)
    lows = [d.center - d.radius for d in disks]
    highs = [d.center + d.radius for d in disks]
    lower = min(lows)
    upper = max(highs)
    return BoundsReport(
        lower=lower,
        upper=upper,
        method="gershgorin",
        lower_witness=lows.index(lower) + 1,
        upper_witness=highs.index(upper) + 1,
    )


def gershgorin_modulus_bound(a: Hypermatrix) -> Fraction:
    """Upper bound on the modulus of any eigenvalue."""
    disks = gershgorin_disks(a)
    return max((abs(d.center) + d.radius for d in disks), default=Fraction(0))


# ---------------------------------------------------------------------------
# Spectral radius estimation


@dataclass(frozen=True)
class RadiusResult:
    value: float
    vector: tuple[float, ...]
    diagnostics: dict


def nqz_spectral_radius(a: Hypermatrix, opts: Optional[SolverOptions] = None) -> RadiusResult:
    """Power iteration bracket for the spectral radius of a nonnegative tensor.

    Iterates y = A x + shift * x^{[m-1]}, renormalizing through the
    (m-1)-th root; the per-iterate ratio bracket [min y_i/x_i^{m-1},
    max y_i/x_i^{m-1}] is monotone and must narrow below the tolerance.

    Weakly irreducible tensors run unperturbed with a diagonal shift of 1,
    which keeps iterates positive and breaks periodicity while moving every
    eigenvalue by exactly the shift (subtracted back out).  Other tensors
    get an implicit all-ones perturbation of size ``opts.perturbation`` and
    no shift, since the perturbed tensor is already positive; lazy shifted
    steps would slow the bracket badly when the perturbed spectrum is tiny.
    The perturbed path reruns at a tenth of the perturbation and reports a
    Richardson extrapolation in diagnostics.  The returned value is the
    weighted ratio mean of the final iterate on the unperturbed tensor,
    which always lies inside the final bracket.
    """
    if any(v < 0 for v in a.entries.values()):
        raise NegativeEntry("power iteration requires a nonnegative tensor")
    opts = opts or SolverOptions()
    weakly = is_weakly_irreducible(a)
    eps = 0.0 if weakly else float(opts.perturbation)
    if opts.shift is not None:
        shift = float(opts.shift)
    else:
        shift = 1.0 if weakly else 0.0

    value, vector, diagnostics = _nqz_run(a, shift, eps, opts)
    diagnostics["weakly_irreducible"] = weakly
    diagnostics["perturbation"] = eps
    diagnostics["shift"] = shift
    if eps > 0:
        value_refined, _, diag_refined = _nqz_run(a, shift, eps / 10.0, opts)
        extrapolated = value_refined + (value_refined - value) / 9.0
        diagnostics["richardson"] = {
            "value_at_eps": value,
            "value_at_eps_tenth": value_refined,
            "extrapolated": extrapolated,
            "iterations_refined": diag_refined["iterations"],
        }
    return RadiusResult(value=value, vector=vector, diagnostics=diagnostics)


def _nqz_run(a: Hypermatrix, shift: float, eps: float, opts: SolverOptions):
    n, m = a.dim, a.order
    rows, cols, vals = a.float_arrays()
    x = np.ones(n)
    exponent = 1.0 / (m - 1)
    bracket = (math.inf, -math.inf)
    for iteration in range(1, opts.max_iterations + 1):
        if len(vals):
            y = np.bincount(rows, weights=vals * x[cols].prod(axis=1), minlength=n)
        else:
            y = np.zeros(n)
        xm = x ** (m - 1)
        y = y + shift * xm
        if eps:
            y = y + eps * x.sum() ** (m - 1)
        ratios = y / xm
        bracket = (float(ratios.min()), float(ratios.max()))
        if bracket[1] - bracket[0] <= opts.tolerance:
            x = y**exponent
            x = x / x.max()
            break
        x = y**exponent
        x = x / x.max()
    else:
        raise NoConvergence(
            f"bracket {bracket} still wider than {opts.tolerance} after "
            f"{opts.max_iterations} iterations"
        )
    x = x / np.linalg.norm(x)
    if len(vals):
        y0 = np.bincount(rows, weights=vals * x[cols].prod(axis=1), minlength=n)
    else:
        y0 = np.zeros(n)
    value = float((x * y0).sum() / (x**m).sum())
    diagnostics = {
        "iterations": iteration,
        "bracket": (bracket[0] - shift, bracket[1] - shift),
        "converged": True,
    }
    return value, tuple(float(c) for c in x), diagnostics


# ---------------------------------------------------------------------------
# Largest Z-eigenvalue (shifted symmetric power iteration)


@dataclass(frozen=True)
class ZMaxResult:
    certificate: EigenCertificate
    diagnostics: dict


def sshopm_max_z(
    a: Hypermatrix,
    opts: Optional[SolverOptions] = None,
    extra_starts: Sequence[Sequence[float]] = (),
) -> ZMaxResult:
    """Best Z-eigenpair found by shifted power ascent on the unit sphere.

    Requires a supersymmetric tensor of even order.  The positive shift
    (defaulting to 1 plus the absolute entry mass) makes the objective
    x . (A x) nondecreasing along iterates; the smallest observed step is
    reported in diagnostics.  The value found is a lower bound on the
    maximum Z-eigenvalue, never a proof of it.
    """
    if a.order % 2:
        raise OddOrder("Z-maximization is stated for even orders")
    if not is_supersymmetric(a):
        raise NotSymmetric("Z-maximization needs a supersymmetric tensor")
    opts = opts or SolverOptions()
    certificates, diagnostics = _shifted_z_ascent(a, opts, extra_starts)
    if not certificates:
        raise NoConvergence(
            "no restart reached the residual tolerance "
            f"{opts.tolerance} within {opts.max_iterations} iterations"
        )
    best = max(certificates, key=lambda c: c.value)
    return ZMaxResult(certificate=best, diagnostics=diagnostics)


def z_eigenpair_probe(
    a: Hypermatrix,
    opts: Optional[SolverOptions] = None,
    extra_starts: Sequence[Sequence[float]] = (),
) -> list[EigenCertificate]:
    """Fixed-point search for Z-eigenpairs of an arbitrary tensor.

    Runs the same shifted iteration without any symmetry requirement and
    keeps only restarts whose final residual verifies below tolerance.
    Useful for probing non-symmetric adjacency tensors; may return an
    empty list.
    """
    opts = opts or SolverOptions()
    certificates, _ = _shifted_z_ascent(a, opts, extra_starts)
    return certificates


def _shifted_z_ascent(
    a: Hypermatrix, opts: SolverOptions, extra_starts: Sequence[Sequence[float]]
):
    n = a.dim
    rows, cols, vals = a.float_arrays()
    shift = (
        float(opts.shift)
        if opts.shift is not None
        else 1.0 + float(sum(abs(v) for v in a.entries.values()))
    )
    rng = random.Random(opts.seed)
    starts: list[np.ndarray] = [np.ones(n)]
    for start in extra_starts:
        starts.append(np.asarray(as_float_vector(start), dtype=float))
    while len(starts) < max(opts.restarts, 1) + len(extra_starts):
        starts.append(np.array([rng.gauss(0.0, 1.0) for _ in range(n)]))

    def contract(x: np.ndarray) -> np.ndarray:
        if not len(vals):
            return np.zeros(n)
        return np.bincount(rows, weights=vals * x[cols].prod(axis=1), minlength=n)

    certificates = []
    min_step = math.inf
    total_iterations = 0
    for start in starts:
        norm = np.linalg.norm(start)
        if norm == 0:
            continue
        x = start / norm
        y = contract(x)
        objective = float(x @ y)
        converged = False
        for _ in range(opts.max_iterations):
            total_iterations += 1
            residual = float(np.abs(y - objective * x).max())
            if residual <= opts.tolerance:
                converged = True
                break
            w = y + shift * x
            norm = np.linalg.norm(w)
            if norm == 0:
                break
            x = w / norm
            y = contract(x)
            new_objective = float(x @ y)
            min_step = min(min_step, new_objective - objective)
            objective = new_objective
        if converged:
            certificates.append(verify_z_eigenpair(a, objective, tuple(x)))
    diagnostics = {
        "shift": shift,
        "restarts": len(starts),
        "iterations": total_iterations,
        "min_objective_step": None if min_step is math.inf else min_step,
    }
    return certificates, diagnostics


# ---------------------------------------------------------------------------
# Copositivity probing


@dataclass(frozen=True)
class CopositivityProbe:
    """Grid minimum of the form over the standard simplex at a resolution.

    A nonnegative minimum is evidence, never proof, of copositivity.  When
    every entry is nonnegative the search short-circuits and ``min_value``
    is the trivial lower bound zero."""

    min_value: Fraction
    argmin: Optional[tuple[Fraction, ...]]
    certificate: str


def copositivity_probe(a: Hypermatrix, resolution: int = 8) -> CopositivityProbe:
    if resolution < 1:
        raise ValueError("resolution must be at least 1")
    if all(v >= 0 for v in a.entries.values()):
        return CopositivityProbe(
            min_value=Fraction(0), argmin=None, certificate="entrywise-nonnegative"
        )
    scale = Fraction(1, resolution**a.order)
    best: Optional[Fraction] = None
    best_point: Optional[tuple[int, ...]] = None
    for point in _simplex_points(resolution, a.dim):
        value = a.form(point) * scale
        if best is None or value < best:
            best = value
            best_point = point
    assert best is not None and best_point is not None
    argmin = tuple(Fraction(c, resolution) for c in best_point)
    return CopositivityProbe(min_value=best, argmin=argmin, certificate="grid-search")


def _simplex_points(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nonnegative integer vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _simplex_points(total - first, parts - 1):
            yield (first,) + rest


def h_plus_nonnegativity(
    a: Hypermatrix,
    certificate: EigenCertificate,
    tol: float = 1e-10,
    match_tol: float = 1e-12,
) -> bool:
    """Check a nonnegative-vector H-eigenpair has a nonnegative eigenvalue.

    Also recomputes the eigenvalue as form / sum of m-th powers, which any
    true eigenpair must satisfy, and cross-checks to ``match_tol``.
    """
    if any(c < 0 for c in certificate.vector):
        raise NotHPlus("certificate vector has a negative component")
    if certificate.value < -tol:
        return False
    x = certificate.vector
    denom = sum(c ** a.order for c in x)
    rayleigh = a.form(x) / denom
    return abs(rayleigh - certificate.value) <= match_tol


# ---------------------------------------------------------------------------
# Laplacian and signless Laplacian theorem suites


@dataclass(frozen=True)
class BasisPairResult:
    vertex: int
    value: Fraction
    exact: bool
    residual: Scalar


@dataclass(frozen=True)
class LaplacianCheckReport:
    direction: str
    ones_certificate: EigenCertificate
    disk_modulus_bound: Fraction
    disk_bound_limit: Fraction
    disk_bound_ok: bool
    value_interval: tuple[Fraction, Fraction]
    basis_pairs: Optional[tuple[BasisPairResult, ...]]
    basis_skipped_reason: Optional[str]
    basis_failures: tuple[int, ...]
    interval_consistent: bool

    @property
    def universal_passed(self) -> bool:
        return (
            self.ones_certificate.exact
            and self.disk_bound_ok
            and self.interval_consistent
        )

    @property
    def passed(self) -> bool:
        return self.universal_passed and not self.basis_failures


def laplacian_theorem_checks(
    hg: DirectedHypergraph, direction: builders.Direction = "out"
) -> LaplacianCheckReport:
    """Per-instance verification of the Laplacian eigenstructure claims.

    Produces the all-ones zero eigenpair, the disk-based modulus bound
    against twice the top degree, and (for rank at least 3) the basis
    eigenpair at every vertex.  Basis pairs that fail to verify are
    reported, not asserted away; size-2 edges in non-uniform input are the
    known cause.
    """
    lap = builders.laplacian(hg, direction)
    profile = degree_profile(hg)
    degrees = (
        profile.out_degrees if direction == "out" else profile.in_degrees
    )
    top = max(degrees)
    ones = [1] * hg.n
    ones_cert = verify_h_eigenpair(lap, Fraction(0), ones)
    modulus = gershgorin_modulus_bound(lap)
    limit = Fraction(2 * top)
    basis_pairs = None
    skipped = None
    failures: list[int] = []
    produced_values = [Fraction(0)]
    rank = rank_corank(hg).rank if hg.edges else 0
    if rank >= 3:
        results = []
        for i in range(1, hg.n + 1):
            basis = [0] * hg.n
            basis[i - 1] = 1
            cert = verify_h_eigenpair(lap, Fraction(degrees[i - 1]), basis)
            results.append(
                BasisPairResult(
                    vertex=i,
                    value=Fraction(degrees[i - 1]),
                    exact=cert.exact,
                    residual=cert.residual,
                )
            )
            if cert.exact:
                produced_values.append(Fraction(degrees[i - 1]))
            else:
                failures.append(i)
        basis_pairs = tuple(results)
    else:
        skipped = "rank below 3"
    interval_ok = all(0 <= v <= limit for v in produced_values)
    return LaplacianCheckReport(
        direction=direction,
        ones_certificate=ones_cert,
        disk_modulus_bound=modulus,
        disk_bound_limit=limit,
        disk_bound_ok=modulus <= limit,
        value_interval=(Fraction(0), limit),
        basis_pairs=basis_pairs,
        basis_skipped_reason=skipped,
        basis_failures=tuple(failures),
        interval_consistent=interval_ok,
    )


@dataclass(frozen=True)
class SignlessCheckReport:
    direction: str
    bounds: BoundsReport
    bounds_match_degrees: bool
    basis_pairs: Optional[tuple[BasisPairResult, ...]]
    basis_skipped_reason: Optional[str]
    basis_failures: tuple[int, ...]
    common_vertex_certificate: Optional[EigenCertificate]
    common_vertex_skipped_reason: Optional[str]
    out_regular_certificate: Optional[EigenCertificate]
    out_regular_skipped_reason: Optional[str]

    @property
    def passed(self) -> bool:
        if not self.bounds_match_degrees or self.basis_failures:
            return False
        for cert in (self.common_vertex_certificate, self.out_regular_certificate):
            if cert is not None and not cert.exact:
                return False
        return True


def common_vertex_zero_pair(
    hg: DirectedHypergraph, direction: builders.Direction = "out"
) -> EigenCertificate:
    """Exact zero eigenpair of the signless Laplacian from a shared vertex.

    Needs a uniform even-order hypergraph whose edges all intersect; the
    eigenvector is +1 on the lowest common vertex and -1 elsewhere.
    """
    if not hg.edges:
        raise NoCommonVertex("there are no edges to intersect")
    info = rank_corank(hg)
    if not info.uniform:
        raise NotUniform("the shared-vertex construction needs uniform edges")
    if info.rank % 2:
        raise OddOrder("the shared-vertex construction needs an even rank")
    common = frozenset.intersection(*(edge.vertices for edge in hg.edges))
    if not common:
        raise NoCommonVertex("the edges have an empty common intersection")
    pivot = min(common)
    x = [-1] * hg.n
    x[pivot - 1] = 1
    slap = builders.signless_laplacian(hg, direction)
    return verify_h_eigenpair(slap, Fraction(0), x)


def signless_theorem_checks(
    hg: DirectedHypergraph, direction: builders.Direction = "out"
) -> SignlessCheckReport:
    """Per-instance verification of the signless Laplacian claims."""
    slap = builders.signless_laplacian(hg, direction)
    profile = degree_profile(hg)
    degrees = (
        profile.out_degrees if direction == "out" else profile.in_degrees
    )
    bounds = row_sum_bounds(slap)
    bounds_ok = bounds.lower == 2 * min(degrees) and bounds.upper == 2 * max(degrees)

    basis_pairs = None
    basis_skipped = None
    failures: list[int] = []
    rank = rank_corank(hg).rank if hg.edges else 0
    if rank >= 3:
        results = []
        for i in range(1, hg.n + 1):
            basis = [0] * hg.n
            basis[i - 1] = 1
            cert = verify_h_eigenpair(slap, Fraction(degrees[i - 1]), basis)
            results.append(
                BasisPairResult(
                    vertex=i,
                    value=Fraction(degrees[i - 1]),
                    exact=cert.exact,
                    residual=cert.residual,
                )
            )
            if not cert.exact:
                failures.append(i)
        basis_pairs = tuple(results)
    else:
        basis_skipped = "rank below 3"

    common_cert = None
    common_skipped = None
    try:
        common_cert = common_vertex_zero_pair(hg, direction)
    except (NoCommonVertex, NotUniform, OddOrder) as exc:
        common_skipped = str(exc)

    regular_cert = None
    regular_skipped = None
    k = is_out_regular(hg) if direction == "out" else _in_regular(hg)
    if k is not None:
        regular_cert = verify_h_eigenpair(slap, Fraction(2 * k), [1] * hg.n)
    else:
        regular_skipped = "degrees are not constant"

    return SignlessCheckReport(
        direction=direction,
        bounds=bounds,
        bounds_match_degrees=bounds_ok,
        basis_pairs=basis_pairs,
        basis_skipped_reason=basis_skipped,
        basis_failures=tuple(failures),
        common_vertex_certificate=common_cert,
        common_vertex_skipped_reason=common_skipped,
        out_regular_certificate=regular_cert,
        out_regular_skipped_reason=regular_skipped,
    )


def _in_regular(hg: DirectedHypergraph) -> Optional[int]:
    profile = degree_profile(hg)
    if profile.min_in == profile.max_in:
        return profile.min_in
    return None


# ---------------------------------------------------------------------------
# Isospectrality and Z-max subadditivity


def isospectral_identity_check(
    hg: DirectedHypergraph,
    probes: int = 100,
    rng: Optional[random.Random] = None,
    include_laplacians: bool = True,
) -> bool:
    """Probe the exact contraction identity between the total tensors of a
    uniform directed hypergraph and the tensors of its undirected shadow.

    Checks A x agreement on random rational vectors, repeats the comparison
    against a freshly reoriented copy of the hypergraph, and optionally
    covers the Laplacian and signless variants through the shared degree
    diagonal.
    """
    if not hg.edges:
        return True
    info = rank_corank(hg)
    if not info.uniform:
        raise NotUniform("the identity is stated for uniform hypergraphs")
    rng = rng or random.Random(DEFAULT_SEED)
    m = info.rank
    hd = underlying_undirected(hg)
    total = builders.total_adjacency(hg)
    shadow = builders.undirected_adjacency(hd, m)
    reoriented = _reorient(hg, rng)
    total_reoriented = builders.total_adjacency(reoriented)

    pairs = [(total, shadow), (total_reoriented, shadow)]
    if include_laplacians:
        profile = degree_profile(hg)
        diag_entries = {}
        for i in range(1, hg.n + 1):
            degree = profile.out_degrees[i - 1] + profile.in_degrees[i - 1]
            if degree:
                diag_entries[(i,) * m] = Fraction(degree)
        shadow_degree = Hypermatrix(m, hg.n, diag_entries)
        pairs.append((builders.total_laplacian(hg), shadow_degree - shadow))
        pairs.append((builders.total_signless(hg), shadow_degree + shadow))

    for _ in range(max(probes, 1)):
        x = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(hg.n)]
        for left, right in pairs:
            if left.apply(x) != right.apply(x):
                return False
    return True


def _reorient(hg: DirectedHypergraph, rng: random.Random) -> DirectedHypergraph:
    """Randomly re-partition each edge's vertex set into a new tail and head."""
    new_edges = []
    for edge in hg.edges:
        vertices = sorted(edge.vertices)
        while True:
            tail = {v for v in vertices if rng.random() < 0.5}
            if 0 < len(tail) < len(vertices):
                break
        new_edges.append((tail, set(vertices) - tail))
    return DirectedHypergraph(
        hg.n,
        tuple(DirectedEdge(frozenset(t), frozenset(h)) for t, h in new_edges),
    )


@dataclass(frozen=True)
class SubadditivityReport:
    whole_value: float
    part_values: tuple[float, ...]
    decomposition_exact: bool
    form_identity_exact: bool
    parts_dominate: bool
    sum_dominates: bool

    @property
    def passed(self) -> bool:
        return (
            self.decomposition_exact
            and self.form_identity_exact
            and self.parts_dominate
            and self.sum_dominates
        )


def zmax_subadditivity_check(
    hg: DirectedHypergraph,
    partition: Sequence[Sequence[int]],
    opts: Optional[SolverOptions] = None,
    eps: float = 1e-6,
) -> SubadditivityReport:
    """Split the edge set and compare the total-adjacency Z-maximum against
    the per-part maxima.

    The entrywise decomposition and the form identity at the best vector
    are exact rational checks; the Z-maxima come from the shifted ascent,
    warm-started at the whole-graph maximizer so the per-part values
    dominate its form by construction of the ascent.
    """
    info = rank_corank(hg)
    if not info.uniform:
        raise NotUniform("the subadditivity check is stated for uniform input")
    if info.rank % 2:
        raise OddOrder("the subadditivity check needs an even rank")
    indices = sorted(i for block in partition for i in block)
    if indices != list(range(len(hg.edges))) or any(not block for block in partition):
        raise NotAPartition("blocks must be nonempty and cover each edge once")
    opts = opts or SolverOptions()

    whole = builders.total_adjacency(hg)
    parts = [
        DirectedHypergraph(hg.n, tuple(hg.edges[i] for i in block))
        for block in partition
    ]
    part_tensors = [builders.total_adjacency(p) for p in parts]
    partial_sum = part_tensors[0]
    for tensor in part_tensors[1:]:
        partial_sum = partial_sum + tensor
    decomposition_exact = partial_sum == whole

    from .hypermatrix import symmetrize

    whole_result = sshopm_max_z(symmetrize(whole), opts)
    x_star = whole_result.certificate.vector
    x_exact = as_exact_vector(x_star)

    whole_form = whole.form(x_exact)
    part_forms = [tensor.form(x_exact) for tensor in part_tensors]
    form_identity_exact = whole_form == sum(part_forms)

    part_values = []
    parts_dominate = True
    for tensor, exact_form in zip(part_tensors, part_forms):
        result = sshopm_max_z(symmetrize(tensor), opts, extra_starts=[x_star])
        part_values.append(result.certificate.value)
        if float(exact_form) > result.certificate.value + eps:
            parts_dominate = False
    sum_dominates = whole_result.certificate.value <= sum(part_values) + eps

    return SubadditivityReport(
        whole_value=whole_result.certificate.value,
        part_values=tuple(part_values),
        decomposition_exact=decomposition_exact,
        form_identity_exact=form_identity_exact,
        parts_dominate=parts_dominate,
        sum_dominates=sum_dominates,
    )
