"""Ideal-level analysis: Groebner bases, dimension and degree, point
finding over extensions, singular loci, and random-slice degree checks.

Dimension and degree always come from the Hilbert series of the
leading-term ideal. Point counts come from two independent routes: the
brute-force enumeration oracle when the fields fit the budget, and a
chart-by-chart elimination solver for zero-dimensional systems on fields
too large to enumerate. The two routes are cross-checked against each
other in the test suite on small fields.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field as dataclass_field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (BudgetExceeded, Inconclusive, InvalidParameters,
                     NotZeroDimensional)
from .field import Field, embedding, relative_extension
from .groebner import DEFAULT_COEFF_BIT_LIMIT, groebner_basis
from .hilbert import staircase_data
from .linalg import mat_rank
from .poly import (GREVLEX, MonomialOrder, Polynomial, random_homogeneous,
                   random_linear_form)
from .projgeo import DEFAULT_BUDGET, ProjectivePoint, projective_count
from .scan import singular_scan, variety_scan
from .solve import SolveResult, solve_projective

DEFAULT_KMAX = 2
LINE_COUNT_KMAX = 6  # raised default for the 0-dimensional line-count suites


@dataclass(eq=False)
class Ideal:
    """Generators in a fixed polynomial ring with a preferred order."""

    generators: Tuple[Polynomial, ...]
    order: MonomialOrder = GREVLEX
    _cache: dict = dataclass_field(default_factory=dict, repr=False)

    def __init__(self, generators: Sequence[Polynomial],
                 order: MonomialOrder = GREVLEX):
        gens = tuple(generators)
        assert gens, "an ideal needs at least one generator"
        f0 = gens[0]
        assert all(g.field == f0.field and g.nvars == f0.nvars for g in gens)
        self.generators = gens
        self.order = order
        self._cache = {}

    @property
    def field(self) -> Field:
        return self.generators[0].field

    @property
    def nvars(self) -> int:
        return self.generators[0].nvars

    @property
    def ambient_proj_dim(self) -> int:
        return self.nvars - 1

    def nonzero_generators(self) -> List[Polynomial]:
        return [g for g in self.generators if not g.is_zero()]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def map_to(self, target: Field, convert) -> "Ideal":
        return Ideal([g.map_coefficients(target, convert) for g in self.generators],
                     self.order)


def groebner_of(ideal: Ideal, order: Optional[MonomialOrder] = None,
                bit_limit: int = DEFAULT_COEFF_BIT_LIMIT) -> List[Polynomial]:
    """Cached reduced Groebner basis of the ideal in the given order."""
    order = order or ideal.order
    key = ("gb", order.name, getattr(order, "split", None))
    hit = ideal._cache.get(key)
    if hit is None:
        hit = groebner_basis(ideal.nonzero_generators(), order, bit_limit)
        ideal._cache[key] = hit
    return hit


def buchberger(ideal: Ideal) -> Ideal:
    """The reduced Groebner basis, packaged as an ideal."""
    gb = groebner_of(ideal)
    if not gb:
        return ideal  # zero ideal: nothing to do
    out = Ideal(gb, ideal.order)
    out._cache[("gb", ideal.order.name, getattr(ideal.order, "split", None))] = gb
    return out


def hilbert_data(ideal: Ideal) -> Tuple[int, int]:
    """(projective dimension, degree); (-1, 0) for empty, full space for 0.

    Degenerate inputs are reported, never raised: the zero ideal gives the
    whole ambient space with degree 1, and 1 in the ideal gives (-1, 0).
    """
    assert ideal.is_homogeneous(), "projective analysis needs homogeneous generators"
    key = ("hilbert",)
    hit = ideal._cache.get(key)
    if hit is not None:
        return hit
    gb = groebner_of(ideal)
    if not gb:
        result = (ideal.ambient_proj_dim, 1)
    else:
        lms = [g.leading_monomial(ideal.order) for g in gb]
        result = staircase_data(lms, ideal.nvars)
    ideal._cache[key] = result
    return result


def is_complete_intersection(ideal: Ideal) -> bool:
    dim, _ = hilbert_data(ideal)
    codim = ideal.ambient_proj_dim - dim
    return codim == len(ideal.nonzero_generators())


# ---------------------------------------------------------------------------
# points


def _exact_degree_filter(points: List[ProjectivePoint], ground: Field,
                         k: int) -> List[ProjectivePoint]:
    """Keep points whose coordinates generate the full degree-k extension."""
    if k == 1:
        return points
    p = ground.characteristic()
    g = getattr(ground, "degree", 1)
    kept = []
    for pt in points:
        exact = True
        for j in range(1, k):
            if k % j:
                continue
            e = p ** (g * j)
            if all((c ** e) == c for c in pt.coords):
                exact = False
                break
        if exact:
            kept.append(pt)
    return kept


def rational_points(ideal: Ideal, k_max: int = DEFAULT_KMAX,
                    budget: int = DEFAULT_BUDGET, method: str = "auto",
                    seed: int = 0) -> List[ProjectivePoint]:
    """Common zeros in P^N(F_{q^k}) for every k <= k_max, deduplicated.

    Each point appears once, over the extension matching its exact residue
    degree. method="enumerate" forces the brute-force oracle (budget
    permitting); "solve" forces the elimination solver (needs a
    zero-dimensional scheme); "auto" enumerates when every extension fits
    the budget and solves otherwise.
    """
    assert method in ("auto", "enumerate", "solve")
    field = ideal.field
    assert field.is_finite, "point scanning needs a finite field"
    gens = ideal.nonzero_generators()
    if not gens:
        raise BudgetExceeded("the zero ideal has the whole space as zeros")
    n_proj = ideal.ambient_proj_dim
    q = field.order()
    enum_total = projective_count(n_proj, q ** k_max)
    if method == "auto":
        method = "enumerate" if enum_total <= budget else "solve"
    if method == "enumerate":
        if enum_total > budget:
            raise BudgetExceeded(
                f"P^{n_proj}(F_{q}^{k_max}) has {enum_total} points, budget {budget}")
        out: List[ProjectivePoint] = []
        for k in range(1, k_max + 1):
            ext, embed = relative_extension(field, k)
            mapped = [g.map_coefficients(ext, embed) for g in gens]
            found = variety_scan(mapped, ext, budget)
            out.extend(_exact_degree_filter(found, field, k))
        return out
    dim, degree = hilbert_data(ideal)
    if dim > 0:
        raise BudgetExceeded(
            f"positive-dimensional scheme (dim {dim}) cannot be enumerated "
            f"within budget {budget} and has infinitely many closure points")
    if dim < 0:
        return []
    # residue degrees never exceed the scheme degree, and the degree bounds
    # the geometric point count, so deeper extensions cannot add points
    return solve_projective(groebner_of(ideal), min(k_max, degree), seed,
                            stop_at=degree).points


def solve_report(ideal: Ideal, k_max: int, seed: int = 0) -> SolveResult:
    """Solver route with per-degree counts, for report assembly.

    Feeds the solver the reduced Groebner basis rather than the raw
    generators; for systems with many dense generators the chart-by-chart
    eliminations get dramatically cheaper that way.
    """
    _, degree = hilbert_data(ideal)
    return solve_projective(groebner_of(ideal),
                            min(k_max, max(1, degree)), seed, stop_at=degree)


def jacobian_matrix(gens: Sequence[Polynomial]) -> List[List[Polynomial]]:
    return [[g.partial_derivative(i) for i in range(g.nvars)] for g in gens]


def jacobian_rank_at(gens: Sequence[Polynomial], point: ProjectivePoint) -> int:
    """Rank of the Jacobian of gens at a point, over the point's field."""
    target = point.field
    ground = gens[0].field
    if target == ground:
        mapped = list(gens)
    else:
        embed = embedding(ground, target)
        mapped = [g.map_coefficients(target, embed) for g in gens]
    coords = list(point.coords)
    rows = [[g.partial_derivative(i).evaluate(coords) for i in range(g.nvars)]
            for g in mapped]
    return mat_rank(rows)


def certify_reduced_point(ideal: Ideal, point: ProjectivePoint,
                          codim: Optional[int] = None) -> bool:
    """Jacobian criterion at one point: rank >= codimension there.

    For a zero-dimensional scheme this certifies the point is a reduced
    isolated solution; radical computations are never attempted.
    """
    if codim is None:
        dim, _ = hilbert_data(ideal)
        codim = ideal.ambient_proj_dim - dim
    return jacobian_rank_at(ideal.nonzero_generators(), point) >= codim


def singular_points(ideal: Ideal, k_max: int = 1,
                    budget: int = DEFAULT_BUDGET) -> List[ProjectivePoint]:
    """Enumerated points of V(I) where the Jacobian rank drops below the
    codimension, over F_{q^k} for k <= k_max (deduplicated by exact degree).
    """
    gens = ideal.nonzero_generators()
    assert gens
    dim, _ = hilbert_data(ideal)
    if dim < 0:
        return []
    codim = ideal.ambient_proj_dim - dim
    field = ideal.field
    out: List[ProjectivePoint] = []
    for k in range(1, k_max + 1):
        ext, embed = relative_extension(field, k)
        mapped = [g.map_coefficients(ext, embed) for g in gens]
        found = singular_scan(mapped, codim, ext, budget)
        out.extend(_exact_degree_filter(found, field, k))
    return out


def slice_degree(ideal: Ideal, trials: int, rng: random.Random,
                 k_max: int = LINE_COUNT_KMAX,
                 budget: int = DEFAULT_BUDGET) -> int:
    """Degree via random linear slices: cut by dim-many hyperplanes and
    count solutions, returning the modal count over the trials.

    Raises Inconclusive when no count reaches a strict majority (field too
    small, or slices keep hitting non-generic positions).
    """
    dim, _ = hilbert_data(ideal)
    assert dim >= 1, "slice_degree needs a positive-dimensional scheme"
    field = ideal.field
    counts: List[int] = []
    for trial in range(trials):
        forms = [random_linear_form(field, ideal.nvars, rng) for _ in range(dim)]
        sliced = Ideal(list(ideal.generators) + forms, ideal.order)
        sliced_dim, _ = hilbert_data(sliced)
        if sliced_dim != 0:
            continue  # non-generic slice; try again
        try:
            pts = rational_points(sliced, k_max=k_max, budget=budget,
                                  seed=rng.randrange(2**32))
        except NotZeroDimensional:
            continue
        counts.append(len(pts))
    if not counts:
        raise Inconclusive("every slice was degenerate")
    best = max(set(counts), key=lambda v: (counts.count(v), -v))
    if counts.count(best) < max(2, trials // 2 + 1):
        raise Inconclusive(f"no stable modal count in {counts}")
    return best


def sample_smooth_points(ideal: Ideal, count: int, rng: random.Random,
                         k_max: int = 4, trials: int = 4,
                         budget: int = DEFAULT_BUDGET) -> List[ProjectivePoint]:
    """Sample geometric points of a positive-dimensional scheme by slicing
    with random hyperplanes and solving the resulting finite system.

    Returns up to `count` points lying on V(I), drawn from however many
    slice trials it takes (degenerate slices are skipped). The list can be
    shorter than `count` when every residue degree exceeds k_max.
    """
    dim, _ = hilbert_data(ideal)
    assert dim >= 1, "smoothness sampling needs a positive-dimensional scheme"
    field = ideal.field
    points: List[ProjectivePoint] = []
    for _ in range(trials):
        if len(points) >= count:
            break
        forms = [random_linear_form(field, ideal.nvars, rng) for _ in range(dim)]
        sliced = Ideal(list(ideal.generators) + forms, ideal.order)
        sliced_dim, _ = hilbert_data(sliced)
        if sliced_dim != 0:
            continue
        try:
            pts = rational_points(sliced, k_max=k_max, budget=budget,
                                  seed=rng.randrange(2**32))
        except (NotZeroDimensional, BudgetExceeded):
            continue
        points.extend(pts)
    return points[:count]


def complete_intersection_report(degrees: Sequence[int], n_proj: int,
                                 field: Field, seed: int,
                                 samples: int = 6, k_max: int = 4,
                                 budget: int = DEFAULT_BUDGET) -> "VarietyReport":
    """Random forms of the given degrees in P^n_proj, checked against the
    Bezout predictions: codimension len(degrees), degree prod(degrees),
    with sampled Jacobian certificates for smoothness.
    """
    if not degrees or any(d < 1 for d in degrees) or len(degrees) > n_proj:
        raise InvalidParameters("need 1 <= len(degrees) <= n_proj, degrees >= 1")
    rng = random.Random(seed)
    gens: List[Polynomial] = []
    for d in degrees:
        g = random_homogeneous(field, n_proj + 1, d, rng)
        while g.is_zero():
            g = random_homogeneous(field, n_proj + 1, d, rng)
        gens.append(g)
    ideal = Ideal(gens)
    dim, degree = hilbert_data(ideal)
    codim = len(degrees)
    expected_degree = 1
    for d in degrees:
        expected_degree *= d
    predicted = {
        "dimension": str(n_proj - codim),
        "degree": str(expected_degree),
        "codimension": str(codim),
        "smooth_rank": str(codim),
    }
    computed = {
        "dimension": "empty" if dim < 0 else str(dim),
        "degree": str(degree),
        "codimension": str(ideal.ambient_proj_dim - dim),
    }
    certificates: List[Dict[str, str]] = []
    if dim == 0:
        pts = rational_points(ideal, k_max=k_max, budget=budget,
                              seed=rng.randrange(2**32))
    elif dim > 0:
        pts = sample_smooth_points(ideal, samples, rng, k_max=k_max,
                                   budget=budget)
    else:
        pts = []
    ranks = []
    for pt in pts:
        rank = jacobian_rank_at(gens, pt)
        ranks.append(rank)
        certificates.append({
            "point": " : ".join(pt.serialize()),
            "residue_degree": str(pt.field.degree // field.degree),
            "jacobian_rank": str(rank),
        })
    computed["smooth_rank"] = str(min(ranks)) if ranks else "unsampled"
    return VarietyReport(
        dimension=dim,
        degree=degree,
        is_complete_intersection=is_complete_intersection(ideal),
        predicted=predicted,
        computed=computed,
        certificates=certificates,
    )


# ---------------------------------------------------------------------------
# reports


@dataclass
class VarietyReport:
    """Computed invariants next to the values the construction predicts.

    All numeric values are serialized as strings so reports are exact and
    byte-stable. `predicted` and `computed` share keys; a report matches
    when every predicted value equals its computed counterpart.
    """

    dimension: int
    degree: int
    is_complete_intersection: bool
    predicted: Dict[str, str]
    computed: Dict[str, str]
    solutions: List[List[str]] = dataclass_field(default_factory=list)
    singular: List[List[str]] = dataclass_field(default_factory=list)
    counts_by_degree: Dict[str, str] = dataclass_field(default_factory=dict)
    flags: List[str] = dataclass_field(default_factory=list)
    attempts: List[Dict[str, str]] = dataclass_field(default_factory=list)
    certificates: List[Dict[str, str]] = dataclass_field(default_factory=list)

    def matched(self) -> bool:
        return all(self.computed.get(k) == v for k, v in self.predicted.items())

    def to_dict(self) -> dict:
        return {
            "dimension": "empty" if self.dimension < 0 else str(self.dimension),
            "degree": str(self.degree),
            "is_complete_intersection": "true" if self.is_complete_intersection else "false",
            "predicted": dict(self.predicted),
            "computed": dict(self.computed),
            "solutions": [list(s) for s in self.solutions],
            "singular_points": [list(s) for s in self.singular],
            "counts_by_degree": dict(self.counts_by_degree),
            "flags": list(self.flags),
            "attempts": [dict(a) for a in self.attempts],
            "certificates": [dict(c) for c in self.certificates],
            "matched": "true" if self.matched() else "false",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"
