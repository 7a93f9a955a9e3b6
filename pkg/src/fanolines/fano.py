"""Lines through a marked point of a hypersurface.

A degree-d hypersurface in P^n whose defining form has multiplicity m at
a marked point y is, once y is moved to [1:0:...:0], given by

    f = x_0^{d-m} f_m + x_0^{d-m-1} f_{m+1} + ... + f_d,

with each f_i homogeneous of degree i in x_1, ..., x_n.  The line through
y with direction [v] lies in the hypersurface exactly when every f_i
vanishes at v, so the scheme of those lines is V(f_m, ..., f_d) inside
the P^{n-1} of directions.  When that system is a complete intersection
it has dimension m+n-2-d, and in the boundary case d = m+n-2 it is a
finite scheme of degree m(m+1)...d = d!/(m-1)!.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial
from typing import List, Optional

from .errors import InvalidParameters, MultiplicityMismatch, ZeroPolynomial
from .field import Field
from .idealkit import (DEFAULT_BUDGET, Ideal, LINE_COUNT_KMAX, VarietyReport,
                       hilbert_data, is_complete_intersection,
                       jacobian_rank_at, sample_smooth_points, solve_report)
from .poly import Polynomial, random_homogeneous
from .projgeo import ProjectivePoint, base_point, move_to_base_point

MAX_RESAMPLES = 5


def direction_components(f: Polynomial, point: ProjectivePoint) -> List[Polynomial]:
    """Homogeneous components of f in the direction chart at a point.

    Applies a coordinate change taking [1:0:...:0] to the point, sets the
    first coordinate to 1, and splits the result by degree in the
    remaining n variables.  Entry i of the returned list is the degree-i
    component; zero entries are kept so the list always has length
    deg(f) + 1.
    """
    if f.is_zero():
        raise ZeroPolynomial("hypersurface equation is zero")
    if not f.is_homogeneous():
        raise InvalidParameters("hypersurface equation must be homogeneous")
    if f.nvars != point.ambient_dim + 1:
        raise InvalidParameters("point and equation live in different spaces")
    moved = f.apply_matrix(move_to_base_point(point))
    local = moved.dehomogenize(0)
    d = f.degree()
    if local.is_zero():
        return [Polynomial.zero(f.field, f.nvars - 1) for _ in range(d + 1)]
    parts = local.homogeneous_components()
    return [parts.get(i, Polynomial.zero(f.field, f.nvars - 1))
            for i in range(d + 1)]


def multiplicity_at(f: Polynomial, point: ProjectivePoint) -> int:
    """Multiplicity of the hypersurface V(f) at a point of it.

    This is the lowest degree present in the local expansion at the
    point; 0 means the point is not on the hypersurface at all.
    """
    for i, part in enumerate(direction_components(f, point)):
        if not part.is_zero():
            return i
    raise ZeroPolynomial("equation vanishes identically on the chart")


@dataclass(frozen=True)
class PointedHypersurface:
    """A homogeneous form together with a marked point of stated multiplicity.

    Construction verifies the multiplicity: in the direction chart at the
    point, every component below the stated degree must vanish and the
    component at it must not.
    """

    f: Polynomial
    point: ProjectivePoint
    multiplicity: int

    def __post_init__(self):
        actual = multiplicity_at(self.f, self.point)
        if actual != self.multiplicity:
            raise MultiplicityMismatch(
                f"stated multiplicity {self.multiplicity}, found {actual}")

    @property
    def field(self) -> Field:
        return self.f.field

    @property
    def ambient_proj_dim(self) -> int:
        return self.f.nvars - 1

    @property
    def degree(self) -> int:
        return self.f.degree()


def random_pointed_hypersurface(n: int, d: int, m: int, field: Field,
                                seed: int) -> PointedHypersurface:
    """Random degree-d hypersurface in P^n with multiplicity m at [1:0:...:0].

    Samples f = sum_{i=m}^{d} x_0^{d-i} f_i with every f_i a random
    homogeneous form of degree i in the last n variables (resampled if
    zero).  Requires 1 <= m <= d <= n+m-2; larger d makes the line system
    an excess intersection, which this pipeline does not model.
    """
    if n < 2 or m < 1 or m > d or d > n + m - 2:
        raise InvalidParameters(
            f"need n >= 2 and 1 <= m <= d <= n+m-2, got n={n} d={d} m={m}")
    rng = random.Random(seed)
    f = Polynomial.zero(field, n + 1)
    x0 = Polynomial.variable(field, n + 1, 0)
    for i in range(m, d + 1):
        comp = random_homogeneous(field, n, i, rng)
        while comp.is_zero():
            comp = random_homogeneous(field, n, i, rng)
        f = f + x0 ** (d - i) * comp.extend_variables(n + 1, 1)
    return PointedHypersurface(f, base_point(field, n), m)


@dataclass(frozen=True)
class LineSystem:
    """The equations cutting out lines through the marked point.

    `generators[i]` is the degree-(m+i) component of the local expansion,
    a form in n variables, the coordinates of the P^{n-1} of directions.
    Zero components are kept in place: they impose no condition but keep
    the count of generators at d-m+1.
    """

    generators: List[Polynomial]
    n: int
    d: int
    m: int

    @property
    def expected_dim(self) -> int:
        return self.m + self.n - 2 - self.d

    @property
    def expected_degree(self) -> int:
        return expected_count(self.d, self.m)

    def ideal(self) -> Ideal:
        return Ideal(self.generators)


def expected_count(d: int, m: int) -> int:
    """Number of lines in the finite case d = m+n-2: the product m(m+1)...d."""
    if not 1 <= m <= d:
        raise InvalidParameters(f"need 1 <= m <= d, got d={d} m={m}")
    count = 1
    for i in range(m, d + 1):
        count *= i
    assert count * factorial(m - 1) == factorial(d)
    return count


def line_system(ph: PointedHypersurface) -> LineSystem:
    """Extract the direction-chart components f_m, ..., f_d of the instance."""
    parts = direction_components(ph.f, ph.point)
    lowest = next(i for i, p in enumerate(parts) if not p.is_zero())
    if lowest != ph.multiplicity:
        raise MultiplicityMismatch(
            f"stated multiplicity {ph.multiplicity}, found {lowest}")
    d = ph.degree
    n = ph.ambient_proj_dim
    return LineSystem(parts[ph.multiplicity:d + 1], n, d, ph.multiplicity)


def analyze_lines(ph: PointedHypersurface, k_max: int = LINE_COUNT_KMAX,
                  samples: int = 8, seed: int = 0,
                  budget: int = DEFAULT_BUDGET) -> VarietyReport:
    """Full verification pass over one instance's line system.

    Dimension and degree come from the Hilbert series.  Finite systems
    (d = m+n-2) additionally get their points solved over extensions up
    to k_max, each certified reduced by the Jacobian criterion; when the
    computed points fall short of the scheme degree (deeper extensions,
    or multiplicity on a degenerate instance) the shortfall is flagged
    rather than failed.  Positive-dimensional systems get sampled
    smoothness certificates at sliced points instead.
    """
    ls = line_system(ph)
    ideal = ls.ideal()
    n, d, m = ls.n, ls.d, ls.m
    dim, degree = hilbert_data(ideal)
    codim = d - m + 1
    predicted = {
        "dimension": str(ls.expected_dim),
        "degree": str(ls.expected_degree),
        "codimension": str(codim),
        "smooth_rank": str(codim),
    }
    computed = {
        "dimension": "empty" if dim < 0 else str(dim),
        "degree": str(degree),
        "codimension": str(ideal.ambient_proj_dim - dim),
    }
    report = VarietyReport(
        dimension=dim,
        degree=degree,
        is_complete_intersection=is_complete_intersection(ideal),
        predicted=predicted,
        computed=computed,
    )
    gens = ideal.nonzero_generators()
    if dim == 0:
        result = solve_report(ideal, k_max, seed=seed)
        ranks = []
        for pt in result.points:
            rank = jacobian_rank_at(gens, pt)
            ranks.append(rank)
            report.solutions.append(pt.serialize())
            report.certificates.append({
                "point": " : ".join(pt.serialize()),
                "residue_degree": str(pt.field.degree // ph.field.degree),
                "jacobian_rank": str(rank),
                "reduced": "true" if rank >= n - 1 else "false",
            })
        report.counts_by_degree = {
            str(k): str(v) for k, v in sorted(result.counts_by_degree.items())}
        found = len(result.points)
        # reduced isolated points need full ambient codimension n-1
        computed["smooth_rank"] = str(min(ranks)) if ranks else "unsampled"
        predicted["smooth_rank"] = str(n - 1)
        if found < degree:
            nonreduced = sum(1 for r in ranks if r < n - 1)
            if nonreduced:
                report.flags.append(
                    f"line scheme is non-reduced at {nonreduced} of "
                    f"{found} computed points")
            report.flags.append(
                f"computed points account for {found} of scheme degree "
                f"{degree}; the rest lies in extensions beyond "
                f"k_max={k_max} or in point multiplicities")
        else:
            predicted["points_found"] = str(degree)
            computed["points_found"] = str(found)
    elif dim > 0:
        rng = random.Random(seed)
        pts = sample_smooth_points(ideal, samples, rng, budget=budget)
        ranks = []
        for pt in pts:
            rank = jacobian_rank_at(gens, pt)
            ranks.append(rank)
            report.certificates.append({
                "point": " : ".join(pt.serialize()),
                "residue_degree": str(pt.field.degree // ph.field.degree),
                "jacobian_rank": str(rank),
            })
        computed["smooth_rank"] = str(min(ranks)) if ranks else "unsampled"
        if not pts:
            report.flags.append("no smoothness samples found; field too small"
                                " or every slice degenerated")
    else:
        report.flags.append("line system is empty")
    return report


def run_line_analysis(n: int, d: int, m: int, field: Field, seed: int,
                      k_max: int = LINE_COUNT_KMAX, samples: int = 8,
                      retries: int = MAX_RESAMPLES,
                      budget: int = DEFAULT_BUDGET) -> VarietyReport:
    """Sample-and-verify pipeline with reseeding on failed certificates.

    Finite fields can hit the measure-zero bad locus that a generic
    complex instance avoids, so a mismatched report triggers a resample
    at seed+1, up to `retries` attempts; every attempt is logged in the
    returned report.
    """
    attempts = []
    report: Optional[VarietyReport] = None
    s = seed
    for _ in range(retries):
        ph = random_pointed_hypersurface(n, d, m, field, s)
        report = analyze_lines(ph, k_max=k_max, samples=samples, seed=s,
                               budget=budget)
        outcome = "ok" if report.matched() else "certificate mismatch"
        attempts.append({"seed": str(s), "outcome": outcome})
        if report.matched():
            break
        s += 1
    assert report is not None
    report.attempts = attempts
    return report
