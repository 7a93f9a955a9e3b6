"""Nodal cubics in normal form and the lines through one of their nodes.

The cubics handled here live in P^{2r+1} and have the shape

    f = x_{r+1}^2 x_0 + x_{r+2} Q_1 + ... + x_{2r+1} Q_r

with random quadrics Q_i.  Such a cubic contains the r-plane
{x_{r+1} = ... = x_{2r+1} = 0} and, for generic Q_i, its singular locus
consists of exactly 2^r simple double points, cut out on that r-plane by
the restricted quadrics.  Moving one node y to [1:0:...:0] decomposes f
as f_3 + x_0 f_2, and the lines of the cubic through y form the complete
intersection V(f_2, f_3) in P^{2r}, of dimension 2r-2 and degree 6; for
r = 2 its singular locus is three points, and for r = 3 it has dimension
at most 2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .errors import (DegenerateInstance, InvalidParameters,
                     MultiplicityMismatch)
from .field import Field, FieldElement, embedding
from .fano import direction_components
from .idealkit import (DEFAULT_BUDGET, Ideal, VarietyReport,
                       certify_reduced_point, hilbert_data,
                       is_complete_intersection, jacobian_rank_at,
                       rational_points, singular_points)
from .linalg import mat_rank, random_invertible
from .poly import Polynomial, random_homogeneous
from .projgeo import ProjectivePoint
from .solve import solve_projective

MAX_RESAMPLES = 5
SLICE_RETRIES = 3


@dataclass(frozen=True)
class NormalFormCubic:
    """A cubic x_{r+1}^2 x_0 + sum_i x_{r+1+i} Q_i in 2r+2 variables.

    The structural identity is re-verified on construction; quadrics are
    stored alongside f so the node-finding step can restrict them without
    re-extracting coefficients.
    """

    r: int
    f: Polynomial
    quadrics: Tuple[Polynomial, ...]

    def __post_init__(self):
        r = self.r
        if r < 1:
            raise InvalidParameters("need r >= 1")
        nvars = 2 * r + 2
        if self.f.nvars != nvars or len(self.quadrics) != r:
            raise InvalidParameters("wrong number of variables or quadrics")
        field = self.f.field
        expect = (Polynomial.variable(field, nvars, r + 1) ** 2
                  * Polynomial.variable(field, nvars, 0))
        for i, q in enumerate(self.quadrics):
            expect = expect + Polynomial.variable(field, nvars, r + 2 + i) * q
        if self.f != expect:
            raise InvalidParameters("cubic is not in normal form")

    @property
    def field(self) -> Field:
        return self.f.field

    @property
    def nvars(self) -> int:
        return 2 * self.r + 2


@dataclass(frozen=True)
class NodeCertificate:
    """Evidence that a point of the cubic is a simple double point.

    `quadratic_part_rank` is the rank of the Hessian quadric in the
    affine chart at the point; a simple double point needs the full rank
    2r+1 together with multiplicity exactly 2.
    """

    point: ProjectivePoint
    residue_degree: int
    quadratic_part_rank: int
    is_simple_double_point: bool

    def to_dict(self) -> Dict[str, str]:
        return {
            "kind": "node",
            "point": " : ".join(self.point.serialize()),
            "residue_degree": str(self.residue_degree),
            "quadratic_part_rank": str(self.quadratic_part_rank),
            "is_simple_double_point":
                "true" if self.is_simple_double_point else "false",
        }


def normal_form_cubic(r: int, field: Field, seed: int) -> NormalFormCubic:
    """Sample the normal-form cubic with dense random quadrics Q_i."""
    if r < 1:
        raise InvalidParameters("need r >= 1")
    if field.characteristic() == 2:
        raise InvalidParameters("odd characteristic required")
    rng = random.Random(seed)
    nvars = 2 * r + 2
    quadrics = []
    for _ in range(r):
        q = random_homogeneous(field, nvars, 2, rng)
        while q.is_zero():
            q = random_homogeneous(field, nvars, 2, rng)
        quadrics.append(q)
    f = (Polynomial.variable(field, nvars, r + 1) ** 2
         * Polynomial.variable(field, nvars, 0))
    for i, q in enumerate(quadrics):
        f = f + Polynomial.variable(field, nvars, r + 2 + i) * q
    return NormalFormCubic(r, f, tuple(quadrics))


def restricted_quadrics(nfc: NormalFormCubic) -> List[Polynomial]:
    """The Q_i restricted to the r-plane x_{r+1} = ... = x_{2r+1} = 0,
    as quadrics in the r+1 surviving variables."""
    field = nfc.field
    m = nfc.r + 1
    images = [Polynomial.variable(field, m, i) if i < m
              else Polynomial.zero(field, m) for i in range(nfc.nvars)]
    return [q.substitute(images) for q in nfc.quadrics]


def plane_restriction(nfc: NormalFormCubic) -> Polynomial:
    """f restricted to the span of x_0, ..., x_{r+1} (the last r variables
    set to zero), as a cubic in r+2 variables.

    For a true normal form this equals x_{r+1}^2 x_0 on the nose, whose
    zero locus in that P^{r+1} is the union of the two r-planes
    {x_{r+1} = 0} and {x_0 = 0}."""
    field = nfc.field
    m = nfc.r + 2
    images = [Polynomial.variable(field, m, i) if i < m
              else Polynomial.zero(field, m) for i in range(nfc.nvars)]
    return nfc.f.substitute(images)


def _mapped_to(f: Polynomial, target: Field) -> Polynomial:
    if f.field == target:
        return f
    return f.map_coefficients(target, embedding(f.field, target))


def _gram_rank(quad: Polynomial) -> int:
    """Rank of a quadratic form via its symmetric Gram matrix."""
    field = quad.field
    n = quad.nvars
    half = field.from_int(2).inverse()
    gram = [[field.zero() for _ in range(n)] for _ in range(n)]
    for exps, coeff in quad.terms.items():
        support = [i for i, e in enumerate(exps) if e]
        if len(support) == 1:
            i = support[0]
            gram[i][i] = coeff
        else:
            i, j = support
            gram[i][j] = coeff * half
            gram[j][i] = coeff * half
    return mat_rank(gram)


def certify_node(nfc: NormalFormCubic, point: ProjectivePoint) -> NodeCertificate:
    """Check that a point is a simple double point of the cubic: all
    partials vanish, multiplicity is exactly 2, and the quadratic part of
    the local expansion has full rank 2r+1."""
    target = point.field
    f = _mapped_to(nfc.f, target)
    coords = list(point.coords)
    vanishing = f.evaluate(coords).is_zero() and all(
        f.partial_derivative(i).evaluate(coords).is_zero()
        for i in range(f.nvars))
    parts = direction_components(f, point)
    multiplicity_two = (parts[0].is_zero() and parts[1].is_zero()
                        and not parts[2].is_zero())
    rank = _gram_rank(parts[2]) if multiplicity_two else 0
    ok = vanishing and multiplicity_two and rank == 2 * nfc.r + 1
    residue = target.degree // nfc.field.degree
    return NodeCertificate(point, residue, rank, ok)


def nodes(nfc: NormalFormCubic, seed: int = 0) -> List[NodeCertificate]:
    """Find and certify the 2^r nodes of the normal-form cubic.

    The candidates are the solutions of the restricted quadric system on
    the r-plane contained in the cubic; the system must be finite of
    degree 2^r with all of its points geometric over extensions of degree
    at most 2^r, and every candidate must pass the full node certificate.
    Anything else raises DegenerateInstance so callers can resample.
    """
    r = nfc.r
    restricted = restricted_quadrics(nfc)
    dim, degree = hilbert_data(Ideal(restricted))
    if (dim, degree) != (0, 2 ** r):
        raise DegenerateInstance(
            f"restricted quadrics give (dim, degree) = ({dim}, {degree}), "
            f"expected (0, {2 ** r})")
    result = solve_projective(restricted, k_max=2 ** r, seed=seed,
                              stop_at=2 ** r)
    if len(result.points) != 2 ** r:
        raise DegenerateInstance(
            f"only {len(result.points)} of {2 ** r} candidate nodes are "
            "geometric; system is non-reduced")
    certificates = []
    for z in result.points:
        zero = z.field.zero()
        lifted = ProjectivePoint(list(z.coords) + [zero] * (r + 1))
        cert = certify_node(nfc, lifted)
        if not cert.is_simple_double_point:
            raise DegenerateInstance(
                f"candidate {lifted} fails the node certificate "
                f"(rank {cert.quadratic_part_rank})")
        certificates.append(cert)
    certificates.sort(key=lambda c: (c.residue_degree, c.point.serialize()))
    return certificates


def scan_singularities(nfc: NormalFormCubic, k_max: int,
                       budget: int = DEFAULT_BUDGET) -> List[ProjectivePoint]:
    """Exhaustive Jacobian scan of the whole cubic over small fields.

    Independent of the node-finding route: enumerates points of V(f) and
    keeps those where the gradient vanishes. Only usable when q^k_max is
    within budget."""
    return singular_points(Ideal([nfc.f]), k_max=k_max, budget=budget)


def node_line_system(nfc: NormalFormCubic, node: ProjectivePoint) -> Ideal:
    """The equations for lines of the cubic through a certified node.

    Moving the node to [1:0:...:0] writes the cubic as f_3 + x_0 f_2 with
    no degree-0 or degree-1 part (that is what being a double point
    means); the lines through the node are V(f_2, f_3) in the P^{2r} of
    directions."""
    f = _mapped_to(nfc.f, node.field)
    parts = direction_components(f, node)
    if not parts[0].is_zero() or not parts[1].is_zero():
        raise MultiplicityMismatch("point is not a double point of the cubic")
    if parts[2].is_zero():
        raise MultiplicityMismatch("multiplicity at the point exceeds 2")
    return Ideal([parts[2], parts[3]])


def rank_drop_ideal(ideal: Ideal) -> Ideal:
    """Singular-locus ideal of a codimension-2 complete intersection: the
    generators together with the 2x2 minors of their Jacobian."""
    gens = ideal.nonzero_generators()
    if len(gens) != 2:
        raise InvalidParameters("rank-drop ideal needs exactly 2 generators")
    g, h = gens
    n = g.nvars
    dg = [g.partial_derivative(i) for i in range(n)]
    dh = [h.partial_derivative(i) for i in range(n)]
    minors = [dg[i] * dh[j] - dg[j] * dh[i]
              for i in range(n) for j in range(i + 1, n)]
    return Ideal(gens + minors, ideal.order)


def _empty_linear_slice(ideal: Ideal, codim: int, rng: random.Random) -> bool:
    """Whether a random linear subspace of the given codimension misses
    V(I) over the algebraic closure.

    A positive answer certifies dim V(I) < codim: a projective variety of
    dimension >= codim meets every linear subspace of that codimension."""
    field = ideal.field
    n = ideal.nvars
    matrix = random_invertible(field, n, rng)
    m = n - codim
    images = [Polynomial.variable(field, m, i) if i < m
              else Polynomial.zero(field, m) for i in range(n)]
    sliced = [g.apply_matrix(matrix).substitute(images)
              for g in ideal.generators]
    dim, _ = hilbert_data(Ideal(sliced))
    return dim < 0


def analyze_node_lines(ideal: Ideal, r: int, seed: int = 0,
                       budget: int = DEFAULT_BUDGET) -> VarietyReport:
    """Verify the line system through a node: dimension 2r-2, degree 6,
    complete intersection, plus its singular locus.

    For r = 1 the system is finite and smooth, so the rank-drop ideal
    must be empty. For r = 2 the singular locus is three reduced points,
    solved and certified individually. For r >= 3 only the dimension
    bound 2r-4 is certified, by exhibiting a random linear slice of
    complementary codimension that misses the locus."""
    dim, degree = hilbert_data(ideal)
    predicted = {
        "dimension": str(2 * r - 2),
        "degree": "6",
        "codimension": "2",
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
    rd = rank_drop_ideal(ideal)
    sing_dim, sing_degree = (None, None)
    if r <= 2:
        sing_dim, sing_degree = hilbert_data(rd)
    if r == 1:
        # the cubic surface has a second node; the direction of the line
        # joining the two nodes is a double point of the line system, so
        # the singular locus is recorded but carries no prediction
        computed["singular_dimension"] = (
            "empty" if sing_dim < 0 else str(sing_dim))
    elif r == 2:
        predicted["singular_dimension"] = "0"
        predicted["singular_degree"] = "3"
        predicted["singular_count"] = "3"
        predicted["singular_reduced"] = "true"
        computed["singular_dimension"] = (
            "empty" if sing_dim < 0 else str(sing_dim))
        computed["singular_degree"] = str(sing_degree)
        if sing_dim == 0:
            pts = rational_points(rd, k_max=6, budget=budget, seed=seed)
            reduced = []
            for pt in pts:
                ok = certify_reduced_point(rd, pt, codim=2 * r)
                reduced.append(ok)
                report.singular.append(pt.serialize())
                report.certificates.append({
                    "kind": "singular_point",
                    "point": " : ".join(pt.serialize()),
                    "residue_degree":
                        str(pt.field.degree // ideal.field.degree),
                    "reduced": "true" if ok else "false",
                })
            computed["singular_count"] = str(len(pts))
            computed["singular_reduced"] = (
                "true" if pts and all(reduced) else "false")
    else:
        bound = 2 * r - 4
        predicted["singular_dim_bound"] = f"<={bound}"
        rng = random.Random(seed)
        certified = any(_empty_linear_slice(rd, bound + 1, rng)
                        for _ in range(SLICE_RETRIES))
        computed["singular_dim_bound"] = f"<={bound}" if certified else "unknown"
        if not certified:
            report.flags.append(
                f"no random codimension-{bound + 1} slice missed the "
                "singular locus; dimension bound unverified")
    return report


@dataclass
class NodalCubicAnalysis:
    """Everything the node pipeline produced for one (r, seed) run."""

    cubic: NormalFormCubic
    node_certificates: List[NodeCertificate]
    chosen_node: ProjectivePoint
    report: VarietyReport


def run_node_analysis(r: int, field: Field, seed: int,
                      retries: int = MAX_RESAMPLES,
                      budget: int = DEFAULT_BUDGET) -> NodalCubicAnalysis:
    """Sample a normal-form cubic, certify its nodes, and analyze the
    lines through one of them, resampling on degenerate draws.

    The analyzed node is the first certificate in sorted order, so the
    one of smallest residue degree; every attempt (degenerate or
    mismatched) is logged in the report."""
    attempts: List[Dict[str, str]] = []
    analysis: Optional[NodalCubicAnalysis] = None
    s = seed
    for _ in range(retries):
        nfc = normal_form_cubic(r, field, s)
        try:
            certs = nodes(nfc, seed=s)
        except DegenerateInstance as exc:
            attempts.append({"seed": str(s), "outcome": f"degenerate: {exc}"})
            s += 1
            continue
        node = certs[0].point
        ideal = node_line_system(nfc, node)
        report = analyze_node_lines(ideal, r, seed=s, budget=budget)
        report.predicted["node_count"] = str(2 ** r)
        report.computed["node_count"] = str(len(certs))
        report.certificates = ([c.to_dict() for c in certs]
                               + report.certificates)
        analysis = NodalCubicAnalysis(nfc, certs, node, report)
        outcome = "ok" if report.matched() else "certificate mismatch"
        attempts.append({"seed": str(s), "outcome": outcome})
        if report.matched():
            break
        s += 1
    if analysis is None:
        raise DegenerateInstance(
            f"no non-degenerate instance in {retries} attempts from seed {seed}")
    analysis.report.attempts = attempts
    return analysis
