"""Projective points, coordinate changes, lines, and exhaustive enumeration.

Points are stored canonically: the first nonzero coordinate is scaled to 1,
so equality of points is equality of tuples. Enumeration of P^N(F_q) is
stratified by pivot position and ascends lexicographically over the
canonical coordinate tuples (element order = integer code order), which
makes the stream reproducible and partitionable.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, List, Sequence, Tuple

from .errors import BudgetExceeded, EqualPoints
from .field import Field, FieldElement
from .linalg import Matrix, mat_rank
from .poly import Polynomial

DEFAULT_BUDGET = 10**8


def projective_count(n_proj: int, q: int) -> int:
    """|P^N(F_q)| = (q^(N+1) - 1)/(q - 1)."""
    return (q ** (n_proj + 1) - 1) // (q - 1)


class ProjectivePoint:
    """Point of P^N in canonical form (first nonzero coordinate = 1)."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence[FieldElement]):
        coords = tuple(coords)
        assert coords, "empty coordinate tuple"
        pivot = None
        for i, c in enumerate(coords):
            if not c.is_zero():
                pivot = i
                break
        if pivot is None:
            raise ValueError("all coordinates zero")
        inv = coords[pivot].inverse()
        self.coords = tuple(c * inv for c in coords)

    @property
    def field(self) -> Field:
        return self.coords[0].field

    @property
    def ambient_dim(self) -> int:
        return len(self.coords) - 1

    def pivot(self) -> int:
        for i, c in enumerate(self.coords):
            if not c.is_zero():
                return i
        raise AssertionError("unreachable: canonical point has a pivot")

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def serialize(self) -> List[str]:
        field = self.field
        return [field.element_str(c.payload) for c in self.coords]

    def __repr__(self):
        return "[" + ":".join(self.serialize()) + "]"


def base_point(field: Field, n_proj: int) -> ProjectivePoint:
    """[1:0:...:0] in P^N."""
    coords = [field.one()] + [field.zero()] * n_proj
    return ProjectivePoint(coords)


@dataclass(frozen=True)
class LinearSubspace:
    """Intersection of independent hyperplanes in P^N."""

    forms: Tuple[Polynomial, ...]
    ambient: int  # N

    def __post_init__(self):
        assert self.forms, "no defining forms"
        n = self.ambient + 1
        rows = []
        for f in self.forms:
            assert f.nvars == n and f.degree() == 1 and f.is_homogeneous()
            field = f.field
            row = []
            for i in range(n):
                exps = tuple(1 if j == i else 0 for j in range(n))
                row.append(f.terms.get(exps, field.zero()))
            rows.append(row)
        if mat_rank(rows) != len(self.forms):
            raise ValueError("defining forms are linearly dependent")

    @property
    def dim(self) -> int:
        return self.ambient - len(self.forms)

    def contains(self, point: ProjectivePoint) -> bool:
        return all(f.evaluate(list(point.coords)).is_zero() for f in self.forms)


def move_to_base_point(y: ProjectivePoint) -> Matrix:
    """Invertible M with M e0 = y, completing y by standard basis vectors.

    Column 0 is y itself; the remaining columns are the unit vectors e_j
    for j != pivot(y), in ascending j. Substituting f(Mx) then carries the
    local structure of f at y to the base point [1:0:...:0].
    """
    field = y.field
    n = len(y.coords)
    pivot = y.pivot()
    cols = [list(y.coords)]
    for j in range(n):
        if j == pivot:
            continue
        cols.append([field.one() if i == j else field.zero() for i in range(n)])
    # transpose column list into row-major matrix
    return [[cols[j][i] for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class LineParametrization:
    """The line {u*a + v*b : (u:v) in P^1} through two distinct points."""

    a: ProjectivePoint
    b: ProjectivePoint

    def point_at(self, u: FieldElement, v: FieldElement) -> ProjectivePoint:
        coords = [u * x + v * y for x, y in zip(self.a.coords, self.b.coords)]
        return ProjectivePoint(coords)

    def restrict(self, f: Polynomial) -> List[FieldElement]:
        """Coefficients of f(u*a + v*b) as a binary form in (u, v).

        Returns [c_0, ..., c_d] with c_i the coefficient of u^(d-i) v^i;
        f is homogeneous of degree d. The line lies in V(f) iff all vanish.
        """
        assert f.is_homogeneous() and not f.is_zero()
        field = f.field
        images = []
        for x, y in zip(self.a.coords, self.b.coords):
            # u*x + v*y in the 2-variable ring k[u, v]
            terms = {}
            if not x.is_zero():
                terms[(1, 0)] = x
            if not y.is_zero():
                terms[(0, 1)] = y
            images.append(Polynomial(field, 2, terms))
        g = f.substitute(images)
        d = f.degree()
        return [g.terms.get((d - i, i), field.zero()) for i in range(d + 1)]

    def lies_in(self, f: Polynomial) -> bool:
        return all(c.is_zero() for c in self.restrict(f))


def line_through(a: ProjectivePoint, b: ProjectivePoint) -> LineParametrization:
    if a == b:
        raise EqualPoints(f"need two distinct points, got {a} twice")
    return LineParametrization(a, b)


def enumerate_projective_points(n_proj: int, field: Field,
                                budget: int = DEFAULT_BUDGET) -> Iterator[ProjectivePoint]:
    """Every point of P^N(F_q) exactly once, canonical, deterministic order.

    Pivot N first (the single point [0:...:0:1]), then pivot N-1, down to
    pivot 0; within a stratum the free coordinates run in ascending
    code order, leftmost coordinate most significant.
    """
    assert field.is_finite, "enumeration needs a finite field"
    q = field.order()
    total = projective_count(n_proj, q)
    if total > budget:
        raise BudgetExceeded(
            f"P^{n_proj}(F_{q}) has {total} points, budget {budget}")
    decode = getattr(field, "element_from_code", None)
    if decode is None:
        elems = [field.from_int(v) for v in range(q)]
    else:
        elems = [decode(code) for code in range(q)]
    zero, one = field.zero(), field.one()
    for pivot in range(n_proj, -1, -1):
        free = n_proj - pivot
        prefix = (zero,) * pivot + (one,)
        for tail in itertools.product(elems, repeat=free):
            pt = ProjectivePoint.__new__(ProjectivePoint)
            pt.coords = prefix + tail
            yield pt


def random_point(field: Field, n_proj: int, rng: random.Random) -> ProjectivePoint:
    while True:
        coords = [field.sample(rng) for _ in range(n_proj + 1)]
        if any(not c.is_zero() for c in coords):
            return ProjectivePoint(coords)
