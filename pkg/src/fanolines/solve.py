"""Complete point solving for zero-dimensional projective schemes.

Works chart by chart: specializing the pivot coordinate to 1 and earlier
coordinates to 0 gives an affine system per chart, solved by lex Groebner
elimination plus univariate root extraction over each extension of the
ground field up to a requested relative degree. A lex basis computed over
the ground field stays a lex basis over every extension, so the expensive
elimination happens once per chart; per-root specializations are tiny.

Every solution with coordinates in F_{q^k}, k <= k_max, is found. Points
are labeled by their exact residue degree over the ground field, which
deduplicates across subfields for free: a point is reported at the single
k equal to its degree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dataclass_field
from typing import Callable, Dict, List, Optional, Tuple

from .errors import NotZeroDimensional
from .fglm import lex_basis_zero_dim
from .field import Field, FieldElement, relative_extension
from .poly import Polynomial
from .projgeo import ProjectivePoint
from .unipoly import roots_in_field


def _specialize_last(g: Polynomial, value: FieldElement) -> Polynomial:
    """Substitute the last variable by a constant; drops that variable."""
    field = g.field
    terms = {}
    pow_cache: Dict[int, FieldElement] = {0: field.one()}
    for mono, coeff in g.terms.items():
        e = mono[-1]
        p = pow_cache.get(e)
        if p is None:
            p = value ** e
            pow_cache[e] = p
        c = coeff * p
        if c.is_zero():
            continue
        key = mono[:-1]
        acc = terms.get(key)
        s = c if acc is None else acc + c
        if s.is_zero():
            terms.pop(key, None)
        else:
            terms[key] = s
    return Polynomial(field, g.nvars - 1, terms)


def _univariate_in_last(g: Polynomial) -> Optional[List[FieldElement]]:
    """Little-endian coefficients when g involves only its last variable."""
    n = g.nvars
    deg = 0
    for mono in g.terms:
        if any(mono[i] for i in range(n - 1)):
            return None
        deg = max(deg, mono[-1])
    zero = g.field.zero()
    out = [zero] * (deg + 1)
    for mono, coeff in g.terms.items():
        out[mono[-1]] = coeff
    return out


def _affine_solutions(gens: List[Polynomial], ext: Field, rng: random.Random,
                      assume_basis: bool = False) -> List[Tuple[FieldElement, ...]]:
    """All common zeros in ext^m of a zero-dimensional affine system.

    assume_basis skips the Groebner step when the input is already a lex
    basis; a basis over a subfield stays one after coefficient extension.
    """
    gens = [g for g in gens if not g.is_zero()]
    for g in gens:
        if g.is_constant():
            return []
    if not gens:
        raise NotZeroDimensional("system vanished identically during solving")
    m = gens[0].nvars
    if m == 0:
        return [()]  # nonzero constants were filtered above
    gb = gens if assume_basis else lex_basis_zero_dim(gens)
    if len(gb) == 1 and gb[0].is_constant():
        return []
    eliminant = None
    for g in gb:
        coeffs = _univariate_in_last(g)
        if coeffs is not None:
            eliminant = coeffs
            break
    if eliminant is None:
        raise NotZeroDimensional("no univariate eliminant: positive-dimensional chart")
    out: List[Tuple[FieldElement, ...]] = []
    for root in roots_in_field(eliminant, ext, rng):
        specialized = [_specialize_last(g, root) for g in gb]
        if m == 1:
            out.append((root,))
            continue
        for partial in _affine_solutions(specialized, ext, rng):
            out.append(partial + (root,))
    return out


def _exact_relative_degree(coords: Tuple[FieldElement, ...], p: int,
                           ground_degree: int, k: int) -> int:
    """Smallest j | k with every coordinate fixed by Frobenius^(ground*j)."""
    divisors = sorted(d for d in range(1, k + 1) if k % d == 0)
    for j in divisors:
        e = p ** (ground_degree * j)
        if all((c ** e) == c for c in coords):
            return j
    raise AssertionError("coordinates must be fixed by the degree-k Frobenius")


@dataclass
class SolveResult:
    """Points of a 0-dimensional projective scheme over ground extensions."""

    points: List[ProjectivePoint]
    counts_by_degree: Dict[int, int]
    k_max: int
    point_fields: List[Field] = dataclass_field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.points)


def solve_projective(gens: List[Polynomial], k_max: int, seed: int = 0,
                     stop_at: Optional[int] = None) -> SolveResult:
    """All points of V(gens) in P^N over F_{q^k} for every k <= k_max.

    gens: homogeneous polynomials over a finite ground field. Raises
    NotZeroDimensional when some chart system has infinitely many
    solutions over the algebraic closure.

    stop_at, when given, must be an upper bound on the number of
    geometric points (the scheme degree works: every closed point of
    residue degree j contributes at least j to it). Reaching the bound
    proves no further extension can hold more points, so the remaining
    k are skipped.
    """
    gens = [g for g in gens if not g.is_zero()]
    assert gens, "no nonzero generators"
    ground = gens[0].field
    assert ground.is_finite
    nvars = gens[0].nvars
    p = ground.characteristic()
    ground_degree = getattr(ground, "degree", 1)
    rng = random.Random(f"fanolines-solve-{seed}")

    # per-chart lex bases over the ground field, computed once
    chart_bases: List[Optional[List[Polynomial]]] = []
    base_point_solution = False
    for pivot in range(nvars):
        m = nvars - 1 - pivot
        images = []
        for i in range(nvars):
            if i < pivot:
                images.append(Polynomial.zero(ground, m))
            elif i == pivot:
                images.append(Polynomial.constant(ground, m, 1))
            else:
                images.append(Polynomial.variable(ground, m, i - pivot - 1))
        chart_gens = [g.substitute(images) for g in gens]
        chart_gens = [g for g in chart_gens if not g.is_zero()]
        if any(g.is_constant() for g in chart_gens):
            chart_bases.append(None)  # chart empty over every extension
            continue
        if m == 0:
            base_point_solution = not chart_gens  # [0:...:0:1] on the scheme
            chart_bases.append(None)
            continue
        if not chart_gens:
            raise NotZeroDimensional(f"chart {pivot} is all of affine {m}-space")
        gb = lex_basis_zero_dim(chart_gens)
        if len(gb) == 1 and gb[0].is_constant():
            chart_bases.append(None)
        else:
            chart_bases.append(gb)

    points: List[ProjectivePoint] = []
    counts: Dict[int, int] = {}
    point_fields: List[Field] = []
    if base_point_solution:
        coords = [ground.zero()] * (nvars - 1) + [ground.one()]
        points.append(ProjectivePoint(coords))
        counts[1] = counts.get(1, 0) + 1
        point_fields.append(ground)
    for k in range(1, k_max + 1):
        if stop_at is not None and len(points) >= stop_at:
            break
        ext, embed = relative_extension(ground, k)
        one, zero = ext.one(), ext.zero()
        for pivot in range(nvars):
            gb = chart_bases[pivot]
            if gb is None:
                continue
            mapped = [g.map_coefficients(ext, embed) for g in gb]
            for sol in _affine_solutions(mapped, ext, rng, assume_basis=True):
                if _exact_relative_degree(sol, p, ground_degree, k) != k:
                    continue  # already reported over the smaller field
                coords = (zero,) * pivot + (one,) + sol
                points.append(ProjectivePoint(coords))
                counts[k] = counts.get(k, 0) + 1
                point_fields.append(ext)
    return SolveResult(points=points, counts_by_degree=counts,
                       k_max=k_max, point_fields=point_fields)
