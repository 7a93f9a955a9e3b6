"""Buchberger's algorithm with normal pair selection and both standard
pair-skipping criteria, producing the unique monic reduced basis.

The inner reduction loop works on dicts mapping exponent tuples to raw
coefficient payloads (ints mod p, Fractions, coefficient tuples) through
the field's payload hooks; FieldElement wrappers only appear at the API
boundary. Instances here are small (tens of generators, degree <= 8), so
no F4-style batching is attempted.
"""

from __future__ import annotations

import heapq
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ResourceLimit, ZeroPolynomial
from .field import Field
from .poly import (GREVLEX, Monomial, MonomialOrder, Polynomial, mono_div,
                   mono_divides, mono_lcm, mono_mul)

# Groebner bases over the rationals can blow up; this caps the total bit
# size of any single polynomial's coefficients mid-computation.
DEFAULT_COEFF_BIT_LIMIT = 1_000_000

PayloadPoly = Dict[Monomial, object]


def _to_payload(f: Polynomial) -> PayloadPoly:
    return {m: c.payload for m, c in f.terms.items()}


def _from_payload(field: Field, nvars: int, d: PayloadPoly) -> Polynomial:
    from .field import FieldElement
    return Polynomial(field, nvars, {m: FieldElement(field, c) for m, c in d.items()})


def _coeff_bits(field: Field, d: PayloadPoly) -> int:
    if field.characteristic() != 0:
        return 0
    total = 0
    for c in d.values():
        total += c.numerator.bit_length() + c.denominator.bit_length()
    return total


def _leading(d: PayloadPoly, order: MonomialOrder) -> Monomial:
    return max(d, key=order.key)


def normal_form_payload(f: PayloadPoly, reducers: Sequence[Tuple[Monomial, object, PayloadPoly]],
                        order: MonomialOrder, field: Field,
                        bit_limit: int = DEFAULT_COEFF_BIT_LIMIT) -> PayloadPoly:
    """Full normal form: every term of the remainder is reduced.

    reducers: list of (leading monomial, inverse leading coefficient, terms).
    """
    mul, sub = field._mul, field._sub
    is_zero = field._is_zero
    work = dict(f)
    remainder: PayloadPoly = {}
    while work:
        lm = max(work, key=order.key)
        lc = work[lm]
        hit = None
        for red_lm, red_inv, red_terms in reducers:
            if mono_divides(red_lm, lm):
                hit = (red_lm, red_inv, red_terms)
                break
        if hit is None:
            remainder[lm] = lc
            del work[lm]
            continue
        red_lm, red_inv, red_terms = hit
        shift = mono_div(lm, red_lm)
        factor = mul(lc, red_inv)
        for m, c in red_terms.items():
            key = mono_mul(m, shift)
            cur = work.get(key)
            if cur is None:
                prod = mul(factor, c)
                if not is_zero(prod):
                    work[key] = field._neg(prod)
            else:
                new = sub(cur, mul(factor, c))
                if is_zero(new):
                    del work[key]
                else:
                    work[key] = new
        if field.characteristic() == 0 and _coeff_bits(field, work) > bit_limit:
            raise ResourceLimit("coefficient size exceeded during reduction")
    return remainder


def _spoly(fa: PayloadPoly, fb: PayloadPoly, order: MonomialOrder, field: Field) -> PayloadPoly:
    """S-polynomial at payload level."""
    mul, sub, is_zero = field._mul, field._sub, field._is_zero
    lma, lmb = _leading(fa, order), _leading(fb, order)
    lcm = mono_lcm(lma, lmb)
    sa, sb = mono_div(lcm, lma), mono_div(lcm, lmb)
    ca = field._inv(fa[lma])
    cb = field._inv(fb[lmb])
    out: PayloadPoly = {}
    for m, c in fa.items():
        key = mono_mul(m, sa)
        out[key] = mul(c, ca)
    for m, c in fb.items():
        key = mono_mul(m, sb)
        cur = out.get(key)
        term = mul(c, cb)
        if cur is None:
            out[key] = field._neg(term)
        else:
            new = sub(cur, term)
            if is_zero(new):
                del out[key]
            else:
                out[key] = new
    return out


def _canonical_sort_key(d: PayloadPoly, order: MonomialOrder):
    return sorted((order.key(m) for m in d), reverse=True)


def buchberger_payload(gens: List[PayloadPoly], order: MonomialOrder, field: Field,
                       bit_limit: int = DEFAULT_COEFF_BIT_LIMIT) -> List[PayloadPoly]:
    """Reduced Groebner basis of the nonzero payload polynomials."""
    basis = [dict(g) for g in gens if g]
    basis.sort(key=lambda d: _canonical_sort_key(d, order))
    lms = [_leading(g, order) for g in basis]

    def make_reducers():
        return [(lms[i], field._inv(basis[i][lms[i]]), basis[i]) for i in range(len(basis))]

    pairs = []
    pending = set()

    def push_pair(i: int, j: int):
        lcm = mono_lcm(lms[i], lms[j])
        heapq.heappush(pairs, (order.key(lcm), i, j, lcm))
        pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    while pairs:
        _, i, j, lcm = heapq.heappop(pairs)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        # first criterion: coprime leading monomials
        if lcm == mono_mul(lms[i], lms[j]):
            continue
        # chain criterion: some k with lm_k | lcm and both pairs already done
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not mono_divides(lms[k], lcm):
                continue
            pa = (min(i, k), max(i, k))
            pb = (min(j, k), max(j, k))
            if pa not in pending and pb not in pending:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], order, field)
        r = normal_form_payload(s, make_reducers(), order, field, bit_limit)
        if not r:
            continue
        basis.append(r)
        lms.append(_leading(r, order))
        new = len(basis) - 1
        for t in range(new):
            push_pair(t, new)

    return _reduce_basis(basis, order, field, bit_limit)


def _reduce_basis(basis: List[PayloadPoly], order: MonomialOrder, field: Field,
                  bit_limit: int) -> List[PayloadPoly]:
    """Minimalize, inter-reduce, and normalize to leading coefficient 1."""
    if not basis:
        return []
    # minimal: drop any element whose LM is divisible by another's LM
    items = sorted(basis, key=lambda d: order.key(_leading(d, order)))
    kept: List[PayloadPoly] = []
    kept_lms: List[Monomial] = []
    for g in items:
        lm = _leading(g, order)
        if any(mono_divides(other, lm) for other in kept_lms):
            continue
        kept.append(g)
        kept_lms.append(lm)
    # inter-reduce tails until stable
    changed = True
    while changed:
        changed = False
        for idx in range(len(kept)):
            others = [(kept_lms[t], field._inv(kept[t][kept_lms[t]]), kept[t])
                      for t in range(len(kept)) if t != idx]
            r = normal_form_payload(kept[idx], others, order, field, bit_limit)
            if r != kept[idx]:
                assert r, "minimal basis element reduced to zero"
                kept[idx] = r
                kept_lms[idx] = _leading(r, order)
                changed = True
    # monic, sorted by leading monomial ascending
    out = []
    for g in kept:
        lm = _leading(g, order)
        inv = field._inv(g[lm])
        out.append({m: field._mul(c, inv) for m, c in g.items()})
    out.sort(key=lambda d: order.key(_leading(d, order)))
    return out


# ---------------------------------------------------------------------------
# Polynomial-level API


def groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX,
                   bit_limit: int = DEFAULT_COEFF_BIT_LIMIT) -> List[Polynomial]:
    """Unique monic reduced Groebner basis; [] for the zero ideal."""
    nonzero = [g for g in gens if not g.is_zero()]
    if not nonzero:
        return []
    field = nonzero[0].field
    nvars = nonzero[0].nvars
    assert all(g.field == field and g.nvars == nvars for g in nonzero)
    payload = buchberger_payload([_to_payload(g) for g in nonzero], order, field, bit_limit)
    return [_from_payload(field, nvars, d) for d in payload]


def normal_form(f: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder = GREVLEX) -> Polynomial:
    field = f.field
    reducers = []
    for g in basis:
        if g.is_zero():
            raise ZeroPolynomial("zero polynomial cannot reduce")
        lm = g.leading_monomial(order)
        reducers.append((lm, field._inv(g.terms[lm].payload), _to_payload(g)))
    r = normal_form_payload(_to_payload(f), reducers, order, field)
    return _from_payload(field, f.nvars, r)


def is_member(f: Polynomial, basis: Sequence[Polynomial],
              order: MonomialOrder = GREVLEX) -> bool:
    """Ideal membership, assuming `basis` is a Groebner basis."""
    return normal_form(f, basis, order).is_zero()
