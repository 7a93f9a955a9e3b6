"""Univariate polynomial helpers over an arbitrary coefficient field.

Polynomials are little-endian lists of FieldElement with no trailing zeros.
Only what zero-dimensional solving needs: gcd, modular powering, and root
extraction over a finite field (gcd with x^q - x, then equal-degree
splitting down to linear factors).
"""

from __future__ import annotations

import random
from typing import List

from .field import Field, FieldElement


def utrim(a: List[FieldElement]) -> List[FieldElement]:
    i = len(a)
    while i > 0 and a[i - 1].is_zero():
        i -= 1
    return a[:i]


def udeg(a) -> int:
    return len(a) - 1


def usub(a, b, field: Field):
    n = max(len(a), len(b))
    zero = field.zero()
    out = [(a[i] if i < len(a) else zero) - (b[i] if i < len(b) else zero) for i in range(n)]
    return utrim(out)


def umul(a, b, field: Field):
    if not a or not b:
        return []
    zero = field.zero()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return utrim(out)


def umonic(a, field: Field):
    if not a:
        return []
    inv = a[-1].inverse()
    return [c * inv for c in a]


def udivmod(a, b, field: Field):
    """Quotient and remainder; b nonzero."""
    assert b, "division by zero polynomial"
    a = list(a)
    zero = field.zero()
    db = len(b) - 1
    inv_lead = b[-1].inverse()
    q = [zero] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c.is_zero():
            continue
        qc = c * inv_lead
        q[i - db] = qc
        for j in range(db + 1):
            a[i - db + j] = a[i - db + j] - qc * b[j]
    return utrim(q), utrim(a[:db])


def ugcd(a, b, field: Field):
    a, b = utrim(list(a)), utrim(list(b))
    while b:
        _, r = udivmod(a, b, field)
        a, b = b, r
    return umonic(a, field)


def upowmod(base, e: int, mod, field: Field):
    """base^e mod `mod`."""
    if len(mod) == 1:
        return []
    result = [field.one()]
    _, base = udivmod(base, mod, field)
    while e:
        if e & 1:
            _, result = udivmod(umul(result, base, field), mod, field)
        base2 = umul(base, base, field)
        _, base = udivmod(base2, mod, field)
        e >>= 1
    return result


def ueval(a, x: FieldElement) -> FieldElement:
    acc = x.field.zero()
    for c in reversed(a):
        acc = acc * x + c
    return acc


def roots_in_field(a, field: Field, rng: random.Random) -> List[FieldElement]:
    """Distinct roots of `a` lying in the finite field itself.

    Computes gcd(a, x^q - x) to isolate the part splitting into distinct
    linear factors, then splits it by Cantor-Zassenhaus. The rng only
    influences internal splitting choices; the returned roots are sorted.
    """
    a = utrim(list(a))
    assert field.is_finite
    if len(a) <= 1:
        return []  # constants (callers guard the zero polynomial)
    q = field.order()
    one = field.one()
    zero = field.zero()
    x = [zero, one]
    xq = upowmod(x, q, a, field)
    s = ugcd(usub(xq, x, field), a, field)
    roots = []
    stack = [s]
    while stack:
        f = stack.pop()
        d = len(f) - 1
        if d <= 0:
            continue
        if d == 1:
            roots.append(-f[0])  # monic x + c
            continue
        # random split: gcd((x + r)^((q-1)/2) - 1, f)
        while True:
            r = field.sample(rng)
            h = upowmod([r, one], (q - 1) // 2, f, field)
            g = ugcd(usub(h, [one], field), f, field)
            if 0 < len(g) - 1 < d:
                stack.append(g)
                q2, rem = udivmod(f, g, field)
                assert not rem
                stack.append(umonic(q2, field))
                break
    sort_key = field.code_of if hasattr(field, "code_of") else (lambda e: e.payload)
    roots.sort(key=sort_key)
    return roots


def distinct_degree_profile(a, field: Field) -> dict:
    """Map d -> total degree of the squarefree part made of degree-d factors.

    Cheap accounting of where the roots of `a` live: the degree-d part
    splits over the degree-d extension and nowhere smaller.
    """
    a = umonic(utrim(list(a)), field)
    if len(a) <= 1:
        return {}
    # squarefree part: a / gcd(a, a')
    deriv = utrim([a[i] * field.from_int(i) for i in range(1, len(a))])
    g = ugcd(a, deriv, field) if deriv else list(a)
    f, _ = udivmod(a, g, field) if len(g) > 1 else (list(a), [])
    f = umonic(utrim(f), field)
    q = field.order()
    one = field.one()
    zero = field.zero()
    profile = {}
    w = [zero, one]
    d = 0
    while len(f) - 1 > 0:
        d += 1
        if 2 * d > len(f) - 1:
            profile[len(f) - 1] = profile.get(len(f) - 1, 0) + (len(f) - 1)
            break
        w = upowmod(w, q, f, field)
        g = ugcd(usub(w, [zero, one], field), f, field)
        if len(g) - 1 > 0:
            profile[d] = profile.get(d, 0) + (len(g) - 1)
            f, _ = udivmod(f, g, field)
            f = umonic(f, field)
    return profile
