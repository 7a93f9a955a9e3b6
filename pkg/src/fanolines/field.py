"""Exact field arithmetic: rationals, prime fields, and small extension fields.

Elements are immutable value objects carrying a reference to their field.
Extension fields F_{p^k} store elements as little-endian coefficient tuples
reduced modulo a fixed irreducible polynomial in the generator t.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterator, Union

from .errors import InvalidParameters, NotPrime, ZeroInversion

DEFAULT_PRIME = 10007
DEFAULT_RATIONAL_BOUND = 50

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any modulus used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class FieldElement:
    """Element of a :class:`Field`, stored in canonical form."""

    __slots__ = ("field", "payload")

    def __init__(self, field: "Field", payload):
        self.field = field
        self.payload = payload

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError(f"mixed fields: {self.field} vs {other.field}")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.payload, other.payload))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._sub(self.payload, other.payload))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.payload, other.payload))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.payload))

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.field.one()
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroInversion(f"zero has no inverse in {self.field}")
        return FieldElement(self.field, self.field._inv(self.payload))

    def is_zero(self) -> bool:
        return self.field._is_zero(self.payload)

    def is_one(self) -> bool:
        return self.payload == self.field.one().payload

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.payload == other.payload

    def __hash__(self):
        return hash((self.field.key(), self.payload))

    def __repr__(self):
        return self.field.element_str(self.payload)


Scalar = Union[FieldElement, int]


class Field:
    """Common interface; concrete fields implement the payload hooks."""

    kind = "abstract"

    def zero(self) -> FieldElement:
        return FieldElement(self, self._zero_payload())

    def one(self) -> FieldElement:
        return FieldElement(self, self._one_payload())

    def from_int(self, n: int) -> FieldElement:
        return FieldElement(self, self._from_int(n))

    def from_fraction(self, numer, denom: int = 1) -> FieldElement:
        """numer/denom in this field; numer may be a Fraction.

        Raises ZeroInversion when the denominator vanishes (e.g. mod p).
        """
        if isinstance(numer, Fraction):
            assert denom == 1
            numer, denom = numer.numerator, numer.denominator
        return self.from_int(numer) * self.from_int(denom).inverse()

    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    @property
    def is_finite(self) -> bool:
        return self.order() is not None

    def order(self):
        """Number of elements, or None for infinite fields."""
        return None

    def characteristic(self) -> int:
        return 0

    def element_str(self, payload) -> str:
        return str(payload)

    def sample(self, rng: random.Random, bound: int = DEFAULT_RATIONAL_BOUND) -> FieldElement:
        raise NotImplementedError

    def elements(self) -> Iterator[FieldElement]:
        raise NotImplementedError(f"{self} is not enumerable")


class RationalField(Field):
    """The rationals with arbitrary-precision reduced fractions."""

    kind = "rationals"

    def key(self):
        return ("rationals",)

    def _zero_payload(self):
        return Fraction(0)

    def _one_payload(self):
        return Fraction(1)

    def _from_int(self, n):
        return Fraction(n)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def _is_zero(self, a):
        return a == 0

    def sample(self, rng, bound=DEFAULT_RATIONAL_BOUND):
        """Uniform integer in [-bound, bound], as a rational."""
        return FieldElement(self, Fraction(rng.randint(-bound, bound)))

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """F_p for an odd prime p, least-residue representatives."""

    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p == 2:
            # quadratic-form ranks and the node certificates need 1/2
            raise InvalidParameters("characteristic 2 is unsupported")
        self.p = p

    def key(self):
        return ("prime", self.p)

    def order(self):
        return self.p

    def characteristic(self):
        return self.p

    @property
    def degree(self) -> int:
        return 1

    def _zero_payload(self):
        return 0

    def _one_payload(self):
        return 1 % self.p

    def _from_int(self, n):
        return n % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _neg(self, a):
        return -a % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def _is_zero(self, a):
        return a == 0

    def sample(self, rng, bound=None):
        return FieldElement(self, rng.randrange(self.p))

    def elements(self):
        for v in range(self.p):
            yield FieldElement(self, v)

    def __repr__(self):
        return f"GF({self.p})"


# ---------------------------------------------------------------------------
# Univariate arithmetic over F_p on little-endian int lists, used for the
# extension modulus search and for extension-element inversion.


def _up_trim(a):
    i = len(a)
    while i > 0 and a[i - 1] == 0:
        i -= 1
    return a[:i]


def _up_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _up_trim(out)

def _up_rem(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c == 0:
            continue
        q = c * inv_lead % p
        for j in range(dm + 1):
            a[i - dm + j] = (a[i - dm + j] - q * m[j]) % p
    return _up_trim(a[:dm])


def _up_gcd(a, b, p):
    a, b = _up_trim(list(a)), _up_trim(list(b))
    while b:
        a, b = b, _up_rem(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _up_powmod_x(e, m, p):
    """x^e mod m over F_p."""
    result = [1]
    base = _up_rem([0, 1], m, p)
    while e:
        if e & 1:
            result = _up_rem(_up_mul(result, base, p), m, p)
        base = _up_rem(_up_mul(base, base, p), m, p)
        e >>= 1
    return result


def _is_irreducible(m, p, k):
    """Rabin test: x^(p^k) = x mod m and gcd(x^(p^(k/l)) - x, m) = 1."""
    xq = _up_powmod_x(p**k, m, p)
    if _up_trim([(xq[i] if i < len(xq) else 0) - (1 if i == 1 else 0) for i in range(max(len(xq), 2))]) != []:
        return False
    ell = 2
    kk = k
    checked = set()
    while ell * ell <= kk:
        if kk % ell == 0:
            checked.add(ell)
            while kk % ell == 0:
                kk //= ell
        ell += 1
    if kk > 1:
        checked.add(kk)
    for ell in checked:
        xe = _up_powmod_x(p ** (k // ell), m, p)
        diff = [(xe[i] if i < len(xe) else 0) - (1 if i == 1 else 0) for i in range(max(len(xe), 2))]
        g = _up_gcd(diff, m, p)
        if len(g) != 1:
            return False
    return True


class ExtensionField(Field):
    """F_{p^k} = F_p[t]/(modulus), elements as coefficient k-tuples."""

    kind = "extension"

    def __init__(self, p: int, k: int, modulus):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        assert k >= 2 and len(modulus) == k + 1 and modulus[-1] % p == 1
        self.p = p
        self.k = k
        self.modulus = tuple(c % p for c in modulus)
        self.prime_field = PrimeField(p)
        # t^(k+i) mod modulus, i = 0..k-2, for one-pass reduction of products
        red = []
        cur = [(-c) % p for c in self.modulus[:-1]]  # t^k
        for _ in range(k - 1):
            red.append(tuple(cur))
            cur = [0] + cur
            lead = cur[-1]
            cur = [(cur[j] - lead * self.modulus[j]) % p for j in range(k)]
        self._red = red

    def key(self):
        return ("extension", self.p, self.k, self.modulus)

    def order(self):
        return self.p**self.k

    def characteristic(self):
        return self.p

    @property
    def degree(self) -> int:
        return self.k

    def _zero_payload(self):
        return (0,) * self.k

    def _one_payload(self):
        return (1,) + (0,) * (self.k - 1)

    def _from_int(self, n):
        return (n % self.p,) + (0,) * (self.k - 1)

    def _add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                conv[i + j] += ai * bj
        out = [c % p for c in conv[:k]]
        for i in range(k - 1):
            c = conv[k + i] % p
            if c == 0:
                continue
            row = self._red[i]
            for j in range(k):
                out[j] = (out[j] + c * row[j]) % p
        return tuple(out)

    def _inv(self, a):
        # extended Euclid in F_p[t]
        p = self.p
        r0, r1 = list(self.modulus), _up_trim(list(a))
        s0, s1 = [], [1]
        while r1:
            # divide r0 by r1
            q = [0] * (len(r0) - len(r1) + 1) if len(r0) >= len(r1) else []
            rem = list(r0)
            inv_lead = pow(r1[-1], p - 2, p)
            for i in range(len(rem) - 1, len(r1) - 2, -1):
                c = rem[i] % p
                if c == 0:
                    continue
                qc = c * inv_lead % p
                q[i - (len(r1) - 1)] = qc
                for j in range(len(r1)):
                    rem[i - (len(r1) - 1) + j] = (rem[i - (len(r1) - 1) + j] - qc * r1[j]) % p
            rem = _up_trim(rem)
            r0, r1 = r1, rem
            qs1 = _up_mul(q, s1, p)
            news = [( (s0[i] if i < len(s0) else 0) - (qs1[i] if i < len(qs1) else 0)) % p for i in range(max(len(s0), len(qs1), 1))]
            s0, s1 = s1, _up_trim(news)
        # r0 = gcd (a unit since modulus irreducible); normalize
        c_inv = pow(r0[0], p - 2, p) if len(r0) == 1 else None
        if c_inv is None:
            raise ZeroInversion("element shares a factor with the modulus")
        inv = [c * c_inv % p for c in s0]
        inv += [0] * (self.k - len(inv))
        return tuple(inv[: self.k])

    def _is_zero(self, a):
        return all(c == 0 for c in a)

    def element_str(self, payload) -> str:
        parts = []
        for i in range(self.k - 1, -1, -1):
            c = payload[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("t" if c == 1 else f"{c}*t")
            else:
                parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
        return " + ".join(parts) if parts else "0"

    def lift(self, e: FieldElement) -> FieldElement:
        """Embed an F_p element along the canonical inclusion."""
        assert e.field == self.prime_field
        return FieldElement(self, self._from_int(e.payload))

    def generator(self) -> FieldElement:
        """The residue class of t."""
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def frobenius(self, e: FieldElement, j: int = 1) -> FieldElement:
        """e^(p^j)."""
        return e ** (self.p**j)

    def code_of(self, e: FieldElement) -> int:
        """Integer code in [0, p^k): base-p digits of the coefficient tuple."""
        code = 0
        for c in reversed(e.payload):
            code = code * self.p + c
        return code

    def element_from_code(self, code: int) -> FieldElement:
        digits = []
        for _ in range(self.k):
            digits.append(code % self.p)
            code //= self.p
        return FieldElement(self, tuple(digits))

    def sample(self, rng, bound=None):
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    def elements(self):
        for code in range(self.p**self.k):
            yield self.element_from_code(code)

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


_extension_cache: dict = {}


def build_extension(p: int, k: int, seed: int = 0) -> Field:
    """Field with p^k elements; k = 1 gives the prime field itself.

    The modulus is found by seeded random search over monic degree-k
    candidates, so the result is reproducible for fixed (p, k, seed).
    """
    cached = _extension_cache.get((p, k, seed))
    if cached is not None:
        return cached
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be positive")
    if k == 1:
        result = PrimeField(p)
    else:
        rng = random.Random(f"fanolines-modulus-{p}-{k}-{seed}")
        while True:
            cand = [rng.randrange(p) for _ in range(k)] + [1]
            if cand[0] == 0:  # reducible: t divides
                continue
            if _is_irreducible(cand, p, k):
                result = ExtensionField(p, k, cand)
                break
    _extension_cache[(p, k, seed)] = result
    return result


def embedding(src: Field, dst: Field):
    """Deterministic field homomorphism src -> dst between finite fields.

    src must be a subfield of dst abstractly (same p, src degree dividing
    dst degree). For extension-to-extension maps the image of the
    generator is the smallest-code root of src's modulus in dst, so the
    same pair of fields always yields the same embedding.
    """
    if src == dst:
        return lambda e: e
    if isinstance(src, PrimeField):
        assert dst.characteristic() == src.p
        return lambda e: dst.from_int(e.payload)
    assert isinstance(src, ExtensionField) and isinstance(dst, ExtensionField)
    assert src.p == dst.p and dst.k % src.k == 0
    from .unipoly import roots_in_field
    modulus = [dst.from_int(c) for c in src.modulus]
    rng = random.Random(f"fanolines-embed-{src.key()}-{dst.key()}")
    roots = roots_in_field(modulus, dst, rng)
    assert roots, "modulus of a subfield must split"
    powers = [dst.one()]
    for _ in range(src.k - 1):
        powers.append(powers[-1] * roots[0])

    def embed(e: FieldElement) -> FieldElement:
        acc = dst.zero()
        for c, b in zip(e.payload, powers):
            if c:
                acc = acc + b * dst.from_int(c)
        return acc

    return embed


def relative_extension(ground: Field, k: int, seed: int = 0):
    """(E, embed) with [E : ground] = k; E is deterministic per (ground, k)."""
    if k == 1:
        return ground, (lambda e: e)
    if isinstance(ground, PrimeField):
        ext = build_extension(ground.p, k, seed)
        return ext, embedding(ground, ext)
    assert isinstance(ground, ExtensionField)
    ext = build_extension(ground.p, ground.k * k, seed)
    return ext, embedding(ground, ext)


QQ = RationalField()
