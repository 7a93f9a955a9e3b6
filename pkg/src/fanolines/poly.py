"""Sparse multivariate polynomials over an exact field.

Terms are stored as a dict mapping exponent tuples to nonzero coefficients.
Monomial orders are small key objects so Groebner code can be order-generic;
grevlex is the workhorse, lex and block orders exist for elimination.

The text format is deliberately narrow: integer or fraction coefficients,
variables with optional ^exponent, '*' between factors, '+'/'-' between
terms. Printing is canonical (grevlex-descending, least-residue
coefficients over prime fields) so equal polynomials print identically.
"""

from __future__ import annotations

import itertools
import random
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import ParseError, UnknownVariable, ZeroPolynomial
from .field import Field, FieldElement, RationalField

Monomial = Tuple[int, ...]


# ---------------------------------------------------------------------------
# monomial helpers

def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when a | b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


def monomials_of_degree(nvars: int, degree: int) -> List[Monomial]:
    """All exponent tuples of the given total degree, lex-descending."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for bars in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for i in bars:
            exps[i] += 1
        out.append(tuple(exps))
    out.sort(reverse=True)
    return out


# ---------------------------------------------------------------------------
# monomial orders

class MonomialOrder:
    """Total order on exponent tuples; larger key = larger monomial."""

    name = "base"

    def key(self, exps: Monomial):
        raise NotImplementedError

    def __repr__(self):
        return f"<order {self.name}>"


class GrevLexOrder(MonomialOrder):
    """Graded reverse lexicographic: degree first, then reversed exponents
    compared smallest-last-variable-wins."""

    name = "grevlex"

    def key(self, exps: Monomial):
        return (sum(exps), tuple(-e for e in reversed(exps)))


class LexOrder(MonomialOrder):
    name = "lex"

    def key(self, exps: Monomial):
        return exps


class BlockOrder(MonomialOrder):
    """Eliminates the first `split` variables: compares that block first
    (grevlex within each block by default)."""

    name = "block"

    def __init__(self, split: int,
                 outer: Optional[MonomialOrder] = None,
                 inner: Optional[MonomialOrder] = None):
        self.split = split
        self.outer = outer or GrevLexOrder()
        self.inner = inner or GrevLexOrder()

    def key(self, exps: Monomial):
        return (self.outer.key(exps[:self.split]), self.inner.key(exps[self.split:]))


GREVLEX = GrevLexOrder()
LEX = LexOrder()


# ---------------------------------------------------------------------------
# polynomials

class Polynomial:
    """Immutable-by-convention sparse polynomial.

    terms: dict monomial -> nonzero FieldElement. Do not mutate after
    construction; all arithmetic returns fresh objects.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: Dict[Monomial, FieldElement]):
        clean = {}
        for mono, coeff in terms.items():
            if len(mono) != nvars:
                raise ValueError(f"exponent tuple {mono} has wrong length for {nvars} variables")
            if not coeff.is_zero():
                clean[mono] = coeff
        self.field = field
        self.nvars = nvars
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, field: Field, nvars: int) -> "Polynomial":
        return cls(field, nvars, {})

    @classmethod
    def constant(cls, field: Field, nvars: int, value) -> "Polynomial":
        coeff = value if isinstance(value, FieldElement) else field.from_int(value)
        return cls(field, nvars, {(0,) * nvars: coeff})

    @classmethod
    def variable(cls, field: Field, nvars: int, index: int) -> "Polynomial":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return cls(field, nvars, {exps: field.one()})

    @classmethod
    def monomial(cls, field: Field, exps: Monomial, coeff=None) -> "Polynomial":
        c = coeff if coeff is not None else field.one()
        if not isinstance(c, FieldElement):
            c = field.from_int(c)
        return cls(field, len(exps), {tuple(exps): c})

    @classmethod
    def linear(cls, field: Field, coeffs: Sequence[FieldElement]) -> "Polynomial":
        """Linear form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            if not c.is_zero():
                exps = tuple(1 if j == i else 0 for j in range(n))
                terms[exps] = c
        return cls(field, n, terms)

    # -- basic predicates ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        degs = {mono_degree(m) for m in self.terms}
        return len(degs) == 1

    def is_constant(self) -> bool:
        return all(mono_degree(m) == 0 for m in self.terms)

    def constant_value(self) -> FieldElement:
        return self.terms.get((0,) * self.nvars, self.field.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return (self.field == other.field and self.nvars == other.nvars
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, FieldElement):
            return Polynomial.constant(self.field, self.nvars, other)
        if isinstance(other, (int, Fraction)):
            if isinstance(other, Fraction):
                return Polynomial.constant(self.field, self.nvars,
                                           self.field.from_fraction(other))
            return Polynomial.constant(self.field, self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            acc = terms.get(mono)
            s = coeff if acc is None else acc + coeff
            if s.is_zero():
                terms.pop(mono, None)
            else:
                terms[mono] = s
        return Polynomial(self.field, self.nvars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.field, self.nvars,
                          {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElement)):
            c = other
            if isinstance(c, Fraction):
                c = self.field.from_fraction(c)
            elif isinstance(c, int):
                c = self.field.from_int(c)
            if c.is_zero():
                return Polynomial.zero(self.field, self.nvars)
            return Polynomial(self.field, self.nvars,
                              {m: co * c for m, co in self.terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: Dict[Monomial, FieldElement] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                prod = c1 * c2
                acc = out.get(m)
                s = prod if acc is None else acc + prod
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.field, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- leading data -----------------------------------------------------

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> FieldElement:
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: MonomialOrder = GREVLEX):
        m = self.leading_monomial(order)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        inv = self.leading_coefficient(order).inverse()
        return self * inv

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    # -- calculus and structure -------------------------------------------

    def evaluate(self, values: Sequence[FieldElement]) -> FieldElement:
        assert len(values) == self.nvars
        field = self.field
        acc = field.zero()
        pow_cache: Dict[Tuple[int, int], FieldElement] = {}
        for mono, coeff in self.terms.items():
            term = coeff
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                key = (i, e)
                p = pow_cache.get(key)
                if p is None:
                    p = values[i] ** e
                    pow_cache[key] = p
                term = term * p
            acc = acc + term
        return acc

    def partial_derivative(self, index: int) -> "Polynomial":
        terms: Dict[Monomial, FieldElement] = {}
        field = self.field
        for mono, coeff in self.terms.items():
            e = mono[index]
            if e == 0:
                continue
            scaled = coeff * field.from_int(e)
            if scaled.is_zero():
                continue  # exponent divisible by the characteristic
            new = list(mono)
            new[index] = e - 1
            key = tuple(new)
            acc = terms.get(key)
            s = scaled if acc is None else acc + scaled
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return Polynomial(field, self.nvars, terms)

    def gradient(self) -> List["Polynomial"]:
        return [self.partial_derivative(i) for i in range(self.nvars)]

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        """Split into degree parts; keys are the occurring degrees."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no degree decomposition")
        buckets: Dict[int, Dict[Monomial, FieldElement]] = {}
        for mono, coeff in self.terms.items():
            buckets.setdefault(mono_degree(mono), {})[mono] = coeff
        return {d: Polynomial(self.field, self.nvars, t)
                for d, t in sorted(buckets.items())}

    def homogeneous_component(self, degree: int) -> "Polynomial":
        terms = {m: c for m, c in self.terms.items() if mono_degree(m) == degree}
        return Polynomial(self.field, self.nvars, terms)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring map x_i -> images[i]; images live in a common ring over the
        same field (possibly a different number of variables)."""
        assert len(images) == self.nvars
        field = self.field
        target_nvars = images[0].nvars if images else self.nvars
        result = Polynomial.zero(field, target_nvars)
        pow_cache: Dict[Tuple[int, int], Polynomial] = {}
        for mono, coeff in self.terms.items():
            term = Polynomial.constant(field, target_nvars, coeff)
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                key = (i, e)
                p = pow_cache.get(key)
                if p is None:
                    p = images[i] ** e
                    pow_cache[key] = p
                term = term * p
            result = result + term
        return result

    def apply_matrix(self, matrix) -> "Polynomial":
        """Substitute x_i -> sum_j matrix[i][j] x_j (linear coordinate change)."""
        n = self.nvars
        images = [Polynomial.linear(self.field, matrix[i]) for i in range(n)]
        assert all(len(matrix[i]) == n for i in range(n))
        return self.substitute(images)

    def dehomogenize(self, index: int = 0) -> "Polynomial":
        """Set x_index = 1 and drop that variable (nvars shrinks by one)."""
        terms: Dict[Monomial, FieldElement] = {}
        for mono, coeff in self.terms.items():
            key = mono[:index] + mono[index + 1:]
            acc = terms.get(key)
            s = coeff if acc is None else acc + coeff
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return Polynomial(self.field, self.nvars - 1, terms)

    def extend_variables(self, nvars: int, offset: int = 0) -> "Polynomial":
        """Reindex into a larger ring: x_i -> x_(i + offset)."""
        assert offset + self.nvars <= nvars
        pre = (0,) * offset
        post = (0,) * (nvars - offset - self.nvars)
        terms = {pre + m + post: c for m, c in self.terms.items()}
        return Polynomial(self.field, nvars, terms)

    def map_coefficients(self, target: Field, convert) -> "Polynomial":
        terms = {}
        for mono, coeff in self.terms.items():
            c = convert(coeff)
            if not c.is_zero():
                terms[mono] = c
        return Polynomial(target, self.nvars, terms)

    # -- printing ---------------------------------------------------------

    def to_text(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = list(names) if names is not None else default_names(self.nvars)
        assert len(names) == self.nvars
        rational = isinstance(self.field, RationalField)
        pieces = []
        for mono, coeff in self.sorted_terms(GREVLEX):
            if rational:
                negative = coeff.payload < 0
                mag = -coeff.payload if negative else coeff.payload
                coeff_str = str(mag)
                is_unit = mag == 1
            else:
                negative = False
                coeff_str = self.field.element_str(coeff.payload)
                if any(ch in coeff_str for ch in "+- "):
                    coeff_str = f"({coeff_str})"  # multi-term extension coefficient
                is_unit = coeff == self.field.one()
            factors = []
            for i, e in enumerate(mono):
                if e == 0:
                    continue
                factors.append(names[i] if e == 1 else f"{names[i]}^{e}")
            if not factors:
                body = coeff_str
            elif is_unit:
                body = "*".join(factors)
            else:
                body = "*".join([coeff_str] + factors)
            pieces.append((negative, body))
        first_neg, first_body = pieces[0]
        out = ("-" if first_neg else "") + first_body
        for negative, body in pieces[1:]:
            out += (" - " if negative else " + ") + body
        return out

    def __repr__(self):
        return f"Polynomial({self.to_text()})"


def default_names(nvars: int) -> List[str]:
    return [f"x{i}" for i in range(nvars)]


def linear_substitute(f: Polynomial, matrix) -> Polynomial:
    """f composed with the invertible linear change x -> M x.

    Raises SingularMatrix when M is not invertible; use apply_matrix
    directly for maps already known to be invertible.
    """
    from .linalg import mat_det
    from .errors import SingularMatrix
    if mat_det(matrix).is_zero():
        raise SingularMatrix("coordinate change matrix is singular")
    return f.apply_matrix(matrix)


# ---------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|([-+*/^])|(\S)")


def _tokenize(text: str):
    tokens = []
    for match in _TOKEN_RE.finditer(text):
        pos = match.start()
        if match.group(1) is not None:
            tokens.append(("num", int(match.group(1)), pos))
        elif match.group(2) is not None:
            tokens.append(("name", match.group(2), pos))
        elif match.group(3) is not None:
            tokens.append(("op", match.group(3), pos))
        else:
            raise ParseError(f"unexpected character {match.group(4)!r}", pos)
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, names: Sequence[str], field: Field):
        self.tokens = _tokenize(text)
        self.i = 0
        self.field = field
        self.index_of = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_num(self) -> int:
        kind, value, pos = self.advance()
        if kind != "num":
            raise ParseError("expected an integer", pos)
        return value

    def parse(self) -> Polynomial:
        result = Polynomial.zero(self.field, self.nvars)
        sign = 1
        kind, value, pos = self.peek()
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            self.advance()
        result = result + self.parse_term(sign)
        while True:
            kind, value, pos = self.peek()
            if kind == "end":
                break
            if kind != "op" or value not in "+-":
                raise ParseError("expected '+' or '-' between terms", pos)
            self.advance()
            sign = -1 if value == "-" else 1
            result = result + self.parse_term(sign)
        return result

    def parse_term(self, sign: int) -> Polynomial:
        kind, value, pos = self.peek()
        # optional extra sign from the coefficient itself, e.g. "x + -2*y"
        if kind == "op" and value == "-":
            self.advance()
            sign = -sign
            kind, value, pos = self.peek()
        coeff = self.field.one()
        have_coeff = False
        if kind == "num":
            self.advance()
            numer = value
            denom = 1
            kind, value, pos = self.peek()
            if kind == "op" and value == "/":
                self.advance()
                denom = self.expect_num()
            coeff = self.field.from_fraction(Fraction(numer, denom))
            have_coeff = True
            # zero or more '*' before the first factor
            while True:
                kind, value, pos = self.peek()
                if kind == "op" and value == "*":
                    self.advance()
                else:
                    break
        exps = [0] * self.nvars
        saw_factor = False
        while True:
            kind, value, pos = self.peek()
            if kind == "name":
                self.advance()
                idx = self.index_of.get(value)
                if idx is None:
                    raise UnknownVariable(f"unknown variable {value!r} at position {pos}")
                power = 1
                kind2, value2, _ = self.peek()
                if kind2 == "op" and value2 == "^":
                    self.advance()
                    power = self.expect_num()
                exps[idx] += power
                saw_factor = True
                kind, value, pos = self.peek()
                if kind == "op" and value == "*":
                    self.advance()
                    continue
                break
            if saw_factor or have_coeff:
                break
            raise ParseError("expected a coefficient or variable", pos)
        if not saw_factor and not have_coeff:
            raise ParseError("empty term", pos)
        if sign < 0:
            coeff = -coeff
        return Polynomial.monomial(self.field, tuple(exps), coeff)


def parse_polynomial(text: str, names: Sequence[str], field: Field) -> Polynomial:
    """Parse the textual grammar; raises ParseError / UnknownVariable."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty polynomial text", 0)
    return _Parser(text, names, field).parse()


# ---------------------------------------------------------------------------
# random generation

def random_homogeneous(field: Field, nvars: int, degree: int,
                       rng: random.Random) -> Polynomial:
    """Dense random homogeneous polynomial: every degree-`degree` monomial
    gets an independent field.sample coefficient (zeros allowed)."""
    terms = {}
    for mono in monomials_of_degree(nvars, degree):
        c = field.sample(rng)
        if not c.is_zero():
            terms[mono] = c
    return Polynomial(field, nvars, terms)


def random_linear_form(field: Field, nvars: int, rng: random.Random) -> Polynomial:
    """Random nonzero linear form."""
    while True:
        f = random_homogeneous(field, nvars, 1, rng)
        if not f.is_zero():
            return f
