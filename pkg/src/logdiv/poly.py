"""Exact multivariate polynomials over the rationals.

Polynomials are immutable and live in a :class:`PolyRing`, which fixes the
variable names, a positive integer weight per variable and a monomial order
(``grevlex``, ``wgrevlex`` or ``lex``).  Coefficients are
:class:`fractions.Fraction`; arithmetic never rounds.

Text grammar accepted by :func:`parse_polynomial` (EBNF)::

    expr    = term , { ( "+" | "-" ) , term } ;
    term    = unary , { ( "*" | "/" ) , unary } ;     (* "/" only by constants *)
    unary   = { "+" | "-" } , power ;
    power   = atom , [ ( "^" | "**" ) , integer ] ;
    atom    = integer | name | "(" , expr , ")" ;
    name    = letter , { letter | digit | "_" } ;

Implicit multiplication (``2x``, ``x y``) is rejected.  Rationals are written
as quotients of integers, ``3/4*x``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

__all__ = [
    "PolyRing",
    "Polynomial",
    "ParseError",
    "PolynomialSyntaxError",
    "UnknownVariableError",
    "ExponentOverflowError",
    "parse_polynomial",
    "partial",
    "weighted_degree",
    "evaluate",
    "MAX_EXPONENT",
]

# exponents are packed into 16-bit fields (one guard bit) by the GB engine
MAX_EXPONENT = (1 << 15) - 1

ORDERS = ("grevlex", "wgrevlex", "lex")


class ParseError(ValueError):
    """Base class for polynomial input errors."""


class PolynomialSyntaxError(ParseError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariableError(ParseError):
    def __init__(self, name: str, offset: int):
        super().__init__(f"unknown variable {name!r} at offset {offset}")
        self.name = name
        self.offset = offset


class ExponentOverflowError(ParseError):
    pass


class PolyRing:
    """Polynomial ring Q[x_1..x_n] with weights and a monomial order."""

    def __init__(
        self,
        names: Sequence[str] | str,
        weights: Sequence[int] | None = None,
        order: str = "grevlex",
    ):
        if isinstance(names, str):
            names = [s for s in re.split(r"[,\s]+", names) if s]
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"variable names must be unique: {names}")
        for nm in names:
            if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", nm):
                raise ValueError(f"invalid variable name {nm!r}")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(int(w) for w in weights)
        if len(weights) != len(names) or any(w <= 0 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        if order not in ORDERS:
            raise ValueError(f"unknown monomial order {order!r}")
        if order == "grevlex" and any(w != 1 for w in weights):
            order = "wgrevlex"
        self.names = names
        self.weights = weights
        self.order = order
        self.ngens = len(names)
        self._index = {nm: i for i, nm in enumerate(names)}

    # identity -------------------------------------------------------------
    def _ident(self):
        return (self.names, self.weights, self.order)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        w = "" if all(x == 1 for x in self.weights) else f", weights={self.weights}"
        return f"PolyRing({list(self.names)}{w}, order={self.order!r})"

    # construction ---------------------------------------------------------
    def index(self, name: str) -> int:
        return self._index[name]

    def gen(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self._index[i]
        e = [0] * self.ngens
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.ngens)]

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self, {(0,) * self.ngens: c} if c else {})

    def monomial(self, exps: Sequence[int], coeff=1) -> "Polynomial":
        c = Fraction(coeff)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def __call__(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def with_order(self, order: str) -> "PolyRing":
        return PolyRing(self.names, self.weights, order)

    # ordering -------------------------------------------------------------
    def sort_key(self, e: tuple) -> tuple:
        """Key such that larger keys are larger monomials in this ring's order."""
        if self.order == "lex":
            return e
        deg = sum(w * x for w, x in zip(self.weights, e))
        return (deg,) + tuple(-x for x in reversed(e))

    def degree_of(self, e: tuple) -> int:
        return sum(w * x for w, x in zip(self.weights, e))


def _as_coeff(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    # gmpy2.mpq and friends
    try:
        return Fraction(int(c.numerator), int(c.denominator))
    except AttributeError:
        raise TypeError(f"unsupported coefficient {c!r}") from None


class Polynomial:
    """Immutable sparse polynomial; terms kept as an exponent-tuple -> Fraction map."""

    __slots__ = ("ring", "_d", "__dict__")

    def __init__(self, ring: PolyRing, terms: Mapping[tuple, object] | None = None):
        self.ring = ring
        d = {}
        if terms:
            for e, c in terms.items():
                c = _as_coeff(c)
                if c:
                    if len(e) != ring.ngens:
                        raise ValueError("exponent length does not match ring")
                    d[tuple(e)] = c
        self._d = d

    @classmethod
    def _raw(cls, ring, d):
        p = cls.__new__(cls)
        p.ring = ring
        p._d = d
        return p

    # views ----------------------------------------------------------------
    @property
    def coeffs(self) -> dict:
        return dict(self._d)

    @cached_property
    def terms(self) -> list[tuple[tuple, Fraction]]:
        key = self.ring.sort_key
        return sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def __bool__(self):
        return bool(self._d)

    def is_constant(self) -> bool:
        return not self._d or (len(self._d) == 1 and not any(next(iter(self._d))))

    def constant_coeff(self) -> Fraction:
        return self._d.get((0,) * self.ring.ngens, Fraction(0))

    def lead_term(self):
        if not self._d:
            raise ValueError("zero polynomial has no lead term")
        return self.terms[0]

    def lead_monomial(self) -> tuple:
        return self.lead_term()[0]

    def lead_coeff(self) -> Fraction:
        return self.lead_term()[1]

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self._d.get(tuple(e), Fraction(0))

    def total_degree(self) -> int:
        if not self._d:
            return -1
        return max(sum(e) for e in self._d)

    def degree(self) -> int:
        """Maximal weighted degree of a term (-1 for zero)."""
        if not self._d:
            return -1
        return max(self.ring.degree_of(e) for e in self._d)

    def min_degree(self) -> int:
        return min(self.ring.degree_of(e) for e in self._d)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self._d), default=-1)

    def variables(self) -> list[int]:
        used = set()
        for e in self._d:
            used.update(i for i, x in enumerate(e) if x)
        return sorted(used)

    def is_homogeneous(self) -> bool:
        return weighted_degree(self) is not None

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        out: dict[int, dict] = {}
        for e, c in self._d.items():
            out.setdefault(self.ring.degree_of(e), {})[e] = c
        return {k: Polynomial._raw(self.ring, v) for k, v in sorted(out.items())}

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        return self.ring.constant(other)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        d = dict(self._d)
        for e, c in other._d.items():
            v = d.get(e, 0) + c
            if v:
                d[e] = v
            else:
                d.pop(e, None)
        return Polynomial._raw(self.ring, d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self._d.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = _as_coeff(other)
            except TypeError:
                return NotImplemented
            if not c:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: v * c for e, v in self._d.items()})
        other = self._coerce(other)
        d: dict = {}
        for e1, c1 in self._d.items():
            for e2, c2 in other._d.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                d[e] = d.get(e, 0) + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in d.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero constant, or exact division by a polynomial."""
        if isinstance(other, Polynomial):
            if other.is_constant():
                other = other.constant_coeff()
            else:
                q, r = self.divmod(other)
                if r:
                    raise ValueError("polynomial division is not exact")
                return q
        c = _as_coeff(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divmod(self, g: "Polynomial"):
        """Multivariate division by a single polynomial in the ring order."""
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        lm, lc = g.lead_term()
        key = self.ring.sort_key
        rem = dict(self._d)
        quo: dict = {}
        out: dict = {}
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            if all(a >= b for a, b in zip(e, lm)):
                m = tuple(a - b for a, b in zip(e, lm))
                q = c / lc
                quo[m] = quo.get(m, 0) + q
                for e2, c2 in g._d.items():
                    t = tuple(a + b for a, b in zip(m, e2))
                    v = rem.get(t, 0) - q * c2
                    if v:
                        rem[t] = v
                    else:
                        rem.pop(t, None)
            else:
                out[e] = c
                del rem[e]
        return Polynomial(self.ring, quo), Polynomial._raw(self.ring, out)

    # comparisons ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._d == other._d
        try:
            c = _as_coeff(other)
        except TypeError:
            return NotImplemented
        return self._d == ({(0,) * self.ring.ngens: c} if c else {})

    def __hash__(self):
        return hash((self.ring, frozenset(self._d.items())))

    # calculus and evaluation ------------------------------------------------
    def diff(self, i: int | str) -> "Polynomial":
        if isinstance(i, str):
            i = self.ring.index(i)
        d = {}
        for e, c in self._d.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1 :]
                d[e2] = c * k
        return Polynomial._raw(self.ring, d)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate(self, point)

    def subs(self, values: Mapping) -> "Polynomial":
        """Substitute polynomials (or constants) for variables (by index or name)."""
        ring = self.ring
        images = []
        for i, nm in enumerate(ring.names):
            v = values.get(i, values.get(nm))
            if v is None:
                images.append(ring.gen(i))
            elif isinstance(v, Polynomial):
                images.append(v)
            else:
                images.append(ring.constant(v))
        return self.compose(images)

    def compose(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Return self(images[0], ..., images[n-1]); images may live in another ring."""
        if not images:
            return self
        target = images[0].ring
        result = target.zero()
        powers: list[dict[int, Polynomial]] = [dict() for _ in images]

        def pw(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        for e, c in self._d.items():
            t = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            result = result + t
        return result

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive integral."""
        from math import gcd

        if not self._d:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._d.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        """Integral, primitive, positive leading coefficient."""
        if not self._d:
            return self
        c = self.content()
        if self.lead_coeff() < 0:
            c = -c
        return self * (1 / c)

    def monic(self) -> "Polynomial":
        return self * (1 / self.lead_coeff())

    # printing -------------------------------------------------------------
    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def format_polynomial(p: Polynomial) -> str:
    if not p._d:
        return "0"
    names = p.ring.names
    parts = []
    for e, c in p.terms:
        mon = "*".join(
            (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
        )
        a = abs(c)
        cs = str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
        if mon:
            body = mon if a == 1 else f"{cs}*{mon}"
        else:
            body = cs
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ----------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    n = len(text)
    toks = []
    while pos < n:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            # point at the offending character, skipping whitespace
            off = pos
            while off < n and text[off].isspace():
                off += 1
            raise PolynomialSyntaxError(f"unexpected character {text[off]!r}", off)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            toks.append(("op", m.group(3), start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise PolynomialSyntaxError(f"expected {op!r}", t[2])

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise PolynomialSyntaxError("empty expression", 0)
        p = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise PolynomialSyntaxError(f"unexpected token {t[1]!r}", t[2])
        return p

    def expr(self):
        p = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = p + q if t[1] == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in ("*", "/"):
                self.take()
                q = self.unary()
                if t[1] == "*":
                    p = p * q
                else:
                    if not q.is_constant() or q.is_zero():
                        raise PolynomialSyntaxError(
                            "division only by nonzero constants", t[2]
                        )
                    p = p * (1 / q.constant_coeff())
            elif t[0] in ("num", "name") or (t[0] == "op" and t[1] == "("):
                raise PolynomialSyntaxError("implicit multiplication is not allowed", t[2])
            else:
                return p

    def unary(self):
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            p = self.unary()
            return -p if t[1] == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] in ("^", "**"):
            self.take()
            e = self.take()
            if e[0] != "num":
                raise PolynomialSyntaxError("exponent must be a non-negative integer", e[2])
            k = int(e[1])
            if k > MAX_EXPONENT:
                raise ExponentOverflowError(
                    f"exponent {k} exceeds {MAX_EXPONENT} at offset {e[2]}"
                )
            result = base ** k
            if result and max(max(x) for x in result._d) > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent overflow at offset {e[2]}")
            return result
        return base

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return self.ring.constant(int(t[1]))
        if t[0] == "name":
            if t[1] not in self.ring._index:
                raise UnknownVariableError(t[1], t[2])
            return self.ring.gen(t[1])
        if t[0] == "op" and t[1] == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        if t[0] == "end":
            raise PolynomialSyntaxError("unexpected end of input", t[2])
        raise PolynomialSyntaxError(f"unexpected token {t[1]!r}", t[2])


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Raises :class:`PolynomialSyntaxError` (with the offending offset),
    :class:`UnknownVariableError` or :class:`ExponentOverflowError`.
    """
    return _Parser(text, ring).parse()


# ----------------------------------------------------------------------------
# free-function forms of the basic operations


def partial(f: Polynomial, i: int | str) -> Polynomial:
    return f.diff(i)


def weighted_degree(f: Polynomial) -> int | None:
    """Common weighted degree of all terms, ``None`` if inhomogeneous.

    Raises ``ValueError`` for the zero polynomial, whose degree is undefined.
    """
    if not f._d:
        raise ValueError("degree of the zero polynomial is undefined")
    degs = {f.ring.degree_of(e) for e in f._d}
    return degs.pop() if len(degs) == 1 else None


def evaluate(f: Polynomial, point: Sequence) -> Fraction:
    if len(point) != f.ring.ngens:
        raise ValueError("point has wrong length")
    pt = [Fraction(v) if not isinstance(v, Fraction) else v for v in point]
    total = Fraction(0)
    for e, c in f._d.items():
        t = c
        for v, k in zip(pt, e):
            if k:
                t *= v**k
                if not t:
                    break
        total += t
    return total


def product(polys: Iterable[Polynomial], ring: PolyRing | None = None) -> Polynomial:
    polys = list(polys)
    if ring is None:
        ring = polys[0].ring
    out = ring.one()
    for p in polys:
        out = out * p
    return out
