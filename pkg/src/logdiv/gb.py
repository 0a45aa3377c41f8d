"""Submodules of graded free modules and their Gröbner bases.

The public layer over the packed-monomial engine in :mod:`logdiv._engine`:
free modules with degree shifts, module elements, submodules and ideals
with a cached reduced Gröbner basis, normal forms, syzygies, colon ideals,
saturation, intersections, Krull dimension and Hilbert series.

Output Gröbner bases are normalized to integral primitive elements with a
positive leading coefficient and sorted by leading monomial, so identical
inputs give identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from gmpy2 import mpq

from . import _engine as E
from .poly import Polynomial, PolyRing

__all__ = [
    "FreeModule",
    "ModuleElement",
    "Submodule",
    "Ideal",
    "HilbertSeries",
    "groebner",
    "normal_form",
    "syzygies",
    "colon",
    "saturate",
    "intersect",
    "krull_dimension",
    "hilbert_series",
    "InhomogeneousError",
]


class InhomogeneousError(ValueError):
    """A graded operation was applied to an inhomogeneous presentation."""


def _to_mpq(c: Fraction):
    return mpq(c.numerator, c.denominator)


def _to_frac(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


# ---------------------------------------------------------------------------
# free modules and elements


class FreeModule:
    """Graded free module ``R(-s_1) + ... + R(-s_r)``.

    ``shifts[j]`` is the degree of the basis vector ``e_j``.  ``order`` is
    ``"top"`` (term over position) or ``"pot"`` (position over term).
    """

    def __init__(self, ring: PolyRing, rank: int, shifts: Sequence[int] | None = None,
                 order: str = "top"):
        if rank < 1:
            raise ValueError("rank must be positive")
        shifts = tuple(int(s) for s in shifts) if shifts is not None else (0,) * rank
        if len(shifts) != rank:
            raise ValueError("need one shift per basis element")
        if order not in ("top", "pot"):
            raise ValueError(f"unknown module order {order!r}")
        self.ring = ring
        self.rank = rank
        self.shifts = shifts
        self.order = order

    def _ident(self):
        return (self.ring, self.rank, self.shifts, self.order)

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        return f"FreeModule({self.ring!r}, rank={self.rank}, shifts={self.shifts})"

    @cached_property
    def packer(self) -> E.Packer:
        return E.Packer(self.ring.order, self.ring.weights, self.shifts, self.order)

    def element(self, components: Sequence) -> "ModuleElement":
        comps = []
        for c in components:
            if isinstance(c, Polynomial):
                if c.ring != self.ring:
                    raise ValueError("component from a different ring")
                comps.append(c)
            elif isinstance(c, str):
                comps.append(self.ring(c))
            else:
                comps.append(self.ring.constant(c))
        if len(comps) != self.rank:
            raise ValueError(f"expected {self.rank} components, got {len(comps)}")
        return ModuleElement(self, tuple(comps))

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, tuple(self.ring.zero() for _ in range(self.rank)))

    def basis(self, j: int) -> "ModuleElement":
        comps = [self.ring.zero()] * self.rank
        comps[j] = self.ring.one()
        return ModuleElement(self, tuple(comps))

    def submodule(self, gens: Iterable) -> "Submodule":
        return Submodule(self, gens)

    def hilbert_series(self) -> "HilbertSeries":
        num = {}
        for s in self.shifts:
            num[s] = num.get(s, 0) + 1
        return HilbertSeries(num, self.ring.weights)

    # packing ----------------------------------------------------------------
    def pack(self, v: "ModuleElement", packer: E.Packer | None = None, offset: int = 0) -> dict:
        p = packer or self.packer
        out = {}
        for j, comp in enumerate(v.components):
            for e, c in comp._d.items():
                out[p.encode(e, j + offset)] = _to_mpq(c)
        return out

    def unpack(self, vec: dict, packer: E.Packer | None = None, offset: int = 0) -> "ModuleElement":
        p = packer or self.packer
        parts = [dict() for _ in range(self.rank)]
        for k, c in vec.items():
            e, pos = p.decode(k)
            parts[pos - offset][e] = _to_frac(c)
        return ModuleElement(self, tuple(Polynomial._raw(self.ring, d) for d in parts))


@dataclass(frozen=True, eq=False)
class ModuleElement:
    module: FreeModule
    components: tuple

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, j):
        return self.components[j]

    def __len__(self):
        return len(self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __bool__(self):
        return not self.is_zero()

    def _check(self, other):
        if not isinstance(other, ModuleElement) or other.module != self.module:
            raise TypeError("elements of different modules")

    def __add__(self, other):
        self._check(other)
        return ModuleElement(self.module, tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other):
        self._check(other)
        return ModuleElement(self.module, tuple(a - b for a, b in zip(self, other)))

    def __neg__(self):
        return ModuleElement(self.module, tuple(-a for a in self))

    def __mul__(self, c):
        return ModuleElement(self.module, tuple(a * c for a in self))

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ModuleElement)
            and other.module == self.module
            and all(a == b for a, b in zip(self, other))
        )

    def __hash__(self):
        return hash(tuple(hash(c) for c in self.components))

    def degrees(self) -> set:
        out = set()
        for c, s in zip(self.components, self.module.shifts):
            for e in c._d:
                out.add(self.module.ring.degree_of(e) + s)
        return out

    def degree(self) -> int | None:
        """Degree if homogeneous (``None`` for inhomogeneous or zero elements)."""
        d = self.degrees()
        return d.pop() if len(d) == 1 else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def lead(self):
        """Leading ``(exponents, position)`` in the module order, or ``None``."""
        vec = self.module.pack(self)
        if not vec:
            return None
        return self.module.packer.decode(max(vec))

    def dot(self, other: "ModuleElement") -> Polynomial:
        out = self.module.ring.zero()
        for a, b in zip(self, other):
            out = out + a * b
        return out

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.components) + ")"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# Hilbert series


def _poly_mul(a: dict, b: dict) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_add(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class HilbertSeries:
    """Hilbert series ``numerator(T) / prod_i (1 - T^{w_i})``.

    ``numerator`` maps exponents (possibly negative) to integers.  For the
    standard grading the denominator is ``(1-T)^e`` and :meth:`simplified`
    cancels common factors of ``1 - T``.
    """

    numerator: dict
    weights: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "numerator", {k: v for k, v in self.numerator.items() if v})
        object.__setattr__(self, "weights", tuple(sorted(self.weights)))

    @property
    def denominator_exponent(self) -> int:
        return len(self.weights)

    def simplified(self) -> "HilbertSeries":
        num = dict(self.numerator)
        ws = list(self.weights)
        while num and 1 in ws and sum(num.values()) == 0:
            # divide by (1 - T)
            q = {}
            carry = 0
            for k in range(min(num), max(num) + 1):
                carry += num.get(k, 0)
                if carry:
                    q[k] = carry
            num = q
            ws.remove(1)
        if not num:
            ws = []
        return HilbertSeries(num, tuple(ws))

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, -1)

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self._combine(other, 1)

    def _combine(self, other, sign):
        # bring both to the common denominator prod (1 - T^w) over the union
        mine, theirs = list(self.weights), list(other.weights)
        common = []
        for w in sorted(set(mine) | set(theirs)):
            common += [w] * max(mine.count(w), theirs.count(w))
        a = self._lift(common)
        b = other._lift(common)
        return HilbertSeries(_poly_add(a, b, sign), tuple(common)).simplified()

    def _lift(self, common: list) -> dict:
        rest = list(common)
        for w in self.weights:
            rest.remove(w)
        num = dict(self.numerator)
        for w in rest:
            num = _poly_mul(num, {0: 1, w: -1})
        return num

    def shift(self, k: int) -> "HilbertSeries":
        return HilbertSeries({d + k: v for d, v in self.numerator.items()}, self.weights)

    def scale(self, c: int) -> "HilbertSeries":
        return HilbertSeries({d: c * v for d, v in self.numerator.items()}, self.weights)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        a, b = self.simplified(), other.simplified()
        return a.numerator == b.numerator and a.weights == b.weights

    def __hash__(self):
        s = self.simplified()
        return hash((tuple(sorted(s.numerator.items())), s.weights))

    def is_polynomial(self) -> bool:
        return not self.simplified().weights

    def coefficients(self, upto: int) -> dict:
        """Hilbert function values for degrees up to ``upto``."""
        num = self.numerator
        if not num:
            return {}
        lo = min(num)
        # power series of 1/prod(1 - T^w) up to upto - lo
        span = upto - lo
        if span < 0:
            return {}
        ser = [0] * (span + 1)
        ser[0] = 1
        for w in self.weights:
            for k in range(w, span + 1):
                ser[k] += ser[k - w]
        out = {}
        for t in range(lo, upto + 1):
            v = 0
            for d, c in num.items():
                if 0 <= t - d <= span:
                    v += c * ser[t - d]
            if v:
                out[t] = v
        return out

    def as_polynomial(self) -> dict:
        s = self.simplified()
        if s.weights:
            raise ValueError("series is not a polynomial")
        return dict(sorted(s.numerator.items()))

    def __str__(self):
        s = self.simplified()
        num = _format_laurent(s.numerator)
        if not s.weights:
            return num
        if all(w == 1 for w in s.weights):
            den = "(1-T)" + (f"^{len(s.weights)}" if len(s.weights) > 1 else "")
        else:
            den = "*".join(f"(1-T^{w})" if w > 1 else "(1-T)" for w in s.weights)
        return f"({num})/{den}"

    def to_json(self) -> dict:
        s = self.simplified()
        return {
            "numerator": [[k, v] for k, v in sorted(s.numerator.items())],
            "denominator_weights": list(s.weights),
        }


def _format_laurent(num: dict) -> str:
    if not num:
        return "0"
    parts = []
    for k in sorted(num):
        c = num[k]
        mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
        if mono:
            coef = "" if abs(c) == 1 else f"{abs(c)}*"
        else:
            coef = str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append((sign, coef + mono))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def monomial_ideal_numerator(gens: list, weights: tuple) -> dict:
    """Numerator ``N`` with ``HS(R/I) = N / prod(1 - T^w)`` for a monomial ideal."""
    gens = _minimalize([tuple(g) for g in gens])
    return _hs_num(gens, weights)


def _minimalize(gens: list) -> list:
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _hs_num(gens: list, weights: tuple) -> dict:
    if not gens:
        return {0: 1}
    n = len(weights)

    def wdeg(e):
        return sum(w * x for w, x in zip(weights, e))

    if any(all(x == 0 for x in g) for g in gens):
        return {}
    # base case: pairwise coprime supports
    seen = [0] * n
    coprime = True
    for g in gens:
        for i, x in enumerate(g):
            if x:
                if seen[i]:
                    coprime = False
                    break
                seen[i] = 1
        if not coprime:
            break
    if coprime:
        num = {0: 1}
        for g in gens:
            num = _poly_mul(num, {0: 1, wdeg(g): -1})
        return num
    # pivot on the variable occurring in most generators
    counts = [0] * n
    for g in gens:
        for i, x in enumerate(g):
            if x:
                counts[i] += 1
    i = max(range(n), key=lambda k: counts[k])
    # exponents of generators that are not pure powers of x_i; the median
    # stays below any pure power x_i^b in I, so x_i^a is not in I
    exps = sorted(g[i] for g in gens if g[i] and sum(1 for x in g if x) > 1)
    a = exps[(len(exps) - 1) // 2]
    piv = tuple(a if k == i else 0 for k in range(n))
    # I + (x_i^a)
    with_p = _minimalize(gens + [piv])
    # I : x_i^a
    colon_gens = _minimalize(
        [tuple(max(x - a, 0) if k == i else x for k, x in enumerate(g)) for g in gens]
    )
    return _poly_add(_hs_num(with_p, weights), _poly_mul({wdeg(piv): 1}, _hs_num(colon_gens, weights)))


# ---------------------------------------------------------------------------
# submodules


class Submodule:
    """Finitely generated submodule of a free module with a cached Gröbner basis."""

    def __init__(self, module: FreeModule, gens: Iterable):
        self.module = module
        gl = []
        for g in gens:
            if not isinstance(g, ModuleElement):
                g = module.element(g if isinstance(g, (list, tuple)) else [g])
            elif g.module != module:
                raise ValueError("generator from a different free module")
            gl.append(g)
        self.gens = tuple(gl)
        self._gb = None  # engine result

    @property
    def ring(self) -> PolyRing:
        return self.module.ring

    def __repr__(self):
        return f"Submodule(rank={self.module.rank}, gens={list(self.gens)})"

    # Gröbner basis -----------------------------------------------------------
    def _engine_result(self) -> E.GBResult:
        if self._gb is None:
            p = self.module.packer
            vecs = [self.module.pack(g) for g in self.gens]
            self._gb = E.buchberger(p, vecs)
        return self._gb

    def groebner(self) -> "Submodule":
        self._engine_result()
        return self

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    @cached_property
    def gb(self) -> list:
        """Reduced Gröbner basis, integral primitive, sorted by leading monomial."""
        res = self._engine_result()
        return [self.module.unpack(E.normalize_int(e.vec)) for e in res.basis]

    @cached_property
    def leads(self) -> list:
        p = self.module.packer
        return [p.decode(e.lead) for e in self._engine_result().basis]

    def normal_form(self, v) -> ModuleElement:
        v = self._coerce(v)
        basis = self._engine_result().basis
        rem = E.reduce_full(self.module.packer, basis, self.module.pack(v))
        return self.module.unpack(rem)

    def contains(self, v) -> bool:
        return self.normal_form(v).is_zero()

    __contains__ = contains

    def contains_submodule(self, other: "Submodule") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Submodule) or other.module != self.module:
            return NotImplemented
        return [str(g) for g in self.gb] == [str(g) for g in other.gb]

    __hash__ = None

    def _coerce(self, v) -> ModuleElement:
        if isinstance(v, ModuleElement):
            if v.module != self.module:
                raise ValueError("element of a different free module")
            return v
        if isinstance(v, (list, tuple)):
            return self.module.element(v)
        return self.module.element([v])

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.gens)

    def is_whole(self) -> bool:
        """True if the submodule is the whole free module."""
        zero = (0,) * self.ring.ngens
        pos = {p for e, p in self.leads if e == zero}
        return len(pos) == self.module.rank

    # generators --------------------------------------------------------------
    def mingens(self) -> list:
        """Minimal homogeneous generators (graded Nakayama); input must be homogeneous.

        For inhomogeneous input the nonzero generators with redundant ones
        removed greedily are returned (a generating set, not necessarily
        minimal).
        """
        gens = [g for g in self.gens if not g.is_zero()]
        if self.is_homogeneous():
            p = self.module.packer
            order = sorted(range(len(gens)), key=lambda i: (gens[i].degree(), i))
            vecs = [self.module.pack(gens[i]) for i in order]
            res = E.buchberger(p, vecs, homogeneous=True)
            if self._gb is None:
                self._gb = res
            chosen = [gens[order[i]] for i in res.minimal]
            return [self.module.unpack(E.normalize_int(self.module.pack(g))) for g in chosen]
        out = list(gens)
        k = 0
        while k < len(out):
            rest = Submodule(self.module, out[:k] + out[k + 1:])
            if rest.gens and rest.contains(out[k]):
                out.pop(k)
            else:
                k += 1
        return out

    def minimal_submodule(self) -> "Submodule":
        m = Submodule(self.module, self.mingens())
        m._gb = self._gb
        return m

    # combinatorics -------------------------------------------------------------
    def lead_monomials(self) -> dict:
        """Leading monomials grouped by position."""
        out = {j: [] for j in range(self.module.rank)}
        for e, pos in self.leads:
            out[pos].append(e)
        return out

    def quotient_hilbert_series(self) -> HilbertSeries:
        """Hilbert series of ``F / M`` (requires a homogeneous presentation)."""
        if not self.is_homogeneous():
            raise InhomogeneousError("Hilbert series needs homogeneous generators")
        w = self.ring.weights
        num = {}
        for j, mons in self.lead_monomials().items():
            part = monomial_ideal_numerator(mons, w)
            num = _poly_add(num, {d + self.module.shifts[j]: c for d, c in part.items()})
        return HilbertSeries(num, w).simplified()

    def hilbert_series(self) -> HilbertSeries:
        """Hilbert series of the submodule ``M`` itself."""
        return (self.module.hilbert_series() - self.quotient_hilbert_series()).simplified()

    def quotient_dimension(self) -> int:
        """Krull dimension of ``F / M`` (``-1`` for the zero quotient)."""
        n = self.ring.ngens
        best = -1
        for j, mons in self.lead_monomials().items():
            best = max(best, _independent_dim(mons, n))
        return best

    # constructions ----------------------------------------------------------------
    def syzygies(self) -> "Submodule":
        return syzygies(self.gens)

    def __add__(self, other: "Submodule") -> "Submodule":
        if other.module != self.module:
            raise ValueError("different free modules")
        return type(self)._make(self.module, self.gens + other.gens)

    @classmethod
    def _make(cls, module, gens):
        return Submodule(module, gens)

    def colon(self, g: Polynomial) -> "Submodule":
        return colon(self, g)

    def intersect(self, other: "Submodule") -> "Submodule":
        return intersect(self, other)

    def image(self, vectors: Sequence[ModuleElement], target: FreeModule) -> "Submodule":
        """Image of this submodule of ``R^k`` under the map ``e_j -> vectors[j]``."""
        out = []
        for g in self.gens:
            acc = target.zero()
            for c, v in zip(g.components, vectors):
                if not c.is_zero():
                    acc = acc + v * c
            out.append(acc)
        return Submodule(target, out)


def _independent_dim(mons: list, n: int) -> int:
    """Max size of a variable set containing no support of a monomial (``-1`` if unit)."""
    if any(all(x == 0 for x in m) for m in mons):
        return -1
    supports = {sum(1 << i for i, x in enumerate(m) if x) for m in mons}
    supports = sorted(supports)
    best = 0
    full = (1 << n) - 1
    # complements: a set S is independent iff no support is a subset of S
    for s in range(full + 1):
        size = bin(s).count("1")
        if size <= best:
            continue
        if all((sup & s) != sup for sup in supports):
            best = size
    return best


class Ideal(Submodule):
    """Ideal of a polynomial ring (a submodule of the rank-one free module)."""

    def __init__(self, ring_or_module, gens: Iterable = ()):
        if isinstance(ring_or_module, PolyRing):
            module = FreeModule(ring_or_module, 1)
        else:
            module = ring_or_module
            if module.rank != 1 or module.shifts != (0,):
                raise ValueError("an ideal lives in the unshifted rank-one module")
        gl = []
        for g in gens:
            if isinstance(g, str):
                g = module.ring(g)
            if isinstance(g, Polynomial):
                g = ModuleElement(module, (g,))
            gl.append(g)
        super().__init__(module, gl)

    @classmethod
    def _make(cls, module, gens):
        return Ideal(module, gens)

    @property
    def polys(self) -> list:
        return [g[0] for g in self.gens]

    @property
    def gb_polys(self) -> list:
        return [g[0] for g in self.gb]

    def mingens_polys(self) -> list:
        return [g[0] for g in self.mingens()]

    def krull_dimension(self) -> int:
        return self.quotient_dimension()

    def colon(self, g) -> "Ideal":
        return Ideal(self.module, colon(self, g).gens)

    def saturate(self, J) -> "Ideal":
        return saturate(self, J)

    def is_unit(self) -> bool:
        return self.is_whole()

    def __repr__(self):
        return f"Ideal({[str(p) for p in self.polys]})"


# ---------------------------------------------------------------------------
# syzygies, colon, intersection, saturation


def syzygies(
    vectors: Sequence[ModuleElement],
    verify: bool = True,
    degrees: Sequence[int] | None = None,
) -> Submodule:
    """Syzygy module ``{a : sum a_j v_j = 0}`` as a submodule of ``R^k``.

    Computed from a Gröbner basis of the graph module ``(v_j | e_j)`` in a
    block order that eliminates the first summand.  The target ``R^k`` is
    graded by ``deg v_j`` when the inputs are homogeneous.  Every returned
    syzygy is checked against the input.  ``degrees`` overrides the grading
    of ``R^k`` (needed when some inputs are zero).
    """
    vectors = list(vectors)
    if not vectors:
        raise ValueError("need at least one vector")
    F = vectors[0].module
    ring = F.ring
    k = len(vectors)
    homog = all(v.is_homogeneous() for v in vectors)
    sdeg = [v.degree() if (homog and not v.is_zero()) else 0 for v in vectors]
    if not homog:
        sdeg = [max(v.degrees()) if not v.is_zero() else 0 for v in vectors]
    if degrees is not None:
        sdeg = list(degrees)
    target = FreeModule(ring, k, sdeg)
    r = F.rank
    p = E.Packer(
        ring.order,
        ring.weights,
        tuple(F.shifts) + tuple(sdeg),
        "block",
        blocks=[1] * r + [0] * k,
    )
    gens = []
    for j, v in enumerate(vectors):
        vec = F.pack(v, p)
        vec[p.encode((0,) * ring.ngens, r + j)] = mpq(1)
        gens.append(vec)
    res = E.buchberger(p, gens, homogeneous=homog or None)
    syz = []
    for e in res.basis:
        if e.pos >= r:
            syz.append(target.unpack(E.normalize_int(e.vec), p, offset=r))
    out = Submodule(target, syz)
    if verify:
        for s in syz:
            _check_syzygy(s, vectors)
    return out


def _check_syzygy(s: ModuleElement, vectors):
    F = vectors[0].module
    acc = F.zero()
    for c, v in zip(s.components, vectors):
        if not c.is_zero():
            acc = acc + v * c
    if not acc.is_zero():
        raise AssertionError("syzygy verification failed")


def groebner(M: Submodule) -> Submodule:
    return M.groebner()


def normal_form(v, M: Submodule) -> ModuleElement:
    return M.normal_form(v)


def krull_dimension(I: Submodule) -> int:
    return I.quotient_dimension()


def hilbert_series(M, N: Submodule | None = None) -> HilbertSeries:
    """Hilbert series of ``F/M``, of a free module, or of the subquotient ``M/N``.

    ``hilbert_series(F)`` for a :class:`FreeModule`; ``hilbert_series(M)``
    for the quotient ``F/M``; ``hilbert_series(M, N)`` for ``M/N`` with
    ``N`` contained in ``M``.
    """
    if isinstance(M, FreeModule):
        return M.hilbert_series()
    if N is None:
        return M.quotient_hilbert_series()
    if not M.contains_submodule(N):
        raise ValueError("subquotient needs N contained in M")
    return (N.quotient_hilbert_series() - M.quotient_hilbert_series()).simplified()


def colon(I: Submodule, g) -> Submodule:
    """``I : g = {h in F : g h in I}``."""
    F = I.module
    if isinstance(g, str):
        g = F.ring(g)
    if isinstance(g, Polynomial) is False:
        g = F.ring.constant(g)
    if g.is_zero():
        raise ValueError("colon by zero")
    if g.is_constant():
        return Submodule(F, I.gens) if not isinstance(I, Ideal) else Ideal(F, I.gens)
    gens = [g for g in I.gens if not g.is_zero()]
    if not gens:
        return I._make(F, [])
    vecs = [F.basis(j) * g for j in range(F.rank)] + gens
    S = syzygies(vecs)
    out = []
    for s in S.gens:
        out.append(ModuleElement(F, tuple(s.components[: F.rank])))
    # keep the result graded as a submodule of F
    return I._make(F, [v for v in out if not v.is_zero()])


def intersect(I: Submodule, J: Submodule) -> Submodule:
    """``I ∩ J`` for submodules of the same free module."""
    F = I.module
    if J.module != F:
        raise ValueError("different free modules")
    a = [g for g in I.gens if not g.is_zero()]
    b = [g for g in J.gens if not g.is_zero()]
    if not a or not b:
        return I._make(F, [])
    S = syzygies(a + b)
    out = []
    for s in S.gens:
        acc = F.zero()
        for c, v in zip(s.components[: len(a)], a):
            if not c.is_zero():
                acc = acc + v * c
        if not acc.is_zero():
            out.append(acc)
    return I._make(F, out)


def saturate(I: Submodule, J, *, max_rounds: int = 64) -> Submodule:
    """``I : J^∞`` for an ideal ``J`` (given as :class:`Ideal` or polynomials).

    Saturation by each generator is computed by iterated colons until the
    Gröbner basis stabilizes; the results are intersected.  Homogeneous
    ideals saturated by the maximal ideal of the variables use a faster
    route described in :func:`saturate_irrelevant`.
    """
    from .budget import BudgetExhausted

    F = I.module
    if isinstance(J, Submodule):
        jg = [g[0] for g in J.gens if not g.is_zero()]
    else:
        jg = [F.ring(g) if isinstance(g, str) else g for g in J]
        jg = [g for g in jg if not g.is_zero()]
    if not jg:
        raise ValueError("saturation by the zero ideal")
    ring = F.ring
    if (
        isinstance(I, Ideal)
        and I.is_homogeneous()
        and sorted(str(g) for g in jg) == sorted(str(x) for x in ring.gens())
    ):
        return saturate_irrelevant(I)
    result = None
    for g in jg:
        cur = I
        for _ in range(max_rounds):
            nxt = colon(cur, g)
            if nxt == cur:
                break
            cur = nxt
        else:
            raise BudgetExhausted("saturation rounds", max_rounds)
        result = cur if result is None else intersect(result, cur)
    return I._make(F, result.gb)


def _saturate_by_last_variable(I: Ideal) -> Ideal:
    """``I : x_n^∞`` for homogeneous ``I`` in grevlex with ``x_n`` last.

    In grevlex the last variable divides the leading term of a homogeneous
    polynomial only if it divides the polynomial, so dividing a Gröbner basis
    by the largest power of ``x_n`` gives generators of the saturation.
    """
    ring = I.ring
    n = ring.ngens
    out = []
    for g in I.gb_polys:
        k = min(e[n - 1] for e in g._d)
        if k:
            d = {e[: n - 1] + (e[n - 1] - k,): c for e, c in g._d.items()}
            g = Polynomial._raw(ring, d)
        out.append(g)
    return Ideal(ring, out)


def saturate_by_variable(I: Ideal, i: int) -> Ideal:
    """``I : x_i^∞`` for a homogeneous ideal (exact, via a variable reordering)."""
    ring = I.ring
    if ring.order not in ("grevlex", "wgrevlex"):
        raise ValueError("variable saturation needs a graded reverse lexicographic order")
    n = ring.ngens
    perm = [k for k in range(n) if k != i] + [i]
    r2 = PolyRing([ring.names[k] for k in perm], [ring.weights[k] for k in perm], ring.order)
    fwd = lambda p: Polynomial._raw(r2, {tuple(e[k] for k in perm): c for e, c in p._d.items()})  # noqa: E731
    inv = [perm.index(k) for k in range(n)]
    back = lambda p: Polynomial._raw(ring, {tuple(e[k] for k in inv): c for e, c in p._d.items()})  # noqa: E731
    S = _saturate_by_last_variable(Ideal(r2, [fwd(g) for g in I.polys]))
    return Ideal(ring, [back(g) for g in S.polys])


def _linear_change(ring: PolyRing, coeffs: Sequence[int]):
    """Maps for the coordinates ``y_i = x_i (i<n)``, ``y_n = sum c_i x_i``."""
    n = ring.ngens
    cn = Fraction(coeffs[-1])
    xs = ring.gens()
    # x_n = (y_n - sum_{i<n} c_i y_i) / c_n
    img_fwd = xs[: n - 1] + [(xs[n - 1] - sum((xs[i] * coeffs[i] for i in range(n - 1)), ring.zero())) / cn]
    img_back = xs[: n - 1] + [sum((xs[i] * coeffs[i] for i in range(n)), ring.zero())]
    return (lambda p: p.compose(img_fwd)), (lambda p: p.compose(img_back))


def _candidate_forms(n: int):
    # deterministic sequence of sparse-ish linear forms with last coefficient 1
    yield [0] * (n - 1) + [1]
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    for t in range(1, 12):
        yield [primes[(i + t) % len(primes)] * (1 if (i + t) % 2 else -1) for i in range(n - 1)] + [1]


def saturate_irrelevant(I: Ideal) -> Ideal:
    """``I : m^∞`` for a homogeneous ideal, ``m`` the ideal of all variables.

    Saturates by a linear form ``l`` placed as the last grevlex variable.
    Always ``I : m^∞ ⊆ I : l^∞``; the reverse inclusion holds exactly when
    ``(I : l^∞)/I`` has finite length, i.e. when the difference of the Hilbert
    series of ``R/I`` and ``R/(I : l^∞)`` is a polynomial.  Candidate forms
    are tried until this certificate holds; if none does, the saturation is
    assembled exactly as the intersection of the saturations by each
    variable.
    """
    ring = I.ring
    if ring.order not in ("grevlex", "wgrevlex") or any(w != 1 for w in ring.weights):
        return _saturate_by_variables(I)
    hs_I = I.quotient_hilbert_series()
    for coeffs in _candidate_forms(ring.ngens):
        fwd, back = _linear_change(ring, coeffs)
        J = Ideal(ring, [fwd(g) for g in I.polys])
        S = _saturate_by_last_variable(J)
        cand = Ideal(ring, [back(g) for g in S.polys])
        if (hs_I - cand.quotient_hilbert_series()).is_polynomial():
            return Ideal(ring, cand.gb_polys)
    return _saturate_by_variables(I)


def _saturate_by_variables(I: Ideal) -> Ideal:
    out = None
    for i in range(I.ring.ngens):
        S = saturate_by_variable(I, i)
        out = S if out is None else Ideal(I.ring, intersect(out, S).gens)
    return Ideal(I.ring, out.gb_polys)
