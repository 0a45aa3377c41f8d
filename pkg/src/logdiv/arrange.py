"""Central hyperplane arrangements.

Intersection lattice with Möbius function, full subarrangements and
essentialization, decomposability, n/d candidates, the topological zeta
function in rank at most three, and the syzygetic refinement of the
lattice (sums and intersections of flats).

Linear forms are stored as primitive integer normal vectors whose first
nonzero entry is positive, so proportional forms compare equal.
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd, lcm
from typing import Iterable, Sequence

import flint

from . import linalg
from ._flint import factor
from .logder import Derivation, der_log0
from .poly import ParseError, Polynomial, PolyRing, parse_polynomial, product
from .report import FAILS, HOLDS, INCONCLUSIVE, Certificate

__all__ = [
    "Arrangement",
    "ArrangementError",
    "Flat",
    "IntersectionLattice",
    "NDCandidate",
    "Subspace",
    "SyzygeticLattice",
    "ZetaFunction",
    "default_names",
    "essentialize",
    "full_subarrangement",
    "intersection_lattice",
    "is_indecomposable",
    "linear_factors",
    "nd_candidates",
    "nd_check",
    "parse_arrangement",
    "pascal_check",
    "pascal_hexagons",
    "syzygetic_lattice",
    "zeta_pole_analysis",
    "zeta_topological",
]


class ArrangementError(ValueError):
    """Malformed arrangement input."""


def primitive_vector(v: Sequence) -> tuple:
    """Integer multiple of ``v`` with content 1 and positive first nonzero entry."""
    v = [Fraction(c) for c in v]
    den = reduce(lcm, (c.denominator for c in v), 1)
    ints = [int(c * den) for c in v]
    g = reduce(gcd, ints, 0)
    if g == 0:
        raise ArrangementError("zero normal vector")
    first = next(c for c in ints if c)
    if first < 0:
        g = -g
    return tuple(c // g for c in ints)


def default_names(n: int) -> tuple:
    return ("x", "y", "z")[:n] if n <= 3 else tuple(f"x{i}" for i in range(n))


# ---------------------------------------------------------------------------
# arrangements


@dataclass(frozen=True)
class Arrangement:
    """Central arrangement: primitive normals with multiplicities."""

    forms: tuple
    multiplicities: tuple
    names: tuple = ()

    def __post_init__(self):
        if len(self.forms) != len(self.multiplicities):
            raise ArrangementError("one multiplicity per form")
        if any(m < 1 for m in self.multiplicities):
            raise ArrangementError("multiplicities must be positive")
        if self.forms and any(len(v) != len(self.forms[0]) for v in self.forms):
            raise ArrangementError("forms of different lengths")
        if len(set(self.forms)) != len(self.forms):
            raise ArrangementError("repeated hyperplane")
        if not self.names:
            object.__setattr__(self, "names", default_names(self.n))

    @classmethod
    def from_forms(cls, forms: Iterable, multiplicities: Iterable | None = None, names=()) -> "Arrangement":
        """Normalize forms, merging proportional ones (with a warning)."""
        forms = list(forms)
        mults = list(multiplicities) if multiplicities is not None else [1] * len(forms)
        merged: dict = {}
        for v, m in zip(forms, mults):
            key = primitive_vector(v)
            if key in merged:
                warnings.warn(f"proportional forms merged: {key}", stacklevel=2)
            merged[key] = merged.get(key, 0) + int(m)
        return cls(tuple(merged), tuple(merged.values()), tuple(names))

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> "Arrangement":
        facs = linear_factors(f)
        if facs is None:
            raise ArrangementError("polynomial is not a product of linear forms")
        n = f.ring.ngens
        forms = [[g.coefficient(tuple(int(k == i) for k in range(n))) for i in range(n)] for g, _ in facs]
        return cls.from_forms(forms, [m for _, m in facs], f.ring.names)

    @property
    def n(self) -> int:
        return len(self.forms[0]) if self.forms else len(self.names)

    @property
    def d(self) -> int:
        return sum(self.multiplicities)

    @property
    def size(self) -> int:
        return len(self.forms)

    @cached_property
    def rank(self) -> int:
        return linalg.rank([list(v) for v in self.forms], self.n) if self.forms else 0

    def ring(self) -> PolyRing:
        return PolyRing(list(self.names))

    def linear_forms(self, ring: PolyRing | None = None) -> list:
        R = ring or self.ring()
        return [sum((R.gen(i) * c for i, c in enumerate(v) if c), R.zero()) for v in self.forms]

    def polynomial(self, ring: PolyRing | None = None) -> Polynomial:
        R = ring or self.ring()
        return product((L ** m for L, m in zip(self.linear_forms(R), self.multiplicities)), R)

    def is_boolean(self) -> bool:
        """Independent normals (normal crossings after a linear change)."""
        return self.rank == self.size

    def to_json(self) -> dict:
        R = self.ring()
        return {
            "n": self.n,
            "names": list(self.names),
            "hyperplanes": [
                {"form": str(L), "normal": list(v), "multiplicity": m}
                for L, v, m in zip(self.linear_forms(R), self.forms, self.multiplicities)
            ],
            "degree": self.d,
            "rank": self.rank,
        }


_NUM = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_form(text: str, names: Sequence[str] | None, lineno: int):
    toks = text.split()
    if toks and all(_NUM.match(t) for t in toks):
        return [Fraction(t) for t in toks]
    if names is None:
        raise ArrangementError(f"line {lineno}: symbolic form needs a 'vars' header with names")
    R = PolyRing(list(names))
    try:
        L = parse_polynomial(text, R)
    except ParseError as exc:
        raise ArrangementError(f"line {lineno}: {exc}") from exc
    if L.is_zero():
        raise ArrangementError(f"line {lineno}: zero normal vector")
    if any(sum(e) != 1 for e in L._d):
        raise ArrangementError(f"line {lineno}: form is not homogeneous linear")
    return [L.coefficient(tuple(int(k == i) for k in range(len(names)))) for i in range(len(names))]


def parse_arrangement(text: str) -> Arrangement:
    """Parse the line-oriented arrangement format.

    ``vars n`` or ``vars x y z`` header, then one hyperplane per line as
    ``c_1 ... c_n : m`` or ``2*x + y : m`` (``: m`` optional, default 1).
    Several hyperplanes may share a line separated by commas, and ``#``
    starts a comment.  Without a header, numeric rows fix ``n`` and
    symbolic forms use ``x, y, z``.
    """
    names = None
    n = None
    forms, mults = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars"):
            rest = line[4:].split()
            if len(rest) == 1 and rest[0].isdigit():
                n = int(rest[0])
                names = list(default_names(n))
            elif rest:
                names, n = rest, len(rest)
            else:
                raise ArrangementError(f"line {lineno}: empty vars header")
            continue
        for item in line.split(","):
            item = item.strip()
            if not item:
                continue
            lhs, sep, rhs = item.partition(":")
            m = 1
            if sep:
                if not rhs.strip().isdigit() or int(rhs) < 1:
                    raise ArrangementError(f"line {lineno}: multiplicity must be a positive integer")
                m = int(rhs)
            if names is None and not all(_NUM.match(t) for t in lhs.split()):
                names = ["x", "y", "z"]
                n = 3
            v = _parse_form(lhs.strip(), names, lineno)
            if n is None:
                n = len(v)
            if len(v) != n:
                raise ArrangementError(f"line {lineno}: expected {n} coefficients, got {len(v)}")
            if not any(v):
                raise ArrangementError(f"line {lineno}: zero normal vector")
            forms.append(v)
            mults.append(m)
    if not forms:
        raise ArrangementError("empty arrangement")
    return Arrangement.from_forms(forms, mults, names or ())


def linear_factors(f: Polynomial) -> list | None:
    """``[(L, m), ...]`` with ``f = c * prod L^m`` for linear ``L``, else ``None``."""
    if f.is_zero() or f.is_constant():
        return None
    _, facs = factor(f)
    if any(g.total_degree() != 1 or not g.is_homogeneous() for g, _ in facs):
        return None
    return facs


# ---------------------------------------------------------------------------
# subspaces and flats


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of ``Q^n`` stored by the RREF of a spanning set."""

    n: int
    rows: tuple

    @classmethod
    def span(cls, n: int, vectors: Iterable) -> "Subspace":
        vecs = [list(v) for v in vectors]
        if not vecs:
            return cls(n, ())
        R, _ = linalg.rref(vecs, n)
        return cls(n, tuple(tuple(r) for r in R))

    @classmethod
    def kernel(cls, n: int, normals: Iterable) -> "Subspace":
        normals = [list(v) for v in normals]
        if not normals:
            return cls.span(n, [[int(i == j) for j in range(n)] for i in range(n)])
        return cls.span(n, linalg.nullspace(normals, n))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.n, self.rows + other.rows)

    def annihilator(self) -> list:
        if not self.rows:
            return [[int(i == j) for j in range(self.n)] for i in range(self.n)]
        return linalg.nullspace([list(r) for r in self.rows], self.n)

    def __and__(self, other: "Subspace") -> "Subspace":
        return Subspace.kernel(self.n, self.annihilator() + other.annihilator())

    def __le__(self, other: "Subspace") -> bool:
        return (self + other).dim == other.dim

    def vectors(self) -> list:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "<" + ", ".join("(" + ",".join(str(c) for c in r) + ")" for r in self.rows) + ">"


@dataclass(frozen=True)
class Flat:
    """Intersection of hyperplanes, identified by the closed set of them."""

    hyperplanes: frozenset
    rank: int
    multiplicity: int

    @property
    def key(self) -> tuple:
        return (self.rank, tuple(sorted(self.hyperplanes)))

    def to_json(self) -> dict:
        return {"hyperplanes": sorted(self.hyperplanes), "rank": self.rank, "N": self.multiplicity}


@dataclass
class IntersectionLattice:
    arrangement: Arrangement
    flats: list
    mobius: dict = field(default_factory=dict)

    def by_rank(self, r: int) -> list:
        return [F for F in self.flats if F.rank == r]

    @property
    def bottom(self) -> Flat:
        return self.flats[0]

    @property
    def top(self) -> Flat:
        return self.flats[-1]

    def flat(self, hyperplanes: Iterable[int]) -> Flat:
        return self._index[frozenset(hyperplanes)]

    @cached_property
    def _index(self) -> dict:
        return {F.hyperplanes: F for F in self.flats}

    def closure(self, hyperplanes: Iterable[int]) -> Flat:
        """Smallest flat containing the given hyperplanes."""
        hs = frozenset(hyperplanes)
        best = None
        for F in self.flats:
            if hs <= F.hyperplanes and (best is None or F.rank < best.rank):
                best = F
        return best

    def covers(self) -> list:
        out = []
        for F in self.flats:
            for G in self.flats:
                if G.rank == F.rank + 1 and F.hyperplanes < G.hyperplanes:
                    out.append((F, G))
        return out

    def characteristic_polynomial(self) -> list:
        """Coefficients of ``sum_F mu(F) t^{n - rank F}``, highest degree first."""
        n = self.arrangement.n
        coeffs = [0] * (n + 1)
        for F in self.flats:
            coeffs[F.rank] += self.mobius[F.hyperplanes]
        return coeffs

    def to_json(self) -> dict:
        return {
            "flats": [dict(F.to_json(), mobius=self.mobius[F.hyperplanes]) for F in self.flats],
            "characteristic_polynomial": self.characteristic_polynomial(),
        }


def intersection_lattice(A: Arrangement) -> IntersectionLattice:
    """All flats, grown rank by rank and saturated at every step."""
    normals = [list(v) for v in A.forms]
    n = A.n

    def close(hs: frozenset) -> frozenset:
        span = [normals[i] for i in sorted(hs)]
        r = linalg.rank(span, n)
        return frozenset(
            j for j in range(A.size) if j in hs or linalg.rank(span + [normals[j]], n) == r
        )

    def make(hs):
        return Flat(hs, linalg.rank([normals[i] for i in sorted(hs)], n) if hs else 0,
                    sum(A.multiplicities[i] for i in hs))

    bottom = make(frozenset())
    levels = [[bottom]]
    seen = {bottom.hyperplanes}
    while True:
        nxt = {}
        for F in levels[-1]:
            for h in range(A.size):
                if h in F.hyperplanes:
                    continue
                hs = close(F.hyperplanes | {h})
                if hs not in seen and hs not in nxt:
                    nxt[hs] = make(hs)
        if not nxt:
            break
        seen.update(nxt)
        levels.append(sorted(nxt.values(), key=lambda F: F.key))
    flats = [F for lvl in levels for F in lvl]
    mobius = {}
    for F in flats:
        if F.rank == 0:
            mobius[F.hyperplanes] = 1
        else:
            mobius[F.hyperplanes] = -sum(
                mobius[G.hyperplanes] for G in flats if G.rank < F.rank and G.hyperplanes < F.hyperplanes
            )
    return IntersectionLattice(A, flats, mobius)


def _essential_basis(vectors: list, n: int) -> tuple[list, list]:
    """RREF basis of the span and its pivot columns."""
    if not vectors:
        return [], []
    return linalg.rref(vectors, n)


def full_subarrangement(A: Arrangement, W: Flat | Iterable[int]) -> Arrangement:
    """Hyperplanes containing ``W`` in the ``rank W`` coordinates of their normal span.

    The normal of each hyperplane is written in the RREF basis of the span
    (its coordinates are the entries in the pivot columns), which is a
    rational change of coordinates on the quotient ``Q^n / W``.
    """
    hs = sorted(W.hyperplanes if isinstance(W, Flat) else W)
    vecs = [list(A.forms[i]) for i in hs]
    basis, pivots = _essential_basis(vecs, A.n)
    r = len(basis)
    if r == 0:
        return Arrangement((), (), ())
    coords = [[Fraction(v[p]) for p in pivots] for v in vecs]
    return Arrangement.from_forms(coords, [A.multiplicities[i] for i in hs], default_names(r))


def essentialize(A: Arrangement) -> Arrangement:
    return full_subarrangement(A, range(A.size))


# ---------------------------------------------------------------------------
# decomposability and n/d


def _killers(f: Polynomial, degree: int) -> tuple[list, list]:
    """Derivations of the given degree (``-1`` or ``0``) killing ``f``.

    Returns the nullspace basis and the list of basis derivations it is
    expressed in (``d_i`` for degree ``-1``, ``x_j d_i`` for degree ``0``).
    """
    R = f.ring
    n = R.ngens
    parts = [f.diff(i) for i in range(n)]
    if degree == -1:
        cols = [(None, i) for i in range(n)]
        images = parts
    else:
        cols = [(j, i) for i in range(n) for j in range(n)]
        images = [R.gen(j) * parts[i] for j, i in cols]
    mons = sorted({e for g in images for e in g._d})
    idx = {e: k for k, e in enumerate(mons)}
    rows = [[Fraction(0)] * len(cols) for _ in mons]
    for c, g in enumerate(images):
        for e, a in g._d.items():
            rows[idx[e]][c] = a
    null = linalg.nullspace(rows, len(cols)) if rows else [
        [Fraction(int(k == c)) for k in range(len(cols))] for c in range(len(cols))
    ]
    return null, cols


def _derivation_from(vec, cols, R: PolyRing) -> Derivation:
    coeffs = [R.zero()] * R.ngens
    for c, (j, i) in zip(vec, cols):
        if c:
            coeffs[i] = coeffs[i] + (R.gen(j) * c if j is not None else R.constant(c))
    return Derivation(R, tuple(coeffs))


def _change_of_coordinates(A: Arrangement):
    """Invertible ``P`` whose first rows are the essential basis of the normals."""
    n = A.n
    basis, pivots = _essential_basis([list(v) for v in A.forms], n)
    rows = [list(b) for b in basis] + [[Fraction(int(j == k)) for j in range(n)] for k in range(n) if k not in pivots]
    return rows


def _invert(P: list) -> list:
    n = len(P)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(P)]
    R, piv = linalg.rref(aug, 2 * n)
    if piv != list(range(n)):
        raise ArithmeticError("singular change of coordinates")
    return [row[n:] for row in R]


def _pull_back(delta: Derivation, A: Arrangement) -> Derivation:
    """Express a derivation in essential coordinates ``u = P x`` in the ``x`` coordinates."""
    R = A.ring()
    n = A.n
    P = _change_of_coordinates(A)
    Pinv = _invert(P)
    xs = R.gens()
    us = [sum((xs[k] * P[j][k] for k in range(n) if P[j][k]), R.zero()) for j in range(n)]
    r = delta.ring.ngens
    coeffs = [R.zero()] * n
    for i in range(r):
        a = delta.coefficients[i].compose(us[:r]) if not delta.coefficients[i].is_zero() else R.zero()
        if a.is_zero():
            continue
        # d/du_i = sum_k (P^{-1})_{k i} d/dx_k
        for k in range(n):
            if Pinv[k][i]:
                coeffs[k] = coeffs[k] + a * Pinv[k][i]
    return Derivation(R, tuple(coeffs))


def is_indecomposable(A: Arrangement) -> Certificate:
    """Indecomposable iff no nonzero degree-zero derivation kills ``f_A``.

    Works in essential coordinates.  A decomposition ``A = A_1 x A_2`` gives
    the killer ``d_2 E_1 - d_1 E_2``; conversely an indecomposable
    arrangement has none.  A failing verdict carries such a killer pulled
    back to the original coordinates and rechecked there.
    """
    if A.size == 0:
        return Certificate("indecomposable", INCONCLUSIVE, {"reason": "empty arrangement"})
    E = essentialize(A)
    f = E.polynomial()
    null, cols = _killers(f, 0)
    witness = {"essential_rank": E.n, "killer_dimension": len(null)}
    if not null:
        return Certificate("indecomposable", HOLDS, witness)
    delta = _derivation_from(null[0], cols, E.ring())
    back = _pull_back(delta, A)
    fA = A.polynomial()
    if not back(fA).is_zero():
        raise AssertionError("decomposition witness does not kill f")
    witness["witness"] = str(back)
    witness["essential_witness"] = str(delta)
    return Certificate("indecomposable", FAILS, witness)


def nd_check(A: Arrangement) -> Certificate:
    """``Der(-log_0 f_A)`` has nothing in degrees ``<= 0`` (essential coordinates).

    Two routes: direct linear solves for killers of degree ``-1`` and ``0``,
    and the minimal generator degrees of ``Der(-log_0 f_A)``.  Reports the
    candidate root ``-rank/d``.
    """
    dec = is_indecomposable(A)
    if not dec.holds:
        return Certificate(
            "n/d",
            INCONCLUSIVE,
            {"applicable": False, "reason": "arrangement is decomposable", "decomposition": dec.witness},
        )
    E = essentialize(A)
    f = E.polynomial()
    const = _killers(f, -1)[0]
    linear = _killers(f, 0)[0]
    D0 = der_log0(f)
    low = min(D0.degrees()) if D0.generators else None
    candidate = Fraction(-E.n, E.d)
    witness = {
        "applicable": True,
        "rank": E.n,
        "d": E.d,
        "candidate": candidate,
        "killers_degree_-1": len(const),
        "killers_degree_0": len(linear),
        "min_generator_degree": low,
    }
    ok_direct = not const and not linear
    ok_module = low is None or low >= 1
    if ok_direct != ok_module:
        raise AssertionError("n/d routes disagree")
    return Certificate("n/d", HOLDS if ok_direct else FAILS, witness)


@dataclass(frozen=True)
class NDCandidate:
    flat: Flat
    value: Fraction

    def to_json(self) -> dict:
        return {"flat": self.flat.to_json(), "value": self.value}


def nd_candidates(A: Arrangement, lattice: IntersectionLattice | None = None) -> list:
    """``-rank W / N_W`` for every flat with indecomposable full subarrangement."""
    L = lattice or intersection_lattice(A)
    out = []
    for F in L.flats:
        if F.rank == 0:
            continue
        sub = full_subarrangement(A, F)
        if is_indecomposable(sub).holds:
            out.append(NDCandidate(F, Fraction(-F.rank, F.multiplicity)))
    out.sort(key=lambda c: (c.value, c.flat.key))
    return out


# ---------------------------------------------------------------------------
# topological zeta function


def _qpoly(coeffs) -> "flint.fmpq_poly":
    return flint.fmpq_poly([flint.fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in coeffs])


def _frac(q) -> Fraction:
    return Fraction(int(q.p), int(q.q))


@dataclass(frozen=True)
class ZetaFunction:
    """Rational function ``numerator / prod (N s + nu)^e`` in lowest terms.

    Factors are stored with ``gcd(N, nu) = 1``; the numerator is a list of
    Fraction coefficients, lowest degree first.
    """

    numerator: tuple
    factors: tuple  # ((N, nu, e), ...)

    @classmethod
    def build(cls, num, factors: dict) -> "ZetaFunction":
        num = _qpoly(num) if not isinstance(num, flint.fmpq_poly) else num
        fac = {}
        for (N, nu), e in factors.items():
            g = gcd(N, nu)
            num = num * flint.fmpq(1, g ** e) if g != 1 else num
            key = (N // g, nu // g)
            fac[key] = fac.get(key, 0) + e
        # cancel
        for key in list(fac):
            lin = _qpoly([key[1], key[0]])
            while fac[key] and num != 0 and num % lin == 0:
                num = num // lin
                fac[key] -= 1
            if not fac[key]:
                del fac[key]
        coeffs = tuple(_frac(num[i]) for i in range(num.degree() + 1)) if num != 0 else ()
        return cls(coeffs, tuple(sorted((N, nu, e) for (N, nu), e in fac.items())))

    @classmethod
    def term(cls, coeff, factors: Sequence[tuple]) -> "ZetaFunction":
        fac = {}
        for N, nu in factors:
            fac[(N, nu)] = fac.get((N, nu), 0) + 1
        return cls.build([coeff], fac)

    def _num(self):
        return _qpoly(self.numerator) if self.numerator else flint.fmpq_poly([])

    def _den(self):
        out = _qpoly([1])
        for N, nu, e in self.factors:
            out = out * _qpoly([nu, N]) ** e
        return out

    def __add__(self, other: "ZetaFunction") -> "ZetaFunction":
        fac = {}
        for N, nu, e in self.factors + other.factors:
            fac[(N, nu)] = max(fac.get((N, nu), 0), e)

        def lift(z):
            num = z._num()
            have = {(N, nu): e for N, nu, e in z.factors}
            for key, e in fac.items():
                extra = e - have.get(key, 0)
                if extra:
                    num = num * _qpoly([key[1], key[0]]) ** extra
            return num

        return ZetaFunction.build(lift(self) + lift(other), fac)

    def __mul__(self, other: "ZetaFunction") -> "ZetaFunction":
        fac = {}
        for N, nu, e in self.factors + other.factors:
            fac[(N, nu)] = fac.get((N, nu), 0) + e
        return ZetaFunction.build(self._num() * other._num(), fac)

    @classmethod
    def zero(cls) -> "ZetaFunction":
        return cls((), ())

    def __call__(self, s) -> Fraction:
        s = Fraction(s)
        num = sum((c * s ** k for k, c in enumerate(self.numerator)), Fraction(0))
        den = Fraction(1)
        for N, nu, e in self.factors:
            den *= (N * s + nu) ** e
        return num / den

    def poles(self) -> dict:
        """``{pole: order}``."""
        return {Fraction(-nu, N): e for N, nu, e in self.factors}

    def __str__(self):
        num = _poly_str(self.numerator)
        if not self.factors:
            return num
        parts = []
        for N, nu, e in self.factors:
            base = f"({'s' if N == 1 else f'{N}*s'} + {nu})"
            parts.append(base if e == 1 else f"{base}^{e}")
        den = "*".join(parts)
        if len([c for c in self.numerator if c]) > 1:
            num = f"({num})"
        return f"{num}/({den})" if len(parts) > 1 else f"{num}/{den}"

    def to_json(self) -> dict:
        return {
            "string": str(self),
            "numerator": [str(c) for c in self.numerator],
            "denominator": [str(_frac(c)) for c in self._den().coeffs()],
            "factors": [[N, nu, e] for N, nu, e in self.factors],
            "poles": [[str(p), e] for p, e in sorted(self.poles().items())],
        }


def _poly_str(coeffs) -> str:
    """Polynomial in ``s`` from low-first coefficients, constant term first."""
    parts = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            mon = "s" if k == 1 else f"s^{k}"
            body = mon if mag == 1 else f"{mag}*{mon}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _zeta_snc(mults: Sequence[int]) -> ZetaFunction:
    """Normal crossings model: only the origin stratum has nonzero Euler characteristic."""
    return ZetaFunction.term(1, [(m, 1) for m in mults])


def _zeta_rank2(mults: Sequence[int]) -> ZetaFunction:
    """``k`` lines through the origin of ``C^2``, origin blown up once.

    ``E_0 = P^1`` with ``(N, nu) = (d, 2)``; ``E_0`` minus the ``k`` points
    has ``chi = 2 - k``; each point ``E_0 ∩ D_i`` contributes ``1``; the
    remaining strata are ``C^*``-bundles with ``chi = 0``.
    """
    d = sum(mults)
    total = ZetaFunction.term(2 - len(mults), [(d, 2)])
    for m in mults:
        total = total + ZetaFunction.term(1, [(d, 2), (m, 1)])
    return total


def _zeta_rank3(A: Arrangement, L: IntersectionLattice, blow_up_double: bool) -> ZetaFunction:
    """Essential rank-3 arrangement: blow up the origin, then the multiple lines.

    ``E_0`` is ``P^2`` blown up at the chosen points.  Strata with nonzero
    Euler characteristic: ``E_0°`` (``3 - 2k + sum_p (t_p - 1)``), the curves
    ``E_0 ∩ D_i`` (``2`` minus the points on line ``i``) and ``E_0 ∩ E_W``
    (``2 - t_W``), and the points ``E_0 ∩ D_i ∩ D_j`` (unblown double
    points) and ``E_0 ∩ D_i ∩ E_W``.  Everything else carries a free
    ``C^*``-action and has ``chi = 0``.
    """
    d = A.d
    k = A.size
    m = A.multiplicities
    points = L.by_rank(2)
    chi0 = 3 - 2 * k + sum(len(P.hyperplanes) - 1 for P in points)
    on_line = [sum(1 for P in points if i in P.hyperplanes) for i in range(k)]
    e0 = (d, 3)
    total = ZetaFunction.term(chi0, [e0])
    for i in range(k):
        total = total + ZetaFunction.term(2 - on_line[i], [e0, (m[i], 1)])
    for P in points:
        hs = sorted(P.hyperplanes)
        t = len(hs)
        if t >= 3 or blow_up_double:
            eW = (P.multiplicity, 2)
            total = total + ZetaFunction.term(2 - t, [e0, eW])
            for i in hs:
                total = total + ZetaFunction.term(1, [e0, eW, (m[i], 1)])
        else:
            i, j = hs
            total = total + ZetaFunction.term(1, [e0, (m[i], 1), (m[j], 1)])
    return total


def zeta_topological(A: Arrangement, *, model: str = "auto") -> ZetaFunction:
    """Topological zeta function of a central arrangement of rank at most 3.

    ``model`` is ``"snc"`` (identity model, Boolean arrangements only),
    ``"blowup"`` (blow up the origin and then every line with at least three
    planes), ``"full"`` (also blow up the double lines) or ``"auto"``
    (``snc`` when Boolean, else ``blowup``).  Dummy variables are dropped by
    essentialization, which does not change the function.
    """
    if A.size == 0:
        raise ValueError("empty arrangement")
    E = essentialize(A)
    r = E.n
    if r > 3:
        raise NotImplementedError("zeta functions are supported up to rank 3")
    if model == "auto":
        model = "snc" if E.is_boolean() else "blowup"
    if model == "snc":
        if not E.is_boolean():
            raise ValueError("identity model needs normal crossings")
        return _zeta_snc(E.multiplicities)
    if model not in ("blowup", "full"):
        raise ValueError(f"unknown model {model!r}")
    if r == 1:
        return _zeta_snc(E.multiplicities)
    if r == 2:
        return _zeta_rank2(E.multiplicities)
    return _zeta_rank3(E, intersection_lattice(E), blow_up_double=(model == "full"))


def zeta_pole_analysis(A: Arrangement) -> Certificate:
    """Match every pole of ``Z_f`` with an n/d candidate of a flat."""
    Z = zeta_topological(A)
    cands = nd_candidates(A)
    values = {}
    for c in cands:
        values.setdefault(c.value, []).append(c.flat)
    poles = []
    unmatched = []
    for p, order in sorted(Z.poles().items()):
        flats = values.get(p, [])
        poles.append({"pole": p, "order": order, "flats": [F.to_json() for F in flats]})
        if not flats:
            unmatched.append(p)
    witness = {"zeta": str(Z), "poles": poles, "candidates": sorted({c.value for c in cands})}
    if unmatched:
        warnings.warn(f"zeta poles without a flat candidate: {unmatched}", stacklevel=2)
        witness["unmatched"] = unmatched
        return Certificate("zeta-poles", FAILS, witness)
    return Certificate("zeta-poles", HOLDS, witness)


# ---------------------------------------------------------------------------
# syzygetic lattice


@dataclass
class SyzygeticLattice:
    """Levels ``L^0 ⊆ L^1 ⊆ ...`` and syzygetic elements with witnesses.

    A witness is a family ``V_1, ..., V_k`` from the previous level with
    ``V = sum V_j`` and ``dim V < sum dim V_j``.
    """

    arrangement: Arrangement
    levels: list
    syzygetic: dict
    capped: bool = False

    def to_json(self) -> dict:
        return {
            "levels": [len(lv) for lv in self.levels],
            "capped": self.capped,
            "syzygetic": [
                {"subspace": str(V), "dim": V.dim, "level": lvl, "witness": [str(W) for W in wit]}
                for V, (lvl, wit) in sorted(self.syzygetic.items(), key=lambda t: (t[1][0], str(t[0])))
            ],
        }


def _lattice_subspaces(A: Arrangement) -> list:
    L = intersection_lattice(A)
    out = []
    for F in L.flats:
        V = Subspace.kernel(A.n, [list(A.forms[i]) for i in sorted(F.hyperplanes)])
        if 0 < V.dim < A.n:
            out.append(V)
    return out


def _nontrivial(family: Sequence[Subspace], total: Subspace) -> bool:
    if not 0 < total.dim < total.n:
        return False
    return all(not (a <= b) for a, b in itertools.permutations(family, 2))


def syzygetic_lattice(A: Arrangement, *, max_rounds: int = 4, max_elements: int = 400) -> SyzygeticLattice:
    """Pairwise sum/intersection closure of the flats with syzygy witnesses.

    Each round forms the nontrivial sums of pairs and triples of the current
    level, keeps their nontrivial pairwise intersections, and records every
    sum whose dimension is smaller than the total dimension of its
    summands.  Witness families are pairs and triples only, and the
    closure stops after ``max_rounds`` rounds or once a level would exceed
    ``max_elements`` subspaces (``capped`` is then set).
    """
    n = A.n
    level = sorted(set(_lattice_subspaces(A)), key=str)
    levels = [level]
    syz: dict = {}
    capped = False
    for rnd in range(1, max_rounds + 1):
        cur = levels[-1]
        sums = {}
        for size in (2, 3):
            for fam in itertools.combinations(cur, size):
                V = reduce(lambda a, b: a + b, fam)
                if not _nontrivial(fam, V):
                    continue
                sums.setdefault(V, fam)
                if V.dim < sum(W.dim for W in fam):
                    if V not in syz or len(syz[V][1]) > size:
                        syz[V] = (rnd, fam)
        new = set(cur) | set(sums)
        items = sorted(sums, key=str)
        for a, b in itertools.combinations(items, 2):
            W = a & b
            if 0 < W.dim < n:
                new.add(W)
            if len(new) > max_elements:
                capped = True
                break
        nxt = sorted(new, key=str)
        levels.append(nxt)
        if capped or set(nxt) == set(cur):
            break
    for V, (lvl, fam) in syz.items():
        if V != reduce(lambda a, b: a + b, fam) or V.dim >= sum(W.dim for W in fam):
            raise AssertionError("syzygetic witness failed recheck")
    return SyzygeticLattice(A, levels, syz, capped)


def pascal_hexagons() -> list:
    """The 60 hexagons on six labelled points (cyclic orders up to reversal)."""
    out = []
    for perm in itertools.permutations(range(1, 6)):
        cyc = (0,) + perm
        if cyc[1] < cyc[-1]:
            out.append(cyc)
    return out


def pascal_check(points: Sequence[Sequence], triples: Sequence | None = None) -> dict:
    """Collinearity of the opposite-side intersections of hexagons.

    ``points`` are six vectors in ``Q^3`` (points of the projective plane).
    Each triple is three pairs of pairs of point indices; the sides
    ``P_a + P_b`` are sums of flats, their intersections lie in the next
    level, and the sum of the three intersection points is a syzygetic
    plane exactly when it has dimension ``2 < 3``.  Without ``triples`` all
    60 hexagons are checked.
    """
    P = [Subspace.span(3, [p]) for p in points]
    if triples is None:
        triples = []
        for h in pascal_hexagons():
            sides = [(h[i], h[(i + 1) % 6]) for i in range(6)]
            triples.append(tuple((sides[i], sides[i + 3]) for i in range(3)))
    results = []
    for tri in triples:
        meets = []
        ok = True
        for (a, b), (c, e) in tri:
            s1, s2 = P[a] + P[b], P[c] + P[e]
            if s1.dim != 2 or s2.dim != 2 or s1 == s2:
                ok = False
                break
            meets.append(s1 & s2)
        if not ok:
            results.append({"triple": tri, "degenerate": True})
            continue
        V = meets[0] + meets[1] + meets[2]
        distinct = len(set(meets)) == 3
        results.append(
            {
                "triple": tri,
                "points": [str(m) for m in meets],
                "span_dim": V.dim,
                "syzygetic_line": distinct and V.dim == 2,
                "line": str(V) if V.dim == 2 else None,
            }
        )
    return {
        "checked": len(results),
        "pascal_lines": sum(1 for r in results if r.get("syzygetic_line")),
        "results": results,
    }
