"""Logarithmic derivations and forms of a divisor, and certificates built on them.

For ``f`` in ``R = Q[x_1..x_n]``:

* ``Der(-log_0 f)``: derivations ``sum a_i d_i`` with ``sum a_i f_i = 0``,
  the syzygies of the partial derivatives.
* ``Der(-log f)``: derivations with ``f | sum a_i f_i``, the projection of
  the syzygies of ``(f_1, ..., f_n, -f)``.
* ``Omega^i(log f)``: forms ``omega = eta / f`` with ``df ∧ eta ≡ 0 mod f``;
  we store the numerators ``eta`` in ``R^{C(n,i)}``.  ``Omega^i(log_0 f)``
  is the part with ``df ∧ eta = 0``.

Gradings: ``d_i`` has degree ``-w_i`` and ``dx_i`` degree ``w_i``; a form
``eta / f`` has degree ``deg eta - deg f``, so ``dx/x`` has degree 0.

The Liouville ideal lives in the doubled ring ``R[y]`` where ``y_i`` is the
symbol of ``d_i``; it is generated by ``sum a_i y_i`` over generators of
``Der(-log_0 f)``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import linalg
from .budget import BudgetExhausted, current
from .gb import FreeModule, Ideal, ModuleElement, Submodule, intersect, syzygies
from .poly import Polynomial, PolyRing, weighted_degree
from .report import FAILS, HOLDS, INCONCLUSIVE, Certificate
from .resolve import free_resolution

__all__ = [
    "Derivation",
    "LogDerModule",
    "LiouvilleIdeal",
    "der_log0",
    "der_log",
    "omega_log",
    "omega_log0",
    "omega_log_euler",
    "contract",
    "euler_field",
    "tameness",
    "freeness",
    "euler_locus",
    "strong_euler_at",
    "holonomicity_certificate",
    "liouville_ideal",
    "tilde_liouville",
    "diagonal_euler_field",
    "mixed_dimension_witness",
    "liouville_dimension_cm",
    "order_one_generation_certificate",
    "generic_rank",
    "df_wedge",
    "form_basis",
]


# ---------------------------------------------------------------------------
# derivations


@dataclass(frozen=True, eq=False)
class Derivation:
    """The vector field ``sum a_i d_i``."""

    ring: PolyRing
    coefficients: tuple

    def __post_init__(self):
        if len(self.coefficients) != self.ring.ngens:
            raise ValueError("one coefficient per variable")

    def __call__(self, g: Polynomial) -> Polynomial:
        out = self.ring.zero()
        for i, a in enumerate(self.coefficients):
            if not a.is_zero():
                out = out + a * g.diff(i)
        return out

    apply = __call__

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coefficients)

    def degree(self) -> int | None:
        """``deg a_i - w_i`` when this is the same for all nonzero terms."""
        degs = set()
        for a, w in zip(self.coefficients, self.ring.weights):
            for e in a._d:
                degs.add(self.ring.degree_of(e) - w)
        return degs.pop() if len(degs) == 1 else None

    def __eq__(self, other):
        return (
            isinstance(other, Derivation)
            and other.ring == self.ring
            and all(a == b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __hash__(self):
        return hash(tuple(hash(a) for a in self.coefficients))

    def __add__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.ring, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        return Derivation(self.ring, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, c) -> "Derivation":
        return Derivation(self.ring, tuple(a * c for a in self.coefficients))

    __rmul__ = __mul__

    def evaluate(self, point) -> list:
        return [a(point) for a in self.coefficients]

    def __str__(self):
        parts = []
        for a, nm in zip(self.coefficients, self.ring.names):
            if a.is_zero():
                continue
            s = str(a)
            if s == "1":
                parts.append(f"d_{nm}")
            elif s == "-1":
                parts.append(f"-d_{nm}")
            elif len(a._d) > 1:
                parts.append(f"({s})*d_{nm}")
            else:
                parts.append(f"{s}*d_{nm}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    __repr__ = __str__

    def to_json(self) -> list:
        return [str(a) for a in self.coefficients]


def euler_field(f: Polynomial) -> Derivation:
    """``sum w_i x_i d_i / d`` for weighted homogeneous ``f`` of degree ``d``."""
    d = weighted_degree(f)
    if d is None or d == 0:
        raise ValueError("Euler field needs a weighted homogeneous nonconstant f")
    R = f.ring
    return Derivation(R, tuple(R.gen(i) * Fraction(R.weights[i], d) for i in range(R.ngens)))


def _derivation_module(ring: PolyRing) -> FreeModule:
    return FreeModule(ring, ring.ngens, [-w for w in ring.weights])


@dataclass
class LogDerModule:
    """Generators of ``Der(-log f)`` (flavor ``"log"``) or ``Der(-log_0 f)`` (``"log0"``)."""

    f: Polynomial
    flavor: str
    generators: list
    module: Submodule = field(repr=False)

    def __post_init__(self):
        for delta in self.generators:
            v = delta(self.f)
            if self.flavor == "log0":
                if not v.is_zero():
                    raise AssertionError(f"{delta} does not annihilate f")
            elif not v.divmod(self.f)[1].is_zero():
                raise AssertionError(f"{delta} is not logarithmic along f")

    @property
    def ring(self) -> PolyRing:
        return self.f.ring

    def degrees(self) -> list:
        return [d.degree() for d in self.generators]

    def contains(self, delta: Derivation) -> bool:
        return self.module.contains(self.module.module.element(list(delta.coefficients)))

    def to_json(self) -> dict:
        return {
            "f": str(self.f),
            "flavor": self.flavor,
            "generators": [str(d) for d in self.generators],
            "degrees": self.degrees(),
        }


def _homogeneous_degree(f: Polynomial) -> int | None:
    if f.is_zero():
        return None
    return weighted_degree(f)


def _check_nonconstant(f: Polynomial):
    if f.is_zero() or f.is_constant():
        raise ValueError("f must be nonconstant")


def _as_derivations(ring, elements) -> list:
    return [Derivation(ring, tuple(v.components)) for v in elements]


def der_log0(f: Polynomial) -> LogDerModule:
    """``Der(-log_0 f)``: syzygies of the partial derivatives.

    Minimal homogeneous generators when ``f`` is weighted homogeneous.
    """
    _check_nonconstant(f)
    R = f.ring
    d = _homogeneous_degree(f)
    F1 = FreeModule(R, 1)
    parts = [F1.element([f.diff(i)]) for i in range(R.ngens)]
    degrees = [d - w for w in R.weights] if d is not None else None
    S = syzygies(parts, degrees=degrees)
    D = _derivation_module(R)
    M = Submodule(D, [ModuleElement(D, s.components) for s in S.gens])
    gens = M.mingens()
    M = Submodule(D, gens)
    return LogDerModule(f, "log0", _as_derivations(R, gens), M)


def der_log(f: Polynomial) -> LogDerModule:
    """``Der(-log f)``: the first ``n`` coordinates of the syzygies of ``(f_1..f_n, -f)``."""
    _check_nonconstant(f)
    R = f.ring
    d = _homogeneous_degree(f)
    F1 = FreeModule(R, 1)
    parts = [F1.element([f.diff(i)]) for i in range(R.ngens)] + [F1.element([-f])]
    degrees = ([d - w for w in R.weights] + [d]) if d is not None else None
    S = syzygies(parts, degrees=degrees)
    D = _derivation_module(R)
    proj = [ModuleElement(D, s.components[: R.ngens]) for s in S.gens]
    proj = [v for v in proj if not v.is_zero()]
    M = Submodule(D, proj)
    if d is None:
        gens = M.mingens()
    else:
        # Der(-log f) = R E + Der(-log_0 f) for homogeneous f; present it that
        # way and check it against the syzygy computation
        E = euler_field(f)
        zero_part = der_log0(f)
        gens = [D.element(list(E.coefficients))] + [
            D.element(list(g.coefficients)) for g in zero_part.generators
        ]
        split = Submodule(D, gens)
        if not (split.contains_submodule(M) and M.contains_submodule(split)):
            raise AssertionError("Euler splitting of Der(-log f) failed")
    M = Submodule(D, gens)
    return LogDerModule(f, "log", _as_derivations(R, gens), M)


# ---------------------------------------------------------------------------
# logarithmic forms


def form_basis(n: int, i: int) -> list:
    """Index sets of ``dx_I`` in lexicographic order."""
    return list(itertools.combinations(range(n), i))


def df_wedge(f: Polynomial, i: int) -> list:
    """Columns of ``df ∧ : Omega^i -> Omega^{i+1}`` as lists of polynomials."""
    R = f.ring
    n = R.ngens
    src = form_basis(n, i)
    tgt = {J: k for k, J in enumerate(form_basis(n, i + 1))}
    parts = [f.diff(j) for j in range(n)]
    cols = []
    for I in src:
        col = [R.zero()] * len(tgt)
        for j in range(n):
            if j in I or parts[j].is_zero():
                continue
            sign = -1 if sum(1 for k in I if k < j) % 2 else 1
            J = tuple(sorted(I + (j,)))
            col[tgt[J]] = parts[j] * sign
        cols.append(col)
    return cols


def _form_module(R: PolyRing, i: int, d: int) -> FreeModule:
    shifts = [sum(R.weights[k] for k in I) - d for I in form_basis(R.ngens, i)]
    return FreeModule(R, len(shifts), shifts)


def _omega(f: Polynomial, i: int, zero_flavor: bool) -> Submodule:
    _check_nonconstant(f)
    R = f.ring
    n = R.ngens
    if not 0 <= i <= n:
        raise ValueError("form degree out of range")
    d = _homogeneous_degree(f)
    dd = d if d is not None else 0
    Fi = _form_module(R, i, dd)
    if i == n:
        # df ∧ eta = 0 for every top form
        return Submodule(Fi, [Fi.basis(0)])
    T = FreeModule(R, len(form_basis(n, i + 1)), [sum(R.weights[k] for k in J) for J in form_basis(n, i + 1)])
    vecs = [ModuleElement(T, tuple(col)) for col in df_wedge(f, i)]
    degrees = [dd + sum(R.weights[k] for k in I) for I in form_basis(n, i)]
    if not zero_flavor:
        vecs += [T.basis(j) * f for j in range(T.rank)]
        degrees += [dd + s for s in T.shifts]
    S = syzygies(vecs, degrees=degrees if d is not None else None)
    proj = [ModuleElement(Fi, s.components[: Fi.rank]) for s in S.gens]
    proj = [v for v in proj if not v.is_zero()]
    M = Submodule(Fi, proj)
    return Submodule(Fi, M.mingens())


def omega_log(f: Polynomial, i: int) -> Submodule:
    """Numerators ``{eta in R^{C(n,i)} : df ∧ eta ≡ 0 mod f}`` of ``Omega^i(log f)``."""
    return _omega(f, i, zero_flavor=False)


def omega_log0(f: Polynomial, i: int) -> Submodule:
    """Numerators ``{eta : df ∧ eta = 0}`` of ``Omega^i(log_0 f)``."""
    return _omega(f, i, zero_flavor=True)


def contract(delta: Derivation, i: int) -> list:
    """Columns of the contraction ``ι_δ : Omega^i -> Omega^{i-1}``."""
    R = delta.ring
    n = R.ngens
    tgt = {J: k for k, J in enumerate(form_basis(n, i - 1))}
    cols = []
    for I in form_basis(n, i):
        col = [R.zero()] * len(tgt)
        for pos, k in enumerate(I):
            a = delta.coefficients[k]
            if a.is_zero():
                continue
            J = I[:pos] + I[pos + 1:]
            col[tgt[J]] = a if pos % 2 == 0 else -a
        cols.append(col)
    return cols


def omega_log_euler(f: Polynomial, i: int) -> Submodule:
    """Numerators of ``Omega^i(log_E f) = ι_E(Omega^{i+1}(log_0 f))``.

    For weighted homogeneous ``f`` this is the complement of
    ``Omega^i(log_0 f)`` in ``Omega^i(log f) = Omega^i(log_0 f) ⊕ Omega^i(log_E f)``,
    and ``ι_E`` is injective on ``Omega^{i+1}(log_0 f)``, so both
    modules have the same minimal resolution.  ``E`` is scaled to
    ``sum w_k x_k d_k`` to keep integer coefficients.
    """
    R = f.ring
    n = R.ngens
    d = _homogeneous_degree(f)
    if d is None:
        raise ValueError("Euler contraction needs a weighted homogeneous f")
    if not 0 <= i < n:
        raise ValueError("form degree out of range")
    E = Derivation(R, tuple(R.gen(k) * R.weights[k] for k in range(n)))
    src = omega_log0(f, i + 1)
    Fi = _form_module(R, i, d)
    C = contract(E, i + 1)
    out = []
    for g in src.gens:
        comps = [R.zero()] * Fi.rank
        for c, col in zip(g.components, C):
            if c.is_zero():
                continue
            comps = [a + b * c for a, b in zip(comps, col)]
        out.append(ModuleElement(Fi, tuple(comps)))
    M = Submodule(Fi, [v for v in out if not v.is_zero()])
    return Submodule(Fi, M.mingens())


# ---------------------------------------------------------------------------
# helpers


def _budget_note() -> dict:
    return current().as_dict()


def _sample_points(n: int, count: int, seed: int = 20240229):
    rng = random.Random(seed)
    for _ in range(count):
        yield [Fraction(rng.randint(-97, 97), rng.randint(1, 13)) for _ in range(n)]


def generic_rank(vectors: Sequence, n: int, trials: int = 4) -> int:
    """Rank over the fraction field, bounded below by evaluation at sample points.

    The value is exact whenever it reaches the known upper bound (which the
    callers check); otherwise it is the maximum over the sampled points.
    """
    if not vectors:
        return 0
    best = 0
    for pt in _sample_points(n, trials):
        rows = [[c(pt) for c in v] for v in vectors]
        best = max(best, linalg.rank(rows))
    return best


def _minor(mat: list, rows: Sequence[int], cols: Sequence[int], memo: dict) -> Polynomial:
    key = (tuple(rows), tuple(cols))
    if key in memo:
        return memo[key]
    if len(rows) == 1:
        val = mat[rows[0]][cols[0]]
    else:
        R0 = rows[0]
        val = None
        for k, c in enumerate(cols):
            a = mat[R0][c]
            if a.is_zero():
                continue
            sub = _minor(mat, rows[1:], cols[:k] + cols[k + 1:], memo)
            if sub.is_zero():
                continue
            term = a * sub
            if k % 2:
                term = -term
            val = term if val is None else val + term
        if val is None:
            val = mat[R0][cols[0]].ring.zero()
    memo[key] = val
    return val


def minors(mat: list, k: int) -> list:
    """All nonzero ``k x k`` minors of a polynomial matrix, primitive and deduplicated."""
    nr, nc = len(mat), len(mat[0]) if mat else 0
    memo: dict = {}
    seen = {}
    for cols in itertools.combinations(range(nc), k):
        for rows in itertools.combinations(range(nr), k):
            m = _minor(mat, list(rows), list(cols), memo)
            if not m.is_zero():
                p = m.primitive()
                seen.setdefault(str(p), p)
    return [seen[k] for k in sorted(seen)]


# ---------------------------------------------------------------------------
# certificates


def tameness(f: Polynomial, *, max_length: int | None = None) -> Certificate:
    """Tame: ``pdim Omega^i(log f) <= i`` for ``i = 1..n-1`` (graded, homogeneous ``f`` only)."""
    R = f.ring
    if _homogeneous_degree(f) is None:
        return Certificate(
            "tame",
            INCONCLUSIVE,
            {"reason": "graded method inapplicable: f is not weighted homogeneous"},
            _budget_note(),
        )
    pdims = {}
    betti = {}
    try:
        for i in range(1, R.ngens):
            M = omega_log(f, i)
            res = free_resolution(M, max_length=max_length)
            p = res.pdim()
            if p is None:
                return Certificate("tame", INCONCLUSIVE, {"pdims": pdims, "cutoff_at": i}, _budget_note())
            pdims[i] = p
            betti[i] = res.to_json()
            if p > i:
                return Certificate(
                    "tame",
                    FAILS,
                    {"i": i, "pdim": p, "resolution": res.to_json(), "pdims": pdims},
                    _budget_note(),
                )
    except BudgetExhausted as exc:
        return Certificate("tame", INCONCLUSIVE, {"pdims": pdims, "error": str(exc)}, _budget_note())
    return Certificate("tame", HOLDS, {"pdims": pdims, "resolutions": betti}, _budget_note())


def freeness(f: Polynomial) -> Certificate:
    """Free divisor: ``Der(-log f)`` is a free module (graded case)."""
    if _homogeneous_degree(f) is None:
        return Certificate("free", INCONCLUSIVE, {"reason": "graded method inapplicable"}, _budget_note())
    try:
        L = der_log(f)
        res = free_resolution(L.module)
    except BudgetExhausted as exc:
        return Certificate("free", INCONCLUSIVE, {"error": str(exc)}, _budget_note())
    R = f.ring
    p = res.pdim()
    witness = {"pdim": p, "generators": [str(d) for d in L.generators], "resolution": res.to_json()}
    if p == 0 and len(L.generators) == R.ngens:
        mat = [list(d.coefficients) for d in L.generators]
        det = _minor(mat, list(range(R.ngens)), list(range(R.ngens)), {})
        q, r = det.divmod(f)
        witness["determinant"] = str(det)
        witness["determinant_over_f"] = str(q)
        if not (r.is_zero() and q.is_constant() and not q.is_zero()):
            raise AssertionError("Saito criterion violated by a free basis")
        return Certificate("free", HOLDS, witness, _budget_note())
    return Certificate("free", FAILS, witness, _budget_note())


def jacobian(f: Polynomial) -> Ideal:
    return Ideal(f.ring, [f.diff(i) for i in range(f.ring.ngens)])


def euler_locus(f: Polynomial) -> Ideal:
    """``Jac(f) : f``; its zero set is where ``f`` is not Euler-homogeneous."""
    _check_nonconstant(f)
    J = jacobian(f)
    return Ideal(f.ring, J.colon(f).gb_polys)


def strong_euler_at(f: Polynomial, point: Sequence) -> Certificate:
    """Strong Euler-homogeneity at a rational point ``p`` with ``f(p) = 0``.

    Holds iff ``f`` lies in ``m_p Jac(f)`` locally at ``p``, i.e. iff the
    colon ideal ``(m_p Jac(f)) : f`` has a generator not vanishing at ``p``.
    """
    R = f.ring
    pt = [Fraction(c) for c in point]
    if len(pt) != R.ngens:
        raise ValueError("point has wrong length")
    if f(pt) != 0:
        raise ValueError("point is not on the divisor")
    mp = [R.gen(i) - pt[i] for i in range(R.ngens)]
    parts = [f.diff(i) for i in range(R.ngens)]
    I = Ideal(R, [a * b for a in mp for b in parts if not b.is_zero()])
    K = I.colon(f)
    gens = K.gb_polys
    for g in gens:
        v = g(pt)
        if v != 0:
            return Certificate(
                "strong-euler",
                HOLDS,
                {"point": [str(c) for c in pt], "unit_multiplier": str(g), "value": str(v)},
                _budget_note(),
            )
    return Certificate(
        "strong-euler",
        FAILS,
        {"point": [str(c) for c in pt], "colon_generators": [str(g) for g in gens]},
        _budget_note(),
    )


def holonomicity_certificate(f: Polynomial, der: LogDerModule | None = None) -> Certificate:
    """Saito-holonomicity through Fitting ideals of the logarithmic derivations.

    With ``A`` the matrix of coefficients of generators of ``Der(-log f)``,
    the locus where the evaluated derivations span at most ``k`` dimensions
    is ``V(I_{k+1}(A))``.  Holonomic iff each such locus has dimension
    ``<= k``.
    """
    R = f.ring
    n = R.ngens
    try:
        L = der if der is not None else der_log(f)
        mat = [list(d.coefficients) for d in L.generators]
        loci = []
        for k in range(n):
            ms = minors(mat, k + 1) if mat else []
            I = Ideal(R, ms)
            dim = I.krull_dimension() if ms else n
            loci.append({"k": k, "dimension": dim, "minors": len(ms)})
            if dim > k:
                w = {"k": k, "dimension": dim, "loci": loci}
                if ms:
                    w["locus_ideal"] = [str(g) for g in I.gb_polys]
                return Certificate("saito-holonomic", FAILS, w, _budget_note())
    except BudgetExhausted as exc:
        return Certificate("saito-holonomic", INCONCLUSIVE, {"error": str(exc)}, _budget_note())
    return Certificate("saito-holonomic", HOLDS, {"loci": loci}, _budget_note())


# ---------------------------------------------------------------------------
# Liouville ideal


def _symbol_names(R: PolyRing) -> list:
    taken = set(R.names)
    for prefix in ("y_", "eta_", "sym_"):
        names = [prefix + nm for nm in R.names]
        if not taken.intersection(names):
            return names
    raise ValueError("cannot choose names for the symbol variables")


@dataclass
class LiouvilleIdeal:
    """``L_f`` (or ``L~_f`` when ``tilde``) in the doubled ring ``R[y]``."""

    f: Polynomial
    ring: PolyRing
    ideal: Ideal
    tilde: bool = False

    @property
    def n(self) -> int:
        return self.f.ring.ngens

    def bidegree(self, g: Polynomial) -> set:
        n = self.n
        R = self.f.ring
        return {
            (sum(R.weights[i] * e[i] for i in range(n)), sum(e[n:])) for e in g._d
        }

    def to_json(self) -> dict:
        return {
            "ring": list(self.ring.names),
            "generators": [str(g) for g in self.ideal.polys],
            "tilde": self.tilde,
        }


def doubled_ring(R: PolyRing) -> PolyRing:
    """``R[y]``; ``y_i`` gets weight ``W + 1 - w_i`` so symbols stay homogeneous."""
    W = max(R.weights)
    ws = list(R.weights) + [W + 1 - w for w in R.weights]
    return PolyRing(list(R.names) + _symbol_names(R), ws, R.order if R.order != "lex" else "grevlex")


def _lift(g: Polynomial, S: PolyRing) -> Polynomial:
    k = S.ngens - g.ring.ngens
    return Polynomial._raw(S, {e + (0,) * k: c for e, c in g._d.items()})


def symbol(delta: Derivation, S: PolyRing) -> Polynomial:
    n = delta.ring.ngens
    out = S.zero()
    for i, a in enumerate(delta.coefficients):
        if not a.is_zero():
            out = out + _lift(a, S) * S.gen(n + i)
    return out


def liouville_ideal(f: Polynomial, der0: LogDerModule | None = None) -> LiouvilleIdeal:
    L = der0 if der0 is not None else der_log0(f)
    S = doubled_ring(f.ring)
    gens = [symbol(d, S) for d in L.generators]
    return LiouvilleIdeal(f, S, Ideal(S, gens))


def diagonal_euler_field(f: Polynomial) -> Derivation | None:
    """An Euler field ``sum w_i x_i d_i`` with ``E(f) = f`` and rational ``w``.

    Solves ``sum_i w_i e_i = 1`` over the exponents ``e`` of ``f``; returns
    ``None`` when ``f`` has no such diagonal Euler field.  For weighted
    homogeneous ``f`` this is ``sum w_i x_i d_i / deg f``.
    """
    R = f.ring
    if _homogeneous_degree(f) not in (None, 0):
        return euler_field(f)
    n = R.ngens
    rows = [list(e) + [1] for e in f._d]
    Rr, piv = linalg.rref(rows, n + 1)
    if n in piv:
        return None
    w = [Fraction(0)] * n
    for row, p in zip(Rr, piv):
        w[p] = row[n]
    E = Derivation(R, tuple(R.gen(i) * w[i] for i in range(n)))
    if E(f) != f:
        raise AssertionError("diagonal Euler field check failed")
    return E


def tilde_liouville(f: Polynomial, der0: LogDerModule | None = None) -> LiouvilleIdeal:
    """``L_f + (symbol of an Euler field)``.

    Uses the weighted Euler field for weighted homogeneous ``f`` and more
    generally any diagonal Euler field; two Euler fields differ by an element
    of ``Der(-log_0 f)``, so the ideal does not depend on the choice.
    """
    E = diagonal_euler_field(f)
    if E is None:
        raise ValueError("f has no global diagonal Euler field")
    base = liouville_ideal(f, der0)
    S = base.ring
    return LiouvilleIdeal(f, S, Ideal(S, base.ideal.polys + [symbol(E, S)]), tilde=True)


def _saturate_by(I: Ideal, g: Polynomial, rounds: int = 32) -> Ideal:
    cur = I
    for _ in range(rounds):
        nxt = cur.colon(g)
        if nxt == cur:
            return cur
        cur = nxt
    raise BudgetExhausted("saturation rounds", rounds)


def mixed_dimension_witness(I: Ideal, base_vars: Sequence[int]) -> dict | None:
    """Evidence that ``I`` has associated primes of different dimensions.

    Two sufficient tests, tried for each base variable ``x_i`` and for the
    ideal of all base variables:

    * ``I : x_i^∞`` is proper of dimension ``< dim I``: its associated primes
      are associated primes of ``I``, so ``I`` has one of smaller dimension.
    * ``I : J ≠ I`` and ``dim(I + J) < dim I``: ``J`` lies in an associated
      prime, which then has dimension ``<= dim(I + J)``.

    Mixed dimensions rule out Cohen-Macaulayness (CM ideals are unmixed).
    """
    S = I.ring
    dim = I.krull_dimension()
    xs = [S.gen(i) for i in base_vars]
    # I : J is the intersection of the colons by the generators of J
    IJ = I.colon(xs[0])
    for x in xs[1:]:
        IJ = Ideal(S, intersect(IJ, I.colon(x)).gens)
    if not (IJ == I):
        dj = Ideal(S, I.polys + xs).krull_dimension()
        if dj < dim:
            return {
                "test": "colon by the base variable ideal",
                "dimension": dim,
                "dimension_of_I_plus_J": dj,
                "colon_element": str(next(g for g in IJ.polys if not I.contains(Ideal(S, [g]).gens[0]))),
            }
    for x in xs:
        sat = _saturate_by(I, x)
        if sat.is_unit():
            continue
        ds = sat.krull_dimension()
        if ds < dim:
            return {
                "test": "saturation by a variable",
                "variable": str(x),
                "dimension": dim,
                "saturation_dimension": ds,
            }
    return None


def liouville_dimension_cm(
    f: Polynomial,
    *,
    tilde: bool = False,
    max_length: int | None = None,
    der0: LogDerModule | None = None,
) -> Certificate:
    """Dimension and Cohen-Macaulay evidence for ``L_f`` (or ``L~_f``).

    For homogeneous ``f`` CM is decided from a minimal graded resolution of
    ``R[y]/L``: the quotient is CM iff its projective dimension equals the
    codimension ``2n - dim``.  The resolution is only computed up to length
    ``codim + 1``, since a nonzero module there already proves failure.
    Without a positive grading, failure is certified by associated primes
    of different dimensions (:func:`mixed_dimension_witness`); otherwise
    the verdict is inconclusive.
    """
    n = f.ring.ngens
    try:
        L = tilde_liouville(f, der0) if tilde else liouville_ideal(f, der0)
        dim = L.ideal.krull_dimension()
        expected = n if tilde else n + 1
        codim = 2 * n - dim
        witness = {
            "dimension": dim,
            "expected_dimension": expected,
            "dimension_verdict": dim == expected,
            "codimension": codim,
            "generators": [str(g) for g in L.ideal.polys],
        }
        if not L.ideal.is_homogeneous():
            mixed = mixed_dimension_witness(L.ideal, range(n))
            if mixed is not None:
                witness["mixed_dimensions"] = mixed
                return Certificate("liouville-cm", FAILS, witness, _budget_note())
            witness["reason"] = "no positive grading; graded resolution inapplicable"
            return Certificate("liouville-cm", INCONCLUSIVE, witness, _budget_note())
        cutoff = codim + 1 if max_length is None else max_length
        res = free_resolution(L.ideal, quotient=True, max_length=cutoff)
    except BudgetExhausted as exc:
        return Certificate("liouville-cm", INCONCLUSIVE, {"error": str(exc)}, _budget_note())
    p = res.pdim()
    witness["betti"] = res.to_json()["betti"]
    if p is None:
        if res.length > codim:
            witness["pdim_lower_bound"] = res.length
            return Certificate("liouville-cm", FAILS, witness, _budget_note())
        witness["reason"] = "resolution cutoff reached"
        return Certificate("liouville-cm", INCONCLUSIVE, witness, _budget_note())
    witness["pdim"] = p
    # y-degrees of the first syzygies, evidence for linear type
    if len(res.maps) > 2:
        ydeg = sorted({max(_ydeg(c, n) for c in col.components if not c.is_zero()) for col in res.maps[2]})
        witness["first_syzygy_y_degrees"] = ydeg
    return Certificate("liouville-cm", HOLDS if p == codim else FAILS, witness, _budget_note())


def _ydeg(g: Polynomial, n: int) -> int:
    return max(sum(e[n:]) for e in g._d)


# ---------------------------------------------------------------------------
# annihilator generated in order one


def _is_linear_product(f: Polynomial) -> bool:
    """Whether ``f`` splits into linear forms over Q (so it is an arrangement)."""
    from .arrange import linear_factors

    return linear_factors(f) is not None


def order_one_generation_certificate(f: Polynomial, points: Sequence | None = None) -> Certificate:
    """Check the hypotheses under which ``ann(f^s)`` is generated in order one.

    Hypotheses: tame, strongly Euler-homogeneous and Saito-holonomic.  Strong
    Euler-homogeneity is verified at the origin (and any given points); away
    from the origin it follows for products of linear forms (locally a
    central arrangement) or when the singular locus is the origin alone.
    """
    R = f.ring
    parts = {}
    tame = tameness(f)
    parts["tame"] = tame.to_json()
    holo = holonomicity_certificate(f)
    parts["saito-holonomic"] = holo.to_json()
    se_checks = []
    pts = list(points or [])
    origin = [0] * R.ngens
    if f(origin) == 0 and origin not in pts:
        pts.insert(0, origin)
    se_ok = True
    for p in pts:
        c = strong_euler_at(f, p)
        se_checks.append(c.to_json())
        se_ok = se_ok and c.holds
    if _homogeneous_degree(f) is not None:
        sing = Ideal(R, [f] + [f.diff(i) for i in range(R.ngens)])
        if sing.krull_dimension() <= 0:
            elsewhere = "singular locus is the origin"
        elif _is_linear_product(f):
            elsewhere = "product of linear forms: locally a central arrangement"
        else:
            elsewhere = None
    else:
        elsewhere = None
    parts["strong-euler"] = {"checks": se_checks, "away_from_checked_points": elsewhere}
    if elsewhere is None and se_ok:
        se_verdict = INCONCLUSIVE
    else:
        se_verdict = HOLDS if se_ok else FAILS
    verdicts = [tame.verdict, holo.verdict, se_verdict]
    failing = [nm for nm, v in zip(("tame", "saito-holonomic", "strong-euler"), verdicts) if v == FAILS]
    if failing:
        parts["failing_hypotheses"] = failing
        parts["conclusion"] = "theorem hypotheses not met"
        return Certificate("ann-order-one", FAILS, parts, _budget_note())
    if INCONCLUSIVE in verdicts:
        parts["conclusion"] = "hypotheses not verified"
        return Certificate("ann-order-one", INCONCLUSIVE, parts, _budget_note())
    parts["conclusion"] = "theorem applies: ann(f^s) is generated by Der(-log_0 f) and E - s"
    return Certificate("ann-order-one", HOLDS, parts, _budget_note())
