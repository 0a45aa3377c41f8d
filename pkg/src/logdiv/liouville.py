"""Finite bigraded windows of the Liouville complex.

Position ``i`` of the complex is ``C^i = K^i ⊗ Q[y]`` where ``K^i`` is the
kernel of ``df ∧ : Omega^i -> Omega^{i+1}`` on polynomial forms (the
numerators ``eta`` of forms ``eta / f``), and the differential is the wedge
with the Liouville form ``y dx = sum_j y_j dx_j``.

Bidegree ``(a, b)``: ``a`` is the coefficient degree of the numerator plus
the form degree, ``b`` the degree in ``y``.  Since ``df ∧`` only touches the
``Omega`` factor, ``C^i_{(a,b)} = K^i_a ⊗ Q[y]_b``.  The terminal
cohomology ``C^n / (y dx ∧ C^{n-1})`` is ``R[x,y]/L_f`` shifted by the
volume form, so ``H^n_{(a,b)}`` is compared with the Hilbert function of
``R[x,y]/L_f`` in bidegree ``(a - n, b)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import linalg
from .gb import Ideal
from .logder import _homogeneous_degree, form_basis, liouville_ideal
from .poly import Polynomial
from .report import jsonable

__all__ = [
    "CohomologyTable",
    "Window",
    "default_window",
    "lc_cohomology",
    "lc_module_basis",
    "monomials",
]


def monomials(n: int, deg: int) -> list:
    """Exponent vectors of degree ``deg`` in ``n`` variables (lexicographic)."""
    if deg < 0:
        return []
    if n == 0:
        return [()] if deg == 0 else []
    out = []
    for k in range(deg, -1, -1):
        for rest in monomials(n - 1, deg - k):
            out.append((k,) + rest)
    return out


def _add(e, j, k=1):
    return e[:j] + (e[j] + k,) + e[j + 1:]


def _wedge_sign(j: int, I: tuple) -> int:
    """Sign of ``dx_j ∧ dx_I`` after sorting."""
    return -1 if sum(1 for k in I if k < j) % 2 else 1


@dataclass(frozen=True)
class Window:
    """Rectangle ``0 <= a <= a_max``, ``0 <= b <= b_max``."""

    a_max: int
    b_max: int

    def bidegrees(self):
        for a in range(self.a_max + 1):
            for b in range(self.b_max + 1):
                yield a, b


def default_window(f: Polynomial) -> Window:
    d = _homogeneous_degree(f)
    return Window(2 * d + f.ring.ngens, 3)


class _Complex:
    """Kernels ``K^i_a`` and ranks of ``y dx ∧`` with caching."""

    def __init__(self, f: Polynomial):
        R = f.ring
        if any(w != 1 for w in R.weights):
            raise ValueError("window checks use the standard grading")
        d = _homogeneous_degree(f)
        if d is None:
            raise ValueError("f must be homogeneous")
        self.f = f
        self.n = R.ngens
        self.d = d
        self.parts = [f.diff(i) for i in range(self.n)]
        self._kernels = {}
        self._ranks = {}

    def omega_basis(self, i: int, a: int) -> list:
        """``(I, e)`` pairs spanning ``Omega^i_a`` (``|e| = a - i``)."""
        return [(I, e) for I in form_basis(self.n, i) for e in monomials(self.n, a - i)]

    def kernel(self, i: int, a: int) -> list:
        """Basis of ``K^i_a`` as dicts ``{(I, e): coeff}``."""
        key = (i, a)
        if key in self._kernels:
            return self._kernels[key]
        src = self.omega_basis(i, a)
        if not src:
            self._kernels[key] = []
            return []
        if i == self.n:
            out = [{s: Fraction(1)} for s in src]
            self._kernels[key] = out
            return out
        rows_idx = {}
        cols = []
        for I, e in src:
            col = {}
            for j in range(self.n):
                if j in I or self.parts[j].is_zero():
                    continue
                sign = _wedge_sign(j, I)
                J = tuple(sorted(I + (j,)))
                for m, c in self.parts[j]._d.items():
                    tgt = (J, tuple(x + y for x, y in zip(e, m)))
                    col[tgt] = col.get(tgt, 0) + sign * c
            cols.append({k: v for k, v in col.items() if v})
            for k in cols[-1]:
                rows_idx.setdefault(k, len(rows_idx))
        if not rows_idx:
            null = [[Fraction(int(r == c)) for r in range(len(src))] for c in range(len(src))]
        else:
            mat = [[Fraction(0)] * len(src) for _ in rows_idx]
            for c, col in enumerate(cols):
                for k, v in col.items():
                    mat[rows_idx[k]][c] = v
            null = linalg.nullspace(mat, len(src))
        out = [{src[c]: v for c, v in enumerate(vec) if v} for vec in null]
        self._kernels[key] = out
        return out

    def dim(self, i: int, a: int, b: int) -> int:
        if i < 0 or i > self.n or b < 0:
            return 0
        return len(self.kernel(i, a)) * comb(b + self.n - 1, self.n - 1)

    def differential_columns(self, i: int, a: int, b: int) -> list:
        """Images of the basis of ``C^i_{(a,b)}`` under ``y dx ∧``, as sparse dicts."""
        out = []
        for k in self.kernel(i, a):
            for beta in monomials(self.n, b):
                col = {}
                for (I, e), c in k.items():
                    for j in range(self.n):
                        if j in I:
                            continue
                        J = tuple(sorted(I + (j,)))
                        tgt = (J, e, _add(beta, j))
                        col[tgt] = col.get(tgt, 0) + _wedge_sign(j, I) * c
                out.append({t: v for t, v in col.items() if v})
        return out

    def rank(self, i: int, a: int, b: int) -> int:
        """Rank of ``y dx ∧ : C^i_{(a,b)} -> C^{i+1}_{(a+1,b+1)}``."""
        key = (i, a, b)
        if key in self._ranks:
            return self._ranks[key]
        if i < 0 or i >= self.n or b < 0 or self.dim(i, a, b) == 0:
            self._ranks[key] = 0
            return 0
        cols = self.differential_columns(i, a, b)
        idx = {}
        for col in cols:
            for t in col:
                idx.setdefault(t, len(idx))
        if not idx:
            r = 0
        else:
            rows = [[0] * len(cols) for _ in idx]
            for c, col in enumerate(cols):
                for t, v in col.items():
                    rows[idx[t]][c] = v
            r = linalg.rank(rows, len(cols))
        self._ranks[key] = r
        return r

    def cohomology(self, i: int, a: int, b: int) -> int:
        return self.dim(i, a, b) - self.rank(i, a, b) - self.rank(i - 1, a - 1, b - 1)


def lc_module_basis(f: Polynomial, i: int, bidegree: tuple) -> list:
    """Basis of ``C^i_{(a,b)}``: pairs ``(form, y-monomial)``.

    Each form is a dict ``{(I, exponent): coefficient}`` for the numerator
    ``sum c x^e dx_I`` of an element of the kernel of ``df ∧``.
    """
    a, b = bidegree
    C = _Complex(f)
    return [(k, beta) for k in C.kernel(i, a) for beta in monomials(f.ring.ngens, b)]


@dataclass
class CohomologyTable:
    f: Polynomial
    window: Window
    h: dict  # (i, a, b) -> dim H^i
    dims: dict  # (i, a, b) -> dim C^i
    terminal_expected: dict  # (a, b) -> dim (R[x,y]/L)_(a-n, b)
    liouville_generators: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.f.ring.ngens

    def intermediate_vanishes(self) -> bool:
        return all(v == 0 for (i, a, b), v in self.h.items() if i < self.n)

    def nonzero_intermediate(self) -> list:
        return sorted(k for k, v in self.h.items() if k[0] < self.n and v)

    def terminal_matches(self) -> bool:
        return all(self.h[(self.n, a, b)] == v for (a, b), v in self.terminal_expected.items())

    def terminal_mismatches(self) -> list:
        return sorted(
            ((a, b), self.h[(self.n, a, b)], v)
            for (a, b), v in self.terminal_expected.items()
            if self.h[(self.n, a, b)] != v
        )

    def rows(self) -> list:
        return [{"position": i, "bidegree": [a, b], "h": v} for (i, a, b), v in sorted(self.h.items())]

    def to_json(self) -> dict:
        return jsonable(
            {
                "f": str(self.f),
                "window": {"a_max": self.window.a_max, "b_max": self.window.b_max},
                "rows": self.rows(),
                "intermediate_vanishing": self.intermediate_vanishes(),
                "terminal_match": self.terminal_matches(),
                "terminal_mismatches": self.terminal_mismatches(),
            }
        )


def _bigraded_hilbert_function(L: Ideal, n: int, window: Window) -> dict:
    """``dim (R[x,y]/L)_{(p, b)}`` by counting standard monomials of the lead ideal."""
    leads = L.lead_monomials()[0]
    out = {}
    for a, b in window.bidegrees():
        p = a - n
        if p < 0:
            out[(a, b)] = 0
            continue
        count = 0
        for ex in monomials(n, p):
            for ey in monomials(n, b):
                m = ex + ey
                if not any(all(u <= v for u, v in zip(l, m)) for l in leads):
                    count += 1
        out[(a, b)] = count
    return out


def lc_cohomology(f: Polynomial, window: Window | None = None) -> CohomologyTable:
    """``H^i`` of the window for every position and the terminal comparison."""
    C = _Complex(f)
    W = window or default_window(f)
    h, dims = {}, {}
    for i in range(C.n + 1):
        for a, b in W.bidegrees():
            dims[(i, a, b)] = C.dim(i, a, b)
            h[(i, a, b)] = C.cohomology(i, a, b)
    L = liouville_ideal(f)
    expected = _bigraded_hilbert_function(L.ideal, C.n, W)
    return CohomologyTable(f, W, h, dims, expected, [str(g) for g in L.ideal.polys])
