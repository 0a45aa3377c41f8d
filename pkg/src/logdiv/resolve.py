"""Graded free resolutions, minimization and Betti tables.

A resolution of a graded module ``M`` is stored as free modules
``F_0, F_1, ..., F_p`` with maps ``d_i : F_i -> F_{i-1}`` given column by
column.  ``d_0`` is the augmentation: for a submodule ``M ⊆ G`` it sends
the basis of ``F_0`` to the generators of ``M``; for a quotient ``G/M`` we
take ``F_0 = G`` and ``d_0`` is the identity (not stored).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .gb import FreeModule, HilbertSeries, ModuleElement, Submodule, syzygies

__all__ = [
    "GradedResolution",
    "free_resolution",
    "minimize",
    "pdim",
    "betti_table",
    "euler_characteristic_check",
]


@dataclass
class GradedResolution:
    """Chain ``0 <- M <- F_0 <- F_1 <- ... <- F_p <- 0``.

    ``maps[i]`` lists the images of the basis of ``modules[i]``: for
    ``i >= 1`` they lie in ``modules[i-1]``, and ``maps[0]`` lies in the
    ambient module ``ambient`` (``None`` when resolving a quotient, where
    ``F_0`` is the ambient module itself).  ``complete`` is false when a
    length cutoff stopped the computation before the syzygies vanished.
    """

    modules: list
    maps: list
    ambient: FreeModule | None = None
    quotient: bool = False
    complete: bool = True
    source: Submodule | None = field(default=None, repr=False)

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def ranks(self) -> tuple:
        return tuple(F.rank for F in self.modules)

    def betti(self) -> dict:
        """``{(i, j): beta_ij}`` with ``j`` the internal degree."""
        out = {}
        for i, F in enumerate(self.modules):
            for s, c in Counter(F.shifts).items():
                out[(i, s)] = c
        return dict(sorted(out.items()))

    def pdim(self) -> int | None:
        """Projective dimension of the resolved module (``None`` if incomplete)."""
        if not self.complete:
            return None
        if self.is_zero_module():
            return -1
        return self.length

    def is_zero_module(self) -> bool:
        return len(self.modules) == 1 and self.modules[0].rank == 0

    def to_json(self) -> dict:
        return {
            "betti": [[i, j, c] for (i, j), c in self.betti().items()],
            "pdim": self.pdim(),
        }

    def hilbert_series_of_terms(self) -> HilbertSeries:
        """Alternating sum ``sum_i (-1)^i HS(F_i)``."""
        total = None
        for i, F in enumerate(self.modules):
            if F.rank == 0:
                continue
            h = F.hilbert_series().scale((-1) ** i)
            total = h if total is None else total + h
        if total is None:
            return HilbertSeries({}, ())
        return total.simplified()

    def check_complex(self) -> bool:
        """``d_{i} ∘ d_{i+1} = 0`` for all consecutive maps (and into the ambient)."""
        for i in range(2 if self.quotient else 1, len(self.maps)):
            lower = self.maps[i - 1]
            for col in self.maps[i]:
                acc = None
                for c, img in zip(col.components, lower):
                    if c.is_zero():
                        continue
                    term = img * c
                    acc = term if acc is None else acc + term
                if acc is not None and not acc.is_zero():
                    return False
        return True

    def has_unit_entries(self) -> bool:
        for i in range(1, len(self.maps)):
            for col in self.maps[i]:
                for c in col.components:
                    if not c.is_zero() and c.is_constant():
                        return True
        return False

    def matrix(self, i: int) -> list:
        """Matrix of ``d_i`` as rows of polynomials."""
        cols = self.maps[i]
        if not cols:
            return []
        nrows = len(cols[0].components)
        return [[cols[c].components[r] for c in range(len(cols))] for r in range(nrows)]


def _empty_module(ring) -> FreeModule:
    F = FreeModule.__new__(FreeModule)
    F.ring = ring
    F.rank = 0
    F.shifts = ()
    F.order = "top"
    return F


def free_resolution(
    M: Submodule,
    *,
    quotient: bool = False,
    max_length: int | None = None,
    schreyer_only: bool = False,
) -> GradedResolution:
    """Minimal graded free resolution of ``M`` (or of ``G/M`` with ``quotient=True``).

    Each step takes the syzygies of the current generators.  By default the
    syzygy module is cut down to minimal generators (graded Nakayama) before
    the next step, and the finished chain is passed through :func:`minimize`
    as a safeguard.  With ``schreyer_only=True`` the full Gröbner generating
    set of every syzygy module is kept and only :func:`minimize` makes the
    chain minimal; both routes give the same Betti numbers.

    ``max_length`` bounds the number of syzygy steps; when the bound stops
    the computation the result has ``complete=False``.
    """
    if not M.is_homogeneous():
        raise ValueError("graded resolution needs a homogeneous presentation")
    ring = M.ring
    G = M.module
    gens = [g for g in M.gens if not g.is_zero()]
    if not schreyer_only:
        gens = M.mingens() if gens else []

    def make_free(cols):
        return FreeModule(ring, len(cols), [c.degree() for c in cols]) if cols else _empty_module(ring)

    modules, maps = [], []
    if quotient:
        modules.append(G)
        maps.append([G.basis(j) for j in range(G.rank)])
        if gens:
            F1 = make_free(gens)
            modules.append(F1)
            maps.append(gens)
        cur, cur_mod = gens, (modules[-1] if gens else None)
    else:
        F0 = make_free(gens)
        modules.append(F0)
        maps.append(gens)
        cur, cur_mod = gens, F0
    complete = True
    while cur:
        if max_length is not None and len(modules) - 1 >= max_length:
            complete = False
            break
        S = syzygies(cur)
        nxt = [s for s in S.gens if not s.is_zero()]
        if not nxt:
            break
        if not schreyer_only:
            nxt = S.mingens()
        Fn = make_free(nxt)
        # re-home the syzygies into the free module that carries the shifts
        nxt = [ModuleElement(cur_mod, s.components) for s in nxt]
        modules.append(Fn)
        maps.append(nxt)
        cur, cur_mod = nxt, Fn
    res = GradedResolution(modules, maps, None if quotient else G, quotient, complete, M)
    return minimize(res)


def minimize(res: GradedResolution) -> GradedResolution:
    """Remove unit entries by graded Gaussian elimination.

    If ``d_i`` has a nonzero constant entry ``u`` in row ``r`` and column
    ``c``, the basis element ``e_c`` of ``F_i`` and ``ε_r`` of ``F_{i-1}``
    split off as a trivial summand ``R --u--> R``: the remaining entries of
    ``d_i`` become ``d[k][j] - d[r][j] d[k][c] / u``, column ``r`` of
    ``d_{i-1}`` and row ``c`` of ``d_{i+1}`` are dropped.  Repeats until no
    unit entries remain.
    """
    ring = res.modules[0].ring
    # work on dense matrices: mats[i][row][col]
    mats = [None] + [[list(col.components) for col in res.maps[i]] for i in range(1, len(res.maps))]
    shifts = [list(F.shifts) for F in res.modules]
    aug = [list(col.components) for col in res.maps[0]]  # columns of d_0
    changed = True
    while changed:
        changed = False
        for i in range(1, len(mats)):
            cols = mats[i]
            hit = None
            for c, col in enumerate(cols):
                for r, ent in enumerate(col):
                    if not ent.is_zero() and ent.is_constant():
                        hit = (r, c)
                        break
                if hit:
                    break
            if hit is None:
                continue
            r, c = hit
            u = cols[c][r].constant_coeff()
            pivot = cols[c]
            row_r = [col[r] for col in cols]
            new_cols = []
            for j, col in enumerate(cols):
                if j == c:
                    continue
                factor = col[r]
                if factor.is_zero():
                    new_cols.append([e for k, e in enumerate(col) if k != r])
                else:
                    scaled = factor * Fraction(1) / u
                    new_cols.append(
                        [col[k] - pivot[k] * scaled for k in range(len(col)) if k != r]
                    )
            mats[i] = new_cols
            # drop column r of d_{i-1}
            if i - 1 >= 1:
                mats[i - 1] = [col for k, col in enumerate(mats[i - 1]) if k != r]
            else:
                aug = [col for k, col in enumerate(aug) if k != r]
            # drop row c of d_{i+1}
            if i + 1 < len(mats):
                # in the new basis of F_i the c-coordinate of every column is
                # a_c + sum_j a_j d[r][j] / u, which must vanish
                for col in mats[i + 1]:
                    acc = col[c]
                    for j, a in enumerate(col):
                        if j != c and not a.is_zero() and not row_r[j].is_zero():
                            acc = acc + a * row_r[j] / u
                    if not acc.is_zero():
                        raise AssertionError("minimization invariant violated")
                mats[i + 1] = [[e for k, e in enumerate(col) if k != c] for col in mats[i + 1]]
            shifts[i - 1].pop(r)
            shifts[i].pop(c)
            changed = True
            break
    # rebuild
    modules = []
    for sh in shifts:
        modules.append(FreeModule(ring, len(sh), sh) if sh else _empty_module(ring))
    # trailing zero modules are removed
    while len(modules) > 1 and modules[-1].rank == 0:
        modules.pop()
        mats.pop()
    maps = []
    if res.quotient:
        G = modules[0] if modules[0].rank else res.modules[0]
        maps.append([G.basis(j) for j in range(G.rank)] if modules[0].rank else [])
    else:
        amb = res.ambient
        maps.append([ModuleElement(amb, tuple(col)) for col in aug])
    for i in range(1, len(modules)):
        maps.append([ModuleElement(modules[i - 1], tuple(col)) for col in mats[i]])
    return GradedResolution(modules, maps, res.ambient, res.quotient, res.complete, res.source)


def betti_table(res: GradedResolution) -> dict:
    return res.betti()


def pdim(M: Submodule, *, quotient: bool = False, max_length: int | None = None) -> int | None:
    """Projective dimension of ``M`` (or ``G/M``); ``None`` if the cutoff was hit."""
    return free_resolution(M, quotient=quotient, max_length=max_length).pdim()


def euler_characteristic_check(res: GradedResolution, series: HilbertSeries | None = None) -> bool:
    """Compare ``sum (-1)^i HS(F_i)`` with the Hilbert series of the resolved module.

    The module's series is computed independently from its own Gröbner
    basis unless ``series`` is supplied.
    """
    if series is None:
        M = res.source
        series = M.quotient_hilbert_series() if res.quotient else M.hilbert_series()
    return res.hilbert_series_of_terms() == series and res.check_complex()
