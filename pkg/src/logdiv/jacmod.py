"""Jacobian ideal, the Jacobian module ``H^0_m(R/Jac f)`` and its degree window."""

from __future__ import annotations

from dataclasses import dataclass, field

from ._flint import gcd
from .gb import HilbertSeries, Ideal, _saturate_by_variables, saturate_irrelevant
from .logder import _homogeneous_degree
from .poly import Polynomial
from .report import FAILS, HOLDS, INCONCLUSIVE, Certificate

__all__ = [
    "JacobianModule",
    "JacobianModuleReport",
    "gorenstein_symmetry_check",
    "is_reduced",
    "jacobian_ideal",
    "jacobian_module",
    "milnor_window_report",
]


def jacobian_ideal(f: Polynomial) -> Ideal:
    """``(f_1, ..., f_n)`` with its Gröbner basis computed."""
    if f.is_constant():
        raise ValueError("f must be nonconstant")
    J = Ideal(f.ring, [f.diff(i) for i in range(f.ring.ngens)])
    J.groebner()
    return J


@dataclass
class JacobianModule:
    """``(Jac : m^∞) / Jac`` as a graded subquotient."""

    f: Polynomial
    jacobian: Ideal
    saturation: Ideal
    series: HilbertSeries
    route: str

    def as_polynomial(self) -> dict:
        return self.series.as_polynomial()

    def to_json(self) -> dict:
        return {
            "series": [[k, v] for k, v in sorted(self.as_polynomial().items())],
            "string": str(self.series),
            "route": self.route,
            "saturation": [str(g) for g in self.saturation.gb_polys],
        }


def jacobian_module(f: Polynomial, *, route: str = "linear-form") -> JacobianModule:
    """Hilbert series of ``H^0_m(R/Jac f)`` as ``HS(R/Jac) - HS(R/(Jac : m^∞))``.

    ``route`` chooses how ``Jac : m^∞`` is computed: ``"linear-form"``
    saturates by a certified generic linear form, ``"variables"`` intersects
    the saturations by the individual variables.  The result is checked to
    be a polynomial with nonnegative coefficients (finite length).
    """
    if _homogeneous_degree(f) is None:
        raise ValueError("the Jacobian module needs a homogeneous f")
    J = jacobian_ideal(f)
    if route == "linear-form":
        S = saturate_irrelevant(J)
    elif route == "variables":
        S = _saturate_by_variables(J)
    else:
        raise ValueError(f"unknown route {route!r}")
    if not S.contains_submodule(J):
        raise AssertionError("saturation does not contain the Jacobian ideal")
    series = (J.quotient_hilbert_series() - S.quotient_hilbert_series()).simplified()
    if not series.is_polynomial():
        raise AssertionError("H^0_m has infinite length")
    if any(v < 0 for v in series.numerator.values()):
        raise AssertionError("negative Hilbert function")
    return JacobianModule(f, J, S, series, route)


def is_reduced(f: Polynomial) -> bool:
    """Squarefree test: ``gcd(f, f_1, ..., f_n)`` is constant.

    A repeated factor ``p^2 | f`` divides ``f`` and every ``f_i``;
    conversely a common irreducible factor ``p`` of ``f`` and all ``f_i``
    divides ``f / p`` (characteristic zero).
    """
    g = f
    for i in range(f.ring.ngens):
        d = f.diff(i)
        if d.is_zero():
            continue
        g = gcd(g, d)
        if g.is_constant():
            return True
    return g.is_constant()


@dataclass
class JacobianModuleReport:
    f: Polynomial
    d: int
    n: int
    module: JacobianModule
    window: list  # (k, degree, dim)
    flags: dict = field(default_factory=dict)
    warnings: list = field(default_factory=list)

    def entry(self, degree: int) -> int:
        return self.module.as_polynomial().get(degree, 0)

    def to_json(self) -> dict:
        return {
            "f": str(self.f),
            "d": self.d,
            "n": self.n,
            "series": [[k, v] for k, v in sorted(self.module.as_polynomial().items())],
            "series_string": str(self.module.series),
            "window": [
                {"k": k, "degree": deg, "dim": dim, "eigenvalue": [k, self.d]} for k, deg, dim in self.window
            ],
            "flags": self.flags,
            "warnings": self.warnings,
            "annotation": "each window entry is a lower bound for the lambda-eigenspace of "
            "gr^Hodge_{n-2} H^{n-1} of the Milnor fiber (not computed)",
        }


def milnor_window_report(f: Polynomial) -> JacobianModuleReport:
    """Dimensions of ``H^0_m(R/Jac f)`` in degrees ``d - n + k`` for ``1 <= k <= d``.

    Entry ``k`` carries the eigenvalue label ``exp(2 pi i k/d)``, recorded
    as the pair ``(k, d)``.  Hypotheses (``f`` reduced, ``n >= 2``, isolated
    singularities of the projective hypersurface, i.e. ``dim R/Jac <= 1``)
    are flagged; the table is produced either way.
    """
    d = _homogeneous_degree(f)
    if d is None:
        raise ValueError("f must be homogeneous")
    n = f.ring.ngens
    M = jacobian_module(f)
    poly = M.as_polynomial()
    window = [(k, d - n + k, poly.get(d - n + k, 0)) for k in range(1, d + 1)]
    dim_jac = M.jacobian.krull_dimension()
    flags = {
        "reduced": is_reduced(f),
        "n_at_least_2": n >= 2,
        "jacobian_dimension": dim_jac,
        "isolated_singularities": dim_jac <= 1,
    }
    warn = [f"hypothesis not met: {k}" for k in ("reduced", "n_at_least_2", "isolated_singularities") if not flags[k]]
    return JacobianModuleReport(f, d, n, M, window, flags, warn)


def gorenstein_symmetry_check(f: Polynomial, module: JacobianModule | None = None) -> Certificate:
    """``h(t) = h(3d - 6 - t)`` for the Hilbert function of ``H^0_m(R_3/Jac f)``."""
    d = _homogeneous_degree(f)
    R = f.ring
    if d is None or R.ngens != 3:
        return Certificate("gorenstein-symmetry", INCONCLUSIVE, {"reason": "needs homogeneous f in 3 variables"})
    M = module or jacobian_module(f)
    dim_jac = M.jacobian.krull_dimension()
    if not is_reduced(f) or dim_jac != 1:
        return Certificate(
            "gorenstein-symmetry",
            INCONCLUSIVE,
            {"reason": "hypotheses not met", "reduced": is_reduced(f), "jacobian_dimension": dim_jac},
        )
    h = M.as_polynomial()
    centre = 3 * d - 6
    bad = [t for t in h if h.get(centre - t, 0) != h[t]]
    witness = {"series": [[k, v] for k, v in sorted(h.items())], "symmetry_axis": f"{centre}/2"}
    if bad:
        witness["asymmetric_degrees"] = sorted(bad)
        return Certificate("gorenstein-symmetry", FAILS, witness)
    return Certificate("gorenstein-symmetry", HOLDS, witness)
