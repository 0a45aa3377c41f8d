"""Command-line front end.

Every command reads one input (a polynomial file, an arrangement file, or
``--poly``/``--vars``), runs under the configured budget and prints a JSON
report (or a tab-delimited view of it with ``--format table``).  Reports
are deterministic, so a cached report is byte-identical to a recomputed
one.  ``--figures DIR`` additionally writes PNG figures.

Exit status: 0 success (including a ``fails`` verdict), 1 input error or
reproduction mismatch, 2 hypothesis not met, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__
from .arrange import (
    Arrangement,
    ArrangementError,
    intersection_lattice,
    is_indecomposable,
    nd_candidates,
    nd_check,
    parse_arrangement,
    pascal_check,
    syzygetic_lattice,
    zeta_pole_analysis,
    zeta_topological,
)
from .budget import Budget, BudgetExhausted, use_budget
from .cache import ResultCache
from .examples import EXAMPLES
from .jacmod import jacobian_module, milnor_window_report
from .liouville import Window, default_window, lc_cohomology
from .logder import (
    der_log,
    der_log0,
    euler_locus,
    freeness,
    holonomicity_certificate,
    liouville_dimension_cm,
    liouville_ideal,
    omega_log,
    omega_log0,
    omega_log_euler,
    order_one_generation_certificate,
    strong_euler_at,
    tameness,
)
from .poly import ORDERS, ParseError, Polynomial, PolyRing
from .report import INCONCLUSIVE, Certificate, jsonable
from .reproduce import reproduce
from .resolve import free_resolution

__all__ = ["RunConfig", "main", "run"]

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    """Unreadable or malformed input."""


class HypothesisError(ValueError):
    """The input does not satisfy what the command needs."""


@dataclass
class RunConfig:
    command: str
    input: str | None = None
    poly: str | None = None
    vars: str | None = None
    weights: str | None = None
    input_format: str = "auto"
    order: str = "grevlex"
    max_degree: int | None = None
    max_pairs: int | None = None
    timeout: float | None = 1800.0
    cache_dir: str | None = None
    no_cache: bool = False
    verify_cache: bool = False
    format: str = "json"
    figures: str | None = None
    options: dict = field(default_factory=dict)

    def budget(self) -> Budget:
        return Budget(self.max_degree, self.max_pairs, self.timeout)

    def describe(self) -> dict:
        return {"order": self.order, "budget": self.budget().as_dict(), "options": self.options}


# ---------------------------------------------------------------------------
# input


@dataclass
class Subject:
    f: Polynomial | None = None
    arrangement: Arrangement | None = None

    def polynomial(self) -> Polynomial:
        if self.f is None:
            raise HypothesisError("command needs a polynomial")
        return self.f

    def arr(self) -> Arrangement:
        if self.arrangement is None:
            try:
                with warnings.catch_warnings():
                    warnings.simplefilter("ignore")
                    self.arrangement = Arrangement.from_polynomial(self.polynomial())
            except ArrangementError as exc:
                raise HypothesisError(str(exc)) from exc
        return self.arrangement

    def key(self) -> dict:
        out = {}
        if self.f is not None:
            R = self.f.ring
            out["ring"] = {"names": list(R.names), "weights": list(R.weights), "order": R.order}
            out["f"] = str(self.f)
        if self.arrangement is not None:
            out["arrangement"] = self.arrangement.to_json()
        return out


def _looks_like_arrangement(lines: list) -> bool:
    for line in lines:
        if line.startswith(("vars", "weights")):
            continue
        if ":" in line or "," in line:
            return True
        toks = line.split()
        if toks and all(t.lstrip("+-").replace("/", "").isdigit() for t in toks):
            return True
    return _one_form_per_line(lines)


def _one_form_per_line(lines: list) -> bool:
    # several body lines, each a linear form in the declared variables
    names = next((line[4:].split() for line in lines if line.startswith("vars")), None)
    body = [line for line in lines if not line.startswith(("vars", "weights"))]
    if not names or len(body) < 2:
        return False
    R = PolyRing(names)
    try:
        forms = [R(line) for line in body]
    except ValueError:
        return False
    return all(f.is_homogeneous() and f.total_degree() == 1 for f in forms)


def parse_polynomial_file(text: str, order: str = "grevlex") -> Polynomial:
    """``vars x y z`` header, optional ``weights 1 1 2``, then the expression."""
    names, weights, body = None, None, []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars"):
            names = line[4:].split()
        elif line.startswith("weights"):
            weights = [int(w) for w in line[7:].split()]
        else:
            body.append(line)
    if not body:
        raise InputError("no polynomial in input")
    if names is None:
        raise InputError("polynomial input needs a 'vars' header")
    R = PolyRing(names, weights, order)
    return R(" ".join(body))


def load_subject(cfg: RunConfig) -> Subject:
    try:
        if cfg.poly is not None:
            if not cfg.vars:
                raise InputError("--poly needs --vars")
            weights = [int(w) for w in cfg.weights.split()] if cfg.weights else None
            R = PolyRing(cfg.vars, weights, cfg.order)
            return Subject(f=R(cfg.poly))
        if cfg.input is None:
            raise InputError("no input: give a file or --poly/--vars")
        text = Path(cfg.input).read_text()
        lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln]
        kind = cfg.input_format
        if kind == "auto":
            kind = "arrangement" if _looks_like_arrangement(lines) else "polynomial"
        if kind == "arrangement":
            A = parse_arrangement(text)
            R = A.ring().with_order(cfg.order)
            return Subject(f=A.polynomial(R), arrangement=A)
        return Subject(f=parse_polynomial_file(text, cfg.order))
    except InputError:
        raise
    except (OSError, ParseError, ArrangementError, ValueError) as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------------------
# commands; each returns (report, status, figure jobs)


def _cert_status(c: Certificate) -> int:
    if c.verdict != INCONCLUSIVE:
        return EXIT_OK
    err = str(c.witness.get("error", ""))
    return EXIT_BUDGET if "budget exhausted" in err else EXIT_HYPOTHESIS


def _cert(c: Certificate, figs=()) -> tuple:
    return c.to_json(), _cert_status(c), list(figs)


def _needs_homogeneous(f: Polynomial):
    if f.is_zero() or f.is_constant():
        raise HypothesisError("f must be nonconstant")
    from .poly import weighted_degree

    if weighted_degree(f) is None:
        raise HypothesisError("graded method needs a weighted homogeneous f")


def cmd_logder(s: Subject, opts: dict):
    return der_log(s.polynomial()).to_json(), EXIT_OK, []


def cmd_logder0(s: Subject, opts: dict):
    D = der_log0(s.polynomial())
    out = D.to_json()
    out["count"] = len(D.generators)
    return out, EXIT_OK, []


def cmd_omega(s: Subject, opts: dict):
    f = s.polynomial()
    _needs_homogeneous(f)
    i = opts["i"]
    n = f.ring.ngens
    if not 0 <= i <= n:
        raise HypothesisError(f"form degree must lie in 0..{n}")
    builder = {"log": omega_log, "log0": omega_log0, "euler": omega_log_euler}[opts["flavor"]]
    M = builder(f, i)
    res = free_resolution(M)
    out = {
        "i": i,
        "flavor": opts["flavor"],
        "generators": len(M.gens),
        "ranks": list(res.ranks),
        "resolution": res.to_json(),
    }
    return out, EXIT_OK, [("betti", out["resolution"]["betti"], f"Omega^{i} ({opts['flavor']})")]


def cmd_tame(s: Subject, opts: dict):
    c = tameness(s.polynomial())
    res = c.witness.get("resolution")
    figs = [("betti", res["betti"], f"Omega^{c.witness['i']}(log f)")] if res else []
    return _cert(c, figs)


def cmd_free(s: Subject, opts: dict):
    return _cert(freeness(s.polynomial()))


def cmd_euler_locus(s: Subject, opts: dict):
    I = euler_locus(s.polynomial())
    return {"generators": [str(g) for g in I.polys], "dimension": I.krull_dimension()}, EXIT_OK, []


def _point(text: str, n: int) -> list:
    try:
        pt = [Fraction(t) for t in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad point {text!r}") from exc
    if len(pt) != n:
        raise InputError(f"point needs {n} coordinates")
    return pt


def cmd_strong_euler(s: Subject, opts: dict):
    f = s.polynomial()
    pt = _point(opts["point"], f.ring.ngens)
    if f(pt) != 0:
        raise HypothesisError("point is not on the divisor")
    return _cert(strong_euler_at(f, pt))


def cmd_holonomic(s: Subject, opts: dict):
    return _cert(holonomicity_certificate(s.polynomial()))


def cmd_liouville(s: Subject, opts: dict):
    f = s.polynomial()
    L = liouville_ideal(f)
    out = L.to_json()
    out["dimension"] = L.ideal.krull_dimension()
    out["expected_dimension"] = f.ring.ngens + 1
    return out, EXIT_OK, []


def _cm_figs(c: Certificate) -> list:
    betti = c.witness.get("betti")
    return [("betti", betti, "R[x,y]/L")] if betti else []


def cmd_liouville_cm(s: Subject, opts: dict):
    c = liouville_dimension_cm(s.polynomial())
    return _cert(c, _cm_figs(c))


def cmd_tilde_liouville(s: Subject, opts: dict):
    try:
        c = liouville_dimension_cm(s.polynomial(), tilde=True)
    except ValueError as exc:
        raise HypothesisError(str(exc)) from exc
    return _cert(c, _cm_figs(c))


def cmd_ann_order_one(s: Subject, opts: dict):
    return _cert(order_one_generation_certificate(s.polynomial()))


def cmd_jacmod(s: Subject, opts: dict):
    f = s.polynomial()
    _needs_homogeneous(f)
    M = jacobian_module(f, route=opts["route"])
    return M.to_json(), EXIT_OK, [("hilbert", M.as_polynomial(), None, "H^0_m(R/Jac f)")]


def cmd_milnor_window(s: Subject, opts: dict):
    f = s.polynomial()
    _needs_homogeneous(f)
    rep = milnor_window_report(f)
    status = EXIT_HYPOTHESIS if rep.warnings else EXIT_OK
    return rep.to_json(), status, [("hilbert", rep.module.as_polynomial(), rep.window, "Milnor window")]


def _triple_points(A: Arrangement, L) -> list:
    from . import linalg

    pts = []
    for F in L.by_rank(2):
        if len(F.hyperplanes) >= 3:
            ker = linalg.nullspace([list(A.forms[i]) for i in sorted(F.hyperplanes)], A.n)
            pts.append([int(c) for c in ker[0]] if len(ker) == 1 else None)
    return [p for p in pts if p is not None]


def cmd_lattice(s: Subject, opts: dict):
    A = s.arr()
    L = intersection_lattice(A)
    out = {"arrangement": A.to_json(), "lattice": L.to_json()}
    pts = _triple_points(A, L) if A.n == 3 else []
    return out, EXIT_OK, [("arrangement", [list(v) for v in A.forms], pts, "arrangement")]


def cmd_syzygetic(s: Subject, opts: dict):
    A = s.arr()
    S = syzygetic_lattice(A, max_rounds=opts["max_rounds"], max_elements=opts["max_elements"])
    out = S.to_json()
    if A.n == 3:
        pts = _triple_points(A, intersection_lattice(A))
        if len(pts) == 6:
            chk = pascal_check(pts)
            out["pascal"] = {"triple_points": pts, "checked": chk["checked"], "pascal_lines": chk["pascal_lines"]}
        figs = [("arrangement", [list(v) for v in A.forms], pts, "arrangement and triple points")]
    else:
        figs = []
    return jsonable(out), EXIT_OK, figs


def cmd_decompose(s: Subject, opts: dict):
    return _cert(is_indecomposable(s.arr()))


def cmd_nd_check(s: Subject, opts: dict):
    return _cert(nd_check(s.arr()))


def cmd_nd_candidates(s: Subject, opts: dict):
    cands = nd_candidates(s.arr())
    return {"candidates": jsonable(cands), "values": jsonable(sorted({c.value for c in cands}))}, EXIT_OK, []


def cmd_zeta(s: Subject, opts: dict):
    A = s.arr()
    try:
        Z = zeta_topological(A, model=opts["model"])
    except NotImplementedError as exc:
        raise HypothesisError(str(exc)) from exc
    out = Z.to_json()
    out["model"] = opts["model"]
    return jsonable(out), EXIT_OK, []


def cmd_zeta_poles(s: Subject, opts: dict):
    A = s.arr()
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            c = zeta_pole_analysis(A)
    except NotImplementedError as exc:
        raise HypothesisError(str(exc)) from exc
    poles = [(Fraction(p["pole"]), p["order"]) for p in c.to_json()["witness"]["poles"]]
    cands = [Fraction(v) for v in c.to_json()["witness"]["candidates"]]
    return _cert(c, [("zeta", poles, cands, "poles and candidates")])


def cmd_lc_check(s: Subject, opts: dict):
    f = s.polynomial()
    _needs_homogeneous(f)
    if any(w != 1 for w in f.ring.weights):
        raise HypothesisError("window checks use the standard grading")
    W = default_window(f)
    W = Window(opts["a_max"] if opts["a_max"] is not None else W.a_max, opts["b_max"] if opts["b_max"] is not None else W.b_max)
    T = lc_cohomology(f, W)
    out = T.to_json()
    return out, EXIT_OK, [("cohomology", out["rows"], f.ring.ngens, "Liouville window")]


COMMANDS = {
    "logder": cmd_logder,
    "logder0": cmd_logder0,
    "omega": cmd_omega,
    "tame": cmd_tame,
    "free": cmd_free,
    "euler-locus": cmd_euler_locus,
    "strong-euler": cmd_strong_euler,
    "holonomic": cmd_holonomic,
    "liouville": cmd_liouville,
    "liouville-cm": cmd_liouville_cm,
    "tilde-liouville": cmd_tilde_liouville,
    "ann-order-one": cmd_ann_order_one,
    "jacmod": cmd_jacmod,
    "milnor-window": cmd_milnor_window,
    "lattice": cmd_lattice,
    "syzygetic": cmd_syzygetic,
    "decompose": cmd_decompose,
    "nd-check": cmd_nd_check,
    "nd-candidates": cmd_nd_candidates,
    "zeta": cmd_zeta,
    "zeta-poles": cmd_zeta_poles,
    "lc-check": cmd_lc_check,
}


# ---------------------------------------------------------------------------
# figures and output


def write_figures(jobs: list, directory: str, stem: str) -> list:
    from . import plotting

    out = []
    for k, job in enumerate(jobs):
        kind = job[0]
        path = Path(directory) / f"{stem}-{kind}{'' if k == 0 else f'-{k}'}.png"
        if kind == "betti":
            plotting.betti_figure(job[1], path, title=job[2])
        elif kind == "hilbert":
            plotting.hilbert_figure(job[1], path, window=job[2], title=job[3])
        elif kind == "arrangement":
            plotting.arrangement_figure(job[1], path, points=job[2], title=job[3])
        elif kind == "cohomology":
            plotting.cohomology_figure(job[1], job[2], path, title=job[3])
        elif kind == "zeta":
            plotting.zeta_figure(job[1], job[2], path, title=job[3])
        out.append(path.name)
    return out


def _flatten(obj, prefix: str = "") -> list:
    if isinstance(obj, dict):
        rows = []
        for k in obj:
            rows += _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
        return rows
    if isinstance(obj, list) and any(isinstance(v, (dict, list)) for v in obj):
        rows = []
        for i, v in enumerate(obj):
            rows += _flatten(v, f"{prefix}[{i}]")
        return rows
    return [(prefix, json.dumps(obj) if not isinstance(obj, str) else obj)]


def render(report: dict, fmt: str) -> str:
    if fmt == "table":
        return "\n".join(f"{k}\t{v}" for k, v in _flatten(report))
    return json.dumps(report, sort_keys=True, indent=2)


def _error(kind: str, message: str, status: int) -> tuple:
    return {"error": {"type": kind, "message": message}, "exit_status": status}, status


def run(cfg: RunConfig) -> tuple:
    """Execute one command; returns ``(report, exit_status)``."""
    if cfg.command == "reproduce":
        return _run_reproduce(cfg)
    try:
        subject = load_subject(cfg)
    except InputError as exc:
        return _error("input", str(exc), EXIT_INPUT)
    material = {
        "version": __version__,
        "command": cfg.command,
        "input": subject.key(),
        "config": jsonable(cfg.describe()),
    }
    cache = None if cfg.no_cache else ResultCache(cfg.cache_dir)
    cached = cache.lookup(material) if cache else None
    if cached is not None and not cfg.verify_cache:
        report, status, jobs = cached["report"], cached["status"], cached.get("figures", [])
    else:
        try:
            with use_budget(cfg.budget()):
                report, status, jobs = COMMANDS[cfg.command](subject, cfg.options)
        except BudgetExhausted as exc:
            return _error("budget", str(exc), EXIT_BUDGET)
        except (HypothesisError, ArrangementError) as exc:
            return _error("hypothesis", str(exc), EXIT_HYPOTHESIS)
        except InputError as exc:
            return _error("input", str(exc), EXIT_INPUT)
        report = jsonable(report)
        jobs = jsonable(jobs)
        entry = {"report": report, "status": status, "figures": jobs}
        if cached is not None and json.dumps(cached, sort_keys=True) != json.dumps(entry, sort_keys=True):
            cache.store(material, entry)
            return _error("cache", "cached report differs from recomputation; entry overwritten", EXIT_INPUT)
        if cache is not None and status != EXIT_BUDGET:
            cache.store(material, entry)
    full = {
        "command": cfg.command,
        "input": material["input"],
        "config": material["config"],
        "result": report,
        "exit_status": status,
    }
    if cfg.figures:
        full["figures"] = write_figures(_restore_jobs(jobs), cfg.figures, cfg.command)
    return full, status


def _restore_jobs(jobs: list) -> list:
    # figure payloads round-trip through JSON; restore the numeric keys
    out = []
    for job in jobs:
        job = list(job)
        if job[0] == "hilbert":
            job[1] = {int(k): v for k, v in job[1].items()}
        if job[0] == "zeta":
            job[1] = [(Fraction(p), o) for p, o in job[1]]
            job[2] = [Fraction(v) for v in job[2]]
        out.append(job)
    return out


def _run_reproduce(cfg: RunConfig) -> tuple:
    ident = cfg.options["example"]
    idents = sorted(EXAMPLES) if ident == "all" else [ident]
    if any(i not in EXAMPLES for i in idents):
        return _error("input", f"unknown example {ident!r}; known: {', '.join(sorted(EXAMPLES))}, all", EXIT_INPUT)
    results = []
    try:
        with use_budget(cfg.budget()):
            for i in idents:
                results.append(reproduce(i).to_json())
    except BudgetExhausted as exc:
        return _error("budget", str(exc), EXIT_BUDGET)
    ok = all(r["ok"] for r in results)
    status = EXIT_OK if ok else EXIT_INPUT
    report = {
        "command": "reproduce",
        "config": jsonable(cfg.describe()),
        "result": results[0] if len(results) == 1 else results,
        "ok": ok,
        "exit_status": status,
    }
    for r in results:
        for c in r["checks"]:
            if not c["match"]:
                print(f"MISMATCH {r['example']}: {c['check']} expected {c['expected']} observed {c['observed']}", file=sys.stderr)
    return report, status


# ---------------------------------------------------------------------------
# argument parsing


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("common options")
    g.add_argument("--order", choices=sorted(ORDERS), default="grevlex", help="monomial order")
    g.add_argument("--max-degree", type=_positive_int, help="largest S-pair degree")
    g.add_argument("--max-pairs", type=_positive_int, help="largest number of processed S-pairs")
    g.add_argument("--timeout", type=_positive_float, default=1800.0, help="wall-clock seconds")
    g.add_argument("--cache-dir", help="cache directory (default $LOGDIV_CACHE_DIR or ~/.cache/logdiv)")
    g.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    g.add_argument("--verify-cache", action="store_true", help="recompute cache hits and compare")
    g.add_argument("--format", choices=("json", "table"), default="json")
    g.add_argument("--figures", metavar="DIR", help="write PNG figures into DIR")
    return p


def _input_args(p: argparse.ArgumentParser):
    p.add_argument("input", nargs="?", help="polynomial or arrangement file")
    p.add_argument("--poly", help="polynomial expression instead of a file")
    p.add_argument("--vars", help="variable names for --poly, e.g. 'x y z'")
    p.add_argument("--weights", help="variable weights for --poly, e.g. '1 1 2'")
    p.add_argument("--input-format", choices=("auto", "polynomial", "arrangement"), default="auto")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="logdiv", description="Logarithmic derivations, forms and arrangements.")
    parser.add_argument("--version", action="version", version=f"logdiv {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "logder": "minimal generators of Der(-log f)",
        "logder0": "minimal generators of Der(-log_0 f)",
        "omega": "logarithmic i-forms and their resolution",
        "tame": "pdim Omega^i(log f) <= i for all i",
        "free": "freeness of Der(-log f) with Saito's determinant",
        "euler-locus": "ideal Jac(f) : f",
        "strong-euler": "strong Euler-homogeneity at a point",
        "holonomic": "Saito-holonomicity via Fitting ideals",
        "liouville": "the Liouville ideal and its dimension",
        "liouville-cm": "dimension and Cohen-Macaulayness of R[x,y]/L",
        "tilde-liouville": "the same for the ideal with the Euler symbol",
        "ann-order-one": "hypotheses for ann(f^s) generated in order one",
        "jacmod": "Hilbert series of H^0_m(R/Jac f)",
        "milnor-window": "Jacobian module dimensions in the Milnor window",
        "lattice": "intersection lattice and characteristic polynomial",
        "syzygetic": "syzygetic refinement of the lattice",
        "decompose": "indecomposability with a decomposition witness",
        "nd-check": "n/d hypotheses for the whole arrangement",
        "nd-candidates": "n/d candidates of all flats",
        "zeta": "topological zeta function (rank <= 3)",
        "zeta-poles": "match zeta poles with flat candidates",
        "lc-check": "Liouville complex on a bigraded window",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, parents=[common], help=text, description=text)
        _input_args(p)
        if name == "omega":
            p.add_argument("--i", type=int, required=True, help="form degree")
            p.add_argument("--flavor", choices=("log", "log0", "euler"), default="log")
        elif name == "strong-euler":
            p.add_argument("--point", required=True, help="comma-separated rational coordinates")
        elif name == "jacmod":
            p.add_argument("--route", choices=("linear-form", "variables"), default="linear-form")
        elif name == "syzygetic":
            p.add_argument("--max-rounds", type=_positive_int, default=4)
            p.add_argument("--max-elements", type=_positive_int, default=400)
        elif name == "zeta":
            p.add_argument("--model", choices=("auto", "snc", "blowup", "full"), default="auto")
        elif name == "lc-check":
            p.add_argument("--a-max", type=_positive_int)
            p.add_argument("--b-max", type=_positive_int)
    p = sub.add_parser("reproduce", parents=[common], help="recompute a worked example")
    p.add_argument("example", help=f"one of {', '.join(sorted(EXAMPLES))} or 'all'")
    return parser


_GLOBAL = {
    "command", "input", "poly", "vars", "weights", "input_format", "order", "max_degree", "max_pairs",
    "timeout", "cache_dir", "no_cache", "verify_cache", "format", "figures",
}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    d = vars(ns)
    opts = {k: v for k, v in d.items() if k not in _GLOBAL}
    base = {k: d.get(k) for k in _GLOBAL if k in d}
    base.setdefault("input_format", "auto")
    return RunConfig(**base, options=opts)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return 0
        print(json.dumps({"error": {"type": "usage", "message": "invalid arguments"}, "exit_status": 1}))
        return EXIT_INPUT
    cfg = config_from_args(ns)
    report, status = run(cfg)
    print(render(report, cfg.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
