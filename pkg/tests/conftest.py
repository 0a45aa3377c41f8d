from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from logdiv.poly import Polynomial, PolyRing

settings.register_profile("logdiv", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("logdiv")

R3 = PolyRing("x y z")

coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=3)


def _cap(e: list, max_deg: int) -> tuple:
    out, left = [], max_deg
    for k in e:
        out.append(min(k, left))
        left -= out[-1]
    return tuple(out)


def exponents(n: int, max_deg: int):
    return st.lists(st.integers(0, max_deg), min_size=n, max_size=n).map(lambda e: _cap(e, max_deg))


@st.composite
def polynomials(draw, ring: PolyRing = R3, max_terms: int = 4, max_deg: int = 3):
    terms = draw(st.dictionaries(exponents(ring.ngens, max_deg), coefficients, max_size=max_terms))
    return Polynomial(ring, terms)


@st.composite
def homogeneous_polynomials(draw, ring: PolyRing = R3, degree: int | None = None, max_terms: int = 4):
    d = draw(st.integers(1, 3)) if degree is None else degree
    n = ring.ngens
    keys = draw(st.lists(exponents(n - 1, d), min_size=1, max_size=max_terms))
    terms = {tuple(e) + (d - sum(e),): Fraction(draw(st.integers(1, 4))) for e in keys}
    return Polynomial(ring, terms)


# ---------------------------------------------------------------------------
# acceptance summary: one PASS/FAIL line per criterion at the end of the run

ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, title, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  {detail}")


@pytest.fixture
def tmp_cache(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("LOGDIV_CACHE_DIR", str(d))
    return d
