"""Conversions to FLINT multivariate polynomials for gcd and factorization."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import flint

from .poly import Polynomial


def _ctx(ring):
    return flint.fmpz_mpoly_ctx.get(tuple(ring.names), "lex")


def to_flint(p: Polynomial):
    """Integer multiple of ``p`` as an ``fmpz_mpoly`` and the scale used."""
    den = 1
    for c in p._d.values():
        den = lcm(den, c.denominator)
    ctx = _ctx(p.ring)
    return ctx.from_dict({e: int(c * den) for e, c in p._d.items()}), den


def from_flint(q, ring) -> Polynomial:
    return Polynomial(ring, {tuple(e): Fraction(int(c)) for e, c in q.to_dict().items()})


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive gcd of two polynomials over the rationals."""
    a, _ = to_flint(p)
    b, _ = to_flint(q)
    return from_flint(a.gcd(b), p.ring)


def factor(p: Polynomial) -> tuple[Fraction, list]:
    """``p = c * prod g_i^{e_i}`` with primitive irreducible ``g_i``."""
    a, den = to_flint(p)
    c, facs = a.factor()
    out = [(from_flint(g, p.ring), int(e)) for g, e in facs]
    out.sort(key=lambda t: (str(t[0]), t[1]))
    return Fraction(int(c), den), out
