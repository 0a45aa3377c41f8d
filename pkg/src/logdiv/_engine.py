"""Packed-monomial Buchberger engine (internal).

A module monomial ``x^e * e_pos`` is encoded as one Python int whose integer
order *is* the monomial order: the high bits hold the rows of a matrix order
(each row a biased 40-bit field), the low bits the raw exponent vector in
16-bit fields with a guard bit.  The encoding is affine in the exponent, so
multiplying by ``x^f`` is adding ``L(f)``, and divisibility of raw parts is a
single subtraction plus a guard-bit mask.

Vectors are ``dict[int, mpq]``.  Basis elements are kept monic.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpq

from . import budget as _budget

EW = 16
EMASK = (1 << EW) - 1
FW = 40
FMASK = (1 << FW) - 1
BIAS = 1 << (FW - 1)
MAX_EXP = (1 << (EW - 1)) - 1

ZERO = mpq(0)


def ring_rows(order: str, weights: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Rows of the matrix order for a ring order."""
    n = len(weights)
    unit = lambda i, s=1: tuple(s if j == i else 0 for j in range(n))  # noqa: E731
    if order == "lex":
        return [unit(i) for i in range(n)]
    if order in ("grevlex", "wgrevlex"):
        rows = [tuple(weights)]
        rows += [unit(i, -1) for i in range(n - 1, 0, -1)]
        return rows
    if order.startswith("elim:"):
        # grevlex on the first k variables, then grevlex on the rest
        k = int(order.split(":", 1)[1])
        first = tuple(weights[i] if i < k else 0 for i in range(n))
        rows = [first] + [unit(i, -1) for i in range(k - 1, 0, -1)]
        rest = tuple(weights[i] if i >= k else 0 for i in range(n))
        rows += [rest] + [unit(i, -1) for i in range(n - 1, k, -1)]
        return rows
    raise ValueError(f"unknown order {order!r}")


class Packer:
    """Encoder for monomials of a free module with a fixed module order.

    ``kind`` is ``"top"`` (term over position, shifts added to the degree
    row), ``"pot"`` (position over term) or ``"block"`` (a leading row given
    by ``blocks`` per position, then term over position).
    """

    def __init__(self, order, weights, shifts, kind="top", blocks=None):
        n = len(weights)
        r = len(shifts)
        self.n = n
        self.rank = r
        self.weights = tuple(weights)
        self.shifts = tuple(shifts)
        self.kind = kind
        self.graded = order != "lex" and not str(order).startswith("elim:")
        rr = ring_rows(order, self.weights)
        zero_off = (0,) * r
        posrow = ((0,) * n, tuple(r - 1 - j for j in range(r)))
        if kind == "pot":
            rows = [posrow] + [(x, zero_off) for x in rr]
        else:
            first = (rr[0], self.shifts if self.graded else zero_off)
            rows = [first] + [(x, zero_off) for x in rr[1:]] + [posrow]
            if kind == "block":
                if blocks is None or len(blocks) != r:
                    raise ValueError("block order needs one block id per position")
                rows = [((0,) * n, tuple(blocks))] + rows
        self.rows = rows
        nr = len(rows)
        rawbits = n * EW
        self.rawmask = (1 << rawbits) - 1
        self.guards = sum(1 << (i * EW + EW - 1) for i in range(n))
        shifts_bits = [rawbits + (nr - 1 - k) * FW for k in range(nr)]
        self.row_shift = shifts_bits
        self.pos_shift = shifts_bits[rows.index(posrow)]
        # linear part per variable
        self.lunit = []
        for i in range(n):
            v = 1 << (i * EW)
            for (coeffs, _), s in zip(rows, shifts_bits):
                if coeffs[i]:
                    v += coeffs[i] << s
            self.lunit.append(v)
        self.poff = []
        for j in range(r):
            v = 0
            for (_, offs), s in zip(rows, shifts_bits):
                v += (offs[j] + BIAS) << s
            self.poff.append(v)
        # fast degree: first row is the (shifted) degree row for graded top
        self.deg_from_top = kind == "top" and self.graded
        self.top_shift = shifts_bits[0]

    # encoding ---------------------------------------------------------------
    def lin(self, e) -> int:
        v = 0
        for k, u in zip(e, self.lunit):
            if k:
                if k > MAX_EXP:
                    raise OverflowError("exponent exceeds packed field")
                v += k * u
        return v

    def encode(self, e, pos: int) -> int:
        return self.lin(e) + self.poff[pos]

    def exps(self, key: int) -> tuple:
        return tuple((key >> (i * EW)) & EMASK for i in range(self.n))

    def pos(self, key: int) -> int:
        return self.rank - 1 - (((key >> self.pos_shift) & FMASK) - BIAS)

    def decode(self, key: int):
        return self.exps(key), self.pos(key)

    def degree(self, key: int) -> int:
        if self.deg_from_top:
            return ((key >> self.top_shift) & FMASK) - BIAS
        e = self.exps(key)
        return sum(w * k for w, k in zip(self.weights, e)) + self.shifts[self.pos(key)]

    def raw_lcm(self, ra: int, rb: int) -> int:
        out = 0
        for i in range(self.n):
            s = i * EW
            a = (ra >> s) & EMASK
            b = (rb >> s) & EMASK
            out |= (a if a > b else b) << s
        return out

    def key_from_raw(self, raw: int, pos: int) -> int:
        return self.encode(self.exps(raw), pos)

    def vec_degree(self, vec: dict) -> int:
        return max(self.degree(k) for k in vec)

    def is_homogeneous(self, vec: dict) -> bool:
        degs = {self.degree(k) for k in vec}
        return len(degs) <= 1


@dataclass
class Elt:
    vec: dict
    lead: int
    raw: int
    pos: int
    sugar: int


def monic(vec: dict) -> dict:
    lc = vec[max(vec)]
    if lc == 1:
        return vec
    inv = 1 / lc
    return {k: c * inv for k, c in vec.items()}


def normalize_int(vec: dict) -> dict:
    """Scale to integral primitive coefficients with positive lead."""
    den = 1
    for c in vec.values():
        den = gmpy2.lcm(den, c.denominator)
    num = 0
    for c in vec.values():
        num = gmpy2.gcd(num, (c * den).numerator)
    lc = vec[max(vec)]
    s = mpq(den, num)
    if lc < 0:
        s = -s
    return {k: c * s for k, c in vec.items()}


class Reducer:
    """Index of basis elements for divisor lookup."""

    def __init__(self, packer: Packer):
        self.p = packer
        self.by_pos: dict[int, list] = {}

    def add(self, elt: Elt):
        self.by_pos.setdefault(elt.pos, []).append(elt)

    def remove(self, elt: Elt):
        self.by_pos[elt.pos].remove(elt)

    def find(self, key: int):
        lst = self.by_pos.get(self.p.pos(key))
        if not lst:
            return None
        raw = key & self.p.rawmask
        guards = self.p.guards
        for e in lst:
            if not ((raw - e.raw) & guards):
                return e
        return None

    def reduce(self, vec: dict, full: bool = True) -> dict:
        """Reduce ``vec`` (consumed) modulo the indexed elements."""
        rem = {}
        find = self.find
        while vec:
            m = max(vec)
            g = find(m)
            if g is None:
                if not full:
                    rem.update(vec)
                    return rem
                rem[m] = vec.pop(m)
                continue
            c = vec[m]
            delta = m - g.lead
            get = vec.get
            for k, v in g.vec.items():
                nk = k + delta
                nv = get(nk, ZERO) - c * v
                if nv:
                    vec[nk] = nv
                else:
                    vec.pop(nk, None)
        return rem


def shift_vec(vec: dict, delta: int, scale=None) -> dict:
    if scale is None:
        return {k + delta: c for k, c in vec.items()}
    return {k + delta: c * scale for k, c in vec.items()}


def sub_into(a: dict, b: dict, delta: int, c) -> dict:
    """a -= c * x^delta * b (in place)."""
    get = a.get
    for k, v in b.items():
        nk = k + delta
        nv = get(nk, ZERO) - c * v
        if nv:
            a[nk] = nv
        else:
            a.pop(nk, None)
    return a


@dataclass
class GBResult:
    basis: list  # list[Elt], reduced, sorted by lead ascending
    minimal: list  # indices into the input list of minimal generators (homogeneous only)
    homogeneous: bool
    stats: dict


def buchberger(
    packer: Packer,
    gens: list[dict],
    homogeneous: bool | None = None,
    stop_degree: int | None = None,
) -> GBResult:
    """Reduced Gröbner basis of the submodule generated by ``gens``.

    Pairs are selected by sugar, then by lcm; in the homogeneous case the
    input generators are interleaved degree by degree, which identifies a
    minimal generating subset on the way.  ``stop_degree`` truncates a
    homogeneous computation after that degree (partial basis, caller's
    responsibility).
    """
    bud = _budget.current()
    p = packer
    gens = [g for g in gens]
    if homogeneous is None:
        homogeneous = all(p.is_homogeneous(g) for g in gens if g)

    store: list[Elt] = []
    active: list[int] = []
    red = Reducer(p)
    pairs: dict[int, tuple] = {}
    heap: list = []
    counter = itertools.count()
    ideal_case = p.rank == 1
    minimal: list[int] = []
    stats = {"pairs": 0, "zero_reductions": 0, "chain_pruned": 0}

    for idx, g in enumerate(gens):
        if not g:
            continue
        deg = p.vec_degree(g)
        # gens sort after pairs of the same degree
        heapq.heappush(heap, (deg, 1, max(g), next(counter), ("gen", idx)))

    def lcm_key(i: int, j: int):
        a, b = store[i], store[j]
        raw = p.raw_lcm(a.raw, b.raw)
        return p.key_from_raw(raw, a.pos), raw

    def add_element(vec: dict, sugar: int):
        vec = monic(vec)
        lead = max(vec)
        h = len(store)
        elt = Elt(vec, lead, lead & p.rawmask, p.pos(lead), sugar)
        store.append(elt)
        # Gebauer-Moeller update
        cands = []
        for g in active:
            ge = store[g]
            if ge.pos != elt.pos:
                continue
            raw = p.raw_lcm(ge.raw, elt.raw)
            coprime = ideal_case and raw == ge.raw + elt.raw
            cands.append((g, raw, coprime))
        keep = []
        guards = p.guards
        for idx_c, (g, raw, coprime) in enumerate(cands):
            if coprime:
                keep.append((g, raw, coprime))
                continue
            dominated = False
            for g2, raw2, _ in itertools.chain(cands[idx_c + 1 :], keep):
                if not ((raw - raw2) & guards):
                    dominated = True
                    break
            if dominated:
                stats["chain_pruned"] += 1
            else:
                keep.append((g, raw, coprime))
        # criterion B on old pairs
        hraw = elt.raw
        for pid in list(pairs):
            i, j, lraw, lkey = pairs[pid]
            if store[i].pos != elt.pos:
                continue
            if (lraw - hraw) & guards:
                continue
            if p.raw_lcm(store[i].raw, hraw) != lraw and p.raw_lcm(store[j].raw, hraw) != lraw:
                del pairs[pid]
                stats["chain_pruned"] += 1
        for g, raw, coprime in keep:
            if coprime:
                continue
            key = p.key_from_raw(raw, elt.pos)
            ge = store[g]
            deg_l = p.degree(key)
            sug = max(
                ge.sugar + deg_l - p.degree(ge.lead), sugar + deg_l - p.degree(lead)
            )
            pid = next(counter)
            pairs[pid] = (g, h, raw, key)
            heapq.heappush(heap, (sug, 0, key, pid, ("pair", pid)))
        # prune basis
        for g in list(active):
            ge = store[g]
            if ge.pos == elt.pos and not ((ge.raw - hraw) & guards):
                active.remove(g)
                red.remove(ge)
        active.append(h)
        red.add(elt)

    processed = 0
    while heap:
        sug, kind, key, pid, item = heapq.heappop(heap)
        if item[0] == "pair" and item[1] not in pairs:
            continue
        if stop_degree is not None and homogeneous and sug > stop_degree:
            break
        bud.check_time()
        bud.check_degree(sug)
        if item[0] == "pair":
            i, j, _, lkey = pairs.pop(item[1])
            processed += 1
            bud.check_pairs(processed)
            a, b = store[i], store[j]
            vec = shift_vec(a.vec, lkey - a.lead)
            sub_into(vec, b.vec, lkey - b.lead, 1)
            stats["pairs"] += 1
        else:
            vec = dict(gens[item[1]])
        vec = red.reduce(vec, full=False)
        if not vec:
            if item[0] == "pair":
                stats["zero_reductions"] += 1
            continue
        if item[0] == "gen":
            minimal.append(item[1])
            sug = max(sug, p.vec_degree(vec)) if not homogeneous else sug
        add_element(vec, sug)

    # inter-reduce: leads are pairwise non-divisible, so every tail term can
    # be reduced against the whole basis without touching its own lead
    basis = sorted((store[i] for i in active), key=lambda e: e.lead)
    red = Reducer(p)
    for e in basis:
        red.add(e)
    final = []
    for e in basis:
        tail = {m: c for m, c in e.vec.items() if m != e.lead}
        tail = red.reduce(tail, full=True)
        tail[e.lead] = e.vec[e.lead]
        final.append(Elt(tail, e.lead, e.raw, e.pos, e.sugar))
    return GBResult(final, sorted(minimal), homogeneous, stats)


def reduce_full(packer: Packer, basis: list[Elt], vec: dict) -> dict:
    red = Reducer(packer)
    for e in basis:
        red.add(e)
    return red.reduce(dict(vec), full=True)
