"""Evaluation codes C_L(D, G) on a Kummer curve, built from explicit bases."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import SupportOverlap, TooLarge
from .kummer import (
    CurveDivisor,
    KummerCurve,
    Split,
    check_galois_invariant,
    evaluate_int,
    place_key,
    rr_blocks,
)
from .linalg import Matrix, nullspace, rref_rows

EXHAUSTIVE_LIMIT = 1 << 20


@dataclass(frozen=True)
class AGCode:
    curve: KummerCurve
    D: CurveDivisor
    G: CurveDivisor
    places: tuple
    generator: Matrix  # rref, independent rows only

    @property
    def n(self) -> int:
        return len(self.places)

    @property
    def k(self) -> int:
        return self.generator.rows


def evaluation_places(D: CurveDivisor) -> tuple:
    for pl, v in D.items():
        if v != 1:
            raise ValueError(f"D must be a sum of distinct places; {pl!r} has coefficient {v}")
    return tuple(sorted(D.support, key=place_key))


def evaluation_rows(curve: KummerCurve, G: CurveDivisor, places) -> list[list[int]]:
    """One row per basis function of L(G), evaluated at ``places``."""
    F = curve.field
    rows = []
    for blk in rr_blocks(curve, G):
        fns = None
        pole_alphas = {a for a, _ in blk.poles}
        cols = []
        for pl in places:
            if isinstance(pl, Split) and pl.alpha not in pole_alphas:
                # u_j regular at alpha: value(s) = u_j(alpha) * alpha^s * y0^j
                base = blk.numerator(pl.alpha)
                for beta, e in blk.poles:
                    base = F.div(base, F.pow(F.sub(pl.alpha, beta), e))
                base = F.mul(base, F.pow(pl.y0, blk.j))
                col, xs = [], 1
                for _ in range(blk.degree + 1):
                    col.append(F.mul(base, xs))
                    xs = F.mul(xs, pl.alpha)
            else:
                if fns is None:
                    fns = blk.functions()
                col = [evaluate_int(curve, fn, pl) for fn in fns]
            cols.append(col)
        if cols:
            rows.extend(list(r) for r in zip(*cols))
        else:
            rows.extend([] for _ in range(blk.degree + 1))
    return rows


def build_code(curve: KummerCurve, D: CurveDivisor, G: CurveDivisor) -> AGCode:
    if set(D.support) & set(G.support):
        raise SupportOverlap("supp(D) and supp(G) intersect")
    check_galois_invariant(curve, G)
    places = evaluation_places(D)
    rows = evaluation_rows(curve, G, places)
    red, _ = rref_rows(curve.field, rows, len(places))
    gen = Matrix(curve.field, len(red), len(places), tuple(tuple(r) for r in red))
    return AGCode(curve, D, G, places, gen)


def code_dimension(curve: KummerCurve, D: CurveDivisor, G: CurveDivisor) -> int:
    return build_code(curve, D, G).k


def dual_code(C: AGCode) -> Matrix:
    return nullspace(C.generator)


def designed_distance(C: AGCode) -> int:
    return C.n - C.G.degree


def min_distance_exhaustive(C: AGCode) -> int:
    """Minimum weight by enumerating all q^k codewords; n + 1 for the zero code."""
    F, k, n = C.curve.field, C.k, C.n
    if k == 0:
        return n + 1
    if F.q**k > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"q^k = {F.q}^{k} exceeds {EXHAUSTIVE_LIMIT}")
    rows = C.generator.data
    best = n
    # Scalar multiples share a weight, so fix the leading nonzero coefficient to 1.
    for lead in range(k):
        for tail in itertools.product(range(F.q), repeat=k - lead - 1):
            coeffs = (1,) + tail
            word = [0] * n
            for c, row in zip(coeffs, rows[lead:]):
                if c:
                    word = [F.add(w, F.mul(c, a)) for w, a in zip(word, row)]
            best = min(best, sum(1 for w in word if w))
    return best
