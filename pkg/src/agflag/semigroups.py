"""Jump sets of the families aP + G_beta.

``H_beta``  = {a : l(aP + G_beta) != l((a-1)P + G_beta)}
``H*_beta`` = {a : C_L(D, aP + G_beta) != C_L(D, (a-1)P + G_beta)}

Each set is available three ways: from Riemann-Roch dimensions (generic),
from floor-sum closed forms specific to Kummer curves, and from ranks of
explicit generator matrices (code-oracle).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import partial

from ._parallel import pmap
from .codes import code_dimension
from .errors import ArityMismatch, CardinalityMismatch, NotGaloisInvariant, PreconditionViolated, RangeError
from .kummer import P_INF, CurveDivisor, Infinity, KummerCurve, Ramified, rr_dim, standard_D

METHODS = ("closed", "generic", "code-oracle")


class PMode(str, enum.Enum):
    """Where the flag parameter a sits: P_inf, or Q_1 (then beta covers Q_2..Q_t)."""

    INFINITY = "infinity"
    RAMIFIED = "q1"


def infer_t(mode: PMode, beta) -> int:
    return len(beta) if mode == PMode.INFINITY else len(beta) + 1


def check_beta(curve: KummerCurve, t: int, mode: PMode, beta) -> None:
    mode = PMode(mode)
    lo = 1 if mode == PMode.INFINITY else 2
    if not lo <= t <= curve.r:
        raise RangeError(f"t={t} outside [{lo}, {curve.r}] for P-mode {mode.value}")
    if infer_t(mode, beta) != t:
        raise ArityMismatch(f"beta has {len(beta)} entries; P-mode {mode.value} with t={t} needs {t if mode == PMode.INFINITY else t - 1}")


def base_place(mode: PMode):
    return P_INF if PMode(mode) == PMode.INFINITY else Ramified(1)


def beta_divisor(mode: PMode, beta) -> CurveDivisor:
    first = 1 if PMode(mode) == PMode.INFINITY else 2
    return CurveDivisor({Ramified(first + i): b for i, b in enumerate(beta)})


def flag_divisor(mode: PMode, beta, a: int) -> CurveDivisor:
    """aP + G_beta."""
    return beta_divisor(mode, beta) + CurveDivisor({base_place(mode): a})


def scan_range(curve: KummerCurve, t: int, beta) -> range:
    """[-sum(beta), n + 2g - 1 - sum(beta)]: outside it membership is false."""
    B = sum(beta)
    return range(-B, curve.n_for(t) + 2 * curve.genus - B)


# -- generic (Riemann-Roch differences) ------------------------------------

def hhat_generic(curve: KummerCurve, mode: PMode, beta, a: int) -> bool:
    return rr_dim(curve, flag_divisor(mode, beta, a)) != rr_dim(curve, flag_divisor(mode, beta, a - 1))


def hstar_generic(curve: KummerCurve, t: int, mode: PMode, beta, a: int) -> bool:
    """a in H*_beta iff l jumps at a for aP + G_beta but not for aP + G_beta - D."""
    D = standard_D(curve, t)
    G, G1 = flag_divisor(mode, beta, a), flag_divisor(mode, beta, a - 1)
    if rr_dim(curve, G) == rr_dim(curve, G1):
        return False
    return rr_dim(curve, G - D) == rr_dim(curve, G1 - D)


# -- closed forms ----------------------------------------------------------

def _closed_preconditions(curve: KummerCurve, t: int, beta, need_nonneg: bool) -> int:
    n = curve.n_for(t)
    if need_nonneg and sum(beta) < 0:
        raise PreconditionViolated(f"sum(beta) = {sum(beta)} < 0")
    if n < 2 * curve.genus:
        raise PreconditionViolated(f"n = {n} < 2g = {2 * curve.genus}")
    return n


def hstar_closed_infty(curve: KummerCurve, t: int, beta, a: int) -> bool:
    n = _closed_preconditions(curve, t, beta, True)
    m, r, g, B = curve.m, curve.r, curve.genus, sum(beta)
    s = a + B
    if s < 0 or s > n + 2 * g - 1:
        return False
    if s < n:
        j = (curve.r_tilde * a) % m
        lhs = sum((b + j) // m for b in beta)
        return m * lhs >= r * j - a
    j = (curve.r_tilde * (a - n - t)) % m
    lhs = sum((b + j + 1) // m for b in beta)
    return m * lhs < r * j + n + t - a


def hhat_closed_infty(curve: KummerCurve, t: int, beta, a: int) -> bool:
    n = _closed_preconditions(curve, t, beta, True)
    m, r, B = curve.m, curve.r, sum(beta)
    if a < -B:
        return False
    if a >= n - B:
        return True
    j0 = (curve.r_tilde * a) % m
    return m * sum((b + j0) // m for b in beta) >= r * j0 - a


def hstar_closed_ramified(curve: KummerCurve, t: int, beta, a: int) -> bool:
    """P = Q_1, beta = (beta_2, ..., beta_t).

    Only the summand j = (-a) mod m changes between a-1 and a.  Its restricted
    degree is floor(-rj/m) + (a+j)/m + sum floor((beta_i+j)/m), lowered by
    (r-t)[j=0] + #split lines once D is subtracted.
    """
    n = _closed_preconditions(curve, t, beta, False)
    m, r, g, B = curve.m, curve.r, curve.genus, sum(beta)
    s = a + B
    if s < 0 or s > n + 2 * g - 1:
        return False
    j = (-a) % m
    deg = (-r * j) // m + (a + j) // m + sum((b + j) // m for b in beta)
    if s < n:
        return deg >= 0
    deg_minus_d = deg - (r - t if j == 0 else 0) - len(curve.split_lines)
    return deg_minus_d < 0


def hstar_closed(curve: KummerCurve, t: int, mode: PMode, beta, a: int) -> bool:
    if PMode(mode) == PMode.INFINITY:
        return hstar_closed_infty(curve, t, beta, a)
    return hstar_closed_ramified(curve, t, beta, a)


# -- jump sets ---------------------------------------------------------------

@dataclass(frozen=True)
class JumpSet:
    members: tuple
    n: int
    t: int
    mode: PMode
    beta: tuple

    @property
    def a0(self) -> int:
        return self.members[0] - 1

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, a):
        return a in self.members

    def to_dict(self) -> dict:
        return {"a0": self.a0, "set": list(self.members), "n": self.n}


def _closed_at(curve, t, mode, beta, a):
    return hstar_closed(curve, t, mode, beta, a)


def _generic_at(curve, t, mode, beta, a):
    return hstar_generic(curve, t, mode, beta, a)


def _dim_at(curve, D, mode, beta, a):
    return code_dimension(curve, D, flag_divisor(mode, beta, a))


def code_dimensions(curve: KummerCurve, t: int, mode: PMode, beta, a_values) -> list[int]:
    D = standard_D(curve, t)
    return pmap(partial(_dim_at, curve, D, PMode(mode), tuple(beta)), a_values)


def jump_set(curve: KummerCurve, t: int, mode: PMode, beta, method: str = "closed") -> JumpSet:
    mode = PMode(mode)
    beta = tuple(beta)
    check_beta(curve, t, mode, beta)
    n = curve.n_for(t)
    rng = scan_range(curve, t, beta)
    if method == "closed":
        flags = pmap(partial(_closed_at, curve, t, mode, beta), rng)
        members = [a for a, f in zip(rng, flags) if f]
    elif method == "generic":
        flags = pmap(partial(_generic_at, curve, t, mode, beta), rng)
        members = [a for a, f in zip(rng, flags) if f]
    elif method == "code-oracle":
        a_values = range(rng.start - 1, rng.stop)
        dims = code_dimensions(curve, t, mode, beta, a_values)
        if dims[0] != 0 or dims[-1] != n:
            raise CardinalityMismatch(f"code dimensions run {dims[0]}..{dims[-1]}, expected 0..{n}")
        members = []
        for a, lo, hi in zip(a_values[1:], dims, dims[1:]):
            if hi - lo not in (0, 1):
                raise CardinalityMismatch(f"dimension jumps by {hi - lo} at a={a}")
            if hi - lo == 1:
                members.append(a)
    else:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if len(members) != n:
        raise CardinalityMismatch(f"{method} jump set has {len(members)} elements, expected n={n}")
    return JumpSet(tuple(members), n, t, mode, beta)


def guaranteed_block(curve: KummerCurve, t: int, beta) -> range:
    """{2g - B, ..., n - 1 - B}, always contained in H*_beta."""
    B = sum(beta)
    return range(2 * curve.genus - B, curve.n_for(t) - B)


def reduce_beta(curve: KummerCurve, a: int, beta) -> tuple[int, tuple]:
    """Write beta_i = theta_i m + beta'_i with 0 <= beta'_i < m; a' = a + m sum(theta)."""
    m = curve.m
    thetas = [b // m for b in beta]
    return a + m * sum(thetas), tuple(b % m for b in beta)


# -- generalized Weierstrass semigroups ----------------------------------------

def _gws_divisor(curve: KummerCurve, places, alpha) -> CurveDivisor:
    if len(places) != len(alpha):
        raise ArityMismatch("places and alpha differ in length")
    if len(set(places)) != len(places):
        raise ValueError("places must be pairwise distinct")
    for pl in places:
        if not isinstance(pl, (Infinity, Ramified)):
            raise NotGaloisInvariant(f"{pl!r} is not fixed by the Galois group")
        if isinstance(pl, Ramified) and not 1 <= pl.i <= curve.r:
            raise RangeError(f"unknown place {pl!r}")
    return CurveDivisor(dict(zip(places, alpha)))


def nabla_empty(curve: KummerCurve, places, alpha, i: int) -> bool:
    """True iff l(G_alpha) = l(G_alpha - Q_i) (0-based i)."""
    G = _gws_divisor(curve, places, alpha)
    return rr_dim(curve, G) == rr_dim(curve, G - CurveDivisor({places[i]: 1}))


def ghat_membership(curve: KummerCurve, places, alpha) -> bool:
    """alpha lies in the generalized Weierstrass semigroup at ``places``."""
    G = _gws_divisor(curve, places, alpha)
    dim = rr_dim(curve, G)
    return all(rr_dim(curve, G - CurveDivisor({pl: 1})) + 1 == dim for pl in places)


def lub(vectors) -> tuple:
    vectors = [tuple(v) for v in vectors]
    if not vectors:
        raise ArityMismatch("lub of an empty family")
    if len({len(v) for v in vectors}) != 1:
        raise ArityMismatch("vectors differ in length")
    return tuple(max(col) for col in zip(*vectors))
