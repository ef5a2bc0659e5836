"""Flags C_L(D, a_i P + G_beta) and their isometry-dual property.

A flag C_0 < C_1 < ... < C_n is x-isometry-dual when C_i = x * C_{n-i}^perp for
every i.  Three routes decide it:

* canonical: E = (n + 2g - 2 - 2B)P + 2G_beta - D is canonical, checked both as
  l(E) = g and as membership of n + 2g - 1 - 2B in H*_{2 beta};
* closed form: divisibility conditions on m and beta (modular arithmetic only);
* oracle: solve for z = 1/x directly from generator matrices.
"""

from __future__ import annotations

import enum
import itertools
import random
from dataclasses import dataclass, field

from .codes import build_code
from .errors import (
    CardinalityMismatch,
    Inconclusive,
    NotIsoDualFlag,
    PreconditionViolated,
    RouteDisagreement,
)
from .kummer import KummerCurve, rr_dim, standard_D
from .linalg import EchelonBasis, Matrix, nullspace, nullspace_rows, same_row_space
from .semigroups import (
    JumpSet,
    PMode,
    check_beta,
    flag_divisor,
    guaranteed_block,
    hhat_closed_infty,
    hstar_closed,
    jump_set,
    reduce_beta,
    scan_range,
)

EXHAUSTIVE_SEARCH_LIMIT = 1 << 16
RANDOM_TRIALS = 10_000


class Verdict(str, enum.Enum):
    ISODUAL = "IsoDual"
    NOT_ISODUAL = "NotIsoDual"
    NOT_APPLICABLE = "NotApplicable"


def _verdict(flag: bool) -> Verdict:
    return Verdict.ISODUAL if flag else Verdict.NOT_ISODUAL


def symmetry_constant(curve: KummerCurve, t: int, beta) -> int:
    """c = n + 2g - 1 - 2 sum(beta); an iso-dual jump set is invariant under a -> c - a."""
    return curve.n_for(t) + 2 * curve.genus - 1 - 2 * sum(beta)


def is_symmetric(members, c: int) -> bool:
    s = sorted(members)
    return all(a + b == c for a, b in zip(s, reversed(s)))


@dataclass
class Flag:
    curve: KummerCurve
    t: int
    mode: PMode
    beta: tuple
    jumps: JumpSet
    _generators: list | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.jumps.n

    @property
    def g(self) -> int:
        return self.curve.genus

    @property
    def a_values(self) -> list[int]:
        """a_0, a_1, ..., a_n."""
        return [self.jumps.a0, *self.jumps.members]

    def generators(self) -> list[Matrix]:
        """Generator matrices of C_0, ..., C_n (built once, on first use)."""
        if self._generators is None:
            D = standard_D(self.curve, self.t)
            gens = [build_code(self.curve, D, flag_divisor(self.mode, self.beta, a)).generator
                    for a in self.a_values]
            for i, G in enumerate(gens):
                if G.rows != i:
                    raise CardinalityMismatch(f"C_{i} has dimension {G.rows}")
            self._generators = gens
        return self._generators


def build_flag(curve: KummerCurve, t: int, mode: PMode, beta, method: str = "closed") -> Flag:
    mode = PMode(mode)
    beta = tuple(beta)
    check_beta(curve, t, mode, beta)
    if mode == PMode.INFINITY and sum(beta) < 0:
        raise PreconditionViolated(f"sum(beta) = {sum(beta)} < 0")
    return Flag(curve, t, mode, beta, jump_set(curve, t, mode, beta, method))


# -- canonical route -----------------------------------------------------------

def canonical_divisor_candidate(curve: KummerCurve, t: int, mode: PMode, beta):
    """E = (n + 2g - 2 - 2B)P + 2G_beta - D."""
    c = symmetry_constant(curve, t, beta)
    return flag_divisor(mode, [2 * b for b in beta], c - 1) - standard_D(curve, t)


def canonical_by_dimension(curve: KummerCurve, t: int, mode: PMode, beta) -> bool:
    """l(E) = g, with no hypothesis on n or beta."""
    return rr_dim(curve, canonical_divisor_candidate(curve, t, mode, beta)) == curve.genus


def check_canonical_route(curve: KummerCurve, t: int, mode: PMode, beta) -> Verdict:
    mode = PMode(mode)
    check_beta(curve, t, mode, beta)
    n, g, B = curve.n_for(t), curve.genus, sum(beta)
    if B < 0:
        raise PreconditionViolated(f"sum(beta) = {B} < 0")
    if n < 2 * g + 2 * B + 2:
        raise PreconditionViolated(f"n = {n} < 2g + 2 sum(beta) + 2 = {2 * g + 2 * B + 2}")
    c = symmetry_constant(curve, t, beta)
    c_red, beta2_red = reduce_beta(curve, c, [2 * b for b in beta])
    by_membership = hstar_closed(curve, t, mode, beta2_red, c_red)
    by_dimension = canonical_by_dimension(curve, t, mode, beta)
    if by_membership != by_dimension:
        raise RouteDisagreement(f"c in H*_2beta is {by_membership} but l(E) = g is {by_dimension}")
    return _verdict(by_dimension)


# -- closed-form routes -----------------------------------------------------

def _criterion_preconditions(curve: KummerCurve, t: int, beta) -> None:
    n, g, B = curve.n_for(t), curve.genus, sum(beta)
    if not (0 <= B and 2 * B < n + 2 * g - 1):
        raise PreconditionViolated(f"need 0 <= sum(beta) < (n + 2g - 1)/2; sum(beta) = {B}")


def check_kummer_criterion(curve: KummerCurve, t: int, beta) -> Verdict:
    """P = P_inf.  t < r: m | 2 beta_i + 1 for all i.  t = r: all 2 beta_i agree mod m."""
    check_beta(curve, t, PMode.INFINITY, beta)
    _criterion_preconditions(curve, t, beta)
    m = curve.m
    if t < curve.r:
        return _verdict(all((2 * b + 1) % m == 0 for b in beta))
    return _verdict(len({(2 * b) % m for b in beta}) == 1)


def check_ramified_none(curve: KummerCurve, t: int, beta) -> Verdict:
    """P = Q_1: the closed-form analysis asserts no iso-dual flag exists."""
    check_beta(curve, t, PMode.RAMIFIED, beta)
    _criterion_preconditions(curve, t, beta)
    return Verdict.NOT_ISODUAL


# -- oracle route ------------------------------------------------------------

def adapted_basis(gens: list[Matrix]) -> list[list[int]]:
    """g_1..g_n with C_i = span(g_1..g_i)."""
    n = gens[-1].rows
    eb = EchelonBasis(gens[-1].spec, gens[-1].cols)
    basis = []
    for i in range(1, n + 1):
        for row in gens[i].data:
            if eb.add(row):
                basis.append(list(row))
                break
        else:
            raise CardinalityMismatch(f"C_{i} does not extend C_{i - 1}")
    return basis


def isometry_constraints(flag: Flag) -> tuple[list[list[int]], list[int]]:
    """Reduced linear system in z = 1/x: <g_a, g_b>_z = 0 whenever a + b <= n."""
    gens = flag.generators()
    F, n = flag.curve.field, flag.n
    basis = adapted_basis(gens)
    eb = EchelonBasis(F, n)
    for a in range(1, n + 1):
        for b in range(a, n - a + 1):
            eb.add([F.mul(u, v) for u, v in zip(basis[a - 1], basis[b - 1])])
            if len(eb) == n:
                return eb.sorted_rows()
    return eb.sorted_rows()


def _nowhere_zero_combination(F, Z: list[list[int]], seed: int):
    d, n = len(Z), len(Z[0])

    def combine(coeffs):
        v = [0] * n
        for c, row in zip(coeffs, Z):
            if c:
                v = [F.add(a, F.mul(c, b)) for a, b in zip(v, row)]
        return v

    if F.q**d <= EXHAUSTIVE_SEARCH_LIMIT:
        # nonzero scalings preserve the zero pattern: fix the leading coefficient to 1
        for lead in range(d):
            for tail in itertools.product(range(F.q), repeat=d - lead - 1):
                v = combine([0] * lead + [1, *tail])
                if all(v):
                    return v
        return None
    rnd = random.Random(seed)
    for _ in range(RANDOM_TRIALS):
        v = combine([rnd.randrange(F.q) for _ in range(d)])
        if all(v):
            return v
    raise Inconclusive(f"no nowhere-zero vector in {RANDOM_TRIALS} random draws from a {d}-dim space")


def find_isometry_vector(flag: Flag, seed: int = 0) -> list[int] | None:
    """x with C_i = x * C_{n-i}^perp for all i, or None when none exists."""
    F, n = flag.curve.field, flag.n
    red, pivots = isometry_constraints(flag)
    Z = nullspace_rows(F, red, pivots, n)
    if not Z:
        return None
    z = _nowhere_zero_combination(F, Z, seed)
    return None if z is None else [F.inv(v) for v in z]


def verify_isometry(flag: Flag, x) -> bool:
    """Explicit check of C_i = x * C_{n-i}^perp for every i."""
    if any(v == 0 for v in x):
        return False
    gens = flag.generators()
    n = flag.n
    for i in range(n + 1):
        dual = nullspace(gens[n - i])
        scaled = dual.scale_columns(x)
        if scaled.rows != gens[i].rows or not same_row_space(scaled, gens[i]):
            return False
    return True


# -- recomputation of H*_beta from H_beta --------------------------------------

def _require_isodual(curve, t, beta, check):
    if check and check_canonical_route(curve, t, PMode.INFINITY, beta) != Verdict.ISODUAL:
        raise NotIsoDualFlag(f"the flag for beta={tuple(beta)} is not iso-dual")


def hstar_via_duality(curve: KummerCurve, t: int, beta, check: bool = True) -> JumpSet:
    """H*_beta = {a in H_beta : a_perp + 1 in H_beta}, a_perp = n + 2g - 2 - 2B - a."""
    beta = tuple(beta)
    check_beta(curve, t, PMode.INFINITY, beta)
    _require_isodual(curve, t, beta, check)
    c = symmetry_constant(curve, t, beta)
    members = [a for a in scan_range(curve, t, beta)
               if hhat_closed_infty(curve, t, beta, a) and hhat_closed_infty(curve, t, beta, c - a)]
    n = curve.n_for(t)
    if len(members) != n:
        raise CardinalityMismatch(f"duality route produced {len(members)} elements, expected {n}")
    return JumpSet(tuple(members), n, t, PMode.INFINITY, beta)


def small_part(curve: KummerCurve, t: int, beta) -> list[int]:
    """A: the a in [-B, 2g - 1 - B] whose only changing summand has nonnegative degree."""
    m, r, B = curve.m, curve.r, sum(beta)
    out = []
    for a in range(-B, 2 * curve.genus - B):
        j0 = (a * curve.r_tilde) % m
        if m * sum((b + j0) // m for b in beta) >= r * j0 - a:
            out.append(a)
    return out


def hstar_via_A(curve: KummerCurve, t: int, beta, check: bool = True) -> JumpSet:
    beta = tuple(beta)
    check_beta(curve, t, PMode.INFINITY, beta)
    _criterion_preconditions(curve, t, beta)
    _require_isodual(curve, t, beta, check)
    A = small_part(curve, t, beta)
    if len(A) != curve.genus:
        raise CardinalityMismatch(f"|A| = {len(A)}, expected g = {curve.genus}")
    c = symmetry_constant(curve, t, beta)
    members = sorted(set(A) | set(guaranteed_block(curve, t, beta)) | {c - a for a in A})
    n = curve.n_for(t)
    if len(members) != n:
        raise CardinalityMismatch(f"A-route produced {len(members)} elements, expected {n}")
    return JumpSet(tuple(members), n, t, PMode.INFINITY, beta)


# -- reports -----------------------------------------------------------------

@dataclass(frozen=True)
class FlagReport:
    verdicts: dict
    jump_set: tuple
    a0: int
    x: tuple | None
    symmetry_ok: bool
    x_verified: bool | None = None
    oracle_note: str | None = None

    @property
    def routes_agree(self) -> bool:
        applicable = {v for v in self.verdicts.values() if v != Verdict.NOT_APPLICABLE}
        return len(applicable) <= 1

    def to_dict(self) -> dict:
        return {
            "verdicts": {k: v.value for k, v in self.verdicts.items()},
            "jump_set": list(self.jump_set),
            "a0": self.a0,
            "x": list(self.x) if self.x is not None else None,
            "symmetry_ok": self.symmetry_ok,
            "x_verified": self.x_verified,
            "routes_agree": self.routes_agree,
            "oracle_note": self.oracle_note,
        }


def _guarded(fn, *args) -> Verdict:
    try:
        return fn(*args)
    except PreconditionViolated:
        return Verdict.NOT_APPLICABLE


def flag_report(curve: KummerCurve, t: int, mode: PMode, beta, oracle: bool = True) -> FlagReport:
    mode = PMode(mode)
    flag = build_flag(curve, t, mode, beta)
    verdicts = {"canonical_route": _guarded(check_canonical_route, curve, t, mode, flag.beta)}
    if mode == PMode.INFINITY:
        verdicts["closed_form_route"] = _guarded(check_kummer_criterion, curve, t, flag.beta)
    else:
        verdicts["closed_form_route"] = _guarded(check_ramified_none, curve, t, flag.beta)
    x, verified, note = None, None, None
    if oracle:
        try:
            x = find_isometry_vector(flag)
            verdicts["oracle_route"] = _verdict(x is not None)
        except Inconclusive as exc:
            verdicts["oracle_route"] = Verdict.NOT_APPLICABLE
            note = str(exc)
        if x is not None:
            verified = verify_isometry(flag, x)
    else:
        verdicts["oracle_route"] = Verdict.NOT_APPLICABLE
    c = symmetry_constant(curve, t, flag.beta)
    return FlagReport(verdicts, flag.jumps.members, flag.jumps.a0,
                      tuple(x) if x is not None else None,
                      is_symmetric(flag.jumps.members, c), verified, note)
