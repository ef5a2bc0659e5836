"""Kummer curves y^m = f(x) = prod (x - alpha_i) over F_q.

Rational places are the single place at infinity, the totally ramified places
Q_i over the roots of f, and the m places over every completely split x-line.
Riemann-Roch spaces of Galois-invariant divisors are computed through the
decomposition L(A) = sum_j L([A + (y^j)] restricted to F_q(x)) * y^j, which
reduces everything to divisors on the projective line.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from pathlib import Path

from .errors import (
    ConfigError,
    DegreeRange,
    GcdViolation,
    KummerConditionFailed,
    NotGaloisInvariant,
    NotSeparable,
    PoleAtEvaluationPoint,
    RangeError,
)
from .gf import FieldElement, FieldSpec
from .linalg import Poly


# -- places -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Infinity:
    def __repr__(self):
        return "P_inf"


@dataclass(frozen=True, order=True)
class Ramified:
    """Q_i, the unique place over the i-th root of f (1-based)."""

    i: int

    def __repr__(self):
        return f"Q_{self.i}"


@dataclass(frozen=True, order=True)
class Split:
    alpha: int
    y0: int

    def __repr__(self):
        return f"P({self.alpha},{self.y0})"


Place = Infinity | Ramified | Split
P_INF = Infinity()


def place_key(pl) -> tuple:
    """Column order of codes: infinity, ramified by index, split by (alpha, y0)."""
    if isinstance(pl, Infinity):
        return (0,)
    if isinstance(pl, Ramified):
        return (1, pl.i)
    return (2, pl.alpha, pl.y0)


@dataclass(frozen=True, order=True)
class FiniteX:
    """Place x = alpha of the rational function field."""

    alpha: int

    def __repr__(self):
        return f"R({self.alpha})"


@dataclass(frozen=True, order=True)
class InfinityX:
    def __repr__(self):
        return "R_inf"


R_INF = InfinityX()


# -- divisors -------------------------------------------------------------

class CurveDivisor:
    """Finitely supported integer combination of rational places."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        items = coeffs.items() if isinstance(coeffs, dict) else (coeffs or ())
        c: dict = {}
        for pl, v in items:
            c[pl] = c.get(pl, 0) + int(v)
        self._c = {pl: v for pl, v in c.items() if v}

    def __getitem__(self, pl) -> int:
        return self._c.get(pl, 0)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: place_key(kv[0]))

    @property
    def support(self) -> list:
        return sorted(self._c, key=place_key)

    @property
    def degree(self) -> int:
        return sum(self._c.values())

    def __add__(self, other: CurveDivisor) -> CurveDivisor:
        c = dict(self._c)
        for pl, v in other._c.items():
            c[pl] = c.get(pl, 0) + v
        return CurveDivisor(c)

    def __neg__(self) -> CurveDivisor:
        return CurveDivisor({pl: -v for pl, v in self._c.items()})

    def __sub__(self, other: CurveDivisor) -> CurveDivisor:
        return self + (-other)

    def __mul__(self, k: int) -> CurveDivisor:
        return CurveDivisor({pl: k * v for pl, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, CurveDivisor) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"{v}*{pl!r}" for pl, v in self.items())


def p1_degree(B: dict) -> int:
    return sum(B.values())


def p1_dim(B: dict) -> int:
    """Genus-0 Riemann-Roch: deg + 1 when deg >= 0, else 0."""
    return max(0, p1_degree(B) + 1)


# -- functions ------------------------------------------------------------

@dataclass(frozen=True)
class BasisFunction:
    """y^j * numerator(x) / prod (x - alpha)^mult over the pole map."""

    j: int
    numerator: Poly
    poles: tuple = ()  # sorted ((alpha, multiplicity), ...)

    @property
    def pole_map(self) -> dict:
        return dict(self.poles)

    def __repr__(self):
        den = "".join(f"(x-{a})^{e}" for a, e in self.poles)
        return f"y^{self.j}*{list(self.numerator.coeffs)}" + (f"/{den}" if den else "")


# -- the curve ------------------------------------------------------------

@dataclass(frozen=True)
class KummerCurve:
    field: FieldSpec
    m: int
    roots: tuple
    split_lines: tuple = field(init=False)
    fibres: dict = field(init=False, repr=False, compare=False)
    f: Poly = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        F, m, roots = self.field, self.m, tuple(int(a) for a in self.roots)
        object.__setattr__(self, "roots", roots)
        if any(not 0 <= a < F.q for a in roots):
            raise ConfigError(f"roots must be reprs in [0, {F.q})")
        if len(set(roots)) != len(roots):
            raise NotSeparable(f"roots {list(roots)} are not pairwise distinct")
        r = len(roots)
        if not 2 <= r <= m - 1:
            raise DegreeRange(f"need 2 <= r <= m-1, got r={r}, m={m}")
        if gcd(m, r) != 1:
            raise GcdViolation(f"gcd(m, r) = gcd({m}, {r}) != 1")
        if (F.q - 1) % m:
            raise KummerConditionFailed(f"m={m} does not divide q-1={F.q - 1}")
        f = Poly.from_roots(F, roots)
        fibres = {}
        for alpha in range(F.q):
            if alpha in roots:
                continue
            u = f(alpha)
            if F.is_mth_power(u, m):
                fibres[alpha] = tuple(F.mth_roots(u, m))
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "fibres", fibres)
        object.__setattr__(self, "split_lines", tuple(sorted(fibres)))

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def r(self) -> int:
        return len(self.roots)

    @property
    def genus(self) -> int:
        return (self.m - 1) * (self.r - 1) // 2

    @property
    def r_tilde(self) -> int:
        return pow(self.r, -1, self.m)

    def ramified(self, i: int) -> Ramified:
        if not 1 <= i <= self.r:
            raise RangeError(f"ramified index {i} outside [1, {self.r}]")
        return Ramified(i)

    def root_of(self, pl: Ramified) -> int:
        return self.roots[pl.i - 1]

    def split_places(self, alpha: int | None = None) -> list[Split]:
        lines = self.split_lines if alpha is None else (alpha,)
        return [Split(a, y0) for a in lines for y0 in self.fibres[a]]

    def rational_places(self) -> list:
        return [P_INF] + [Ramified(i) for i in range(1, self.r + 1)] + self.split_places()

    @property
    def place_count(self) -> int:
        return 1 + self.r + self.m * len(self.split_lines)

    def n_for(self, t: int) -> int:
        return (self.r - t) + self.m * len(self.split_lines)

    def to_config(self) -> dict:
        return {"field": self.field.to_config(), "m": self.m, "roots": list(self.roots)}


def build_curve(config) -> KummerCurve:
    """Curve from a config dict or a path to its JSON file."""
    if isinstance(config, (str, Path)):
        try:
            config = json.loads(Path(config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read curve config {config}: {exc}") from exc
    if not isinstance(config, dict):
        raise ConfigError("curve config must be a JSON object")
    for key in ("field", "m", "roots"):
        if key not in config:
            raise ConfigError(f"curve config is missing {key!r}")
    F = FieldSpec.from_config(config["field"])
    m, roots = config["m"], config["roots"]
    if not isinstance(m, int) or m < 2:
        raise ConfigError(f"m must be an integer >= 2, got {m!r}")
    if not isinstance(roots, list) or not all(isinstance(a, int) for a in roots):
        raise ConfigError("roots must be a list of integer reprs")
    return KummerCurve(F, m, tuple(roots))


# -- standard divisors ----------------------------------------------------

def point_divisor(pl, k: int = 1) -> CurveDivisor:
    return CurveDivisor({pl: k})


def standard_D(curve: KummerCurve, t: int) -> CurveDivisor:
    """Q_{t+1} + ... + Q_r plus every place over a split x-line."""
    if not 1 <= t <= curve.r:
        raise RangeError(f"t={t} outside [1, {curve.r}]")
    c = {Ramified(i): 1 for i in range(t + 1, curve.r + 1)}
    c.update({pl: 1 for pl in curve.split_places()})
    return CurveDivisor(c)


def y_power_divisor(curve: KummerCurve, j: int) -> CurveDivisor:
    c = {Ramified(i): j for i in range(1, curve.r + 1)}
    c[P_INF] = -curve.r * j
    return CurveDivisor(c)


def check_galois_invariant(curve: KummerCurve, A: CurveDivisor) -> None:
    lines = {pl.alpha for pl in A.support if isinstance(pl, Split)}
    for alpha in lines:
        if alpha not in curve.fibres:
            raise NotGaloisInvariant(f"x={alpha} is not a split line of this curve")
        vals = {A[pl] for pl in curve.split_places(alpha)}
        if len(vals) != 1:
            raise NotGaloisInvariant(f"coefficients over x={alpha} differ: {sorted(vals)}")
    for pl in A.support:
        if isinstance(pl, Ramified) and not 1 <= pl.i <= curve.r:
            raise NotGaloisInvariant(f"unknown place {pl!r}")


def restrict(curve: KummerCurve, A: CurveDivisor) -> dict:
    """Restriction to F_q(x): floor(n_P / e(P|R)) minimised over each fibre."""
    check_galois_invariant(curve, A)
    m = curve.m
    out: dict = {}
    for pl, v in A.items():
        if isinstance(pl, Infinity):
            key, val = R_INF, v // m
        elif isinstance(pl, Ramified):
            key, val = FiniteX(curve.root_of(pl)), v // m
        else:
            key, val = FiniteX(pl.alpha), v
        out[key] = val
    return {k: v for k, v in out.items() if v}


def _restrictions(curve: KummerCurve, A: CurveDivisor):
    check_galois_invariant(curve, A)
    for j in range(curve.m):
        yield j, restrict(curve, A + y_power_divisor(curve, j))


def rr_dim(curve: KummerCurve, A: CurveDivisor) -> int:
    """l(A) for a Galois-invariant divisor A."""
    return sum(p1_dim(B) for _, B in _restrictions(curve, A))


@dataclass(frozen=True)
class BasisBlock:
    """The functions y^j * u_j * x^s, 0 <= s <= degree, from one summand."""

    j: int
    numerator: Poly
    poles: tuple
    degree: int

    def functions(self) -> list[BasisFunction]:
        F = self.numerator.spec
        return [BasisFunction(self.j, Poly.monomial(F, s) * self.numerator, self.poles)
                for s in range(self.degree + 1)]


def rr_blocks(curve: KummerCurve, A: CurveDivisor) -> list[BasisBlock]:
    F = curve.field
    blocks = []
    for j, B in _restrictions(curve, A):
        d = p1_degree(B)
        if d < 0:
            continue
        zeros, poles = [], []
        for key, v in sorted(B.items(), key=lambda kv: (isinstance(kv[0], InfinityX), getattr(kv[0], "alpha", 0))):
            if isinstance(key, FiniteX):
                if v > 0:
                    poles.append((key.alpha, v))
                elif v < 0:
                    zeros.extend([key.alpha] * (-v))
        blocks.append(BasisBlock(j, Poly.from_roots(F, zeros), tuple(poles), d))
    return blocks


def rr_basis(curve: KummerCurve, A: CurveDivisor) -> list[BasisFunction]:
    return [fn for blk in rr_blocks(curve, A) for fn in blk.functions()]


# -- valuations and evaluation ---------------------------------------------

def _x_order(b: BasisFunction, alpha: int) -> int:
    """Order at x = alpha of the F_q(x) part of b."""
    return b.numerator.order_at(alpha) - b.pole_map.get(alpha, 0)


def valuation(curve: KummerCurve, b: BasisFunction, pl) -> int:
    m, r = curve.m, curve.r
    if isinstance(pl, Infinity):
        return -r * b.j + m * (sum(e for _, e in b.poles) - b.numerator.degree)
    if isinstance(pl, Ramified):
        return b.j + m * _x_order(b, curve.root_of(pl))
    return _x_order(b, pl.alpha)


def divisor_of(curve: KummerCurve, b: BasisFunction) -> CurveDivisor:
    """Rational part of (b): zeros or poles at places of degree > 1 are not listed."""
    F = curve.field
    places = [P_INF] + [Ramified(i) for i in range(1, curve.r + 1)]
    alphas = {a for a, _ in b.poles} | {a for a in range(F.q) if b.numerator(a) == 0}
    for a in sorted(alphas):
        if a in curve.fibres:
            places.extend(curve.split_places(a))
    return CurveDivisor({pl: valuation(curve, b, pl) for pl in places})


def in_space(curve: KummerCurve, b: BasisFunction, A: CurveDivisor) -> bool:
    """Valuation check v_P(b) >= -A(P) at every place where it can fail."""
    roots = set(curve.roots)
    for alpha, _ in b.poles:
        if alpha not in roots and alpha not in curve.fibres:
            return False
    places = {P_INF} | {Ramified(i) for i in range(1, curve.r + 1)}
    for alpha, _ in b.poles:
        if alpha in curve.fibres:
            places.update(curve.split_places(alpha))
    places.update(A.support)
    return all(valuation(curve, b, pl) >= -A[pl] for pl in places)


def _regular_value(F: FieldSpec, b: BasisFunction, alpha: int) -> int:
    """Value at x = alpha of numerator / denominator after cancelling common roots."""
    num = b.numerator
    e = b.pole_map.get(alpha, 0)
    if e:
        k = num.order_at(alpha)
        if k < e:
            raise PoleAtEvaluationPoint(f"{b!r} has a pole over x={alpha}")
        num = num.strip_root(alpha, e)
    val = num(alpha)
    for beta, mult in b.poles:
        if beta != alpha:
            val = F.div(val, F.pow(F.sub(alpha, beta), mult))
    return val


def evaluate_int(curve: KummerCurve, b: BasisFunction, pl) -> int:
    F = curve.field
    if isinstance(pl, Split):
        return F.mul(_regular_value(F, b, pl.alpha), F.pow(pl.y0, b.j))
    v = valuation(curve, b, pl)
    if v < 0:
        raise PoleAtEvaluationPoint(f"{b!r} has a pole at {pl!r}")
    if v > 0:
        return 0
    if isinstance(pl, Ramified):
        # v = 0 forces j = 0 since v = j (mod m)
        return _regular_value(F, b, curve.root_of(pl))
    return b.numerator.coeffs[-1]


def evaluate_basis(curve: KummerCurve, b: BasisFunction, pl) -> FieldElement:
    return FieldElement(curve.field, evaluate_int(curve, b, pl))
