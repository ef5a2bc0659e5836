"""Prime-power finite fields F_q, q = p^k.

Elements are encoded as integers in [0, q): base-p digit i is the coefficient
of w^i in the residue modulo the defining polynomial.  ``FieldSpec`` exposes
fast integer-level arithmetic (used by the linear algebra and code builders);
``FieldElement`` wraps an integer with its field for user-facing work.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .errors import ConfigError, DivisionByZero, SpecMismatch, ZeroInput

# Full q x q tables are built up to this size.
_TABLE_LIMIT = 256


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    """Remainder of ``a`` by the monic ``mod`` over Z_p (constant term first)."""
    a = [c % p for c in a]
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    a = a[:dm] if len(a) >= dm else a
    while a and a[-1] == 0:
        a.pop()
    return a


def _is_irreducible(mod: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(mod) - 1
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(mod, list(low) + [1], p):
                return False
    return True


class FieldSpec:
    """The field F_{p^k} = Z_p[w]/(modulus).  Immutable; safe to share."""

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise ConfigError(f"characteristic {p!r} is not prime")
        if not isinstance(k, int) or k < 1:
            raise ConfigError(f"extension degree {k!r} must be a positive integer")
        if modulus is None:
            if k != 1:
                raise ConfigError("a modulus is required when k > 1")
            modulus = [0, 1]
        try:
            modulus = [int(c) for c in modulus]
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"modulus {modulus!r} is not a list of integers") from exc
        if len(modulus) != k + 1 or modulus[-1] % p != 1:
            raise ConfigError(f"modulus {modulus} must be monic of degree {k}")
        if any(not 0 <= c < p for c in modulus):
            raise ConfigError(f"modulus coefficients must lie in [0, {p})")
        if not _is_irreducible(modulus, p):
            raise ConfigError(f"modulus {modulus} is reducible over Z_{p}")
        self.p = p
        self.k = k
        self.modulus = tuple(modulus)
        self.q = p**k
        self._build_tables()

    # -- construction -------------------------------------------------
    def digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            a, d = divmod(a, self.p)
            out.append(d)
        return out

    def from_digits(self, digits) -> int:
        a = 0
        for d in reversed(list(digits)):
            a = a * self.p + d % self.p
        return a

    def _slow_mul(self, a: int, b: int) -> int:
        da, db = self.digits(a), self.digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        return self.from_digits(_poly_mod(prod, list(self.modulus), self.p))

    def _build_tables(self) -> None:
        q = self.q
        gen = None
        for cand in range(1, q):
            x, order = cand, 1
            while x != 1:
                x = self._slow_mul(x, cand)
                order += 1
            if order == q - 1:
                gen = cand
                break
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, gen)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        self.generator = gen
        self._exp = exp
        self._log = log
        if q <= _TABLE_LIMIT:
            self.mul_table = [[self._mul_log(a, b) for b in range(q)] for a in range(q)]
            self.add_table = [[self._add_slow(a, b) for b in range(q)] for a in range(q)]
        else:
            self.mul_table = None
            self.add_table = None
        self._neg = [self._neg_slow(a) for a in range(q)] if q <= 1 << 16 else None

    def _mul_log(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _add_slow(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits(x + y for x, y in zip(self.digits(a), self.digits(b)))

    def _neg_slow(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_digits(-x for x in self.digits(a))

    # -- integer-level arithmetic -------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a] if self._neg is not None else self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a][b]
        return self._mul_log(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """Square-and-multiply; negative exponents need a nonzero base."""
        if e < 0:
            a, e = self.inv(a), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer n under Z -> F_q."""
        return n % self.p

    # -- m-th powers ---------------------------------------------------
    def is_mth_power(self, u: int, m: int) -> bool:
        if u == 0:
            raise ZeroInput("m-th power class of zero is undefined here")
        d = gcd(m, self.q - 1)
        return self.pow(u, (self.q - 1) // d) == 1

    def mth_roots(self, u: int, m: int) -> list[int]:
        if u == 0:
            raise ZeroInput("m-th roots of zero are not enumerated")
        return [v for v in range(1, self.q) if self.pow(v, m) == u]

    # -- identity --------------------------------------------------------
    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def elements(self):
        return [FieldElement(self, a) for a in range(self.q)]

    def to_config(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}

    @classmethod
    def from_config(cls, cfg: dict) -> FieldSpec:
        if not isinstance(cfg, dict) or "p" not in cfg:
            raise ConfigError(f"field config must be an object with 'p': {cfg!r}")
        return cls(cfg["p"], cfg.get("k", 1), cfg.get("modulus"))


@dataclass(frozen=True)
class FieldElement:
    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"repr {self.value} outside [0, {self.spec.q})")

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.spec != self.spec:
                raise SpecMismatch(f"{self.spec!r} vs {b.spec!r}")
            return b.value
        if isinstance(b, int):
            return self.spec.from_int(b)
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.spec, v)

    def __add__(self, b):
        return self._wrap(self.spec.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return self._wrap(self.spec.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return self._wrap(self.spec.sub(self._other(b), self.value))

    def __mul__(self, b):
        return self._wrap(self.spec.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return self._wrap(self.spec.div(self.value, self._other(b)))

    def __rtruediv__(self, b):
        return self._wrap(self.spec.div(self._other(b), self.value))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.spec.pow(self.value, e))

    def inv(self) -> FieldElement:
        return self._wrap(self.spec.inv(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"F{self.spec.q}({self.value})"


def arith(op: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatch by name: add, sub, mul, div, pow, inv, neg."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "pow":
        return a**b
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    raise ValueError(f"unknown operation {op!r}")


def mth_power_class(u: FieldElement, m: int) -> bool:
    """True iff u = v^m for some v in F_q."""
    return u.spec.is_mth_power(u.value, m)


def mth_roots(u: FieldElement, m: int) -> list[FieldElement]:
    return [FieldElement(u.spec, v) for v in u.spec.mth_roots(u.value, m)]


F16 = FieldSpec(2, 4, [1, 1, 0, 0, 1])
