"""Exact arithmetic in GF(p^m).

Elements are stored as integers ``c0 + c1*p + ... + c_{m-1}*p^(m-1)`` where
``(c0, ..., c_{m-1})`` are the polynomial coefficients, low order first.  The
integer order therefore coincides with the lexicographic order of the
coefficient vector read from the highest degree down, which is the order used
everywhere downstream for reproducible vertex labels.

Hot loops (graph generators) use the integer API on :class:`FieldSpec`
directly; :class:`FieldElement` wraps it with operators for readable code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

DEFAULT_SIZE_CAP = 2**20
# add/mul tables are only materialised up to this order
TABLE_CAP = 2**10


class FieldError(ValueError):
    """Invalid field parameters or an illegal field operation."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return ``(p, m)`` with ``q == p**m`` or ``None`` if q is not a prime power."""
    if q < 2:
        return None
    p = next(d for d in itertools.chain([2], range(3, q + 1, 2)) if q % d == 0)
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    return (p, m) if q == 1 else None


# -- polynomials over GF(p), coefficient lists low order first ---------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_mod(out, f, p)


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        e >>= 1
    return result


def is_irreducible(f: list[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial ``f`` over GF(p)."""
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    h = x
    for _ in range(m // 2):
        h = _poly_powmod(h, p, f, p)
        if len(_poly_gcd(f, _poly_sub(h, x, p), p)) > 1:
            return False
    return True


def lowest_irreducible(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m whose lower coefficients encode the smallest integer."""
    if m == 1:
        return (0, 1)
    for code in range(p**m):
        low = [(code // p**i) % p for i in range(m)]
        f = low + [1]
        if f[0] and is_irreducible(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


# -- the field ----------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^m) with a fixed modulus.  Immutable; equality is by (p, m, modulus)."""

    p: int
    m: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p**self.m)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and (self.p, self.m, self.modulus) == (
            other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    # integer <-> coefficient vector
    def coeffs(self, a: int) -> tuple[int, ...]:
        return tuple((a // self.p**i) % self.p for i in range(self.m))

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) > self.m or any(not 0 <= c < self.p for c in cs):
            raise FieldError(f"{cs} is not a coefficient vector of {self}")
        return sum(c * self.p**i for i, c in enumerate(cs))

    def elements(self) -> range:
        return range(self.q)

    @cached_property
    def _digit_weights(self):
        return [self.p**i for i in range(self.m)]

    @cached_property
    def _exp_log(self):
        # exp[i] = g^i for the first generator g in enumeration order
        q = self.q
        f = list(self.modulus)
        for g in range(2, q):
            gp = list(self.coeffs(g))
            exp = [1]
            cur = [1]
            seen = {1}
            ok = True
            for _ in range(q - 2):
                cur = _poly_mulmod(cur, gp, f, self.p)
                v = self.from_coeffs(cur + [0] * (self.m - len(cur)))
                if v in seen:
                    ok = False
                    break
                seen.add(v)
                exp.append(v)
            if ok:
                exp.append(1)  # g^(q-1)
                log = [None] * q
                for i, v in enumerate(exp[:-1]):
                    log[v] = i
                return exp, log, g
        raise FieldError(f"{self} has no generator (modulus not irreducible?)")

    @cached_property
    def _add_table(self):
        if self.q > TABLE_CAP:
            return None
        return [[self._add_slow(a, b) for b in range(self.q)] for a in range(self.q)]

    def _add_slow(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        out = 0
        for w in self._digit_weights:
            out += ((a // w % self.p + b // w % self.p) % self.p) * w
        return out

    def _neg_slow(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.m == 1:
            return -a % self.p
        return sum(((-(a // w % self.p)) % self.p) * w for w in self._digit_weights)

    # integer-level API ------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        t = self._add_table
        return t[a][b] if t is not None else self._add_slow(a, b)

    def neg(self, a: int) -> int:
        return self._neg_slow(a)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.m == 1:
            return a * b % self.p
        exp, log, _ = self._exp_log
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("inversion of zero")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        exp, log, _ = self._exp_log
        return exp[(-log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 1 if e == 0 else 0
        if self.m == 1:
            return pow(a, e, self.p)
        exp, log, _ = self._exp_log
        return exp[(log[a] * e) % (self.q - 1)]

    def element(self, value) -> "FieldElement":
        if isinstance(value, int):
            if not 0 <= value < self.q:
                raise FieldError(f"{value} is not an element of {self}")
            return FieldElement(self, value)
        return FieldElement(self, self.from_coeffs(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def label(self, a: int) -> str:
        """Render an element as a polynomial in x, e.g. ``x+1``; prime fields print digits."""
        if self.m == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.coeffs(a)))):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            coef = "" if (c == 1 and i > 0) else str(c)
            terms.append(coef + mono)
        return "+".join(terms) or "0"


def field_create(p: int, m: int = 1, size_cap: int = DEFAULT_SIZE_CAP) -> FieldSpec:
    if not isinstance(p, int) or not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > size_cap:
        raise FieldError(f"q = {p}^{m} exceeds the size cap {size_cap}")
    return FieldSpec(p, m, lowest_irreducible(p, m))


def field_of_order(q: int, size_cap: int = DEFAULT_SIZE_CAP) -> FieldSpec:
    pm = prime_power(q) if isinstance(q, int) else None
    if pm is None:
        raise FieldError(f"q must be a prime power, got {q}")
    return field_create(*pm, size_cap=size_cap)


@dataclass(frozen=True)
class FieldElement:
    F: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.F.coeffs(self.value)

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.F != self.F:
                raise FieldError(f"mixed-field operands {self.F} and {b.F}")
            return b.value
        if isinstance(b, int):
            return self.F.element(b % self.F.p if self.F.m == 1 else b).value
        return NotImplemented

    def __add__(self, b):
        return FieldElement(self.F, self.F.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return FieldElement(self.F, self.F.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return FieldElement(self.F, self.F.sub(self._other(b), self.value))

    def __mul__(self, b):
        return FieldElement(self.F, self.F.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return FieldElement(self.F, self.F.div(self.value, self._other(b)))

    def __neg__(self):
        return FieldElement(self.F, self.F.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.F, self.F.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.F, self.F.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return self.F.label(self.value)


def field_arith(op: str, a: FieldElement, b=None) -> FieldElement:
    """Dispatch ``op`` in {add, sub, mul, inv, neg, pow}; ``b`` is an element or, for pow, an int."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "neg":
        return -a
    if op == "pow":
        return a ** int(b)
    raise FieldError(f"unknown operation {op!r}")


def multiplicative_order(F: FieldSpec, a: int) -> int:
    if a == 0:
        raise FieldError("zero has no multiplicative order")
    k, cur = 1, a
    while cur != 1:
        cur = F.mul(cur, a)
        k += 1
    return k


def primitive_element(F: FieldSpec) -> FieldElement:
    """First element in enumeration order whose powers cover every nonzero element."""
    if F.q < 3:
        raise FieldError("primitive_element requires q >= 3")
    for a in range(2, F.q):
        if multiplicative_order(F, a) == F.q - 1:
            return FieldElement(F, a)
    raise FieldError(f"{F} has no primitive element")


def nonzero_squares(F: FieldSpec) -> frozenset[int]:
    return frozenset(F.mul(x, x) for x in range(1, F.q))
