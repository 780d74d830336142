"""Exact arithmetic in GF(p^m).

Elements are plain integers in ``[0, q)``.  Base-p digit ``i`` of an element
is the coefficient of ``x^i`` in its polynomial-basis representative, so
``0`` is the additive and ``1`` the multiplicative identity.

Fields up to ``LOG_TABLE_LIMIT`` elements multiply through log/antilog
tables; larger ones fall back to polynomial arithmetic.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DivisionByZero, MixedFields, NotIrreducible, NotPrime, OverflowGuard

DEFAULT_MAX_ORDER = 2**20
LOG_TABLE_LIMIT = 2**16
_ADD_TABLE_LIMIT = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over GF(p), coefficient lists with the constant term first --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def _poly_mod(a: list[int], mod: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(mod):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _poly_mulmod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    return _poly_mod(prod, mod, p)


def _poly_powmod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, mod, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, mod, p)
        base = _poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def is_irreducible(coeffs: list[int], p: int) -> bool:
    """Rabin-style test: ``gcd(f, x^(p^i) - x) = 1`` for ``i <= deg f / 2``."""
    f = _trim([c % p for c in coeffs])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(m // 2):
        xp = _poly_powmod(xp, p, f, p)
        if len(_poly_gcd(f, _poly_sub(xp, x, p), p)) > 1:
            return False
    return True


def default_modulus(p: int, m: int) -> list[int]:
    """Lexicographically smallest monic irreducible of degree m (constant term first)."""
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return cand
    raise NotIrreducible(f"no irreducible polynomial of degree {m} over GF({p})")


class Field:
    """A concrete finite field GF(p^m) with a fixed modulus and primitive element.

    Instances are immutable after construction and may be shared freely.
    Use :func:`make_field` rather than calling the constructor directly.
    """

    def __init__(self, p: int, m: int, modulus: list[int], omega: int | None = None):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = tuple(modulus)
        self._mod_list = list(modulus)
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self.omega = self._find_omega() if omega is None else omega
        if self.q <= LOG_TABLE_LIMIT:
            self._build_tables()
        if self.order(self.omega) != self.q - 1:
            raise ValueError(f"omega={self.omega} is not primitive in GF({self.q})")

    # -- identity -------------------------------------------------------------

    @property
    def _key(self):
        return (self.p, self.m, self.modulus, self.omega)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)}, omega={self.omega})"

    # -- encoding ---------------------------------------------------------------

    def to_poly(self, a: int) -> list[int]:
        digits = []
        for _ in range(self.m):
            digits.append(a % self.p)
            a //= self.p
        return digits

    def from_poly(self, coeffs) -> int:
        value = 0
        for c in reversed(list(coeffs)):
            value = value * self.p + (c % self.p)
        return value

    def check(self, a: int) -> int:
        if not (0 <= a < self.q):
            raise ValueError(f"{a} is not an element encoding of GF({self.q})")
        return a

    def elem(self, a: int) -> "FieldElement":
        return FieldElement(self, self.check(int(a)))

    # -- scalar arithmetic on encodings ---------------------------------------

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out, scale = 0, 1
        while a or b:
            out += (((a % p) + (b % p)) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        out, scale = 0, 1
        while a:
            out += ((-(a % p)) % p) * scale
            a //= p
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        if self.m == 1:
            return (a * b) % self.p
        return self.from_poly(
            _poly_mulmod(self.to_poly(a), self.to_poly(b), self._mod_list, self.p)
        )

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no inverse")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def log(self, a: int) -> int | None:
        """Discrete log base omega, available only for table-backed fields."""
        if a == 0 or self._log is None:
            return None
        return self._log[a]

    def omega_pow(self, e: int) -> int:
        return self.pow(self.omega, e)

    def _find_omega(self) -> int:
        if self.q == 2:
            return 1
        for a in range(2, self.q):
            if self.order(a) == self.q - 1:
                return a
        raise NotIrreducible(f"modulus {list(self.modulus)} yields no primitive element")

    def _build_tables(self):
        # omega is found before the tables exist, so pow() uses polynomial arithmetic here
        n = self.q - 1
        exp = [0] * (2 * n)
        log = [0] * self.q
        x = 1
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = self.mul(x, self.omega)
        for i in range(n, 2 * n):
            exp[i] = exp[i - n]
        self._exp, self._log = exp, log

    # -- canonical orderings ----------------------------------------------------

    def units(self) -> tuple[int, ...]:
        """Nonzero elements ordered as ``omega^0, omega^1, ..., omega^(q-2)``."""
        return self._units

    def full(self) -> tuple[int, ...]:
        """All elements ordered as ``0, omega^0, ..., omega^(q-2)``."""
        return (0,) + self._units

    @cached_property
    def _units(self) -> tuple[int, ...]:
        out = []
        x = 1
        for _ in range(self.q - 1):
            out.append(x)
            x = self.mul(x, self.omega)
        return tuple(out)

    # -- vectorised arithmetic for enumeration sweeps --------------------------

    @cached_property
    def _np_exp(self):
        return np.array(self._exp, dtype=np.int64) if self._exp is not None else None

    @cached_property
    def _np_log(self):
        return np.array(self._log, dtype=np.int64) if self._log is not None else None

    @cached_property
    def _np_add_table(self):
        q = self.q
        return np.array([[self.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)

    def neg_array(self, a: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a.copy()
        if self.m == 1:
            return (-a) % self.p
        return np.vectorize(self.neg, otypes=[np.int64])(a) if a.size else a.copy()

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self.p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % self.p
        if self.q <= _ADD_TABLE_LIMIT:
            return self._np_add_table[a, b]
        out = np.zeros(a.shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            out += (((a // scale) % self.p + (b // scale) % self.p) % self.p) * scale
            scale *= self.p
        return out

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        if self._np_exp is None:
            return np.vectorize(self.mul, otypes=[np.int64])(a, b) if a.size else a.copy()
        nz = (a != 0) & (b != 0)
        out = np.zeros(a.shape, dtype=np.int64)
        out[nz] = self._np_exp[self._np_log[a[nz]] + self._np_log[b[nz]]]
        return out

    # -- text syntax --------------------------------------------------------------

    def parse(self, text: str) -> int:
        return parse_element(self, text)

    def format(self, a: int, annotate: bool = True) -> str:
        return format_element(self, a, annotate)


def make_field(
    p: int,
    m: int = 1,
    modulus: list[int] | None = None,
    max_order: int = DEFAULT_MAX_ORDER,
) -> Field:
    """Build GF(p^m).

    Without an explicit modulus the lexicographically smallest monic
    irreducible polynomial is used (coefficient tuples compared constant term
    first).  The primitive element is the smallest encoding of order q-1.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if p**m > max_order:
        raise OverflowGuard(f"q = {p}^{m} exceeds the bound {max_order}")
    if modulus is None:
        modulus = default_modulus(p, m)
    else:
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != m + 1 or modulus[-1] != 1:
            raise NotIrreducible(f"modulus {modulus} is not monic of degree {m}")
        if not is_irreducible(modulus, p):
            raise NotIrreducible(f"modulus {modulus} is reducible over GF({p})")
    return Field(p, m, modulus)


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field; arithmetic refuses to mix fields."""

    field: Field
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise MixedFields(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.div(self._other(other), self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.field.q})({self.field.format(self.value)})"


def arith(field: Field, op: str, *operands):
    """Dispatch one field operation by name on element encodings."""
    ops = {
        "add": field.add,
        "sub": field.sub,
        "mul": field.mul,
        "div": field.div,
        "inv": field.inv,
        "neg": field.neg,
        "pow": field.pow,
    }
    if op not in ops:
        raise ValueError(f"unknown field operation {op!r}")
    if op == "pow":
        a, e = operands
        return field.pow(field.check(a), int(e))
    return ops[op](*(field.check(a) for a in operands))


def canonical_orderings(field: Field) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return field.units(), field.full()


_TERM = re.compile(r"^(?:(\d+)|w(?:\^(-?\d+))?)$")


def parse_element(field: Field, text: str) -> int:
    """Parse ``"7"``, ``"w"``, ``"w^3"`` or a ``+``-separated sum such as ``"w^2+1"``."""
    text = text.strip().replace("ω", "w").replace(" ", "")
    if not text:
        raise ValueError("empty field element")
    total = 0
    for term in text.split("+"):
        match = _TERM.match(term)
        if match is None:
            raise ValueError(f"cannot parse field element {text!r}")
        if match.group(1) is not None:
            total = field.add(total, field.check(int(match.group(1))))
        else:
            e = int(match.group(2)) if match.group(2) is not None else 1
            total = field.add(total, field.omega_pow(e))
    return total


def format_element(field: Field, a: int, annotate: bool = True) -> str:
    e = field.log(a) if annotate else None
    if e is None or a == 1:
        return str(a)
    return f"{a}=w^{e}"
