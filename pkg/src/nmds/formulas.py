"""Closed forms: subset-sum counts, NMDS weight distributions, and the family predictor.

Everything here is exact: rationals via :class:`fractions.Fraction`, with an
integrality assertion wherever a ``1/q`` factor has to cancel.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .code import WeightDistribution
from .errors import BudgetExceeded, DimensionOutOfRange, NegativeCount, NonIntegerResult
from .gf import Field
from .grl import ALPHABETS, rl_spec
from .matrix import Matrix

SUBSET_BUDGET = 10**7


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} evaluated to {x}")
    return int(x)


def domain_points(field: Field, domain: str) -> tuple[int, ...]:
    if domain == "units":
        return field.units()
    if domain == "full":
        return field.full()
    raise ValueError(f"unknown domain {domain!r}; expected one of {ALPHABETS}")


@dataclass(frozen=True)
class SubsetSumQuery:
    """Count of ``k``-element subsets of ``D`` summing to ``b``; zero when ``k > |D|``."""

    field: Field
    k: int
    b: int
    domain: str = "units"

    def __post_init__(self):
        self.field.check(self.b)
        domain_points(self.field, self.domain)
        if self.k < 0:
            raise ValueError(f"subset size k = {self.k} is negative")

    @property
    def size(self) -> int:
        return self.field.q - 1 if self.domain == "units" else self.field.q


def v_of_b(field: Field, b: int) -> int:
    return field.q - 1 if b == 0 else -1


def subset_sum_count_closed(query: SubsetSumQuery) -> int:
    F, k, b = query.field, query.k, query.b
    q, p = F.q, F.p
    v = v_of_b(F, b)
    if query.domain == "units":
        t = k // p
        val = Fraction(comb(q - 1, k), q) + (-1) ** (k + t) * Fraction(v, q) * binom(q // p - 1, t)
    elif k % p:
        val = Fraction(comb(q, k), q)
    else:
        t = k // p
        val = Fraction(comb(q, k), q) + (-1) ** (k + t) * Fraction(v, q) * binom(q // p, t)
    return _integral(val, f"N({k}, {b}, {query.domain})")


def subset_sum_count_bruteforce(query: SubsetSumQuery, budget: int = SUBSET_BUDGET) -> int:
    F = query.field
    pts = domain_points(F, query.domain)
    if query.k > len(pts):
        return 0
    if comb(len(pts), query.k) > budget:
        raise BudgetExceeded(f"C({len(pts)}, {query.k}) subsets exceed budget {budget}")
    count = 0
    for subset in itertools.combinations(pts, query.k):
        s = 0
        for x in subset:
            s = F.add(s, x)
        count += s == query.b
    return count


def listed_vanishing_case(q: int, k: int, b: int) -> bool:
    """The published vanishing list: zero iff ``2 | q`` and ``(k, b)`` is ``(2, 0)`` or ``(q-2, 0)``."""
    return q % 2 == 0 and b == 0 and k in (2, q - 2)


def nmds_full_distribution(
    n: int, k: int, q: int, a_min: int
) -> tuple[WeightDistribution, WeightDistribution]:
    """Weight distributions of an ``[n, k, n-k]`` NMDS code and its dual from ``A_{n-k}``."""

    def tail(dim, seed):
        # A_{dim + l} for the code whose dual has dimension `dim`
        out = {}
        for ell in range(1, n - dim + 1):
            s = sum(
                (-1) ** j * binom(dim + ell, j) * (q ** (ell - j) - 1) for j in range(ell)
            )
            out[dim + ell] = binom(n, dim + ell) * s + (-1) ** ell * binom(n - dim, ell) * seed
        return out

    primal = [0] * (n + 1)
    dual = [0] * (n + 1)
    primal[0] = dual[0] = 1
    primal[n - k] = a_min
    dual[k] = a_min
    for i, a in tail(n - k, a_min).items():
        primal[i] = a
    for i, a in tail(k, a_min).items():
        dual[i] = a
    for name, dist in (("code", primal), ("dual", dual)):
        bad = [i for i, a in enumerate(dist) if a < 0]
        if bad:
            raise NegativeCount(f"{name} count A_{bad[0]} = {dist[bad[0]]} < 0")
    return WeightDistribution(primal), WeightDistribution(dual)


# -- the two Roth-Lempel families -----------------------------------------------------


def nmds_range(field: Field, alphabet: str) -> tuple[int, int]:
    """Dimensions for which every invertible 2x2 tail gives an NMDS code."""
    q, p = field.q, field.p
    if alphabet == "units":
        return (4, q - 3) if p == 2 else (3, q - 2)
    if alphabet == "full":
        return (4, q - 2) if p == 2 else (3, q)
    raise ValueError(f"unknown alphabet {alphabet!r}")


def unified_min_weight_count(field: Field, alphabet: str, k: int, tail: Matrix) -> int:
    """Number of weight-k dual codewords, for any 3 <= k in the family's range.

    Each tail column ``s`` with ``a_1s != 0`` contributes ``q - 1`` codewords per
    ``(k-1)``-subset of the alphabet summing to ``a_2s / a_1s``.
    """
    F = field
    spec = rl_spec(field, alphabet, k, tail)
    M = spec.tail
    total = 0
    for s in range(2):
        top, bottom = M[0, s], M[1, s]
        if top:
            query = SubsetSumQuery(F, k - 1, F.div(bottom, top), alphabet)
            total += (F.q - 1) * subset_sum_count_closed(query)
    return total


def a_min_weight_closed(field: Field, alphabet: str, k: int, tail) -> int:
    lo, hi = nmds_range(field, alphabet)
    if not lo <= k <= hi:
        raise DimensionOutOfRange(f"k = {k} outside the NMDS range [{lo}, {hi}] for {alphabet}")
    return unified_min_weight_count(field, alphabet, k, tail)


@dataclass(frozen=True)
class Prediction:
    n: int
    k: int
    d: int | None
    klass: str
    a_min: int | None
    source: str

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "klass": self.klass,
            "a_min": self.a_min,
            "source": self.source,
        }


def is_swap_tail(tail: Matrix) -> bool:
    return tail.rows == ((0, 1), (1, 0))


def predict(field: Field, alphabet: str, k: int, tail) -> Prediction:
    """Parameters and class promised by the published results, or ``undetermined``."""
    spec = rl_spec(field, alphabet, k, tail)
    q, p = field.q, field.p
    n = spec.n + 2
    lo, hi = nmds_range(field, alphabet)
    if lo <= k <= hi:
        a_min = unified_min_weight_count(field, alphabet, k, spec.tail)
        return Prediction(n, k, n - k, "NMDS", a_min, f"{alphabet}-nmds")
    if alphabet == "units":
        exceptional = {3, q - 2, q - 1} if p == 2 else {q - 1}
        if k in exceptional:
            return Prediction(n, k, n - k + 1, "MDS", None, "units-mds")
    elif p == 2 and k in (3, q - 1) and is_swap_tail(spec.tail):
        return Prediction(n, k, n - k + 1, "MDS", None, "full-mds-swap")
    return Prediction(n, k, None, "undetermined", None, "none")
