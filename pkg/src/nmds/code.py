"""Linear codes: duals, exhaustive weight distributions, MacWilliams, classification."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from enum import Enum
from math import comb

import numpy as np

from .errors import BudgetExceeded, NonIntegerResult, ZeroCode
from .gf import Field
from .matrix import Matrix, nullspace, rank_rref

DEFAULT_BUDGET = 10**8
# rows enumerated together in one numpy block: q**r <= _BLOCK
_BLOCK = 1 << 16


def enumeration_budget(budget: int | None = None) -> int:
    """Explicit budget, else ``$NMDS_BUDGET``, else ``DEFAULT_BUDGET``."""
    if budget is not None:
        return int(budget)
    env = os.environ.get("NMDS_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts ``A_0 .. A_n`` as Python integers."""

    counts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def min_weight(self) -> int:
        """Smallest nonzero weight, or ``n + 1`` for the zero code."""
        return next((i for i in range(1, len(self.counts)) if self.counts[i]), self.n + 1)

    def support(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self.counts) if c}

    def enumerator(self, var: str = "z") -> str:
        terms = []
        for i, c in enumerate(self.counts):
            if c:
                terms.append(str(c) if i == 0 else f"{c}{var}^{i}")
        return " + ".join(terms)


class CodeClass(str, Enum):
    MDS = "MDS"
    AMDS = "AMDS-not-NMDS"
    NMDS = "NMDS"
    OTHER = "other"

    def __str__(self):
        return self.value


class LinearCode:
    """The row space of a generator matrix.

    The generator may have dependent rows; ``k`` is its rank and ``basis`` the
    nonzero rows of its reduced echelon form.
    """

    def __init__(self, generator: Matrix):
        self.generator = generator
        self.field: Field = generator.field
        self.n = generator.ncols
        rank, rref, pivots = rank_rref(generator)
        self.k = rank
        self.basis = Matrix(self.field, rref.rows[:rank], self.n)
        self.pivots = tuple(pivots)

    def __repr__(self):
        return f"LinearCode([{self.n}, {self.k}] over GF({self.field.q}))"

    def dual(self) -> "LinearCode":
        return dual(self)

    def encode(self, message) -> tuple[int, ...]:
        """``message . G`` for a message of length ``rows(G)``."""
        F = self.field
        out = [0] * self.n
        for coef, row in zip(message, self.generator.rows):
            if coef:
                for j, g in enumerate(row):
                    if g:
                        out[j] = F.add(out[j], F.mul(coef, g))
        return tuple(out)

    def contains(self, vector) -> bool:
        stacked = Matrix(self.field, list(self.basis.rows) + [list(vector)], self.n)
        return rank_rref(stacked)[0] == self.k

    def codewords(self):
        """Iterate every codeword (small codes only)."""
        B = self.basis.rows
        F = self.field
        for msg in itertools.product(range(F.q), repeat=self.k):
            out = [0] * self.n
            for coef, row in zip(msg, B):
                if coef:
                    out = [F.add(x, F.mul(coef, g)) for x, g in zip(out, row)]
            yield tuple(out)

    def weight_distribution(self, budget: int | None = None, workers: int = 1):
        return weight_distribution(self, budget=budget, workers=workers)


def dual(C: LinearCode) -> LinearCode:
    return LinearCode(nullspace(C.basis if C.k else C.generator))


# -- exhaustive enumeration -------------------------------------------------------


def _span(field: Field, rows: np.ndarray) -> np.ndarray:
    n = rows.shape[1]
    S = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(field.q, dtype=np.int64)[:, None]
    for g in rows:
        multiples = field.mul_array(scalars, g[None, :])
        S = field.add_array(S[None, :, :], multiples[:, None, :]).reshape(-1, n)
    return S


def _combine(field: Field, coeffs, rows: np.ndarray, offset: np.ndarray) -> np.ndarray:
    out = offset
    for c, g in zip(coeffs, rows):
        if c:
            out = field.add_array(out, field.mul_array(np.int64(c), g))
    return out


def _weight_histogram(field: Field, basis: np.ndarray, workers: int = 1) -> list[int]:
    """Histogram of weights over all q^k codewords spanned by ``basis``.

    Only messages whose first nonzero coordinate is 1 are enumerated; each
    stands for its q-1 nonzero scalar multiples, which share its weight.
    """
    k, n = basis.shape
    q = field.q
    hist = [0] * (n + 1)
    hist[0] = 1
    if k == 0:
        return hist
    r_max = max(1, int(np.floor(np.log(_BLOCK) / np.log(q) + 1e-9)))

    tasks = []
    for lead in range(k):
        rest = basis[lead + 1:]
        r = min(r_max, len(rest))
        outer, inner = rest[: len(rest) - r], rest[len(rest) - r:]
        tasks.append((basis[lead], outer, inner))

    def run(task):
        lead_row, outer, inner = task
        span = _span(field, inner).astype(np.int32)
        local = np.zeros(n + 1, dtype=np.int64)
        for prefix in itertools.product(range(q), repeat=len(outer)):
            offset = _combine(field, prefix, outer, lead_row)
            target = field.neg_array(offset).astype(np.int32)
            weights = (span != target[None, :]).sum(axis=1)
            local += np.bincount(weights, minlength=n + 1)
        return local

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(run, tasks))
    else:
        partials = [run(t) for t in tasks]
    for part in partials:
        for i, c in enumerate(part):
            hist[i] += int(c) * (q - 1)
    return hist


def _check_budget(q: int, dim: int, budget: int) -> None:
    if q**dim > budget:
        raise BudgetExceeded(f"{q}^{dim} messages exceed the enumeration budget {budget}")


def enumerate_distribution(
    C: LinearCode, budget: int | None = None, workers: int = 1
) -> WeightDistribution:
    """Weight distribution by direct enumeration of all q^k codewords."""
    _check_budget(C.field.q, C.k, enumeration_budget(budget))
    return WeightDistribution(_weight_histogram(C.field, C.basis.to_numpy(), workers))


def weight_distribution(
    C: LinearCode, budget: int | None = None, workers: int = 1
) -> WeightDistribution:
    """Exact weight distribution, enumerating the smaller of the code and its dual."""
    budget = enumeration_budget(budget)
    q = C.field.q
    if C.k <= C.n - C.k:
        _check_budget(q, C.k, budget)
        return enumerate_distribution(C, budget, workers)
    D = dual(C)
    _check_budget(q, D.k, budget)
    return macwilliams_transform(enumerate_distribution(D, budget, workers), C.n, D.k, q)


# -- MacWilliams ---------------------------------------------------------------------


def krawtchouk(j: int, i: int, n: int, q: int) -> int:
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s) for s in range(j + 1)
    )


def macwilliams_transform(dist, n: int, k: int, q: int) -> WeightDistribution:
    """Distribution of the dual ``[n, n-k]`` code from that of an ``[n, k]_q`` code."""
    counts = list(dist)
    if len(counts) != n + 1:
        raise ValueError(f"distribution has {len(counts)} entries, expected {n + 1}")
    size = q**k
    if sum(counts) != size or counts[0] != 1:
        raise NonIntegerResult(f"not the distribution of an [{n},{k}]_{q} code")
    out = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(j, i, n, q) for i, a in enumerate(counts) if a)
        b, rem = divmod(s, size)
        if rem or b < 0:
            raise NonIntegerResult(f"dual count B_{j} = {s}/{size} is not a nonnegative integer")
        out.append(b)
    return WeightDistribution(out)


# -- classification -----------------------------------------------------------------


@dataclass(frozen=True)
class SingletonReport:
    n: int
    k: int
    d: int
    d_dual: int
    defect: int
    defect_dual: int
    klass: CodeClass
    weight_distribution: WeightDistribution | None = dc_field(default=None, compare=False)
    dual_distribution: WeightDistribution | None = dc_field(default=None, compare=False)

    @property
    def params(self) -> tuple[int, int, int]:
        return self.n, self.k, self.d


def singleton_class(defect: int, defect_dual: int) -> CodeClass:
    if defect == 0:
        return CodeClass.MDS
    if defect == 1 and defect_dual == 1:
        return CodeClass.NMDS
    if defect == 1:
        return CodeClass.AMDS
    return CodeClass.OTHER


def report_from_distributions(
    n: int, k: int, dist: WeightDistribution, dual_dist: WeightDistribution
) -> SingletonReport:
    d = dist.min_weight()
    d_dual = dual_dist.min_weight()
    defect = n - k + 1 - d
    defect_dual = n - (n - k) + 1 - d_dual
    return SingletonReport(
        n, k, d, d_dual, defect, defect_dual, singleton_class(defect, defect_dual), dist, dual_dist
    )


def classify(C: LinearCode, budget: int | None = None, workers: int = 1) -> SingletonReport:
    if C.k == 0:
        raise ZeroCode("the zero code has no minimum distance")
    dist = weight_distribution(C, budget, workers)
    dual_dist = macwilliams_transform(dist, C.n, C.k, C.field.q)
    return report_from_distributions(C.n, C.k, dist, dual_dist)
