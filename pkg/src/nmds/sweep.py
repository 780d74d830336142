"""Seeded cross-validation of the closed forms against exhaustive enumeration."""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .code import (
    CodeClass,
    LinearCode,
    SingletonReport,
    classify,
    dual,
    enumerate_distribution,
    macwilliams_transform,
)
from .formulas import a_min_weight_closed, nmds_full_distribution, nmds_range, predict
from .gf import Field, make_field
from .grl import rl_code, rl_dimension_range, swap_tail
from .matrix import Matrix

SWEEP_FIELDS = ((2, 2), (5, 1), (7, 1), (2, 3), (3, 2))
# both sides of every sweep code fit under this (largest is 9^9)
DIRECT_BUDGET = 10**9


def random_invertible_tail(field: Field, rng: random.Random) -> Matrix:
    while True:
        M = Matrix(field, [[rng.randrange(field.q) for _ in range(2)] for _ in range(2)])
        if M.det():
            return M


def seeded_tails(field: Field, alphabet: str, k: int, count: int = 10, seed: int = 42):
    """Tails for one (q, alphabet, k) cell; independent of sweep order."""
    rng = random.Random(f"{seed}:{field.q}:{alphabet}:{k}")
    return [random_invertible_tail(field, rng) for _ in range(count)]


@dataclass
class CaseResult:
    q: int
    alphabet: str
    k: int
    tail: str
    report: SingletonReport | None = None
    checks: dict[str, bool] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, good in self.checks.items() if not good]

    def label(self) -> str:
        return f"q={self.q} {self.alphabet} k={self.k} tail={self.tail}"


def duality_checks(code: LinearCode, report: SingletonReport, direct_budget: int = DIRECT_BUDGET):
    """Orthogonality, rank-nullity, equal minimum-weight counts, MacWilliams vs enumeration."""
    D = dual(code)
    G, H = code.basis, D.basis
    out = {
        "orthogonal": (G @ H.T).is_zero() if G.nrows and H.nrows else True,
        "dimensions": code.k + D.k == code.n,
    }
    if report.klass is CodeClass.NMDS:
        out["min_weight_counts_equal"] = (
            report.weight_distribution[code.n - code.k] == report.dual_distribution[code.k]
        )
    primal = enumerate_distribution(code, budget=direct_budget)
    dual_direct = enumerate_distribution(D, budget=direct_budget)
    out["macwilliams"] = (
        macwilliams_transform(primal, code.n, code.k, code.field.q) == dual_direct
        and primal == report.weight_distribution
        and dual_direct == report.dual_distribution
    )
    return out


def check_nmds_case(
    field: Field, alphabet: str, k: int, tail: Matrix, budget=None, direct: bool = False
) -> CaseResult:
    code = rl_code(field, alphabet, k, tail)
    report = classify(code, budget)
    pred = predict(field, alphabet, k, tail)
    res = CaseResult(field.q, alphabet, k, tail.to_text(), report)
    res.checks["class"] = pred.klass == str(report.klass)
    res.checks["distance"] = pred.d == report.d
    a_min = a_min_weight_closed(field, alphabet, k, tail)
    res.checks["a_min"] = a_min == report.dual_distribution[k]
    primal, dual_dist = nmds_full_distribution(code.n, k, field.q, a_min)
    res.checks["distribution"] = primal == report.weight_distribution
    res.checks["dual_distribution"] = dual_dist == report.dual_distribution
    if direct:
        res.checks.update(duality_checks(code, report))
    return res


def nmds_sweep(fields=SWEEP_FIELDS, tails: int = 10, seed: int = 42, budget=None, direct=False):
    """Every k of the NMDS ranges, ``tails`` seeded tails per (q, alphabet, k)."""
    results = []
    for p, m in fields:
        F = make_field(p, m)
        for alphabet in ("units", "full"):
            lo, hi = nmds_range(F, alphabet)
            for k in range(lo, hi + 1):
                for M in seeded_tails(F, alphabet, k, tails, seed):
                    results.append(check_nmds_case(F, alphabet, k, M, budget, direct))
    return results


def mds_exception_cases(qs=(4, 8), tails: int = 10, seed: int = 42):
    """(field, alphabet, k, tail) for the characteristic-2 MDS claims."""
    cases = []
    for q in qs:
        F = make_field(2, q.bit_length() - 1)
        lo, hi = rl_dimension_range(F, "units")
        for k in sorted({3, q - 2, q - 1}):
            if lo <= k <= hi:
                for M in seeded_tails(F, "units", k, tails, seed):
                    cases.append((F, "units", k, M))
        for k in sorted({3, q - 1}):
            cases.append((F, "full", k, Matrix(F, swap_tail())))
    return cases


def check_mds_case(field, alphabet, k, tail, budget=None, direct=False) -> CaseResult:
    code = rl_code(field, alphabet, k, tail)
    report = classify(code, budget)
    res = CaseResult(field.q, alphabet, k, tail.to_text(), report)
    res.checks["mds"] = report.klass is CodeClass.MDS
    res.checks["distance"] = report.d == code.n - k + 1
    if direct:
        res.checks.update(duality_checks(code, report))
    return res


def mds_sweep(qs=(4, 8), tails: int = 10, seed: int = 42, budget=None, direct=False):
    return [check_mds_case(*case, budget=budget, direct=direct) for case in mds_exception_cases(qs, tails, seed)]


def prediction_sweep(fields=SWEEP_FIELDS, tails: int = 10, seed: int = 42, budget=None):
    """Every constructible k; compares each determined prediction with enumeration."""
    results = []
    for p, m in fields:
        F = make_field(p, m)
        for alphabet in ("units", "full"):
            lo, hi = rl_dimension_range(F, alphabet)
            for k in range(lo, hi + 1):
                tails_here = seeded_tails(F, alphabet, k, tails, seed)
                if F.p == 2 and alphabet == "full" and k in (3, F.q - 1):
                    tails_here = [Matrix(F, swap_tail())] + tails_here
                for M in tails_here:
                    code = rl_code(F, alphabet, k, M)
                    report = classify(code, budget)
                    pred = predict(F, alphabet, k, M)
                    res = CaseResult(F.q, alphabet, k, M.to_text(), report)
                    if pred.klass != "undetermined":
                        res.checks["class"] = pred.klass == str(report.klass)
                        res.checks["distance"] = pred.d == report.d
                    if pred.a_min is not None:
                        res.checks["a_min"] = pred.a_min == report.dual_distribution[k]
                    results.append(res)
    return results
