"""Worked examples with published parameters and enumerators, checked by enumeration."""

from __future__ import annotations

from dataclasses import dataclass

from .code import CodeClass, classify
from .formulas import predict
from .gf import make_field
from .grl import rl_code
from .matrix import parse_matrix


@dataclass(frozen=True)
class GoldenCase:
    name: str
    p: int
    m: int
    alphabet: str
    k: int
    tails: tuple[str, ...]
    klass: CodeClass
    params: tuple[int, int, int]
    enumerator: dict[int, int] | None = None


GOLDEN_CASES: tuple[GoldenCase, ...] = (
    GoldenCase(
        "gf9-units-k5", 3, 2, "units", 5, ("1,1;2,1",), CodeClass.NMDS, (10, 5, 5),
        {0: 1, 5: 128, 6: 1040, 7: 4160, 8: 12760, 9: 22800, 10: 18160},
    ),
    GoldenCase(
        "gf9-full-k4", 3, 2, "full", 4, ("1,1;2,1",), CodeClass.NMDS, (11, 4, 7),
        {0: 1, 7: 144, 8: 744, 9: 1304, 10: 2592, 11: 1776},
    ),
    GoldenCase(
        "gf9-full-k6", 3, 2, "full", 6, ("1,1;2,1",), CodeClass.NMDS, (11, 6, 5),
        {0: 1, 5: 224, 6: 2352, 7: 11280, 8: 47000, 9: 125240, 10: 199824, 11: 145520},
    ),
    GoldenCase("gf8-full-k3-swap", 2, 3, "full", 3, ("0,1;1,0",), CodeClass.MDS, (10, 3, 8)),
    GoldenCase("gf8-full-k3-mds", 2, 3, "full", 3, ("0,w^2;w,0",), CodeClass.MDS, (10, 3, 8)),
    GoldenCase("gf8-full-k3-nmds", 2, 3, "full", 3, ("0,w^2+1;1,w",), CodeClass.NMDS, (10, 3, 7)),
    GoldenCase(
        "gf8-full-k7-mds", 2, 3, "full", 7, ("0,1;1,0", "0,w^2;w,0"), CodeClass.MDS, (10, 7, 4)
    ),
    GoldenCase("gf8-full-k7-nmds", 2, 3, "full", 7, ("0,w^2;w,w",), CodeClass.NMDS, (10, 7, 3)),
)


@dataclass
class GoldenResult:
    case: GoldenCase
    tail: str
    klass: str
    params: tuple[int, int, int]
    distribution: dict[int, int]
    predicted: str
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def run_case(case: GoldenCase, budget=None, workers: int = 1) -> list[GoldenResult]:
    F = make_field(case.p, case.m)
    out = []
    for text in case.tails:
        M = parse_matrix(F, text)
        code = rl_code(F, case.alphabet, case.k, M)
        report = classify(code, budget, workers)
        pred = predict(F, case.alphabet, case.k, M)
        checks = {
            "class": report.klass is case.klass,
            "params": report.params == case.params,
        }
        if case.enumerator is not None:
            checks["enumerator"] = report.weight_distribution.support() == case.enumerator
        if pred.klass != "undetermined":
            # a determined prediction must agree with the published outcome
            checks["prediction"] = pred.klass == str(case.klass) and pred.d == case.params[2]
        out.append(
            GoldenResult(
                case, text, str(report.klass), report.params,
                report.weight_distribution.support(), pred.klass, checks,
            )
        )
    return out


def verify_all(budget=None, workers: int = 1) -> list[tuple[GoldenCase, list[GoldenResult]]]:
    return [(case, run_case(case, budget, workers)) for case in GOLDEN_CASES]
