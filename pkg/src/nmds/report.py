"""Machine-readable code reports with a canonical, exact JSON encoding."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .code import SingletonReport
from .formulas import Prediction
from .gf import Field

# integers beyond this are not exactly representable as IEEE doubles
JSON_SAFE_MAX = 2**53


def exact_json_value(x):
    """Replace large integers by decimal strings, recursively."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > JSON_SAFE_MAX else x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in reports")
    if isinstance(x, dict):
        return {str(k): exact_json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [exact_json_value(v) for v in x]
    raise TypeError(f"cannot encode {type(x).__name__}")


def canonical_json(obj) -> str:
    return json.dumps(exact_json_value(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def canonical_roundtrip(text: str) -> str:
    return canonical_json(json.loads(text))


@dataclass
class CodeReport:
    q: int
    p: int
    m: int
    n: int
    k: int
    d: int
    d_dual: int
    defect: int
    defect_dual: int
    klass: str
    weight_distribution: list[int]
    dual_distribution: list[int]
    prediction: dict | None = None
    prediction_matches: bool | None = None
    timing_ms: int = 0

    def as_dict(self) -> dict:
        out = {
            "q": self.q,
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_dual": self.d_dual,
            "defect": self.defect,
            "defect_dual": self.defect_dual,
            "klass": self.klass,
            "weight_distribution": list(self.weight_distribution),
            "dual_distribution": list(self.dual_distribution),
            "timing_ms": int(self.timing_ms),
        }
        if self.prediction is not None:
            out["prediction"] = self.prediction
            out["prediction_matches"] = self.prediction_matches
        return out

    def to_json(self) -> str:
        return canonical_json(self.as_dict())

    def to_text(self) -> str:
        lines = [
            f"GF({self.q}) = GF({self.p}^{self.m})",
            f"parameters   [{self.n}, {self.k}, {self.d}]  class {self.klass}",
            f"defects      S(C) = {self.defect}, S(C^perp) = {self.defect_dual}, d_dual = {self.d_dual}",
            "enumerator   " + _enumerator(self.weight_distribution),
            "dual         " + _enumerator(self.dual_distribution),
        ]
        if self.prediction is not None:
            p = self.prediction
            lines.append(
                f"prediction   {p['klass']} d={p['d']} a_min={p['a_min']} ({p['source']})"
                f"  matches={self.prediction_matches}"
            )
        lines.append(f"time         {self.timing_ms} ms")
        return "\n".join(lines)


def _enumerator(counts) -> str:
    return " + ".join(str(c) if i == 0 else f"{c}z^{i}" for i, c in enumerate(counts) if c)


def prediction_agrees(pred: Prediction, report: SingletonReport) -> bool | None:
    """None when the prediction makes no claim; otherwise whether every claim holds."""
    if pred.klass == "undetermined":
        return None
    if pred.klass != str(report.klass) or pred.d != report.d:
        return False
    if pred.a_min is not None:
        return pred.a_min == report.weight_distribution[report.n - report.k]
    return True


def build_report(
    field: Field, report: SingletonReport, pred: Prediction | None, timing_ms: int
) -> CodeReport:
    out = CodeReport(
        q=field.q,
        p=field.p,
        m=field.m,
        n=report.n,
        k=report.k,
        d=report.d,
        d_dual=report.d_dual,
        defect=report.defect,
        defect_dual=report.defect_dual,
        klass=str(report.klass),
        weight_distribution=list(report.weight_distribution),
        dual_distribution=list(report.dual_distribution),
        timing_ms=int(timing_ms),
    )
    if pred is not None:
        out.prediction = pred.as_dict()
        out.prediction_matches = prediction_agrees(pred, report)
    return out
