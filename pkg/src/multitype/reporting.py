"""Report emission in text and JSON.

All numbers are exact: rationals appear as {"num": ..., "den": ...} objects in
JSON (values as strings, so arbitrary precision survives any consumer) and as
p/q literals in text.  Polynomial strings round-trip through the input grammar.
Leading-ideal generators are emitted with leading coefficient 1, so fixtures
compare up to nonzero scalar multiples.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .kolar import MultitypeReport, StepTrace
from .polynomial import Polynomial, Substitution
from .weights import Weight


def _fraction_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _weight_json(w: Weight) -> dict:
    return {
        "per_variable": [_fraction_json(v) for v in w.per_variable],
        "sorted": [_fraction_json(v) for v in w.sorted_view()],
    }


def _substitution_json(s: Substitution, names: Sequence[str] | None) -> list[dict]:
    resolved = list(names) if names else None
    out = []
    for var, shift in s.steps:
        label = resolved[var] if resolved else f"z{var + 1}"
        out.append({"variable": label, "shift": shift.to_string(resolved)})
    return out


def _step_json(trace: StepTrace, names: Sequence[str] | None) -> dict:
    return {
        "step": trace.step,
        "weight": _weight_json(trace.weight),
        "leading_ideal": [g.monic().to_string(names) for g in trace.leading_ideal],
        "substitution": _substitution_json(trace.substitution, names),
        "d": trace.d,
        "w_max": _fraction_json(trace.w_max) if trace.w_max is not None else None,
    }


def report_to_json(
    report: MultitypeReport, names: Sequence[str] | None = None
) -> dict:
    return {
        "multitype": [_fraction_json(m) for m in report.multitype],
        "final_weight": _weight_json(report.final_weight),
        "model_ideal": [g.monic().to_string(names) for g in report.model_ideal],
        "total_substitution": _substitution_json(report.total_substitution, names),
        "steps": [_step_json(t, names) for t in report.traces],
    }


def _tuple_str(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def report_to_text(
    report: MultitypeReport,
    names: Sequence[str] | None = None,
    trace: bool = False,
) -> str:
    resolved = list(names) if names else [
        f"z{i + 1}" for i in range(report.final_weight.nvars)
    ]
    lines = [
        f"multitype: {_tuple_str(report.multitype)}",
        f"final weight (sorted): {_tuple_str(report.final_weight.sorted_view())}",
        "final weight (per variable): "
        + ", ".join(
            f"{name}={value}"
            for name, value in zip(resolved, report.final_weight.per_variable)
        ),
        "model ideal: "
        + ", ".join(g.monic().to_string(resolved) for g in report.model_ideal),
        f"total substitution: {report.total_substitution.to_string(resolved)}",
    ]
    if trace:
        lines.append("trace:")
        for t in report.traces:
            w_max = "-" if t.w_max is None else str(t.w_max)
            lines.append(
                f"  step {t.step}: weight {_tuple_str(t.weight.sorted_view())}"
                f"  d={t.d}  wmax={w_max}  theta={t.theta_size}"
            )
            lines.append(
                "    leading ideal: "
                + ", ".join(g.monic().to_string(resolved) for g in t.leading_ideal)
            )
            lines.append(
                f"    substitution: {t.substitution.to_string(resolved)}"
            )
    return "\n".join(lines)


def emit_report(
    report: MultitypeReport,
    format: str = "text",
    names: Sequence[str] | None = None,
    trace: bool = False,
) -> str:
    if format == "json":
        return json.dumps(report_to_json(report, names), indent=2)
    if format == "text":
        return report_to_text(report, names, trace=trace)
    raise ValueError(f"unknown output format {format!r}")
