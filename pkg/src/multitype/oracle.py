"""The original real-valued multitype algorithm, used as a differential oracle.

This driver carries the full squared-modulus expansion through the computation:
leading parts, residual quotients, and variable counts all come from the mixed
polynomial in (z, conj z).  Only the coordinate changes are shared with the
ideal driver (they are constructed on the holomorphic generators), so agreement
of the two final weights is a genuine cross-check of the ideal restatement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InfiniteTypeError, NonTerminationError, WeightError
from .kolar import (
    MultitypeReport,
    RunConfig,
    StepTrace,
    _prepare_generators,
    advance_weight,
    leading_ideal,
)
from .mixedpoly import MixedPolynomial, expand_sos, leading_mixed, w_value_mixed
from .polynomial import Polynomial, Substitution
from .rowreduce import eliminate_all
from .weights import Weight, lex_compare, multitype_of, validate_weight


@dataclass(frozen=True)
class MixedStepTrace(StepTrace):
    """Step record of the oracle, carrying the mixed leading polynomial."""

    mixed_leading: MixedPolynomial = None  # type: ignore[assignment]


def initial_weight_mixed(P: MixedPolynomial) -> tuple[int, Weight]:
    """First multitype entry read off the expansion: the combined degree of its
    lowest-order term, inverted into a constant weight."""
    if P.is_zero():
        raise WeightError("zero defining expansion")
    bg_type = min(sum(holo) + sum(anti) for holo, anti in P.terms)
    return bg_type, Weight.constant(P.nvars, Fraction(1, bg_type))


def mixed_theta_and_wmax(
    P: MixedPolynomial,
    leading: MixedPolynomial,
    leading_vars: frozenset[int],
    w: Weight,
) -> tuple[int, Fraction | None]:
    """Count of admissible residual exponent pairs and their largest quotient.

    Mirror pairs (a, b) and (b, a) are both stored by the reality symmetry and
    both counted; their quotients coincide.
    """
    values = []
    count = 0
    for pair in P.terms:
        if pair in leading.terms:
            continue
        value = w_value_mixed(pair, leading_vars, w)
        if value is not None:
            count += 1
            values.append(value)
    return count, (max(values) if values else None)


def run_mixed_kolar(
    gens: Sequence[Polynomial], config: RunConfig | None = None
) -> MultitypeReport:
    """Multitype computation over the squared-modulus expansion."""
    config = config or RunConfig()
    generators = _prepare_generators(gens, config)
    mixed = expand_sos(generators)
    if not mixed.is_real() or mixed.has_pluriharmonic_terms():
        raise WeightError("expansion violates reality or pluriharmonic-freeness")
    _, weight = initial_weight_mixed(mixed)
    n = mixed.nvars
    traces: list[MixedStepTrace] = []
    total_substitution = Substitution.identity()

    for step in range(1, config.max_steps + 1):
        lead_gens = leading_ideal(generators, weight)
        new_lead, substitution, _ = eliminate_all(
            lead_gens, weight, strategy=config.strategy
        )
        generators = tuple(g.substitute(substitution) for g in generators)
        mixed = mixed.substitute(substitution)
        total_substitution = total_substitution.then(substitution)

        P = leading_mixed(mixed, weight)
        if P.is_zero():
            raise WeightError("mixed leading polynomial vanished")
        leading_vars = P.variables()
        d = n - len(leading_vars)
        theta_size, w_max = mixed_theta_and_wmax(mixed, P, leading_vars, weight)
        traces.append(
            MixedStepTrace(
                step=step,
                weight=weight,
                leading_ideal=new_lead,
                substitution=substitution,
                d=d,
                theta_size=theta_size,
                w_max=w_max,
                mixed_leading=P,
            )
        )
        if d == 0:
            break
        if w_max is None:
            raise InfiniteTypeError(
                "no residual term can determine the next weight; "
                "the multitype has an infinite entry"
            )
        next_weight = advance_weight(weight, leading_vars, w_max)
        ok, reason = validate_weight(next_weight)
        if not ok:
            raise WeightError(f"advanced weight fails validation: {reason}")
        if lex_compare(weight, next_weight) != 1:
            raise WeightError("weights did not strictly decrease")
        weight = next_weight
    else:
        raise NonTerminationError(f"no termination within {config.max_steps} steps")

    return MultitypeReport(
        multitype=multitype_of(weight),
        final_weight=weight,
        model_ideal=traces[-1].leading_ideal,
        traces=tuple(traces),
        total_substitution=total_substitution,
    )
