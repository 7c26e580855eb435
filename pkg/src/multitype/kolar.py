"""The multitype computation on ideals of holomorphic polynomial generators.

The driver starts from the Bloom-Graham type (twice the vanishing order of the
ideal), repeatedly extracts the leading ideal (generator terms of weighted
degree exactly 1/2), makes it depend on as few variables as possible via row
reduction, and advances the weight of the remaining variables using the
largest residual quotient until the leading ideal touches every variable.
The reciprocals of the final weight, sorted, are the multitype.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    ConstantTermError,
    DegenerateIdealError,
    InfiniteTypeError,
    NonTerminationError,
    WeightError,
)
from .polynomial import MultiIndex, Polynomial, Substitution, vanishing_order
from .rowreduce import HALF, eliminate_all
from .weights import (
    Multitype,
    Weight,
    is_homogeneous,
    lex_compare,
    multitype_of,
    validate_weight,
    weighted_length,
)


@dataclass(frozen=True)
class RunConfig:
    """Knobs shared by the ideal driver and the differential oracle."""

    truncation_order: int | None = None
    max_steps: int = 64
    strategy: str = "greedy"
    cross_check: bool = False
    output_format: str = "text"

    def __post_init__(self):
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")
        if self.truncation_order is not None and self.truncation_order < 1:
            raise ValueError("truncation order must be at least 1")


@dataclass(frozen=True)
class StepTrace:
    """Everything recorded about one step of the computation."""

    step: int
    weight: Weight
    leading_ideal: tuple[Polynomial, ...]
    substitution: Substitution
    d: int
    theta_size: int
    w_max: Fraction | None


@dataclass
class KolarState:
    """Evolving driver state; exposed mainly for inspection and debugging."""

    generators: tuple[Polynomial, ...]
    weight: Weight
    leading_vars: frozenset[int] = frozenset()
    finalized_vars: frozenset[int] = frozenset()
    step: int = 0
    accumulated_substitution: Substitution = field(default_factory=Substitution)


@dataclass(frozen=True)
class MultitypeReport:
    multitype: Multitype
    final_weight: Weight
    model_ideal: tuple[Polynomial, ...]
    traces: tuple[StepTrace, ...]
    total_substitution: Substitution


def bloom_graham(gens: Sequence[Polynomial]) -> tuple[int, Weight]:
    """Twice the vanishing order, and the constant initial weight (1/type, ...)."""
    order = vanishing_order(gens)
    bg_type = 2 * order
    n = gens[0].nvars
    return bg_type, Weight.constant(n, Fraction(1, bg_type))


def leading_ideal(gens: Sequence[Polynomial], w: Weight) -> list[Polynomial]:
    """Per generator, the sub-polynomial of monomials of weighted length 1/2;
    generators whose leading part vanishes are dropped."""
    out = []
    for g in gens:
        part = Polynomial(
            g.nvars,
            {m: c for m, c in g.terms.items() if weighted_length(m, w) == HALF},
        )
        if not part.is_zero():
            out.append(part)
    return out


def w_value_ideal(
    mono: MultiIndex, leading_vars: frozenset[int] | set[int], w: Weight
) -> Fraction | None:
    """The ideal-level residual quotient; None when it cannot be computed."""
    prefix = Fraction(0)
    tail = 0
    for i, e in enumerate(mono):
        if i in leading_vars:
            prefix += e * w[i]
        else:
            tail += e
    numerator = HALF - prefix
    if numerator <= 0 or tail == 0:
        return None
    return numerator / tail


def theta_and_wmax(
    gens: Sequence[Polynomial],
    leading_vars: frozenset[int] | set[int],
    w: Weight,
) -> tuple[list[MultiIndex], Fraction | None]:
    """Admissible residual monomials and the maximum of their quotients.

    A generator monomial participates when it is not a leading term (weighted
    length 1/2) and its weighted length restricted to the leading variables is
    below 1/2.  Duplicated multi-indices across generators count once.
    """
    theta: set[MultiIndex] = set()
    for g in gens:
        for mono in g.terms:
            length = weighted_length(mono, w)
            if length == HALF:
                continue
            if length < HALF:
                raise WeightError(
                    f"monomial {mono} has weighted length below 1/2; "
                    "generators are not adapted to the weight"
                )
            if w_value_ideal(mono, leading_vars, w) is not None:
                theta.add(mono)
    ordered = sorted(theta)
    if not ordered:
        return [], None
    return ordered, max(w_value_ideal(m, leading_vars, w) for m in ordered)


def advance_weight(
    w: Weight, leading_vars: frozenset[int] | set[int], w_max: Fraction
) -> Weight:
    """Keep the weights of the leading variables, set all others to w_max."""
    if len(leading_vars) == w.nvars:
        return w
    if w_max <= 0:
        raise WeightError(f"weight advancement requires a positive value, got {w_max}")
    for i in range(w.nvars):
        if i not in leading_vars and w_max >= w[i]:
            raise WeightError(
                f"advanced weight {w_max} does not decrease entry {w[i]} "
                f"of variable {i}"
            )
    return Weight(
        w[i] if i in leading_vars else w_max for i in range(w.nvars)
    )


def _prepare_generators(
    gens: Sequence[Polynomial], config: RunConfig
) -> tuple[Polynomial, ...]:
    if not gens:
        raise DegenerateIdealError("no generators")
    prepared = []
    for g in gens:
        if not g.vanishes_at_origin():
            raise ConstantTermError("generator has a nonzero constant term")
        if config.truncation_order is not None:
            g = g.truncate(config.truncation_order)
        if not g.is_zero():
            prepared.append(g)
    if not prepared:
        raise DegenerateIdealError("all generators are zero")
    return tuple(prepared)


def run(gens: Sequence[Polynomial], config: RunConfig | None = None) -> MultitypeReport:
    """End-to-end multitype computation on the ideal of generators."""
    config = config or RunConfig()
    generators = _prepare_generators(gens, config)
    _, weight = bloom_graham(generators)
    state = KolarState(generators=generators, weight=weight)
    traces: list[StepTrace] = []

    for step in range(1, config.max_steps + 1):
        lead = leading_ideal(state.generators, state.weight)
        new_lead, substitution, d = eliminate_all(
            lead, state.weight, strategy=config.strategy
        )
        generators = tuple(g.substitute(substitution) for g in state.generators)
        if leading_ideal(generators, state.weight) != list(new_lead):
            raise WeightError(
                "substituted leading ideal disagrees with the eliminated one"
            )
        for g in new_lead:
            if not is_homogeneous(g, state.weight, HALF):
                raise WeightError("leading generator not homogeneous of degree 1/2")

        leading_vars = frozenset().union(*(g.variables() for g in new_lead))
        theta, w_max = theta_and_wmax(generators, leading_vars, state.weight)
        traces.append(
            StepTrace(
                step=step,
                weight=state.weight,
                leading_ideal=new_lead,
                substitution=substitution,
                d=d,
                theta_size=len(theta),
                w_max=w_max,
            )
        )
        state.generators = generators
        state.leading_vars = leading_vars
        state.finalized_vars = leading_vars
        state.step = step
        state.accumulated_substitution = state.accumulated_substitution.then(
            substitution
        )

        if d == 0:
            break
        if w_max is None:
            raise InfiniteTypeError(
                "no residual monomial can determine the next weight; "
                "the multitype has an infinite entry"
            )
        next_weight = advance_weight(state.weight, leading_vars, w_max)
        ok, reason = validate_weight(next_weight)
        if not ok:
            raise WeightError(f"advanced weight fails validation: {reason}")
        if lex_compare(state.weight, next_weight) != 1:
            raise WeightError("weights did not strictly decrease")
        state.weight = next_weight
    else:
        raise NonTerminationError(
            f"no termination within {config.max_steps} steps"
        )

    return MultitypeReport(
        multitype=multitype_of(state.weight),
        final_weight=state.weight,
        model_ideal=traces[-1].leading_ideal,
        traces=tuple(traces),
        total_substitution=state.accumulated_substitution,
    )
