"""Construction of the weighted-homogeneous coordinate changes.

Given the generators of a leading polynomial ideal, this module builds their
complex Jacobian matrix (rows indexed by variables, columns by generators),
searches for rows of a gradient ideal (one column) expressible as polynomial
combinations of the other rows, converts each such dependence into a
coordinate substitution, and iterates with central-row / central-generator
bookkeeping until the ideal depends on as few variables as possible.

The dependence search is exact and finite: the combination coefficient in
front of a central row must be homogeneous of a known weighted degree, so
candidate coefficients live in the finite span returned by
``homogeneous_monomials`` and each search reduces to one linear solve.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateIdealError, DimensionError, WeightError
from .gaussian import GaussianRational
from .mixedpoly import MixedPolynomial, determinant, levi_from_jacobian
from .polynomial import MultiIndex, Polynomial, Substitution, solve_linear
from .weights import Weight, check_homogeneous_substitution, is_homogeneous, weighted_length

HALF = Fraction(1, 2)

# Exhaustive search stops exploring after this many states and falls back to
# the greedy answer with a warning.
EXHAUSTIVE_STATE_CAP = 50_000


class JacobianMatrix:
    """Rows are variables, columns are generators; entry (k, i) = d gen_i / d z_k."""

    __slots__ = ("nvars", "ngens", "entries")

    def __init__(self, entries: Sequence[Sequence[Polynomial]]):
        rows = tuple(tuple(row) for row in entries)
        ncols = len(rows[0]) if rows else 0
        for row in rows:
            if len(row) != ncols:
                raise DimensionError("Jacobian rows have unequal lengths")
        object.__setattr__(self, "nvars", len(rows))
        object.__setattr__(self, "ngens", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("JacobianMatrix is immutable")

    def __getitem__(self, ki: tuple[int, int]) -> Polynomial:
        k, i = ki
        return self.entries[k][i]

    def column(self, i: int) -> tuple[Polynomial, ...]:
        return tuple(self.entries[k][i] for k in range(self.nvars))

    def nonzero_rows(self) -> list[int]:
        return [
            k
            for k in range(self.nvars)
            if any(not e.is_zero() for e in self.entries[k])
        ]

    def __eq__(self, other) -> bool:
        if not isinstance(other, JacobianMatrix):
            return NotImplemented
        return self.entries == other.entries


def jacobian(gens: Sequence[Polynomial]) -> JacobianMatrix:
    if not gens:
        raise DegenerateIdealError("no generators")
    n = gens[0].nvars
    for g in gens:
        if g.nvars != n:
            raise DimensionError("generators live in different rings")
    return JacobianMatrix(
        [[g.partial_derivative(k) for g in gens] for k in range(n)]
    )


def homogeneous_monomials(
    w: Weight, target: Fraction, excluded: int | Iterable[int]
) -> list[MultiIndex]:
    """All multi-indices of weighted length exactly ``target`` avoiding the
    excluded variable(s).  Finite because every usable weight entry is positive."""
    if isinstance(excluded, int):
        excluded_set = frozenset((excluded,))
    else:
        excluded_set = frozenset(excluded)
    return list(_homogeneous_monomials_cached(w, Fraction(target), excluded_set))


_HOMOGENEOUS_CACHE: dict = {}


def _homogeneous_monomials_cached(
    w: Weight, target: Fraction, excluded: frozenset[int]
) -> tuple[MultiIndex, ...]:
    key = (w.per_variable, target, excluded)
    hit = _HOMOGENEOUS_CACHE.get(key)
    if hit is not None:
        return hit
    if target < 0:
        result: tuple[MultiIndex, ...] = ()
        _HOMOGENEOUS_CACHE[key] = result
        return result
    n = w.nvars
    usable = [i for i in range(n) if i not in excluded]
    for i in usable:
        if w[i] <= 0:
            raise WeightError("zero-weight variable in homogeneous monomial search")

    results: list[MultiIndex] = []
    mono = [0] * n

    def extend(pos: int, remaining: Fraction) -> None:
        if remaining == 0:
            results.append(tuple(mono))
            return
        if pos == len(usable):
            return
        var = usable[pos]
        limit = remaining / w[var]
        for e in range(int(limit) + 1):
            mono[var] = e
            extend(pos + 1, remaining - e * w[var])
        mono[var] = 0

    extend(0, target)
    results.sort(key=lambda m: (sum(m), tuple(reversed(m))))
    frozen = tuple(results)
    _HOMOGENEOUS_CACHE[key] = frozen
    return frozen


@dataclass(frozen=True)
class DependenceWitness:
    """A certified identity d g_col / d z_row = sum_c gamma_c * d g_col / d z_c.

    ``coefficients`` maps each central row c to its nonzero gamma_c, which is
    homogeneous of weighted degree weight(c) - weight(row) and avoids every
    central variable of the witness.
    """

    row: int
    column: int
    coefficients: tuple[tuple[int, Polynomial], ...]

    def centrals(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.coefficients)

    def gamma(self, c: int) -> Polynomial:
        for central, poly in self.coefficients:
            if central == c:
                return poly
        raise KeyError(c)


@dataclass(frozen=True)
class EliminationPlan:
    """The committed moves of one elimination, with the consumed centrals."""

    steps: tuple[tuple[DependenceWitness, Substitution], ...]
    used_central_rows: frozenset[int]
    used_central_generators: frozenset[tuple[int, int]]

    def total_substitution(self) -> Substitution:
        total = Substitution.identity()
        for _, sub in self.steps:
            total = total.then(sub)
        return total


@dataclass
class CentralUse:
    """Single-use bookkeeping for central rows and central generators.

    A row used as central is bound to the gradient ideal (column) where it was
    first used and may never serve as a central in a different column; the
    (row, column) pair itself is consumed outright.
    """

    row_column: dict[int, int] = field(default_factory=dict)
    consumed: set[tuple[int, int]] = field(default_factory=set)

    def allows(self, c: int, column: int) -> bool:
        if (c, column) in self.consumed:
            return False
        bound = self.row_column.get(c)
        return bound is None or bound == column

    def mark(self, witness: DependenceWitness) -> None:
        for c in witness.centrals():
            self.row_column[c] = witness.column
            self.consumed.add((c, witness.column))

    def copy(self) -> "CentralUse":
        return CentralUse(dict(self.row_column), set(self.consumed))

    def freeze(self):
        return (
            frozenset(self.row_column.items()),
            frozenset(self.consumed),
        )


def _prune_ansatz(
    lhs: Polynomial,
    columns: Sequence[tuple[int, Polynomial, Sequence[MultiIndex]]],
) -> list[tuple[int, Polynomial, list[MultiIndex]]]:
    """Keep only ansatz monomials whose products can reach the equation support.

    A candidate monomial is admissible when shifting some entry monomial by it
    lands in the reachable support, which starts from the left-hand side and
    grows with each admission.  Unknowns outside the closure can only cancel
    among themselves, so zeroing them never loses a solution.
    """
    reachable: set[MultiIndex] = set(lhs.terms)
    entry_supports = {c: list(entry.terms) for c, entry, _ in columns}
    pending: list[tuple[int, MultiIndex]] = [
        (c, m) for c, _, monos in columns for m in monos
    ]
    admissible: dict[int, set[MultiIndex]] = {c: set() for c, _, _ in columns}
    changed = True
    while changed and pending:
        changed = False
        still = []
        for c, m in pending:
            shifts = [
                tuple(x + y for x, y in zip(m, e)) for e in entry_supports[c]
            ]
            if any(s in reachable for s in shifts):
                admissible[c].add(m)
                reachable.update(shifts)
                changed = True
            else:
                still.append((c, m))
        pending = still
    return [
        (c, entry, sorted(admissible[c])) for c, entry, _ in columns
    ]


def _solve_ansatz(
    lhs: Polynomial,
    columns: Sequence[tuple[int, Polynomial, Sequence[MultiIndex]]],
    nvars: int,
) -> dict[int, Polynomial] | None:
    """Solve lhs = sum_c gamma_c * entry_c with gamma_c in the given monomial span."""
    columns = _prune_ansatz(lhs, columns)
    if any(not monos for _, _, monos in columns):
        # a forced-zero gamma would duplicate a smaller central set
        return None
    unknowns: list[tuple[int, MultiIndex]] = []
    products: list[Polynomial] = []
    for c, entry, monos in columns:
        for m in monos:
            unknowns.append((c, m))
            products.append(Polynomial.monomial(nvars, m) * entry)
    support: set[MultiIndex] = set(lhs.terms)
    for p in products:
        support.update(p.terms)
    rows = sorted(support)
    matrix = [
        [p.terms.get(m, GaussianRational(0)) for p in products] for m in rows
    ]
    rhs = [lhs.terms.get(m, GaussianRational(0)) for m in rows]
    solution = solve_linear(matrix, rhs)
    if solution is None:
        return None
    gammas: dict[int, dict[MultiIndex, GaussianRational]] = {}
    for (c, m), value in zip(unknowns, solution):
        if not value.is_zero():
            gammas.setdefault(c, {})[m] = value
    return {c: Polynomial(nvars, terms) for c, terms in gammas.items()}


def _central_candidates(
    J: JacobianMatrix, column: int, w: Weight, use: CentralUse, k: int
) -> list[int]:
    out = [
        c
        for c in range(J.nvars)
        if c != k
        and w[c] >= w[k]
        and not J[c, column].is_zero()
        and use.allows(c, column)
    ]
    out.sort(key=lambda c: (w[c], -c))
    return out


def _witnesses_for_row(
    J: JacobianMatrix,
    column: int,
    w: Weight,
    use: CentralUse,
    k: int,
    first_only: bool,
) -> list[DependenceWitness]:
    """Witnesses for eliminating row k from the given column, smallest central
    sets first; supersets of an already-solvable set are skipped."""
    lhs = J[k, column]
    if lhs.is_zero():
        return []
    candidates = _central_candidates(J, column, w, use, k)
    found: list[DependenceWitness] = []
    solvable_sets: list[frozenset[int]] = []
    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            sset = frozenset(subset)
            if any(prev <= sset for prev in solvable_sets):
                continue
            spans = []
            feasible = True
            for c in subset:
                monos = homogeneous_monomials(w, w[c] - w[k], sset)
                if not monos:
                    feasible = False
                    break
                spans.append((c, J[c, column], monos))
            if not feasible:
                continue
            gammas = _solve_ansatz(lhs, spans, J.entries[0][0].nvars)
            if gammas is None:
                continue
            # A zero gamma would contradict minimality of the subset order.
            witness = DependenceWitness(
                row=k,
                column=column,
                coefficients=tuple(sorted(gammas.items())),
            )
            solvable_sets.append(sset)
            found.append(witness)
            if first_only:
                return found
    return found


def find_dependent_row(
    J: JacobianMatrix,
    column: int,
    w: Weight,
    use: CentralUse,
    candidate_k: int,
) -> DependenceWitness | None:
    """First dependence witness for row ``candidate_k`` in one gradient ideal,
    or None when the ansatz is inconsistent for every allowed central set."""
    hits = _witnesses_for_row(J, column, w, use, candidate_k, first_only=True)
    return hits[0] if hits else None


def find_module_dependent_row(
    J: JacobianMatrix, w: Weight, k: int
) -> DependenceWitness | None:
    """A dependence of row k holding across every column simultaneously, with
    shared coefficients; used for consistency checks against the determinant
    criterion."""
    n = J.nvars
    lhs_cols = [J[k, i] for i in range(J.ngens)]
    if all(p.is_zero() for p in lhs_cols):
        return None
    candidates = [c for c in range(n) if c != k and w[c] >= w[k]]
    candidates.sort(key=lambda c: (w[c], -c))
    for size in range(1, len(candidates) + 1):
        for subset in combinations(candidates, size):
            sset = frozenset(subset)
            spans: list[tuple[int, list[MultiIndex]]] = []
            feasible = True
            for c in subset:
                monos = homogeneous_monomials(w, w[c] - w[k], sset)
                if not monos:
                    feasible = False
                    break
                spans.append((c, monos))
            if not feasible:
                continue
            # Stack the ansatz over all columns with shared unknowns.
            nvars = J.entries[0][0].nvars
            unknowns: list[tuple[int, MultiIndex]] = []
            for c, monos in spans:
                unknowns.extend((c, m) for m in monos)
            matrix_rows: list[list[GaussianRational]] = []
            rhs: list[GaussianRational] = []
            for i in range(J.ngens):
                products = [
                    Polynomial.monomial(nvars, m) * J[c, i] for c, m in unknowns
                ]
                support: set[MultiIndex] = set(J[k, i].terms)
                for p in products:
                    support.update(p.terms)
                for m in sorted(support):
                    matrix_rows.append(
                        [p.terms.get(m, GaussianRational(0)) for p in products]
                    )
                    rhs.append(J[k, i].terms.get(m, GaussianRational(0)))
            solution = solve_linear(matrix_rows, rhs)
            if solution is None:
                continue
            gammas: dict[int, dict[MultiIndex, GaussianRational]] = {}
            for (c, m), value in zip(unknowns, solution):
                if not value.is_zero():
                    gammas.setdefault(c, {})[m] = value
            return DependenceWitness(
                row=k,
                column=-1,
                coefficients=tuple(
                    sorted(
                        (c, Polynomial(nvars, t)) for c, t in gammas.items()
                    )
                ),
            )
    return None


def witness_to_substitution(witness: DependenceWitness) -> Substitution:
    """One step per central row: the target is the central variable and the
    shift is the antiderivative of gamma in the eliminated variable."""
    steps = [
        (c, gamma.antiderivative(witness.row))
        for c, gamma in witness.coefficients
    ]
    return Substitution(steps)


# -- the driver-facing elimination ------------------------------------------------


def _row_order(w: Weight) -> list[int]:
    return sorted(range(w.nvars), key=lambda k: (w[k], -k))


def _occupied(gens: Sequence[Polynomial]) -> frozenset[int]:
    occupied: set[int] = set()
    for g in gens:
        occupied |= g.variables()
    return frozenset(occupied)


def _enumerate_witnesses(
    gens: Sequence[Polynomial], w: Weight, use: CentralUse, first_only: bool
) -> list[DependenceWitness]:
    J = jacobian(gens)
    order = _row_order(w)
    out: list[DependenceWitness] = []
    for column in range(len(gens)):
        for k in order:
            hits = _witnesses_for_row(J, column, w, use, k, first_only)
            out.extend(hits)
            if out and first_only:
                return out
    return out


def enumerate_witnesses(
    gens: Sequence[Polynomial], w: Weight
) -> list[DependenceWitness]:
    """All minimal-central-set dependence witnesses available on fresh bookkeeping."""
    return _enumerate_witnesses(gens, w, CentralUse(), first_only=False)


def restricted_levi_determinant(
    gens: Sequence[Polynomial], w: Weight
) -> tuple[MixedPolynomial, list[int]]:
    """Determinant of the nonzero-row restriction of J * J^*."""
    J = jacobian(gens)
    nz = J.nonzero_rows()
    if not nz:
        raise DegenerateIdealError("all Jacobian rows vanish")
    restricted = [[J[k, i] for i in range(J.ngens)] for k in nz]
    return determinant(levi_from_jacobian(restricted)), nz


def _apply(gens: tuple[Polynomial, ...], sub: Substitution) -> tuple[Polynomial, ...]:
    return tuple(g.substitute(sub) for g in gens)


def _greedy_pass(
    gens: tuple[Polynomial, ...], w: Weight
) -> list[tuple[DependenceWitness, tuple[Polynomial, ...]]]:
    """Run the scan-apply loop to a fixpoint, recording each applied witness."""
    use = CentralUse()
    history: list[tuple[DependenceWitness, tuple[Polynomial, ...]]] = []
    current = gens
    while True:
        hits = _enumerate_witnesses(current, w, use, first_only=True)
        if not hits:
            return history
        witness = hits[0]
        sub = witness_to_substitution(witness)
        current = _apply(current, sub)
        use.mark(witness)
        history.append((witness, current))


def _commit_greedy(
    gens: tuple[Polynomial, ...], w: Weight
) -> tuple[tuple[Polynomial, ...], list[DependenceWitness]]:
    """Greedy elimination, keeping only the prefix of moves up to the earliest
    attainment of the smallest occupied-variable count.  Sequences that never
    shrink the occupied set are dropped entirely, then the scan restarts on the
    committed state until it stops progressing."""
    committed: list[DependenceWitness] = []
    current = gens
    while True:
        history = _greedy_pass(current, w)
        counts = [len(_occupied(current))] + [
            len(_occupied(state)) for _, state in history
        ]
        best = min(counts)
        cut = counts.index(best)
        if cut == 0:
            return current, committed
        committed.extend(witness for witness, _ in history[:cut])
        current = history[cut - 1][1]


def _exhaustive_search(
    gens: tuple[Polynomial, ...], w: Weight
) -> tuple[tuple[Polynomial, ...], list[DependenceWitness]] | None:
    """Depth-first search over witness sequences, maximizing the number of
    eliminated variables; ties prefer fewer moves, then discovery order.
    Returns None when the state cap is hit."""
    best: dict = {
        "occupied": len(_occupied(gens)),
        "moves": [],
        "state": gens,
    }
    visited: set = set()
    budget = [EXHAUSTIVE_STATE_CAP]

    def consider(state, moves):
        count = len(_occupied(state))
        if count < best["occupied"] or (
            count == best["occupied"] and len(moves) < len(best["moves"])
        ):
            best["occupied"] = count
            best["moves"] = list(moves)
            best["state"] = state

    def dfs(state, use, moves):
        if budget[0] <= 0:
            return
        budget[0] -= 1
        key = (state, use.freeze())
        if key in visited:
            return
        visited.add(key)
        consider(state, moves)
        for witness in _enumerate_witnesses(state, w, use, first_only=False):
            sub = witness_to_substitution(witness)
            child = _apply(state, sub)
            child_use = use.copy()
            child_use.mark(witness)
            moves.append(witness)
            dfs(child, child_use, moves)
            moves.pop()

    dfs(gens, CentralUse(), [])
    if budget[0] <= 0:
        return None
    return best["state"], best["moves"]


def eliminate_all(
    leading_gens: Sequence[Polynomial],
    w: Weight,
    strategy: str = "greedy",
    _skip_fast_path: bool = False,
) -> tuple[tuple[Polynomial, ...], Substitution, int]:
    """Make the leading ideal independent of as many variables as possible.

    Returns the transformed generators, the total substitution applied, and
    d = the number of variables absent from every resulting generator.
    """
    gens = tuple(leading_gens)
    if not gens:
        raise DegenerateIdealError("empty leading ideal")
    n = w.nvars
    for g in gens:
        if g.is_zero():
            raise DegenerateIdealError("zero generator in leading ideal")
        if not is_homogeneous(g, w, HALF):
            raise WeightError(
                "leading generators must be homogeneous of weighted degree 1/2"
            )

    if not _skip_fast_path:
        det, _ = restricted_levi_determinant(gens, w)
        if not det.is_zero():
            return gens, Substitution.identity(), n - len(_occupied(gens))

    new_gens, moves = _commit_greedy(gens, w)
    if strategy == "exhaustive":
        if n > 6:
            warnings.warn("exhaustive strategy limited to 6 variables; using greedy")
        else:
            searched = _exhaustive_search(gens, w)
            if searched is None:
                warnings.warn("exhaustive search hit its state cap; using greedy")
            else:
                ex_gens, ex_moves = searched
                if len(_occupied(ex_gens)) < len(_occupied(new_gens)):
                    warnings.warn(
                        "greedy elimination was suboptimal; exhaustive search "
                        f"eliminated {len(_occupied(new_gens)) - len(_occupied(ex_gens))} "
                        "more variable(s)"
                    )
                    new_gens, moves = ex_gens, ex_moves
    elif strategy != "greedy":
        raise ValueError(f"unknown strategy {strategy!r}")

    total = Substitution.identity()
    for witness in moves:
        total = total.then(witness_to_substitution(witness))
    if not check_homogeneous_substitution(total, w):
        raise WeightError("emitted substitution is not weighted homogeneous")
    return new_gens, total, n - len(_occupied(new_gens))
