"""Weight tuples, weighted degrees, and the multitype they induce.

A weight assigns to each variable a rational in (0, 1/2].  The engine stores
weights per variable (position i carries the weight of variable i); the
nonincreasing sorted view is what gets ordered lexicographically and inverted
into the multitype.  Storing per variable avoids threading an explicit
permutation through the algorithm when eliminated variables are not the
trailing ones.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionError, InfiniteTypeError, WeightError
from .polynomial import MultiIndex, Polynomial, Substitution


class Weight:
    """Per-variable tuple of rationals in [0, 1/2]."""

    __slots__ = ("per_variable",)

    def __init__(self, per_variable: Iterable[Fraction | int]):
        entries = tuple(Fraction(v) for v in per_variable)
        for mu in entries:
            if not 0 <= mu <= Fraction(1, 2):
                raise WeightError(f"weight entry {mu} outside [0, 1/2]")
        object.__setattr__(self, "per_variable", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Weight is immutable")

    @staticmethod
    def constant(nvars: int, value: Fraction) -> "Weight":
        return Weight((value,) * nvars)

    @property
    def nvars(self) -> int:
        return len(self.per_variable)

    def sorted_view(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self.per_variable, reverse=True))

    def __getitem__(self, var: int) -> Fraction:
        return self.per_variable[var]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.per_variable == other.per_variable

    def __hash__(self) -> int:
        return hash(self.per_variable)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.per_variable) + ")"

    def __repr__(self) -> str:
        return f"Weight({self.per_variable!r})"


class Multitype:
    """Nondecreasing tuple of reciprocal weights."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Fraction]):
        object.__setattr__(self, "entries", tuple(Fraction(v) for v in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Multitype is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multitype):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.entries) + ")"

    def __repr__(self) -> str:
        return f"Multitype({self.entries!r})"


def validate_weight(w: Weight | Sequence[Fraction]) -> tuple[bool, str]:
    """Check the two defining conditions of a weight tuple.

    (1) entries lie in [0, 1/2] and are nonincreasing; a Weight is checked on
    its sorted view, while a raw sequence is taken as a sorted-view candidate
    and must be nonincreasing as presented;
    (2) for each position t with mu_t > 0 there are nonnegative integers
    a_1..a_t with a_t > 0 and sum(a_j * mu_j) == 1.  The search is finite
    because any solution has a_j <= 1/mu_t.
    """
    if isinstance(w, Weight):
        mus = w.sorted_view()
    else:
        mus = tuple(Fraction(v) for v in w)
    for mu in mus:
        if not 0 <= mu <= Fraction(1, 2):
            return False, f"entry {mu} outside [0, 1/2]"
    if any(mus[i] < mus[i + 1] for i in range(len(mus) - 1)):
        return False, "entries are not nonincreasing"
    for t in range(len(mus)):
        if mus[t] == 0:
            continue
        if not _integer_combination_reaches_one(mus[: t + 1]):
            return False, f"no integer combination of {mus[:t + 1]} reaches 1"
    return True, "ok"


def _integer_combination_reaches_one(mus: Sequence[Fraction]) -> bool:
    t = len(mus) - 1
    bound = math.floor(1 / mus[t])

    def search(pos: int, remaining: Fraction) -> bool:
        if pos == t:
            if remaining <= 0:
                return False
            q = remaining / mus[t]
            return q.denominator == 1 and 1 <= q <= bound
        limit = math.floor(remaining / mus[pos]) if mus[pos] > 0 else 0
        for a in range(min(limit, bound) + 1):
            if search(pos + 1, remaining - a * mus[pos]):
                return True
        return False

    return search(0, Fraction(1))


def lex_compare(a: Weight, b: Weight) -> int:
    """-1, 0, or 1 comparing the sorted-nonincreasing views lexicographically."""
    if a.nvars != b.nvars:
        raise DimensionError("weights have different lengths")
    va, vb = a.sorted_view(), b.sorted_view()
    if va > vb:
        return 1
    if va < vb:
        return -1
    return 0


def weighted_length(mono: MultiIndex, w: Weight) -> Fraction:
    if len(mono) != w.nvars:
        raise DimensionError("multi-index and weight lengths disagree")
    return sum((e * mu for e, mu in zip(mono, w.per_variable)), Fraction(0))


def pair_weighted_length(pair: tuple[MultiIndex, MultiIndex], w: Weight) -> Fraction:
    holo, anti = pair
    return weighted_length(holo, w) + weighted_length(anti, w)


def multitype_of(w: Weight) -> Multitype:
    for mu in w.per_variable:
        if mu == 0:
            raise InfiniteTypeError("zero weight entry gives an infinite multitype entry")
    return Multitype(1 / mu for mu in w.sorted_view())


def is_homogeneous(p: Polynomial, w: Weight, degree: Fraction) -> bool:
    """True iff every monomial of p has weighted length exactly ``degree``."""
    return all(weighted_length(m, w) == degree for m in p.terms)


def check_homogeneous_substitution(s: Substitution, w: Weight) -> bool:
    """True iff each step's shift is a sum of monomials of weighted length equal
    to the weight of the step's target variable."""
    for var, shift in s.steps:
        target = w[var]
        if not all(weighted_length(m, w) == target for m in shift.terms):
            return False
    return True
