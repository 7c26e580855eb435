"""Mixed polynomials in (z, conj z) and Hermitian matrices of them.

This is the engine behind the differential oracle: squared-modulus expansions,
leading parts with respect to a weight, the W-values that drive weight
advancement, Levi matrices with paired row/column operations, and exact
determinants.  Terms are indexed by a pair of multi-indices (holomorphic,
antiholomorphic), which turns conjugation and the reality check into index
swaps.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ClassificationError,
    ConstantTermError,
    DegenerateIdealError,
    DimensionError,
)
from .gaussian import GaussianRational
from .polynomial import MultiIndex, Polynomial, Scalar, Substitution
from .weights import Weight, pair_weighted_length

PairIndex = tuple[MultiIndex, MultiIndex]


class MixedPolynomial:
    """An immutable polynomial in z_1..z_n and their conjugates."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[PairIndex, Scalar] | None = None):
        clean: dict[PairIndex, GaussianRational] = {}
        if terms:
            for (holo, anti), coeff in terms.items():
                if len(holo) != nvars or len(anti) != nvars:
                    raise DimensionError("pair index length disagrees with nvars")
                coeff = GaussianRational.coerce(coeff)
                if not coeff.is_zero():
                    clean[(tuple(holo), tuple(anti))] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MixedPolynomial is immutable")

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "MixedPolynomial":
        return MixedPolynomial(nvars)

    @staticmethod
    def from_holomorphic(p: Polynomial) -> "MixedPolynomial":
        zero = (0,) * p.nvars
        return MixedPolynomial(p.nvars, {(m, zero): c for m, c in p.terms.items()})

    @staticmethod
    def from_antiholomorphic(p: Polynomial) -> "MixedPolynomial":
        zero = (0,) * p.nvars
        return MixedPolynomial(
            p.nvars, {(zero, m): c.conjugate() for m, c in p.terms.items()}
        )

    # -- predicates ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_real(self) -> bool:
        """Reality: the coefficient at (a, b) is the conjugate of the one at (b, a)."""
        for (holo, anti), coeff in self.terms.items():
            mirror = self.terms.get((anti, holo))
            if mirror is None or mirror != coeff.conjugate():
                return False
        return True

    def has_pluriharmonic_terms(self) -> bool:
        """True if a term is purely holomorphic or purely antiholomorphic."""
        return any(
            (not any(holo)) or (not any(anti)) for holo, anti in self.terms
        )

    def variables(self) -> frozenset[int]:
        occupied = set()
        for holo, anti in self.terms:
            for i in range(self.nvars):
                if holo[i] or anti[i]:
                    occupied.add(i)
        return frozenset(occupied)

    # -- arithmetic --------------------------------------------------------------

    def _check(self, other: "MixedPolynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError("mixed operands live in different rings")

    def __add__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        self._check(other)
        out = dict(self.terms)
        for pair, coeff in other.terms.items():
            new = out.get(pair, GaussianRational(0)) + coeff
            if new.is_zero():
                out.pop(pair, None)
            else:
                out[pair] = new
        return MixedPolynomial(self.nvars, out)

    def __sub__(self, other: "MixedPolynomial") -> "MixedPolynomial":
        return self + (-other)

    def __neg__(self) -> "MixedPolynomial":
        return MixedPolynomial(self.nvars, {p: -c for p, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._check(other)
        out: dict[PairIndex, GaussianRational] = {}
        for (ha, aa), ca in self.terms.items():
            for (hb, ab), cb in other.terms.items():
                pair = (
                    tuple(x + y for x, y in zip(ha, hb)),
                    tuple(x + y for x, y in zip(aa, ab)),
                )
                new = out.get(pair, GaussianRational(0)) + ca * cb
                if new.is_zero():
                    out.pop(pair, None)
                else:
                    out[pair] = new
        return MixedPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, coeff: Scalar) -> "MixedPolynomial":
        coeff = GaussianRational.coerce(coeff)
        if coeff.is_zero():
            return MixedPolynomial.zero(self.nvars)
        return MixedPolynomial(
            self.nvars, {p: c * coeff for p, c in self.terms.items()}
        )

    def conjugate(self) -> "MixedPolynomial":
        return MixedPolynomial(
            self.nvars,
            {(anti, holo): c.conjugate() for (holo, anti), c in self.terms.items()},
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus -------------------------------------------------------------

    def derivative_z(self, var: int) -> "MixedPolynomial":
        out: dict[PairIndex, GaussianRational] = {}
        for (holo, anti), coeff in self.terms.items():
            e = holo[var]
            if e == 0:
                continue
            lowered = list(holo)
            lowered[var] = e - 1
            out[(tuple(lowered), anti)] = coeff * e
        return MixedPolynomial(self.nvars, out)

    def derivative_zbar(self, var: int) -> "MixedPolynomial":
        out: dict[PairIndex, GaussianRational] = {}
        for (holo, anti), coeff in self.terms.items():
            e = anti[var]
            if e == 0:
                continue
            lowered = list(anti)
            lowered[var] = e - 1
            out[(holo, tuple(lowered))] = coeff * e
        return MixedPolynomial(self.nvars, out)

    # -- substitution -----------------------------------------------------------

    def substitute(self, substitution: Substitution) -> "MixedPolynomial":
        """Rewrite in new coordinates: step (i, h) replaces z_i by z_i - h and
        conj z_i by conj z_i - conj h, sequentially."""
        result = self
        for var, shift in substitution.steps:
            result = result._substitute_step(var, shift)
        return result

    def _substitute_step(self, var: int, shift: Polynomial) -> "MixedPolynomial":
        n = self.nvars
        z_rep = MixedPolynomial.from_holomorphic(
            Polynomial.variable(n, var) - shift
        )
        zbar_rep = MixedPolynomial.from_antiholomorphic(
            Polynomial.variable(n, var) - shift
        )
        z_pows: dict[int, MixedPolynomial] = {0: _mixed_one(n)}
        zbar_pows: dict[int, MixedPolynomial] = {0: _mixed_one(n)}

        def power(cache, base, e):
            if e not in cache:
                cache[e] = power(cache, base, e - 1) * base
            return cache[e]

        out = MixedPolynomial.zero(n)
        for (holo, anti), coeff in self.terms.items():
            rest_h = list(holo)
            rest_a = list(anti)
            eh, ea = rest_h[var], rest_a[var]
            rest_h[var] = rest_a[var] = 0
            term = MixedPolynomial(n, {(tuple(rest_h), tuple(rest_a)): coeff})
            if eh:
                term = term * power(z_pows, z_rep, eh)
            if ea:
                term = term * power(zbar_pows, zbar_rep, ea)
            out = out + term
        return out

    # -- display --------------------------------------------------------------

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"z{i + 1}" for i in range(self.nvars)]

        def key(pair: PairIndex):
            holo, anti = pair
            deg = sum(holo) + sum(anti)
            return (deg, tuple(reversed(holo)), tuple(reversed(anti)))

        pieces = []
        for holo, anti in sorted(self.terms, key=key):
            coeff = self.terms[(holo, anti)]
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(holo)
                if e
            ]
            factors += [
                f"~{names[i]}" if e == 1 else f"~{names[i]}^{e}"
                for i, e in enumerate(anti)
                if e
            ]
            body = "*".join(factors)
            prefix = "" if coeff == 1 and body else str(coeff)
            if prefix == "-1" and body:
                prefix = "-"
            if "+" in prefix or (prefix.count("-") and not prefix.startswith("-")):
                prefix = f"({prefix})"
            term = f"{prefix}*{body}" if prefix not in ("", "-") and body else prefix + body
            pieces.append(term)
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"MixedPolynomial({self.nvars}, {self.to_string()!r})"


def _mixed_one(nvars: int) -> MixedPolynomial:
    zero = (0,) * nvars
    return MixedPolynomial(nvars, {(zero, zero): 1})


# -- squared-modulus expansion ---------------------------------------------------


def expand_sos(gens: Sequence[Polynomial]) -> MixedPolynomial:
    """Exact expansion of sum_k f_k * conj(f_k).

    Generators must vanish at the origin, which guarantees the expansion has
    no pluriharmonic terms and satisfies the reality symmetry.
    """
    if not gens:
        raise DegenerateIdealError("no generators")
    n = gens[0].nvars
    total = MixedPolynomial.zero(n)
    for g in gens:
        if not g.vanishes_at_origin():
            raise ConstantTermError("generator has a nonzero constant term")
        holo = MixedPolynomial.from_holomorphic(g)
        total = total + holo * holo.conjugate()
    return total


# -- weight-driven views ---------------------------------------------------------


def leading_mixed(P: MixedPolynomial, w: Weight) -> MixedPolynomial:
    """Terms of pair weighted length exactly 1."""
    one = Fraction(1)
    return MixedPolynomial(
        P.nvars,
        {
            pair: coeff
            for pair, coeff in P.terms.items()
            if pair_weighted_length(pair, w) == one
        },
    )


def w_value_mixed(
    pair: PairIndex, leading_vars: frozenset[int] | set[int], w: Weight
) -> Fraction | None:
    """The weight-advancement quotient for a (holo, anti) exponent pair.

    Numerator: 1 minus the weighted contribution of the leading variables;
    denominator: total exponent mass outside them.  None when the value cannot
    be computed (nonpositive numerator or empty denominator).
    """
    holo, anti = pair
    prefix = Fraction(0)
    tail = 0
    for i in range(len(holo)):
        mass = holo[i] + anti[i]
        if i in leading_vars:
            prefix += mass * w[i]
        else:
            tail += mass
    numerator = 1 - prefix
    if numerator <= 0 or tail == 0:
        return None
    return numerator / tail


def classify_monomial(
    mono: PairIndex | MultiIndex, leading_vars: frozenset[int] | set[int]
) -> int:
    """1, 2, or 3 according to whether the monomial uses only non-leading
    variables, both kinds, or only leading variables."""
    if mono and isinstance(mono[0], tuple):
        holo, anti = mono  # type: ignore[misc]
        masses = [h + a for h, a in zip(holo, anti)]
    else:
        masses = list(mono)  # type: ignore[arg-type]
    touched = {i for i, m in enumerate(masses) if m}
    if not touched:
        raise ClassificationError("constant monomials are not classified")
    inside = touched & set(leading_vars)
    outside = touched - set(leading_vars)
    if inside and outside:
        return 2
    return 3 if inside else 1


# -- Levi matrices ----------------------------------------------------------------


class LeviMatrix:
    """A square grid of mixed polynomials, Hermitian for real inputs.

    ``size`` is the grid dimension: the variable count for a full Levi matrix,
    possibly smaller for the nonzero-row restriction used by the fast path.
    """

    __slots__ = ("size", "entries")

    def __init__(self, entries: Sequence[Sequence[MixedPolynomial]]):
        n = len(entries)
        rows = []
        for row in entries:
            if len(row) != n:
                raise DimensionError("Levi matrix must be square")
            rows.append(tuple(row))
        object.__setattr__(self, "size", n)
        object.__setattr__(self, "entries", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("LeviMatrix is immutable")

    def __getitem__(self, kl: tuple[int, int]) -> MixedPolynomial:
        k, l = kl
        return self.entries[k][l]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeviMatrix):
            return NotImplemented
        return self.entries == other.entries

    def is_hermitian(self) -> bool:
        for k in range(self.size):
            for l in range(self.size):
                if self.entries[k][l] != self.entries[l][k].conjugate():
                    return False
        return True

    def substitute(self, substitution: Substitution) -> "LeviMatrix":
        return LeviMatrix(
            [[e.substitute(substitution) for e in row] for row in self.entries]
        )


def levi(P: MixedPolynomial) -> LeviMatrix:
    """Matrix of mixed second derivatives d^2 P / dz_k dzbar_l."""
    n = P.nvars
    dz = [P.derivative_z(k) for k in range(n)]
    return LeviMatrix([[dz[k].derivative_zbar(l) for l in range(n)] for k in range(n)])


def single_paired_op(
    A: LeviMatrix, target: int, pivot: int, alpha: Polynomial
) -> LeviMatrix:
    """R_target += alpha * R_pivot together with C_target += conj(alpha) * C_pivot."""
    a = MixedPolynomial.from_holomorphic(alpha)
    a_bar = a.conjugate()
    rows = [list(row) for row in A.entries]
    for l in range(A.size):
        rows[target][l] = rows[target][l] + a * rows[pivot][l]
    for k in range(A.size):
        rows[k][target] = rows[k][target] + a_bar * rows[k][pivot]
    return LeviMatrix(rows)


def paired_row_col_op(A: LeviMatrix, central: int, h: Polynomial) -> LeviMatrix:
    """The paired operations realizing the coordinate change new_central = central + h.

    For every variable l occurring in h: R_l -= (dh/dz_l) R_central and
    C_l -= conj(dh/dz_l) C_central.  The result, once its entries are rewritten
    in the new coordinates, is the Levi matrix of the transformed function.
    """
    if central in h.variables():
        raise DimensionError("shift must avoid the central variable")
    out = A
    for l in sorted(h.variables()):
        out = single_paired_op(out, l, central, -h.partial_derivative(l))
    return out


def determinant(A: LeviMatrix) -> MixedPolynomial:
    """Exact determinant by cofactor expansion (intended for size <= 6)."""
    n = A.size
    nvars = A.entries[0][0].nvars if n else 0
    cache: dict[tuple[int, ...], MixedPolynomial] = {}

    def minor(cols: tuple[int, ...]) -> MixedPolynomial:
        row = n - len(cols)
        if not cols:
            return _mixed_one(nvars)
        if cols in cache:
            return cache[cols]
        total = MixedPolynomial.zero(nvars)
        for position, c in enumerate(cols):
            entry = A.entries[row][c]
            if entry.is_zero():
                continue
            rest = cols[:position] + cols[position + 1 :]
            sub = minor(rest)
            piece = entry * sub
            total = total + (piece if position % 2 == 0 else -piece)
        cache[cols] = total
        return total

    return minor(tuple(range(n)))


def levi_from_jacobian(rows: Sequence[Sequence[Polynomial]]) -> LeviMatrix:
    """J * J^* for a variables-by-generators grid of holomorphic polynomials."""
    n = len(rows)
    out = []
    for k in range(n):
        row = []
        for l in range(n):
            acc = MixedPolynomial.zero(rows[k][0].nvars)
            for jk, jl in zip(rows[k], rows[l]):
                acc = acc + MixedPolynomial.from_holomorphic(jk) * (
                    MixedPolynomial.from_holomorphic(jl).conjugate()
                )
            row.append(acc)
        out.append(row)
    return LeviMatrix(out)
