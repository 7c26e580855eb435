"""Exact sparse multivariate polynomial arithmetic over the Gaussian rationals.

A polynomial is a finite mapping from exponent multi-indices (one int per
variable) to nonzero GaussianRational coefficients.  The representation is
sparse because the generators we care about have few terms but high degree.

Also provided here: ordered single-variable coordinate substitutions, formal
differentiation / antidifferentiation, degree-based truncation, the vanishing
order of a generator list, and an exact linear solver used by the dependent-row
search.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    ConstantTermError,
    DegenerateIdealError,
    DimensionError,
    InvalidSubstitutionError,
)
from .gaussian import GaussianRational

MultiIndex = tuple[int, ...]

Scalar = GaussianRational | int | Fraction


def grevlex_key(mono: MultiIndex):
    """Sort key realizing graded reverse lexicographic order (larger key = larger monomial)."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def display_key(mono: MultiIndex):
    """Term order for printing: ascending total degree, grevlex-descending within a degree."""
    return (sum(mono), tuple(reversed(mono)))


class Polynomial:
    """An immutable sparse polynomial in ``nvars`` complex variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[MultiIndex, Scalar] | None = None):
        clean: dict[MultiIndex, GaussianRational] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars:
                    raise DimensionError(
                        f"multi-index {mono} has length {len(mono)}, expected {nvars}"
                    )
                coeff = GaussianRational.coerce(coeff)
                if not coeff.is_zero():
                    clean[tuple(mono)] = coeff
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial(nvars)

    @staticmethod
    def constant(nvars: int, value: Scalar) -> "Polynomial":
        return Polynomial(nvars, {(0,) * nvars: value})

    @staticmethod
    def variable(nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise DimensionError(f"variable index {index} out of range for {nvars} variables")
        mono = [0] * nvars
        mono[index] = 1
        return Polynomial(nvars, {tuple(mono): 1})

    @staticmethod
    def monomial(nvars: int, mono: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return Polynomial(nvars, {tuple(mono): coeff})

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0,) * self.nvars, GaussianRational(0))

    def vanishes_at_origin(self) -> bool:
        return self.constant_term().is_zero()

    def total_degree(self) -> int:
        """Max total degree of any stored monomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def min_degree(self) -> int:
        """Min total degree of any stored monomial; raises on the zero polynomial."""
        if not self.terms:
            raise DegenerateIdealError("zero polynomial has no vanishing order")
        return min(sum(m) for m in self.terms)

    def variables(self) -> frozenset[int]:
        """Indices of the variables actually occurring."""
        occupied = set()
        for mono in self.terms:
            for i, e in enumerate(mono):
                if e:
                    occupied.add(i)
        return frozenset(occupied)

    def leading_monomial(self) -> MultiIndex:
        """Largest monomial in graded reverse lexicographic order."""
        if not self.terms:
            raise DegenerateIdealError("zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def monic(self) -> "Polynomial":
        """Scale so the grevlex-leading coefficient is 1."""
        if not self.terms:
            return self
        lead = self.terms[self.leading_monomial()]
        if lead == 1:
            return self
        return self.scale(lead.inverse())

    def sorted_terms(self) -> list[tuple[MultiIndex, GaussianRational]]:
        return sorted(self.terms.items(), key=lambda kv: display_key(kv[0]))

    # -- ring operations ---------------------------------------------------

    def _check_same_ring(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise DimensionError(
                f"operands live in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_same_ring(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            new = out.get(mono, GaussianRational(0)) + coeff
            if new.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = new
        return Polynomial(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.scale(other)
        self._check_same_ring(other)
        out: dict[MultiIndex, GaussianRational] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(ma, mb))
                new = out.get(mono, GaussianRational(0)) + ca * cb
                if new.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = new
        return Polynomial(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, coeff: Scalar) -> "Polynomial":
        coeff = GaussianRational.coerce(coeff)
        if coeff.is_zero():
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {m: c * coeff for m, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- calculus ----------------------------------------------------------

    def partial_derivative(self, var: int) -> "Polynomial":
        """Formal partial derivative with respect to variable ``var``."""
        if not 0 <= var < self.nvars:
            raise DimensionError(f"variable index {var} out of range")
        out: dict[MultiIndex, GaussianRational] = {}
        for mono, coeff in self.terms.items():
            e = mono[var]
            if e == 0:
                continue
            lowered = list(mono)
            lowered[var] = e - 1
            out[tuple(lowered)] = coeff * e
        return Polynomial(self.nvars, out)

    def antiderivative(self, var: int) -> "Polynomial":
        """Term-by-term antiderivative in ``var`` with zero constant of integration,
        so that ``p.antiderivative(v).partial_derivative(v) == p``."""
        if not 0 <= var < self.nvars:
            raise DimensionError(f"variable index {var} out of range")
        out: dict[MultiIndex, GaussianRational] = {}
        for mono, coeff in self.terms.items():
            raised = list(mono)
            raised[var] = mono[var] + 1
            out[tuple(raised)] = coeff * Fraction(1, mono[var] + 1)
        return Polynomial(self.nvars, out)

    # -- substitution --------------------------------------------------------

    def substitute_var(self, var: int, replacement: "Polynomial") -> "Polynomial":
        """Replace every occurrence of variable ``var`` by ``replacement``."""
        self._check_same_ring(replacement)
        powers: dict[int, Polynomial] = {0: Polynomial.constant(self.nvars, 1)}

        def power(e: int) -> Polynomial:
            if e not in powers:
                powers[e] = power(e - 1) * replacement
            return powers[e]

        out = Polynomial.zero(self.nvars)
        for mono, coeff in self.terms.items():
            rest = list(mono)
            e = rest[var]
            rest[var] = 0
            out = out + Polynomial.monomial(self.nvars, rest, coeff) * power(e)
        return out

    def substitute(self, substitution: "Substitution") -> "Polynomial":
        """Express this polynomial in the coordinates introduced by ``substitution``.

        Each step (i, shift) records the coordinate relation new_i = old_i + shift,
        so the rewrite replaces variable i by (z_i - shift), one step at a time.
        """
        result = self
        for var, shift in substitution.steps:
            if shift.nvars != self.nvars:
                raise DimensionError("substitution shift lives in the wrong ring")
            if var in shift.variables():
                raise InvalidSubstitutionError(
                    f"shift for variable {var} involves that variable"
                )
            replacement = Polynomial.variable(self.nvars, var) - shift
            result = result.substitute_var(var, replacement)
        return result

    def truncate(self, degree: int) -> "Polynomial":
        """Drop every monomial of total degree greater than ``degree``."""
        if degree < 0:
            raise ValueError("truncation order must be nonnegative")
        return Polynomial(
            self.nvars, {m: c for m, c in self.terms.items() if sum(m) <= degree}
        )

    # -- display ----------------------------------------------------------------

    def to_string(self, names: Sequence[str] | None = None) -> str:
        """Canonical display, re-parseable by the input grammar."""
        if not self.terms:
            return "0"
        if names is None:
            names = [f"z{i + 1}" for i in range(self.nvars)]
        pieces: list[str] = []
        for mono, coeff in self.sorted_terms():
            factors = [
                names[i] if e == 1 else f"{names[i]}^{e}"
                for i, e in enumerate(mono)
                if e
            ]
            body = "*".join(factors)
            coeff_str = _format_coefficient(coeff, bool(body))
            if body:
                term = f"{coeff_str}{body}" if coeff_str in ("", "-") else f"{coeff_str}*{body}"
            else:
                term = coeff_str
            if pieces and not term.startswith("-"):
                pieces.append(f"+ {term}")
            elif pieces:
                pieces.append(f"- {term[1:]}")
            else:
                pieces.append(term)
        return " ".join(pieces)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.nvars}, {self.to_string()!r})"


def _format_coefficient(coeff: GaussianRational, has_body: bool) -> str:
    if not has_body:
        return f"({coeff})" if (coeff.re and coeff.im) else str(coeff)
    if coeff == 1:
        return ""
    if coeff == -1:
        return "-"
    if coeff.re and coeff.im:
        return f"({_emit_gaussian(coeff)})"
    if coeff.im:
        imag = coeff.im
        if imag == 1:
            return "i"
        if imag == -1:
            return "-i"
        return f"{imag}*i" if imag > 0 else f"-{-imag}*i"
    return str(coeff.re)


def _emit_gaussian(coeff: GaussianRational) -> str:
    sign = "+" if coeff.im > 0 else "-"
    mag = abs(coeff.im)
    imag = "i" if mag == 1 else f"{mag}*i"
    return f"{coeff.re}{sign}{imag}"


class Substitution:
    """An ordered list of single-variable coordinate changes.

    Step (i, shift) means the new coordinate satisfies new_i = old_i + shift,
    where the shift never involves variable i itself.  Steps compose
    sequentially, later steps acting on the coordinates produced so far.
    """

    __slots__ = ("steps",)

    def __init__(self, steps: Iterable[tuple[int, Polynomial]] = ()):
        frozen = []
        for var, shift in steps:
            if var in shift.variables():
                raise InvalidSubstitutionError(
                    f"shift for variable {var} involves that variable"
                )
            frozen.append((var, shift))
        object.__setattr__(self, "steps", tuple(frozen))

    def __setattr__(self, name, value):
        raise AttributeError("Substitution is immutable")

    @staticmethod
    def identity() -> "Substitution":
        return Substitution()

    def then(self, other: "Substitution") -> "Substitution":
        return Substitution(self.steps + other.steps)

    def is_identity(self) -> bool:
        return not self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Substitution):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self) -> int:
        return hash(self.steps)

    def to_string(self, names: Sequence[str] | None = None) -> str:
        if not self.steps:
            return "(identity)"
        parts = []
        for var, shift in self.steps:
            name = names[var] if names else f"z{var + 1}"
            body = shift.to_string(names)
            if body.startswith("-"):
                parts.append(f"{name} -> {name} - {body[1:].lstrip()}")
            else:
                parts.append(f"{name} -> {name} + {body}")
        return "; ".join(parts)

    def __repr__(self) -> str:
        return f"Substitution({self.to_string()!r})"


# -- spec-level convenience wrappers ------------------------------------------


def substitute(p: Polynomial, s: Substitution) -> Polynomial:
    return p.substitute(s)


def partial_derivative(p: Polynomial, var: int) -> Polynomial:
    return p.partial_derivative(var)


def antiderivative(p: Polynomial, var: int) -> Polynomial:
    return p.antiderivative(var)


def truncate(p: Polynomial, degree: int) -> Polynomial:
    return p.truncate(degree)


def vanishing_order(gens: Sequence[Polynomial]) -> int:
    """Minimum total degree over all stored monomials of all generators.

    Every generator must vanish at the origin and at least one must be nonzero.
    """
    order: int | None = None
    for g in gens:
        if not g.vanishes_at_origin():
            raise ConstantTermError("generator has a nonzero constant term")
        if g.is_zero():
            continue
        d = g.min_degree()
        order = d if order is None else min(order, d)
    if order is None:
        raise DegenerateIdealError("all generators are zero")
    return order


def solve_linear(
    matrix: Sequence[Sequence[GaussianRational]],
    rhs: Sequence[GaussianRational],
) -> list[GaussianRational] | None:
    """One exact solution of ``matrix @ x = rhs`` or None if inconsistent.

    Plain pivoted elimination over the field Q(i); free variables are set to 0.
    """
    nrows = len(matrix)
    if nrows != len(rhs):
        raise DimensionError("matrix and right-hand side sizes disagree")
    ncols = len(matrix[0]) if nrows else 0
    for row in matrix:
        if len(row) != ncols:
            raise DimensionError("matrix rows have unequal lengths")

    aug = [
        [GaussianRational.coerce(c) for c in row] + [GaussianRational.coerce(b)]
        for row, b in zip(matrix, rhs)
    ]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if not aug[i][c].is_zero()), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [v * inv for v in aug[r]]
        for i in range(nrows):
            if i != r and not aug[i][c].is_zero():
                factor = aug[i][c]
                aug[i] = [a - factor * b for a, b in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if not aug[i][ncols].is_zero():
            return None
    solution = [GaussianRational(0)] * ncols
    for row_index, c in enumerate(pivot_cols):
        solution[c] = aug[row_index][ncols]
    return solution
