"""Poisson structures on weighted polynomial algebras.

A structure is determined by the brackets of the generators; the bracket of
arbitrary polynomials extends as a biderivation,

    {f, g} = sum_{i,j} (df/dx_i)(dg/dx_j) {x_i, x_j}.

On top of that this module builds the Lie bracket and anchor on Kaehler
one-forms, the divergence-style trace of a generator, the modular traces
that detect unimodularity, and the trace-twisted right action on the
algebra that the dualizing module carries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .polycore import (
    Polynomial,
    VarTable,
    homogeneous_weight,
    partial_derivative,
)

__all__ = [
    "JacobiViolation",
    "NonHomogeneousError",
    "OneForm",
    "basis_form",
    "differential",
    "ModularData",
    "PoissonStructure",
    "validate",
    "log_canonical_matrix",
]


class JacobiViolation(ValueError):
    """The given brackets do not satisfy the Jacobi identity.

    Carries the offending generator triple and the jacobiator polynomial.
    """

    def __init__(self, i: int, j: int, k: int, jacobiator: Polynomial):
        names = jacobiator.vars.names
        super().__init__(
            f"jacobi identity fails on ({names[i]}, {names[j]}, {names[k]}): "
            f"jacobiator = {jacobiator}"
        )
        self.triple = (i, j, k)
        self.jacobiator = jacobiator


class NonHomogeneousError(ValueError):
    """A graded operation was asked of a structure without a uniform degree."""


@dataclass(frozen=True)
class OneForm:
    """A Kaehler one-form sum_i coeffs[i] * d(x_i)."""

    vars: VarTable
    coeffs: "tuple[Polynomial, ...]"

    def __post_init__(self):
        if len(self.coeffs) != len(self.vars):
            raise ValueError("need one coefficient per variable")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __add__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        return OneForm(self.vars, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "OneForm") -> "OneForm":
        if not isinstance(other, OneForm):
            return NotImplemented
        return OneForm(self.vars, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "OneForm":
        return OneForm(self.vars, tuple(-a for a in self.coeffs))

    def __rmul__(self, other) -> "OneForm":
        # module action of A (and of scalars) on forms
        if isinstance(other, (int, Fraction, Polynomial)):
            return OneForm(self.vars, tuple(other * a for a in self.coeffs))
        return NotImplemented

    __mul__ = __rmul__

    def __str__(self) -> str:
        parts = [
            f"({c})*d({n})" for n, c in zip(self.vars.names, self.coeffs) if not c.is_zero()
        ]
        return " + ".join(parts) if parts else "0"


def basis_form(vars: VarTable, i: int) -> OneForm:
    """The basis form d(x_i)."""
    one, zero = vars.one(), vars.zero()
    return OneForm(vars, tuple(one if j == i else zero for j in range(len(vars))))


def differential(f: Polynomial) -> OneForm:
    """d(f) = sum_i (df/dx_i) d(x_i)."""
    vt = f.vars
    return OneForm(vt, tuple(partial_derivative(f, i) for i in range(len(vt))))


@dataclass(frozen=True)
class ModularData:
    """Traces of the generators; all zero exactly for unimodular structures."""

    traces: "tuple[Polynomial, ...]"
    unimodular: bool


class PoissonStructure:
    """A validated Poisson bracket on a weighted polynomial algebra.

    Construction normalizes the generator brackets to keys (i, j) with
    i < j, checks the Jacobi identity on generator triples (enough, since
    the jacobiator of a biderivation extension is a derivation in each
    slot), and detects whether the bracket is weighted-homogeneous.

    ``homogeneity_degree`` is the integer d with deg {x_i, x_j} =
    w_i + w_j + d - 2 for every nonzero entry, so the bracket shifts
    weights by d - 2.  It is None when no single d fits; a zero bracket
    gets d = 2 so that the shift vanishes.  Instances are immutable.
    """

    def __init__(self, vars: VarTable,
                 entries: "Mapping[tuple[int, int], Polynomial]"):
        self.vars = vars
        normalized: dict[tuple[int, int], Polynomial] = {}
        for (i, j), poly in entries.items():
            if not (0 <= i < len(vars) and 0 <= j < len(vars)):
                raise IndexError(f"bracket key ({i}, {j}) out of range")
            if i == j:
                raise ValueError(f"bracket of a variable with itself: index {i}")
            if poly.vars != vars:
                raise ValueError("bracket entry over a different variable table")
            if poly.is_zero():
                continue
            key, value = ((i, j), poly) if i < j else ((j, i), -poly)
            if key in normalized:
                raise ValueError(
                    f"bracket for pair {vars.names[key[0]]},{vars.names[key[1]]} given twice"
                )
            normalized[key] = value
        self.entries = normalized
        self._gens = vars.gens()
        self._traces: "tuple[Polynomial, ...] | None" = None
        self.homogeneity_degree = self._detect_degree()
        self._check_jacobi()

    # -- construction helpers --------------------------------------------

    def _detect_degree(self) -> "int | None":
        weights = self.vars.weights
        candidates: set[int] = set()
        for (i, j), poly in self.entries.items():
            w = homogeneous_weight(poly)
            if w is None:
                return None
            candidates.add(w - weights[i] - weights[j] + 2)
        if not candidates:
            return 2  # zero bracket: homogeneous of every degree, pick no shift
        if len(candidates) == 1:
            return candidates.pop()
        return None

    def _check_jacobi(self) -> None:
        for i, j, k in combinations(range(len(self.vars)), 3):
            jac = self.jacobiator(i, j, k)
            if not jac.is_zero():
                raise JacobiViolation(i, j, k, jac)

    # -- basic bracket data ------------------------------------------------

    def entry(self, i: int, j: int) -> Polynomial:
        """{x_i, x_j} for any index pair."""
        if i == j:
            return self.vars.zero()
        if i < j:
            return self.entries.get((i, j), self.vars.zero())
        return -self.entries.get((j, i), self.vars.zero())

    def bracket(self, f: Polynomial, g: Polynomial) -> Polynomial:
        """{f, g} via the biderivation extension."""
        if f.vars != self.vars or g.vars != self.vars:
            raise ValueError("operands over a different variable table")
        out = self.vars.zero()
        for (i, j), p in self.entries.items():
            fi, gj = partial_derivative(f, i), partial_derivative(g, j)
            fj, gi = partial_derivative(f, j), partial_derivative(g, i)
            term = fi * gj - fj * gi
            if term:
                out = out + term * p
        return out

    def jacobiator(self, i: int, j: int, k: int) -> Polynomial:
        """{x_i,{x_j,x_k}} + {x_j,{x_k,x_i}} + {x_k,{x_i,x_j}}."""
        xs = self._gens
        return (
            self.bracket(xs[i], self.entry(j, k))
            + self.bracket(xs[j], self.entry(k, i))
            + self.bracket(xs[k], self.entry(i, j))
        )

    # -- one-forms: Lie bracket and anchor ----------------------------------

    def lr_bracket(self, a: OneForm, b: OneForm) -> OneForm:
        """Lie bracket of one-forms.

        Determined by [f dg, h dk] = fh d{g,k} + f{g,h} dk - h{k,f} dg,
        expanded over the coordinate forms.
        """
        if a.vars != self.vars or b.vars != self.vars:
            raise ValueError("forms over a different variable table")
        n = len(self.vars)
        xs = self._gens
        out = [self.vars.zero() for _ in range(n)]
        for i in range(n):
            ai = a.coeffs[i]
            if ai.is_zero():
                continue
            for j in range(n):
                bj = b.coeffs[j]
                if bj.is_zero():
                    continue
                p = self.entry(i, j)
                if p:
                    ab = ai * bj
                    for k in range(n):
                        dk = partial_derivative(p, k)
                        if dk:
                            out[k] = out[k] + ab * dk
                adv = self.bracket(xs[i], bj)
                if adv:
                    out[j] = out[j] + ai * adv
                bdv = self.bracket(xs[j], ai)
                if bdv:
                    out[i] = out[i] - bj * bdv
        return OneForm(self.vars, tuple(out))

    def anchor_apply(self, a: OneForm, f: Polynomial) -> Polynomial:
        """Action of a one-form as a derivation: sum_i a_i {x_i, f}."""
        if a.vars != self.vars or f.vars != self.vars:
            raise ValueError("operands over a different variable table")
        out = self.vars.zero()
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero():
                continue
            adv = self.bracket(self._gens[i], f)
            if adv:
                out = out + ai * adv
        return out

    # -- traces and the twisted action ---------------------------------------

    def trace(self, y: Polynomial) -> Polynomial:
        """Divergence of the derivation {y, -}: sum_i d{y, x_i}/dx_i."""
        if y.vars != self.vars:
            raise ValueError("operand over a different variable table")
        out = self.vars.zero()
        for i in range(len(self.vars)):
            t = partial_derivative(self.bracket(y, self._gens[i]), i)
            if t:
                out = out + t
        return out

    def modular_data(self) -> ModularData:
        traces = self._generator_traces()
        return ModularData(traces, all(t.is_zero() for t in traces))

    def _generator_traces(self) -> "tuple[Polynomial, ...]":
        if self._traces is None:
            self._traces = tuple(self.trace(x) for x in self._gens)
        return self._traces

    def omega_h_action(self, m: Polynomial, i: int) -> Polynomial:
        """Right action of the i-th derivation generator on the twisted module.

        The dualizing module is the algebra itself with
        m . h_i = -{x_i, m} + m * trace(x_i); for unimodular structures this
        collapses to the plain action {m, x_i}.
        """
        if not 0 <= i < len(self.vars):
            raise IndexError(f"variable index {i} out of range")
        return self.bracket(m, self._gens[i]) + m * self._generator_traces()[i]

    # -- grading -----------------------------------------------------------

    def require_homogeneous(self) -> int:
        if self.homogeneity_degree is None:
            raise NonHomogeneousError(
                "bracket entries are not weighted-homogeneous of a uniform degree; "
                "graded computations are unavailable"
            )
        return self.homogeneity_degree

    def weight_shift(self) -> int:
        """How much the bracket (and both differentials) shift weight."""
        return self.require_homogeneous() - 2

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, PoissonStructure):
            return NotImplemented
        return self.vars == other.vars and self.entries == other.entries

    def __repr__(self) -> str:
        pairs = ", ".join(
            f"{{{self.vars.names[i]},{self.vars.names[j]}}}={p}"
            for (i, j), p in sorted(self.entries.items())
        )
        return f"<PoissonStructure {pairs or 'zero'}>"


def validate(vars: VarTable,
             entries: "Mapping[tuple[int, int], Polynomial]") -> PoissonStructure:
    """Build a structure from raw generator brackets, checking everything."""
    return PoissonStructure(vars, entries)


def log_canonical_matrix(S: PoissonStructure) -> "list[list[Fraction]] | None":
    """Recover the antisymmetric matrix of a log-canonical structure.

    Returns a_ij with {x_i, x_j} = a_ij x_i x_j, or None when some entry is
    not a rational multiple of x_i x_j.
    """
    n = len(S.vars)
    mat = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        p = S.entry(i, j)
        if p.is_zero():
            continue
        if len(p.terms) != 1:
            return None
        exps, coeff = next(iter(p.terms.items()))
        expected = tuple(1 if k in (i, j) else 0 for k in range(n))
        if exps != expected:
            return None
        mat[i][j] = coeff
        mat[j][i] = -coeff
    return mat
