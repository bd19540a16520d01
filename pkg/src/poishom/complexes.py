"""Graded chain and cochain complexes attached to a Poisson structure.

Chains in degree n are spanned by m (.) dx_{i_1}...dx_{i_n} with m a
monomial and the multi-index strictly increasing; the boundary acts through
a choice of right module on the coefficient ("canonical" multiplication or
the trace-twisted "omega" action) plus wedge contraction of the generator
brackets.  Cochains are alternating multiderivations stored by their values
on the basis wedges; the coboundary is the Lie-Rinehart differential of the
one-form algebroid.

Both differentials shift weight by the same amount d - 2, where d is the
structure's homogeneity degree, so every computation here is cut out cell
by cell at fixed (n, w) and ranks are taken exactly over the rationals.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .linalg import SparseMatrix, exact_rank
from .polycore import Polynomial, monomials_of_weight, partial_derivative
from .structure import PoissonStructure

__all__ = [
    "MultiIndex",
    "ChainBasis",
    "Cochain",
    "GradedComplexCell",
    "chain_basis",
    "cochain_basis",
    "apply_boundary",
    "apply_coboundary",
    "boundary_matrix",
    "coboundary_matrix",
    "exact_rank",
    "homology_dims",
    "cohomology_dims",
    "dim_table_tsv",
    "DualityReport",
    "ShiftNotFound",
    "duality_report",
]

MultiIndex = "tuple[int, ...]"

_COEFFS = ("canonical", "omega")


def _check_coeff(coeff: str) -> None:
    if coeff not in _COEFFS:
        raise ValueError(f"coefficient module must be one of {_COEFFS}, got {coeff!r}")


class ChainBasis:
    """Ordered basis of one graded cell.

    Elements are (exponent tuple, multi-index) pairs sorted by monomial then
    multi-index, so matrix layouts are reproducible run to run.
    """

    __slots__ = ("n", "w", "elements", "_position")

    def __init__(self, n: int, w: int, elements: "tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]"):
        self.n = n
        self.w = w
        self.elements = elements
        self._position = {el: k for k, el in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, exps: "tuple[int, ...]", index: "tuple[int, ...]") -> int:
        try:
            return self._position[(exps, index)]
        except KeyError:
            raise KeyError(
                f"({exps}, {index}) is not a basis element of cell (n={self.n}, w={self.w})"
            ) from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainBasis):
            return NotImplemented
        return (self.n, self.w, self.elements) == (other.n, other.w, other.elements)

    def __repr__(self) -> str:
        return f"<ChainBasis n={self.n} w={self.w} dim={len(self.elements)}>"


def chain_basis(S: PoissonStructure, n: int, w: int) -> ChainBasis:
    """Basis of the chain cell at homological degree n and weight w.

    The weight of m (.) dx_I is deg(m) plus the weights of the wedge
    variables.
    """
    vt = S.vars
    elements = []
    if 0 <= n <= len(vt):
        for index in combinations(range(len(vt)), n):
            rem = w - sum(vt.weights[i] for i in index)
            for exps in monomials_of_weight(vt, rem):
                elements.append((exps, index))
    elements.sort()
    return ChainBasis(n, w, tuple(elements))


def cochain_basis(S: PoissonStructure, n: int, w: int) -> ChainBasis:
    """Basis of the cochain cell at degree n and weight w.

    A cochain's weight is the degree of its values minus the weights of its
    argument variables, so w may be negative (no lower than minus the sum
    of all weights).
    """
    vt = S.vars
    elements = []
    if 0 <= n <= len(vt):
        for index in combinations(range(len(vt)), n):
            deg = w + sum(vt.weights[i] for i in index)
            for exps in monomials_of_weight(vt, deg):
                elements.append((exps, index))
    elements.sort()
    return ChainBasis(n, w, tuple(elements))


@dataclass(frozen=True)
class Cochain:
    """An alternating n-multiderivation, stored by values on basis wedges.

    ``values`` maps strictly increasing multi-indices of length ``order`` to
    polynomials; missing indices mean zero, so the map is total.
    """

    order: int
    values: "dict[tuple[int, ...], Polynomial]"

    def __post_init__(self):
        clean = {}
        for index, poly in self.values.items():
            if len(index) != self.order or tuple(sorted(set(index))) != tuple(index):
                raise ValueError(f"bad multi-index {index} for order {self.order}")
            if not poly.is_zero():
                clean[index] = poly
        object.__setattr__(self, "values", clean)

    def value(self, index: "tuple[int, ...]", vt) -> Polynomial:
        got = self.values.get(tuple(index))
        return got if got is not None else vt.zero()

    def is_zero(self) -> bool:
        return not self.values

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return self.order == other.order and self.values == other.values


def apply_boundary(S: PoissonStructure,
                   chain: "Mapping[tuple[int, ...], Polynomial]",
                   coeff: str = "canonical") -> "dict[tuple[int, ...], Polynomial]":
    """Boundary of sum_I poly_I (.) dx_I, as a map multi-index -> coefficient.

    Each wedge slot acts on the coefficient through the chosen right module
    with alternating sign, and each pair of slots contracts to the wedge of
    d{x_i, x_j} with the remaining slots (resorted, duplicates killed).
    """
    _check_coeff(coeff)
    vt = S.vars
    xs = vt.gens()
    if coeff == "canonical":
        def act(m: Polynomial, i: int) -> Polynomial:
            return S.bracket(m, xs[i])
    else:
        act = S.omega_h_action
    out: dict[tuple[int, ...], Polynomial] = {}

    def add(index: "tuple[int, ...]", poly: Polynomial) -> None:
        if poly.is_zero():
            return
        cur = out.get(index)
        total = poly if cur is None else cur + poly
        if total.is_zero():
            out.pop(index, None)
        else:
            out[index] = total

    for index, poly in chain.items():
        if poly.is_zero():
            continue
        for r, i in enumerate(index):
            moved = act(poly, i)
            if moved:
                rest = index[:r] + index[r + 1 :]
                add(rest, moved if r % 2 == 0 else -moved)
        for p in range(len(index)):
            for q in range(p + 1, len(index)):
                pair = S.entry(index[p], index[q])
                if pair.is_zero():
                    continue
                rest = index[:p] + index[p + 1 : q] + index[q + 1 :]
                base_sign = 1 if (p + q) % 2 == 0 else -1
                for k in range(len(vt)):
                    c = partial_derivative(pair, k)
                    if c.is_zero() or k in rest:
                        continue
                    pos = bisect_left(rest, k)
                    merged = rest[:pos] + (k,) + rest[pos:]
                    sign = base_sign if pos % 2 == 0 else -base_sign
                    add(merged, (poly * c) * sign)
    return out


def apply_coboundary(S: PoissonStructure, F: Cochain) -> Cochain:
    """Lie-Rinehart coboundary of an alternating multiderivation.

    (dF)(dx_{i_0}..dx_{i_n}) takes each slot out through the anchor
    {x_{i_r}, -} with sign (-1)^r, then contracts slot pairs into
    F(d{x_i, x_j} ^ rest) with sign (-1)^{r+s}; at order 0 this is
    f |-> ({x_i, f})_i, whose kernel is the Casimirs.
    """
    vt = S.vars
    xs = vt.gens()
    n = F.order
    out: dict[tuple[int, ...], Polynomial] = {}
    for index in combinations(range(len(vt)), n + 1):
        total = vt.zero()
        for r, i in enumerate(index):
            inner = F.value(index[:r] + index[r + 1 :], vt)
            if inner.is_zero():
                continue
            moved = S.bracket(xs[i], inner)
            if moved:
                total = total + (moved if r % 2 == 0 else -moved)
        for p in range(n + 1):
            for q in range(p + 1, n + 1):
                pair = S.entry(index[p], index[q])
                if pair.is_zero():
                    continue
                rest = index[:p] + index[p + 1 : q] + index[q + 1 :]
                base_sign = 1 if (p + q) % 2 == 0 else -1
                for k in range(len(vt)):
                    c = partial_derivative(pair, k)
                    if c.is_zero() or k in rest:
                        continue
                    pos = bisect_left(rest, k)
                    merged = rest[:pos] + (k,) + rest[pos:]
                    inner = F.value(merged, vt)
                    if inner.is_zero():
                        continue
                    sign = base_sign if pos % 2 == 0 else -base_sign
                    total = total + (c * inner) * sign
        if not total.is_zero():
            out[index] = total
    return Cochain(n + 1, out)


@dataclass
class GradedComplexCell:
    """One differential restricted to a cell: bases plus its sparse matrix.

    Rows are indexed by the target basis, columns by the source basis, so
    composing differentials is plain matrix multiplication.
    """

    source: ChainBasis
    target: ChainBasis
    matrix: SparseMatrix


def boundary_matrix(S: PoissonStructure, n: int, w: int,
                    coeff: str = "canonical") -> GradedComplexCell:
    """Matrix of the boundary on the chain cell (n, w).

    The target cell sits at (n - 1, w + d - 2); graded structures only.
    """
    _check_coeff(coeff)
    shift = S.weight_shift()
    src = chain_basis(S, n, w)
    tgt = chain_basis(S, n - 1, w + shift)
    matrix = SparseMatrix(len(tgt), len(src))
    vt = S.vars
    for col, (exps, index) in enumerate(src.elements):
        image = apply_boundary(S, {index: vt.monomial(exps)}, coeff)
        for index2, poly in image.items():
            for exps2, c in poly.terms.items():
                matrix.add_to(tgt.position(exps2, index2), col, c)
    return GradedComplexCell(src, tgt, matrix)


def coboundary_matrix(S: PoissonStructure, n: int, w: int) -> GradedComplexCell:
    """Matrix of the coboundary on the cochain cell (n, w).

    The target cell sits at (n + 1, w + d - 2); graded structures only.
    """
    shift = S.weight_shift()
    src = cochain_basis(S, n, w)
    tgt = cochain_basis(S, n + 1, w + shift)
    matrix = SparseMatrix(len(tgt), len(src))
    vt = S.vars
    for col, (exps, index) in enumerate(src.elements):
        image = apply_coboundary(S, Cochain(n, {index: vt.monomial(exps)}))
        for index2, poly in image.values.items():
            for exps2, c in poly.terms.items():
                matrix.add_to(tgt.position(exps2, index2), col, c)
    return GradedComplexCell(src, tgt, matrix)


def homology_dims(S: PoissonStructure, coeff: str = "canonical",
                  max_weight: int = 8,
                  max_degree: "int | None" = None) -> "dict[tuple[int, int], int]":
    """Homology dimensions per (n, w) over the requested window.

    dim H(n, w) = dim ker of the boundary leaving (n, w) minus the rank of
    the boundary arriving from (n + 1, w - (d - 2)); incoming cells outside
    the window are still computed when they land inside it.
    """
    _check_coeff(coeff)
    shift = S.weight_shift()
    ell = len(S.vars)
    if max_degree is None:
        max_degree = ell
    ranks: dict[tuple[int, int], int] = {}

    def rank_at(n: int, w: int) -> int:
        if n < 1 or n > ell or w < 0:
            return 0
        key = (n, w)
        if key not in ranks:
            ranks[key] = boundary_matrix(S, n, w, coeff).matrix.rank()
        return ranks[key]

    table: dict[tuple[int, int], int] = {}
    for n in range(max_degree + 1):
        for w in range(max_weight + 1):
            kernel = len(chain_basis(S, n, w)) - rank_at(n, w)
            table[(n, w)] = kernel - rank_at(n + 1, w - shift)
    return table


def cohomology_dims(S: PoissonStructure, max_weight: int = 8,
                    min_weight: "int | None" = None,
                    max_degree: "int | None" = None) -> "dict[tuple[int, int], int]":
    """Cohomology dimensions per (n, w).

    The default window starts at minus the sum of the variable weights, the
    lowest weight any cochain can carry.
    """
    shift = S.weight_shift()
    ell = len(S.vars)
    if max_degree is None:
        max_degree = ell
    if min_weight is None:
        min_weight = -sum(S.vars.weights)
    ranks: dict[tuple[int, int], int] = {}

    def rank_at(n: int, w: int) -> int:
        if n < 0 or n >= ell or w < -sum(S.vars.weights):
            return 0
        key = (n, w)
        if key not in ranks:
            ranks[key] = coboundary_matrix(S, n, w).matrix.rank()
        return ranks[key]

    table: dict[tuple[int, int], int] = {}
    for n in range(max_degree + 1):
        for w in range(min_weight, max_weight + 1):
            kernel = len(cochain_basis(S, n, w)) - rank_at(n, w)
            table[(n, w)] = kernel - rank_at(n - 1, w - shift)
    return table


def dim_table_tsv(table: "dict[tuple[int, int], int]") -> str:
    """Tab-separated rows n, w, dim under a header, sorted by (n, w)."""
    lines = ["n\tw\tdim"]
    lines.extend(f"{n}\t{w}\t{table[(n, w)]}" for n, w in sorted(table))
    return "\n".join(lines)


@dataclass
class DualityReport:
    """Cell-by-cell comparison of twisted homology with cohomology.

    ``cells`` holds rows (n, w, twisted dim, cohomology dim at
    (ell - n, w - expected_shift), match); ``fitting_shifts`` lists every
    uniform shift that makes all cells agree.
    """

    ell: int
    max_weight: int
    expected_shift: int
    fitting_shifts: "tuple[int, ...]"
    twisted: "dict[tuple[int, int], int]"
    cohomology: "dict[tuple[int, int], int]"
    unimodular: bool
    canonical: "dict[tuple[int, int], int] | None"
    canonical_matches: "bool | None"
    cells: "list[tuple[int, int, int, int, bool]]"
    passed: bool

    def render_text(self) -> str:
        lines = [
            f"duality window: 0 <= n <= {self.ell}, 0 <= w <= {self.max_weight}",
            f"expected shift: {self.expected_shift}"
            + f"; fitting shifts: {', '.join(map(str, self.fitting_shifts)) or 'none'}",
        ]
        if self.unimodular:
            verdict = "yes" if self.canonical_matches else "NO"
            lines.append(f"unimodular: yes (canonical homology equals twisted: {verdict})")
        else:
            lines.append("unimodular: no")
        header = f"{'n':>3} {'w':>3} {'twisted':>8} {'cohom':>6}  ok"
        lines.append(header)
        for n, w, t, c, ok in self.cells:
            lines.append(f"{n:>3} {w:>3} {t:>8} {c:>6}  {'yes' if ok else 'NO'}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def render_tsv(self) -> str:
        rows = [
            f"{n}\t{w}\t{t}\t{c}\t{'ok' if ok else 'mismatch'}"
            for n, w, t, c, ok in self.cells
        ]
        return "\n".join(rows)


class ShiftNotFound(ValueError):
    """No uniform weight shift aligns twisted homology with cohomology."""

    def __init__(self, report: DualityReport):
        super().__init__(
            "no uniform weight shift aligns the twisted homology table with "
            "the cohomology table; see the attached report"
        )
        self.report = report


def duality_report(S: PoissonStructure, max_weight: int = 8) -> DualityReport:
    """Check dim HP_n(twisted)_w == dim HP^{ell-n}_{w-s} over a weight window.

    The expected shift s is the sum of the variable weights.  All shifts in
    0..s are tried; the report fails (or raises ShiftNotFound when nothing
    fits) rather than ever papering over a mismatch.  For unimodular
    structures the canonical and twisted homology tables must also agree.
    """
    ell = len(S.vars)
    expected = sum(S.vars.weights)
    twisted = homology_dims(S, "omega", max_weight)
    cohomology = cohomology_dims(S, max_weight=max_weight, min_weight=-expected)

    def fits(s: int) -> bool:
        return all(
            twisted[(n, w)] == cohomology[(ell - n, w - s)]
            for n in range(ell + 1)
            for w in range(max_weight + 1)
        )

    fitting = tuple(s for s in range(expected + 1) if fits(s))
    unimodular = S.modular_data().unimodular
    canonical = homology_dims(S, "canonical", max_weight) if unimodular else None
    canonical_matches = (canonical == twisted) if unimodular else None
    cells = [
        (n, w, twisted[(n, w)], cohomology[(ell - n, w - expected)],
         twisted[(n, w)] == cohomology[(ell - n, w - expected)])
        for n in range(ell + 1)
        for w in range(max_weight + 1)
    ]
    passed = expected in fitting and canonical_matches is not False
    report = DualityReport(
        ell=ell,
        max_weight=max_weight,
        expected_shift=expected,
        fitting_shifts=fitting,
        twisted=twisted,
        cohomology=cohomology,
        unimodular=unimodular,
        canonical=canonical,
        canonical_matches=canonical_matches,
        cells=cells,
        passed=passed,
    )
    if not fitting:
        raise ShiftNotFound(report)
    return report
