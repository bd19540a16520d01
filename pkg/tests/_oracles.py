"""Independent slow-path implementations that tests compare against."""

from __future__ import annotations

import random
from fractions import Fraction

from poishom.complexes import chain_basis, cochain_basis
from poishom.polycore import Polynomial, VarTable, monomials_of_weight
from poishom.structure import PoissonStructure


def naive_rank(rows: "list[list[Fraction]]") -> int:
    """Gaussian elimination over Fraction, no pivoting tricks."""
    rows = [list(map(Fraction, row)) for row in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    col = 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / lead
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def casimir_dimension(S: PoissonStructure, w: int) -> int:
    """dim of weight-w polynomials killed by every {x_i, -}.

    Solves the linear system directly on the monomial basis, bypassing the
    cochain machinery entirely.
    """
    monos = monomials_of_weight(S.vars, w)
    if not monos:
        return 0
    columns = []
    row_index: dict = {}
    rows_data = []
    for exps in monos:
        f = S.vars.monomial(exps)
        images = [S.bracket(S.vars.gen(i), f) for i in range(len(S.vars))]
        columns.append(images)
        for g in images:
            for key in g.terms:
                row_index.setdefault(key, len(row_index))
    matrix = [[Fraction(0)] * len(monos) for _ in range(len(row_index) * len(S.vars))]
    for c, images in enumerate(columns):
        for i, g in enumerate(images):
            for key, v in g.terms.items():
                matrix[i * len(row_index) + row_index[key]][c] = v
    return len(monos) - naive_rank(matrix)


def coinvariant_dimension(S: PoissonStructure, w: int) -> int:
    """dim of weight-w polynomials modulo the span of all {f, x_i}.

    Spanning vectors run over weight-compatible monomials f; this equals
    the weight-w piece of the quotient by the image of the first boundary
    map, computed without building the chain complex.
    """
    monos = monomials_of_weight(S.vars, w)
    if not monos:
        return 0
    index = {exps: k for k, exps in enumerate(monos)}
    span_rows = []
    shift = S.weight_shift()
    for i in range(len(S.vars)):
        source_w = w - S.vars.weights[i] - shift
        for exps in monomials_of_weight(S.vars, source_w):
            g = S.bracket(S.vars.monomial(exps), S.vars.gen(i))
            if g.is_zero():
                continue
            row = [Fraction(0)] * len(monos)
            for key, v in g.terms.items():
                row[index[key]] = v
            span_rows.append(row)
    if not span_rows:
        return len(monos)
    return len(monos) - naive_rank(span_rows)


def euler_characteristic_matches(S: PoissonStructure,
                                 table: "dict[tuple[int, int], int]",
                                 kind: str, diag: int,
                                 min_weight: int, max_weight: int) -> bool:
    """Alternating sums along a diagonal preserved by the differential.

    The boundary map sends weight w to w + shift while lowering n, so
    chains split along constant w + n * shift and cochains along constant
    w - n * shift; on a full diagonal the homology and basis counts must
    telescope to the same alternating sum.  Diagonals escaping the
    computed window are skipped.
    """
    shift = S.weight_shift()
    ell = len(S.vars)
    h_sum = 0
    b_sum = 0
    for n in range(ell + 1):
        w = diag - n * shift if kind == "chain" else diag + n * shift
        if not min_weight <= w <= max_weight:
            return True
        h_sum += (-1) ** n * table[(n, w)]
        basis = chain_basis(S, n, w) if kind == "chain" else cochain_basis(S, n, w)
        b_sum += (-1) ** n * len(basis)
    return h_sum == b_sum


def random_polynomial(rng: random.Random, vt: VarTable, max_degree: int = 3,
                      max_terms: int = 3) -> Polynomial:
    out = vt.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * len(vt)
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(len(vt))] += 1
        out = out + vt.monomial(
            exps, Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))
        )
    return out


def random_log_canonical(rng: random.Random, n: int) -> PoissonStructure:
    names = tuple(f"x{i}" for i in range(n))
    vt = VarTable(names)
    entries = {}
    for i in range(n):
        for j in range(i + 1, n):
            c = Fraction(rng.randint(-3, 3))
            if c:
                exps = [0] * n
                exps[i] += 1
                exps[j] += 1
                entries[(i, j)] = vt.monomial(tuple(exps), c)
    return PoissonStructure(vt, entries)
