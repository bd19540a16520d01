"""PBW rewriting for the enveloping algebra of a Poisson structure.

The algebra is generated by the polynomial algebra together with one
derivation symbol h(i) per variable, subject to

    h(i) * f    ->  f * h(i) + {x_i, f}
    h(j) * h(i) ->  h(i) * h(j) + sum_k  d{x_j, x_i}/dx_k * h(k)   (j > i)

so every element has a normal form: polynomial coefficients on the left,
derivation symbols sorted ascending on the right.  Rewriting terminates
because each step lowers (number of derivation symbols, number of
out-of-order adjacent pairs) lexicographically; confluence is checked
empirically by reducing random words under two different strategies.

The module also reduces elements against right ideals generated by
h(i) - t_i for prescribed polynomials t_i, which realizes both the plain
right action on the algebra (t = 0) and the trace-twisted module (t = the
modular traces), and checks the weight-grading automorphism that
log-canonical structures carry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polycore import Polynomial, VarTable, monomials_of_weight, partial_derivative
from .structure import PoissonStructure, log_canonical_matrix

__all__ = [
    "Word",
    "ham",
    "poly_atom",
    "word_from_monomial",
    "EnvelopeElement",
    "reduce_word",
    "reduce_combination",
    "multiply",
    "ConfluenceFailure",
    "confluence_check",
    "GrMismatch",
    "gr_dimension_check",
    "right_module_residue",
    "j_quotient_action",
    "RelationViolation",
    "ModuleMismatch",
    "NuReport",
    "nu_check",
]

# A word is a tuple of atoms; an atom is ("p", Polynomial) or ("h", index).
Word = tuple[tuple, ...]

_ONE = Fraction(1)


def ham(i: int) -> tuple:
    """The derivation symbol attached to the i-th variable."""
    return ("h", i)


def poly_atom(f: Polynomial) -> tuple:
    return ("p", f)


def word_from_monomial(vt: VarTable, xexp: "tuple[int, ...]",
                       hexp: "tuple[int, ...]") -> Word:
    """The word spelling the normal-form monomial x^xexp h^hexp."""
    atoms: list[tuple] = []
    if any(xexp):
        atoms.append(poly_atom(vt.monomial(xexp)))
    for i, e in enumerate(hexp):
        atoms.extend(ham(i) for _ in range(e))
    return tuple(atoms)


class EnvelopeElement:
    """Normal-form element: a map (x exponents, h exponents) -> Fraction."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: VarTable,
                 terms: "dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction]"):
        self.vars = vars
        self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def zero(cls, vars: VarTable) -> "EnvelopeElement":
        return cls(vars, {})

    @classmethod
    def from_polynomial(cls, f: Polynomial) -> "EnvelopeElement":
        hexp = (0,) * len(f.vars)
        return cls(f.vars, {(e, hexp): c for e, c in f.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def filtration_degree(self) -> "int | None":
        """Largest number of derivation symbols in a term; None for zero."""
        if not self.terms:
            return None
        return max(sum(h) for _, h in self.terms)

    def polynomial_part(self) -> Polynomial:
        """The component with no derivation symbols."""
        hexp = (0,) * len(self.vars)
        return Polynomial(
            self.vars, {x: c for (x, h), c in self.terms.items() if h == hexp}
        )

    def __add__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        if not isinstance(other, EnvelopeElement):
            return NotImplemented
        if self.vars != other.vars:
            raise ValueError("elements over different variable tables")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, Fraction(0)) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return EnvelopeElement(self.vars, out)

    def __neg__(self) -> "EnvelopeElement":
        return EnvelopeElement(self.vars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "EnvelopeElement") -> "EnvelopeElement":
        if not isinstance(other, EnvelopeElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "EnvelopeElement":
        c = Fraction(c)
        return EnvelopeElement(self.vars, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, EnvelopeElement):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.vars.names
        chunks = []
        for (xexp, hexp), c in sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0])
        ):
            factors = []
            for name, e in zip(names, xexp):
                factors.append(name if e == 1 else f"{name}^{e}" if e else None)
            for name, e in zip(names, hexp):
                factors.append(
                    f"h({name})" if e == 1 else f"h({name})^{e}" if e else None
                )
            factors = [f for f in factors if f]
            if not factors:
                chunks.append(str(c))
            elif c == 1:
                chunks.append("*".join(factors))
            else:
                chunks.append("*".join([str(c)] + factors))
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"<envelope {self}>"


# -- word reduction -----------------------------------------------------------


def _is_redex(a: tuple, b: tuple) -> bool:
    if a[0] == "p":
        return b[0] == "p"
    return b[0] == "p" or (b[0] == "h" and a[1] > b[1])


def _find_redex(word: Word, strategy: str) -> "int | None":
    positions = range(len(word) - 1)
    if strategy == "rightmost":
        positions = reversed(positions)
    elif strategy != "leftmost":
        raise ValueError(f"unknown strategy {strategy!r}")
    for k in positions:
        if _is_redex(word[k], word[k + 1]):
            return k
    return None


def _rewrite_at(S: PoissonStructure, word: Word, k: int) -> "list[Word]":
    """Apply the one applicable rule at position k; returns replacement words."""
    head, a, b, tail = word[:k], word[k], word[k + 1], word[k + 2 :]
    if a[0] == "p" and b[0] == "p":
        return [head + (poly_atom(a[1] * b[1]),) + tail]
    if a[0] == "h" and b[0] == "p":
        i, f = a[1], b[1]
        out = [head + (b, a) + tail]
        moved = S.bracket(S.vars.gen(i), f)
        if moved:
            out.append(head + (poly_atom(moved),) + tail)
        return out
    # two derivation symbols out of order
    j, i = a[1], b[1]
    out = [head + (b, a) + tail]
    pair = S.entry(j, i)
    for k2 in range(len(S.vars)):
        c = partial_derivative(pair, k2)
        if c:
            out.append(head + (poly_atom(c), ham(k2)) + tail)
    return out


def _fold_normal(vt: VarTable, coeff: Fraction, word: Word,
                 terms: "dict[tuple, Fraction]") -> None:
    poly = vt.one()
    hexp = [0] * len(vt)
    for atom in word:
        if atom[0] == "p":
            poly = poly * atom[1]
        else:
            hexp[atom[1]] += 1
    key_h = tuple(hexp)
    for exps, c in poly.terms.items():
        key = (exps, key_h)
        s = terms.get(key, Fraction(0)) + coeff * c
        if s:
            terms[key] = s
        else:
            terms.pop(key, None)


def reduce_combination(S: PoissonStructure,
                       parts: "Iterable[tuple[Fraction, Word]]",
                       strategy: str = "leftmost") -> EnvelopeElement:
    """Reduce a rational combination of words to its normal form."""
    vt = S.vars
    agenda: list[tuple[Fraction, Word]] = []
    for coeff, word in parts:
        c = Fraction(coeff)
        if c and not any(a[0] == "p" and a[1].is_zero() for a in word):
            agenda.append((c, tuple(word)))
    terms: dict[tuple, Fraction] = {}
    while agenda:
        coeff, word = agenda.pop()
        k = _find_redex(word, strategy)
        if k is None:
            _fold_normal(vt, coeff, word, terms)
            continue
        for new_word in _rewrite_at(S, word, k):
            agenda.append((coeff, new_word))
    return EnvelopeElement(vt, terms)


def reduce_word(S: PoissonStructure, word: "Sequence[tuple]",
                strategy: str = "leftmost") -> EnvelopeElement:
    """Normal form of a single product of atoms."""
    return reduce_combination(S, [(_ONE, tuple(word))], strategy)


def multiply(S: PoissonStructure, a: EnvelopeElement,
             b: EnvelopeElement) -> EnvelopeElement:
    """Product of two normal forms, renormalized."""
    if a.vars != S.vars or b.vars != S.vars:
        raise ValueError("elements over a different variable table")
    parts = []
    for (x1, h1), c1 in a.terms.items():
        w1 = word_from_monomial(S.vars, x1, h1)
        for (x2, h2), c2 in b.terms.items():
            parts.append((c1 * c2, w1 + word_from_monomial(S.vars, x2, h2)))
    return reduce_combination(S, parts)


# -- confluence ---------------------------------------------------------------


class ConfluenceFailure(AssertionError):
    """Two reduction strategies disagreed on a word."""

    def __init__(self, word: Word, left: EnvelopeElement, right: EnvelopeElement):
        super().__init__(f"strategies disagree on word {word!r}")
        self.word = word
        self.left = left
        self.right = right


def _random_poly(rng: random.Random, vt: VarTable, max_degree: int = 2,
                 max_terms: int = 2) -> Polynomial:
    out = vt.zero()
    for _ in range(rng.randint(1, max_terms)):
        exps = [0] * len(vt)
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(len(vt))] += 1
        coeff = Fraction(rng.choice((1, -1, 2, -2, 1, 3)), rng.choice((1, 1, 2)))
        out = out + vt.monomial(exps, coeff)
    return out


def _random_word(rng: random.Random, vt: VarTable, max_len: int = 5) -> Word:
    atoms = []
    for _ in range(rng.randint(2, max_len)):
        if rng.random() < 0.55:
            atoms.append(ham(rng.randrange(len(vt))))
        else:
            atoms.append(poly_atom(_random_poly(rng, vt)))
    return tuple(atoms)


def confluence_check(S: PoissonStructure, samples: int = 200,
                     seed: int = 0, max_len: int = 5) -> int:
    """Reduce random words under both strategies; raise on any disagreement."""
    rng = random.Random(seed)
    for _ in range(samples):
        word = _random_word(rng, S.vars, max_len)
        left = reduce_combination(S, [(_ONE, word)], "leftmost")
        right = reduce_combination(S, [(_ONE, word)], "rightmost")
        if left != right:
            raise ConfluenceFailure(word, left, right)
    return samples


# -- associated graded dimension count ---------------------------------------


class GrMismatch(AssertionError):
    """Bigraded monomial counts of the envelope and its symmetric shadow differ."""

    def __init__(self, p: int, w: int, normal: int, symmetric: int,
                 table: "dict[tuple[int, int], tuple[int, int]]"):
        super().__init__(
            f"at filtration {p}, weight {w}: {normal} normal-form monomials "
            f"vs {symmetric} symmetric monomials; table so far: {table}"
        )
        self.table = table


def _fresh_symbol_table(vt: VarTable) -> VarTable:
    suffix = "_y"
    while any(n + suffix in vt.names for n in vt.names):
        suffix += "_"
    return VarTable(
        vt.names + tuple(n + suffix for n in vt.names), vt.weights + vt.weights
    )


def gr_dimension_check(S: PoissonStructure, max_filtration: int = 3,
                       max_weight: int = 6) -> "dict[tuple[int, int], int]":
    """Compare bigraded monomial counts with the symmetric algebra.

    The envelope side enumerates normal forms x^a h^b with b summing to the
    filtration degree (each h symbol carrying the weight of its variable);
    the symmetric side enumerates monomials of a polynomial ring with one
    fresh generator per variable.  The counts must agree in every bigrade:
    that equality is the combinatorial shadow of the normal form being a
    basis.
    """
    vt = S.vars
    doubled = _fresh_symbol_table(vt)
    n = len(vt)
    table: dict[tuple[int, int], int] = {}
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    for p in range(max_filtration + 1):
        for w in range(max_weight + 1):
            normal = 0
            for hexp in _compositions(p, n):
                rem = w - vt.weighted_degree(hexp)
                normal += len(monomials_of_weight(vt, rem))
            symmetric = sum(
                1
                for exps in monomials_of_weight(doubled, w)
                if sum(exps[n:]) == p
            )
            seen[(p, w)] = (normal, symmetric)
            if normal != symmetric:
                raise GrMismatch(p, w, normal, symmetric, seen)
            table[(p, w)] = normal
    return table


def _compositions(total: int, parts: int) -> "list[tuple[int, ...]]":
    if parts == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return out


# -- right-quotient reductions ------------------------------------------------


def right_module_residue(S: PoissonStructure, element: EnvelopeElement,
                         traces: "Sequence[Polynomial]") -> Polynomial:
    """Residue of a normal form in the right quotient by (h(i) - t_i).

    Peeling the leading derivation symbol off a term f h(j) rest leaves
    (f t_j - {x_j, f}) rest modulo the ideal, so each pass strictly lowers
    the number of symbols and the loop terminates with the polynomial part.
    """
    if element.vars != S.vars:
        raise ValueError("element over a different variable table")
    vt = S.vars
    zero_h = (0,) * len(vt)
    result = vt.zero()
    current = dict(element.terms)
    while current:
        pending: dict[tuple, Fraction] = {}
        for (xexp, hexp), c in current.items():
            if hexp == zero_h:
                result = result + vt.monomial(xexp, c)
                continue
            j = next(k for k, e in enumerate(hexp) if e)
            f = vt.monomial(xexp, c)
            reduced = f * traces[j] - S.bracket(vt.gen(j), f)
            lowered = hexp[:j] + (hexp[j] - 1,) + hexp[j + 1 :]
            for exps, c2 in reduced.terms.items():
                key = (exps, lowered)
                s = pending.get(key, Fraction(0)) + c2
                if s:
                    pending[key] = s
                else:
                    pending.pop(key, None)
        current = pending
    return result


def j_quotient_action(S: PoissonStructure, a: Polynomial, i: int) -> Polynomial:
    """Image of a * h(i) in the quotient by the trace-shifted right ideal.

    This is the envelope-side computation of the twisted right action and
    must agree with ``PoissonStructure.omega_h_action`` on every input.
    """
    element = reduce_word(S, (poly_atom(a), ham(i)))
    return right_module_residue(S, element, S.modular_data().traces)


# -- the grading automorphism of log-canonical structures ---------------------


class RelationViolation(AssertionError):
    """The twist map failed to preserve a defining relation."""

    def __init__(self, description: str, left: EnvelopeElement, right: EnvelopeElement):
        super().__init__(f"twist map breaks relation {description}: "
                         f"{left} != {right}")
        self.description = description
        self.left = left
        self.right = right


class ModuleMismatch(AssertionError):
    """The twisted module action disagreed with the closed-form action."""

    def __init__(self, sample: Polynomial, i: int, got: Polynomial, want: Polynomial):
        super().__init__(
            f"twisted action mismatch on ({sample}, index {i}): "
            f"got {got}, want {want}"
        )
        self.sample = sample
        self.index = i
        self.got = got
        self.want = want


@dataclass(frozen=True)
class NuReport:
    relations_checked: int
    module_samples: int


def nu_check(S: PoissonStructure, samples: int = 20, seed: int = 0) -> NuReport:
    """Verify the twist automorphism of a log-canonical structure.

    The map fixes the variables and sends h(i) to h(i) + (row sum i) * x_i.
    Two facts are checked mechanically: the images of both sides of every
    rewrite rule reduce to the same normal form, and twisting the plain
    right quotient action reproduces the trace-twisted module action on
    random samples.
    """
    mat = log_canonical_matrix(S)
    if mat is None:
        raise ValueError("the twist check needs a log-canonical structure")
    vt = S.vars
    n = len(vt)
    row_sums = [sum(row, Fraction(0)) for row in mat]

    def nu_expand(parts: "list[tuple[Fraction, Word]]") -> "list[tuple[Fraction, Word]]":
        out = []
        for coeff, word in parts:
            expansions: list[list[tuple[Fraction, Word]]] = []
            for atom in word:
                if atom[0] == "h":
                    i = atom[1]
                    options = [(Fraction(1), (atom,))]
                    if row_sums[i]:
                        options.append((row_sums[i], (poly_atom(vt.gen(i)),)))
                    expansions.append(options)
                else:
                    expansions.append([(Fraction(1), (atom,))])
            stack: list[tuple[Fraction, Word]] = [(coeff, ())]
            for options in expansions:
                stack = [
                    (c * oc, w + ow) for c, w in stack for oc, ow in options
                ]
            out.extend(stack)
        return out

    def reduced(parts: "list[tuple[Fraction, Word]]") -> EnvelopeElement:
        return reduce_combination(S, nu_expand(parts))

    relations = 0
    for i in range(n):
        for k in range(n):
            if i == k:
                continue
            lhs = [(Fraction(1), (ham(i), poly_atom(vt.gen(k))))]
            rhs: list[tuple[Fraction, Word]] = [
                (Fraction(1), (poly_atom(vt.gen(k)), ham(i)))
            ]
            pair = S.entry(i, k)
            if pair:
                rhs.append((Fraction(1), (poly_atom(pair),)))
            left, right = reduced(lhs), reduced(rhs)
            if left != right:
                raise RelationViolation(
                    f"h({vt.names[i]}) * {vt.names[k]}", left, right)
            relations += 1
    for j in range(n):
        for i in range(j):
            lhs = [(Fraction(1), (ham(j), ham(i)))]
            rhs = [(Fraction(1), (ham(i), ham(j)))]
            pair = S.entry(j, i)
            for k in range(n):
                c = partial_derivative(pair, k)
                if c:
                    rhs.append((Fraction(1), (poly_atom(c), ham(k))))
            left, right = reduced(lhs), reduced(rhs)
            if left != right:
                raise RelationViolation(
                    f"h({vt.names[j]}) * h({vt.names[i]})", left, right)
            relations += 1

    zero_traces = [vt.zero()] * n
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        a = _random_poly(rng, vt, max_degree=3, max_terms=3)
        i = rng.randrange(n)
        twisted = reduced([(Fraction(1), (poly_atom(a), ham(i)))])
        got = right_module_residue(S, twisted, zero_traces)
        want = S.omega_h_action(a, i)
        if got != want:
            raise ModuleMismatch(a, i, got, want)
        checked += 1
    return NuReport(relations, checked)
