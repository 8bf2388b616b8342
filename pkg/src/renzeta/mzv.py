"""Directional regularized nested zeta sums with non-positive exponents:
exact Laurent windows, and the renormalized values extracted from them.

The object is the sum over n_1 > ... > n_k > 0 of prod_i n_i^(m_i)
exp(n_i r_i eps), with m_i = -s_i >= 0 and positive directions r_i.  The
substitution n_i = j_i + ... + j_k (all j >= 1) factorizes the exponential
through cumulative directions rho_l = r_1 + ... + r_l, and expanding each
power n_i^(m_i) multinomially over its j-slots turns the whole sum into a
finite combination of products of one-variable series

    sum_{j >= 1} j^b exp(j rho eps)
        = (-1)^(b+1) b! (rho eps)^(-b-1) + sum_{j >= 0} zeta(-b-j)
          (rho eps)^j / j!

Every product in the expansion of one argument has the same pole depth
M = sum_i (m_i + 1), so requesting each factor at precision
(target + M) leaves the assembled window exact past the target.

Renormalized values: the decomposition engine splits the regularized window,
and the constant term of its pole-free part at a given direction vector is
the directional renormalized value.  The direction-free value at s takes
directions |s_i| + delta, lands in Q(delta), and evaluates at delta = 0;
when the canonical form still has a pole there, PoleAtZero propagates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from renzeta.arith import DELTA, DeltaRationalFunction, zeta_nonpositive
from renzeta.birkhoff import (
    Character,
    CheckReport,
    DecompositionSession,
    PrecisionBudget,
)
from renzeta.hopf import Letter, Word
from renzeta.laurent import (
    DELTA_FIELD,
    InsufficientPrecision,
    RATIONAL_FIELD,
    TruncatedLaurentSeries,
)

__all__ = [
    "argument_word",
    "pole_depth",
    "ExpansionPlan",
    "expansion_plans",
    "one_var_series",
    "regularized_expansion",
    "expansion_character",
    "decomposition_session",
    "renormalized_series",
    "renorm_directional",
    "renorm_mzv",
    "symmetrized_zero",
    "generating_check",
    "two_var_an_check",
    "numeric_oracle",
    "oracle_tail_bound",
]


def _coerce_direction(r):
    if isinstance(r, int):
        return Fraction(r)
    if isinstance(r, (Fraction, DeltaRationalFunction)):
        return r
    raise TypeError(f"unsupported direction {r!r}")


def argument_word(exponents, directions) -> Word:
    """Validated (s, r) word for one nested-sum argument."""
    s = tuple(exponents)
    r = tuple(_coerce_direction(x) for x in directions)
    if len(s) == 0:
        raise ValueError("argument needs at least one slot")
    if len(s) != len(r):
        raise ValueError(
            f"{len(s)} exponents against {len(r)} directions")
    for x in s:
        if not isinstance(x, int) or x > 0:
            raise ValueError(
                f"exponent {x} is not a non-positive integer")
    return Word(Letter(x, rx) for x, rx in zip(s, r))


def pole_depth(exponents) -> int:
    """sum of (|s_i| + 1): the pole order of the regularized window."""
    return sum(1 - s for s in exponents)


def _ring_for(directions):
    if any(isinstance(r, DeltaRationalFunction) for r in directions):
        return DELTA_FIELD
    return RATIONAL_FIELD


# ---------------------------------------------------------------------------
# The multinomial factorization.

@dataclass(frozen=True)
class ExpansionPlan:
    """One term of the factorized sum.

    assignments[i] spreads m_i over slots i..k-1; slot_exponents[l] collects
    the powers landing on j_l; multiplicity is the product of multinomial
    coefficients.  The slot exponents always resum to sum_i m_i.
    """

    cumulative_directions: tuple
    assignments: tuple
    slot_exponents: tuple
    multiplicity: int


def _compositions(total: int, slots: int):
    if slots == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, slots - 1):
            yield (first,) + rest


def _multinomial(total: int, parts) -> int:
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def expansion_plans(exponents, directions):
    """Yield every multinomial assignment for the given argument."""
    word = argument_word(exponents, directions)
    k = len(word)
    ms = [-l.s for l in word]
    rho = []
    acc = None
    for l in word:
        acc = l.r if acc is None else acc + l.r
        rho.append(acc)
    rho = tuple(rho)

    def rec(i, chosen):
        if i == k:
            slots = [0] * k
            for j, comp in enumerate(chosen):
                for off, a in enumerate(comp):
                    slots[j + off] += a
            mult = 1
            for j, comp in enumerate(chosen):
                mult *= _multinomial(ms[j], comp)
            yield ExpansionPlan(
                cumulative_directions=rho,
                assignments=tuple(chosen),
                slot_exponents=tuple(slots),
                multiplicity=mult,
            )
            return
        for comp in _compositions(ms[i], k - i):
            yield from rec(i + 1, chosen + [comp])

    yield from rec(0, [])


def one_var_series(power: int, direction, precision: int,
                   ring=None) -> TruncatedLaurentSeries:
    """Window of sum_{j>=1} j^power exp(j direction eps).

    Single pole of order power+1 with coefficient
    (-1)^(power+1) power! direction^(-power-1), no other negative
    exponents, and zeta(-power-j) direction^j / j! at eps^j.
    """
    if power < 0:
        raise ValueError("slot power must be >= 0")
    if precision < 1:
        raise ValueError("window must reach past eps^0")
    direction = _coerce_direction(direction)
    if ring is None:
        ring = _ring_for((direction,))
    return _one_var_window(power, direction, precision, ring)


@lru_cache(maxsize=None)
def _one_var_window(b, direction, precision, ring):
    rho = ring.coerce(direction)
    terms = {
        -(b + 1): (-1) ** (b + 1) * math.factorial(b) * rho ** (-(b + 1))}
    for j in range(precision):
        terms[j] = zeta_nonpositive(b + j) * rho ** j \
            * Fraction(1, math.factorial(j))
    vals = [terms.get(e, ring.zero) for e in range(-(b + 1), precision)]
    return TruncatedLaurentSeries(ring, -(b + 1), vals)


def regularized_expansion(exponents, directions,
                          precision: int) -> TruncatedLaurentSeries:
    """Exact window of the regularized nested sum, O(eps^precision) tail.

    Every plan has total pole depth M, so the factor with pole order b+1
    is requested at precision + M - (b+1): each plan product then lands
    exactly on the window [-M, precision).
    """
    if precision < 1:
        raise ValueError("window must reach past eps^0")
    word = argument_word(exponents, directions)
    ring = _ring_for(tuple(l.r for l in word))
    depth = word.pole_depth()
    acc = None
    for plan in expansion_plans(exponents, directions):
        prod = None
        for b, rho in zip(plan.slot_exponents, plan.cumulative_directions):
            factor = one_var_series(
                b, rho, precision + depth - (b + 1), ring)
            prod = factor if prod is None else prod * factor
        prod = prod.scale(plan.multiplicity)
        acc = prod if acc is None else acc + prod
    return acc.truncated(precision)


# ---------------------------------------------------------------------------
# Renormalization.

def expansion_character(ring, taylor_order: int,
                        max_pole_depth: int) -> Character:
    """The regularized-sum character, sized so every word within the depth
    budget keeps taylor_order + 1 exact Taylor coefficients after
    decomposition."""
    budget = PrecisionBudget(
        requested_precision=taylor_order + 1 + max_pole_depth,
        max_pole_depth=max_pole_depth,
    )

    def word_fn(word: Word) -> TruncatedLaurentSeries:
        if not word.is_nonpositive():
            raise ValueError(f"{word} leaves the non-positive sector")
        if word.pole_depth() > budget.max_pole_depth:
            raise InsufficientPrecision(
                f"word {word} exceeds the depth budget "
                f"{budget.max_pole_depth}")
        return regularized_expansion(
            tuple(l.s for l in word), tuple(l.r for l in word),
            budget.requested_precision)

    return Character(ring, word_fn, budget)


def decomposition_session(taylor_order: int, max_pole_depth: int,
                          ring=RATIONAL_FIELD) -> DecompositionSession:
    return DecompositionSession(
        expansion_character(ring, taylor_order, max_pole_depth))


def renormalized_series(exponents, directions,
                        taylor_order: int) -> TruncatedLaurentSeries:
    """Pole-free part of the decomposition, exact through eps^taylor_order."""
    word = argument_word(exponents, directions)
    ring = _ring_for(tuple(l.r for l in word))
    session = decomposition_session(
        taylor_order, word.pole_depth(), ring)
    return session.renormalized(word)


def _freeze(exponents, directions):
    word = argument_word(exponents, directions)
    return tuple(l.s for l in word), tuple(l.r for l in word)


@lru_cache(maxsize=None)
def _renorm_directional(s: tuple, r: tuple):
    return renormalized_series(s, r, 0).constant_term()


def renorm_directional(exponents, directions):
    """Renormalized value at an explicit direction vector: the constant
    term of the pole-free part.  Exact scalar in Q or Q(delta)."""
    s, r = _freeze(exponents, directions)
    return _renorm_directional(s, r)


def renorm_mzv(exponents) -> Fraction:
    """Direction-free renormalized value: directions |s_i| + delta, then
    the delta -> 0 limit of the resulting rational function."""
    s = tuple(exponents)
    directions = tuple(Fraction(-x) + DELTA for x in s)
    value = renorm_directional(s, directions)
    return value.limit_at_zero()


def symmetrized_zero(depth: int, directions) -> Fraction:
    """Average of the all-zero-exponent value over direction orderings."""
    from itertools import permutations

    r = tuple(_coerce_direction(x) for x in directions)
    if len(r) != depth:
        raise ValueError(f"need exactly {depth} directions")
    zeros = (0,) * depth
    acc = None
    for perm in permutations(r):
        v = renorm_directional(zeros, perm)
        acc = v if acc is None else acc + v
    return acc * Fraction(1, math.factorial(depth))


# ---------------------------------------------------------------------------
# Consistency reports.

def generating_check(depth: int, directions, order: int) -> CheckReport:
    """Taylor coefficients of the renormalized all-zero window against the
    weighted sums of non-positive renormalized values they should equal."""
    r = tuple(_coerce_direction(x) for x in directions)
    if len(r) != depth:
        raise ValueError(f"need exactly {depth} directions")
    zeros = (0,) * depth
    series = renormalized_series(zeros, r, order)
    lhs = []
    rhs = []
    for n in range(order + 1):
        lhs.append(series.coefficient(n))
        total = Fraction(0)
        for split in _compositions(n, depth):
            value = renorm_directional(tuple(-i for i in split), r)
            weight = Fraction(1)
            for i, rj in zip(split, r):
                weight *= rj ** i * Fraction(1, math.factorial(i))
            total += value * weight
        rhs.append(total)
    word = argument_word(zeros, r)
    return CheckReport(
        word=str(word),
        check="generating-function",
        passed=lhs == rhs,
        lhs=str([str(c) for c in lhs]),
        rhs=str([str(c) for c in rhs]),
    )


def two_var_an_check(n: int, r1, r2) -> CheckReport:
    """Depth-two Taylor coefficient identity: n! times the eps^n coefficient
    of the finite part of the double window against binomially weighted
    renormalized values plus the zeta correction term."""
    r1 = _coerce_direction(r1)
    r2 = _coerce_direction(r2)
    reg = regularized_expansion((0, 0), (r1, r2), n + 1)
    an = reg.finite_part().coefficient(n) * math.factorial(n)
    total = Fraction(0)
    for i in range(n + 1):
        total += math.comb(n, i) * r1 ** i * r2 ** (n - i) \
            * renorm_directional((-i, i - n), (r1, r2))
    total -= r2 ** (n + 1) / r1 * zeta_nonpositive(n + 1) \
        * Fraction(1, n + 1)
    word = argument_word((0, 0), (r1, r2))
    return CheckReport(
        word=str(word),
        check="taylor-coefficient-formula",
        passed=an == total,
        lhs=str(an),
        rhs=str(total),
    )


# ---------------------------------------------------------------------------
# Floating-point cross-check.

def numeric_oracle(exponents, directions, eps0: float,
                   terms: int) -> float:
    """Partial nested sum at a concrete negative eps, summed by layered
    prefix accumulation so depth costs only a factor, not a power."""
    word = argument_word(exponents, directions)
    if not eps0 < 0:
        raise ValueError("numeric evaluation needs eps < 0")
    if terms < 1:
        raise ValueError("need at least one term")
    ms = [-l.s for l in word]
    rs = [float(l.r) if isinstance(l.r, Fraction) else None
          for l in word]
    if any(r is None for r in rs):
        raise TypeError("numeric oracle needs rational directions")

    def layer(m, r):
        return [n ** m * math.exp(n * r * eps0)
                for n in range(1, terms + 1)]

    vals = layer(ms[-1], rs[-1])
    for i in range(len(ms) - 2, -1, -1):
        outer = layer(ms[i], rs[i])
        prefix = 0.0
        nxt = [0.0] * terms
        for idx in range(terms):
            nxt[idx] = outer[idx] * prefix
            prefix += vals[idx]
        vals = nxt
    return math.fsum(vals)


def oracle_tail_bound(exponents, directions, eps0: float,
                      terms: int) -> float:
    """Upper bound on what truncating the outer index drops: the dropped
    terms fix n_1 > terms, carry at most n_1^(sum m + depth - 1) inner
    chains and weight, and decay like exp(n_1 r_1 eps)."""
    word = argument_word(exponents, directions)
    if not eps0 < 0:
        raise ValueError("tail bounds need eps < 0")
    a = sum(-l.s for l in word) + len(word) - 1
    q = math.exp(float(word[0].r) * eps0)
    total = 0.0
    n = terms + 1
    while n < terms + 200000:
        t = n ** a * q ** n
        total += t
        if t < 1e-300 or t < total * 1e-18:
            break
        n += 1
    return total
