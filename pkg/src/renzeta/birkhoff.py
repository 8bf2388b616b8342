"""Birkhoff decomposition of series-valued characters on the word algebra.

A character assigns each word a truncated Laurent series, multiplicatively
for the quasi-shuffle product and sending the empty word to 1.  Against the
pole projector it splits as phi = counterterm^(-1) * renormalized in the
convolution algebra.  Both parts come from one recursion over proper
deconcatenation splits: with

    prepared(x) = phi(x) + sum counterterm(x') phi(x'')

over reduced splits x' (x) x'', the counterterm is -P(prepared(x)) and the
renormalized part is (1 - P)(prepared(x)) = prepared(x) + counterterm(x).
Since suffixes of prefixes are not themselves needed, a bottom-up pass over
the prefixes of a word fills the memo in one sweep.

Precision bookkeeping rides along: a character carries the uniform window
precision its word map delivers plus the largest pole depth it is sized for;
the counterterm of a word of pole depth M keeps at least (precision - M)
known coefficients, enough for exact constant terms whenever the budget
covers the word.
"""

from __future__ import annotations

from dataclasses import dataclass

from renzeta.hopf import (
    EMPTY_WORD,
    HopfElement,
    Word,
    coproduct,
    differentiate,
    reduced_coproduct,
)
from renzeta.laurent import (
    InsufficientPrecision,
    TruncatedLaurentSeries,
    one_series,
    windows_agree,
    zero_series,
)

__all__ = [
    "PrecisionBudget",
    "Character",
    "DecompositionSession",
    "convolve",
    "zplus_length2_direct",
    "CheckReport",
    "verify_differential_compatibility",
]


@dataclass(frozen=True)
class PrecisionBudget:
    """How much window every character value carries, and for whom.

    requested_precision is the uniform O(eps^B) bound of word values;
    max_pole_depth is the deepest word the budget is sized for, so that
    renormalized parts keep requested_precision - max_pole_depth > 0 known
    Taylor coefficients.
    """

    requested_precision: int
    max_pole_depth: int
    required_constant_term_exactness: bool = True

    def __post_init__(self):
        if self.requested_precision < 1:
            raise ValueError("requested precision must be >= 1")
        if self.max_pole_depth < 0:
            raise ValueError("pole depth budget must be >= 0")
        if self.required_constant_term_exactness \
                and self.requested_precision <= self.max_pole_depth:
            raise ValueError(
                "exact constant terms need precision > pole depth budget")


class Character:
    """Word-indexed series with multiplicative meaning; linear on elements."""

    __slots__ = ("ring", "budget", "_word_fn", "_cache")

    def __init__(self, ring, word_fn, budget: PrecisionBudget):
        self.ring = ring
        self.budget = budget
        self._word_fn = word_fn
        self._cache: dict[Word, TruncatedLaurentSeries] = {}

    def on_word(self, word: Word) -> TruncatedLaurentSeries:
        hit = self._cache.get(word)
        if hit is None:
            if len(word) == 0:
                hit = one_series(self.ring, self.budget.requested_precision)
            else:
                hit = self._word_fn(word)
            self._cache[word] = hit
        return hit

    def on_element(self, x: HopfElement) -> TruncatedLaurentSeries:
        acc = zero_series(self.ring, self.budget.requested_precision)
        for word, coeff in x.terms.items():
            acc = acc + self.on_word(word).scale(coeff)
        return acc


class DecompositionSession:
    """Memoized counterterm/renormalized values for one character."""

    __slots__ = ("character", "memo_minus", "memo_plus")

    def __init__(self, character: Character):
        self.character = character
        one = one_series(
            character.ring, character.budget.requested_precision)
        self.memo_minus: dict[Word, TruncatedLaurentSeries] = {
            EMPTY_WORD: one}
        self.memo_plus: dict[Word, TruncatedLaurentSeries] = {
            EMPTY_WORD: one}

    def _admit(self, word: Word):
        if not word.is_nonpositive():
            raise ValueError(
                f"{word} leaves the non-positive sector this "
                f"decomposition is defined on")
        depth = word.pole_depth()
        if depth > self.character.budget.max_pole_depth:
            raise InsufficientPrecision(
                f"word {word} has pole depth {depth}, beyond the session "
                f"budget {self.character.budget.max_pole_depth}")

    def _ensure(self, word: Word):
        for end in range(1, len(word) + 1):
            prefix = word[:end]
            if prefix in self.memo_minus:
                continue
            prepared = self.character.on_word(prefix)
            if end > 1:
                for left, right in reduced_coproduct(prefix):
                    prepared = prepared + self.memo_minus[left] \
                        * self.character.on_word(right)
            minus = -(prepared.pole_part())
            self.memo_minus[prefix] = minus
            self.memo_plus[prefix] = prepared + minus

    def counterterm(self, word: Word) -> TruncatedLaurentSeries:
        """The pure-pole part phi_minus on one word."""
        self._admit(word)
        self._ensure(word)
        return self.memo_minus[word]

    def renormalized(self, word: Word) -> TruncatedLaurentSeries:
        """The pole-free part phi_plus on one word."""
        self._admit(word)
        self._ensure(word)
        return self.memo_plus[word]

    def counterterm_of(self, x: HopfElement) -> TruncatedLaurentSeries:
        acc = zero_series(
            self.character.ring,
            self.character.budget.requested_precision)
        for word, coeff in x.terms.items():
            acc = acc + self.counterterm(word).scale(coeff)
        return acc

    def renormalized_of(self, x: HopfElement) -> TruncatedLaurentSeries:
        acc = zero_series(
            self.character.ring,
            self.character.budget.requested_precision)
        for word, coeff in x.terms.items():
            acc = acc + self.renormalized(word).scale(coeff)
        return acc


def convolve(f, g, word: Word) -> TruncatedLaurentSeries:
    """Convolution (f * g)(word) over all deconcatenation splits.

    f and g map words to series over one shared ring.
    """
    acc = None
    for left, right in coproduct(word):
        term = f(left) * g(right)
        acc = term if acc is None else acc + term
    return acc


def zplus_length2_direct(character: Character,
                         word: Word) -> TruncatedLaurentSeries:
    """Closed form of the renormalized part on a length-2 word:
    (1 - P)(phi(ab) - P(phi(a)) phi(b))."""
    if len(word) != 2:
        raise ValueError("closed form applies to length-2 words only")
    whole = character.on_word(word)
    head = character.on_word(word[:1])
    tail = character.on_word(word[1:])
    inner = whole - head.pole_part() * tail
    return inner.finite_part()


@dataclass(frozen=True)
class CheckReport:
    """One verified identity: what was compared and whether it held."""

    word: str
    check: str
    passed: bool
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {
            "word": self.word,
            "check": self.check,
            "pass": self.passed,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


def verify_differential_compatibility(session: DecompositionSession,
                                      word: Word) -> list:
    """Check that both decomposition parts intertwine the word derivation
    with d/d(eps): part(d word) = (part(word))' for plus and minus."""
    if not word.is_nonpositive():
        raise ValueError("differential compatibility lives in the "
                         "non-positive sector")
    lowered = differentiate(word)
    reports = []
    for label, by_word, linear in (
            ("differential-plus", session.renormalized,
             session.renormalized_of),
            ("differential-minus", session.counterterm,
             session.counterterm_of)):
        lhs = linear(lowered)
        rhs = by_word(word).derivative()
        reports.append(CheckReport(
            word=str(word),
            check=label,
            passed=windows_agree(lhs, rhs),
            lhs=str(lhs),
            rhs=str(rhs),
        ))
    return reports
