"""Quasi-shuffle Hopf algebra on tensor words of (s, r) letters.

A letter pairs an integer exponent s with a positive direction weight r;
letters form a semigroup under componentwise addition, (s,r)(s',r') =
(s+s', r+r').  Words are tuples of letters, the empty word is the unit, and
elements are finite linear combinations of words with scalar coefficients.
The product interleaves two words, optionally merging a pair of crossing
letters through the semigroup; it satisfies the recursion

    u * v = u1 (u' * v) + v1 (u * v') + (u1 v1) (u' * v')

with u1, v1 the first letters.  The coproduct is deconcatenation, the counit
kills every nonempty word, and the grading by word length is a filtration for
the product: merging letters shortens words, never lengthens them.

The derivation lowers one exponent per term, weighted by that letter's
direction: each position (s, r) contributes r times the word with (s-1, r)
in its place.  It is a Leibniz map for the product and co-Leibniz for the
coproduct, which is exactly what the decomposition engine relies on.

Directions live either in Q (strictly positive) or in Q(delta) restricted to
delta-polynomials with nonnegative coefficients and not identically zero, so
positivity for all small delta > 0 is decidable coefficientwise.
"""

from __future__ import annotations

from fractions import Fraction

from renzeta.arith import DeltaRationalFunction

__all__ = [
    "Letter",
    "Word",
    "EMPTY_WORD",
    "HopfElement",
    "quasi_shuffle",
    "mixable_shuffle_direct",
    "coproduct",
    "reduced_coproduct",
    "counit",
    "differentiate",
    "element_coproduct",
    "tensor_quasi_shuffle",
]


def _check_direction(r):
    if isinstance(r, int):
        r = Fraction(r)
    if isinstance(r, Fraction):
        if r <= 0:
            raise ValueError(f"direction must be positive, got {r}")
        return r
    if isinstance(r, DeltaRationalFunction):
        if not r.has_nonnegative_coefficients() or r.is_zero():
            raise ValueError(
                f"direction {r} is not a nonzero delta-polynomial with "
                f"nonnegative coefficients")
        return r
    raise TypeError(f"unsupported direction {r!r}")


def _direction_key(r):
    if isinstance(r, Fraction):
        return (0, r, 0)
    return (1,) + r.sort_key()


class Letter:
    """One tensor slot: integer exponent s, positive direction r."""

    __slots__ = ("s", "r")

    def __init__(self, s: int, r):
        if not isinstance(s, int):
            raise TypeError("exponent must be an integer")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "r", _check_direction(r))

    def __setattr__(self, name, value):
        raise AttributeError("Letter is immutable")

    def __mul__(self, other: "Letter") -> "Letter":
        if not isinstance(other, Letter):
            return NotImplemented
        return Letter(self.s + other.s, self.r + other.r)

    def __eq__(self, other):
        if not isinstance(other, Letter):
            return NotImplemented
        return self.s == other.s and self.r == other.r

    def __hash__(self):
        return hash((self.s, self.r))

    def sort_key(self):
        return (self.s, _direction_key(self.r))

    def __str__(self):
        return f"({self.s},{_format_direction(self.r)})"

    def __repr__(self):
        return f"Letter({self.s}, {self.r!r})"


class Word:
    """A finite tensor word; the empty word is the algebra unit."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        ls = tuple(letters)
        for l in ls:
            if not isinstance(l, Letter):
                raise TypeError(f"not a letter: {l!r}")
        object.__setattr__(self, "letters", ls)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def from_pairs(cls, pairs) -> "Word":
        return cls(Letter(s, r) for s, r in pairs)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word(self.letters[index])
        return self.letters[index]

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def sort_key(self):
        return (len(self.letters), tuple(l.sort_key() for l in self.letters))

    def is_nonpositive(self) -> bool:
        """All exponents <= 0: the sector the renormalization acts on."""
        return all(l.s <= 0 for l in self.letters)

    def pole_depth(self) -> int:
        """Worst pole order of the regularized window: sum of (|s_i| + 1)."""
        if not self.is_nonpositive():
            raise ValueError(f"{self} leaves the non-positive sector")
        return sum(1 - l.s for l in self.letters)

    def __str__(self):
        if not self.letters:
            return "()"
        return "".join(str(l) for l in self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Word":
        """Inverse of str: ``(s1,r1)(s2,r2)...``; ``()`` is the unit."""
        s = text.replace(" ", "")
        if s in ("", "()"):
            return EMPTY_WORD
        if not (s.startswith("(") and s.endswith(")")):
            raise ValueError(f"malformed word {text!r}")
        letters = []
        for chunk in s[1:-1].split(")("):
            head, sep, tail = chunk.partition(",")
            if not sep:
                raise ValueError(f"malformed letter ({chunk})")
            letters.append(Letter(int(head), _parse_direction(tail)))
        return cls(letters)


EMPTY_WORD = Word(())


def _parse_direction(text: str):
    if "d" in text:
        return DeltaRationalFunction.parse(text)
    return Fraction(text)


def _format_direction(r) -> str:
    # letter directions are rationals or delta-polynomials, so the compact
    # form "1+2d" stays free of parentheses and commas inside word syntax
    return str(r).replace(" ", "").replace("*", "")


class HopfElement:
    """Finite linear combination of words; the product is quasi-shuffle."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for word, coeff in terms.items():
                if isinstance(coeff, int):
                    coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                data[word] = data.get(word, 0) + coeff
        object.__setattr__(
            self, "terms", {w: c for w, c in data.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("HopfElement is immutable")

    @classmethod
    def zero(cls) -> "HopfElement":
        return cls({})

    @classmethod
    def unit(cls) -> "HopfElement":
        return cls({EMPTY_WORD: Fraction(1)})

    @classmethod
    def from_word(cls, word: Word, coeff=1) -> "HopfElement":
        return cls({word: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: wc[0].sort_key())

    def coefficient(self, word: Word):
        return self.terms.get(word, Fraction(0))

    def word_length_bound(self) -> int:
        """Filtration degree: the longest word in the support."""
        return max((len(w) for w in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return HopfElement(out)

    def __sub__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return HopfElement({w: -c for w, c in self.terms.items()})

    def scale(self, coeff) -> "HopfElement":
        if isinstance(coeff, int):
            coeff = Fraction(coeff)
        return HopfElement({w: coeff * c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HopfElement):
            return quasi_shuffle(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, HopfElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            parts.append(str(w) if c == 1 else f"{c}·{w}")
        return " + ".join(parts)

    def __repr__(self):
        return f"HopfElement({str(self)!r})"

    def to_json(self) -> list:
        return [
            {"coeff": str(c),
             "word": [[l.s, _format_direction(l.r)] for l in w]}
            for w, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, obj) -> "HopfElement":
        terms = {}
        for entry in obj:
            word = Word(Letter(s, _parse_direction(str(r)))
                        for s, r in entry["word"])
            coeff = entry["coeff"]
            coeff = Fraction(coeff) if "d" not in str(coeff) else \
                DeltaRationalFunction.parse(str(coeff))
            terms[word] = terms.get(word, 0) + coeff
        return cls(terms)


# ---------------------------------------------------------------------------
# Product: recursive quasi-shuffle with memoized word-level expansion, plus
# the direct interleave-and-merge enumeration used as its oracle.

_shuffle_cache: dict[tuple, dict] = {}


def _shuffle_letter_tuples(u: tuple, v: tuple) -> dict:
    """Expansion of u * v as {letter-tuple: integer multiplicity}."""
    if not u:
        return {v: 1}
    if not v:
        return {u: 1}
    key = (u, v)
    hit = _shuffle_cache.get(key)
    if hit is not None:
        return hit
    out: dict[tuple, int] = {}

    def emit(head, rest, mult):
        for tail, m in rest.items():
            w = (head,) + tail
            out[w] = out.get(w, 0) + m * mult

    emit(u[0], _shuffle_letter_tuples(u[1:], v), 1)
    emit(v[0], _shuffle_letter_tuples(u, v[1:]), 1)
    emit(u[0] * v[0], _shuffle_letter_tuples(u[1:], v[1:]), 1)
    _shuffle_cache[key] = out
    return out


def quasi_shuffle(x: HopfElement, y: HopfElement) -> HopfElement:
    """Bilinear extension of the recursive interleave-or-merge product."""
    out: dict[Word, object] = {}
    for wu, cu in x.terms.items():
        for wv, cv in y.terms.items():
            c = cu * cv
            for letters, mult in _shuffle_letter_tuples(
                    wu.letters, wv.letters).items():
                w = Word(letters)
                out[w] = out.get(w, 0) + mult * c
    return HopfElement(out)


def mixable_shuffle_direct(u: Word, v: Word) -> HopfElement:
    """Oracle expansion: enumerate order-preserving slot assignments.

    A term of u * v of length n picks positions for u and for v inside n
    slots, each order-preserving, jointly covering every slot; a slot hit
    by both holds the merged letter.
    """
    from itertools import combinations

    p, q = len(u), len(v)
    out: dict[Word, int] = {}
    for n in range(max(p, q), p + q + 1):
        for upos in combinations(range(n), p):
            for vpos in combinations(range(n), q):
                if set(upos) | set(vpos) != set(range(n)):
                    continue
                slots = []
                ui = {pos: i for i, pos in enumerate(upos)}
                vi = {pos: i for i, pos in enumerate(vpos)}
                for slot in range(n):
                    if slot in ui and slot in vi:
                        slots.append(u[ui[slot]] * v[vi[slot]])
                    elif slot in ui:
                        slots.append(u[ui[slot]])
                    else:
                        slots.append(v[vi[slot]])
                w = Word(slots)
                out[w] = out.get(w, 0) + 1
    return HopfElement(out)


# ---------------------------------------------------------------------------
# Coalgebra.

def coproduct(word: Word) -> tuple:
    """All deconcatenation splits (prefix, suffix), unit ones included."""
    return tuple((word[:i], word[i:]) for i in range(len(word) + 1))


def reduced_coproduct(word: Word) -> tuple:
    """Proper splits only; undefined on the empty word."""
    if len(word) == 0:
        raise ValueError("the empty word has no reduced coproduct")
    return tuple((word[:i], word[i:]) for i in range(1, len(word)))


def counit(x: HopfElement):
    """Coefficient of the empty word."""
    return x.coefficient(EMPTY_WORD)


def element_coproduct(x: HopfElement) -> dict:
    """Linear extension of the coproduct: {(prefix, suffix): coefficient}."""
    out: dict[tuple, object] = {}
    for w, c in x.terms.items():
        for pair in coproduct(w):
            out[pair] = out.get(pair, 0) + c
    return {pair: c for pair, c in out.items() if c != 0}


def tensor_quasi_shuffle(t1: dict, t2: dict) -> dict:
    """Componentwise product on the tensor square, bilinear in both slots."""
    out: dict[tuple, object] = {}
    for (a1, a2), c in t1.items():
        for (b1, b2), d in t2.items():
            left = quasi_shuffle(
                HopfElement.from_word(a1), HopfElement.from_word(b1))
            right = quasi_shuffle(
                HopfElement.from_word(a2), HopfElement.from_word(b2))
            cd = c * d
            for w1, c1 in left.terms.items():
                for w2, c2 in right.terms.items():
                    key = (w1, w2)
                    out[key] = out.get(key, 0) + cd * c1 * c2
    return {pair: c for pair, c in out.items() if c != 0}


# ---------------------------------------------------------------------------
# The derivation.

def differentiate(x) -> HopfElement:
    """Lower one exponent per term: position i of w maps to r_i times the
    word with s_i replaced by s_i - 1."""
    if isinstance(x, Word):
        x = HopfElement.from_word(x)
    out: dict[Word, object] = {}
    for w, c in x.terms.items():
        for i, letter in enumerate(w):
            lowered = Word(
                w.letters[:i]
                + (Letter(letter.s - 1, letter.r),)
                + w.letters[i + 1:])
            contrib = c * letter.r
            out[lowered] = out.get(lowered, 0) + contrib
    return HopfElement(out)
