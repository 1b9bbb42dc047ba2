"""Independent verifiers for the rook-based normal ordering.

Two oracles that share no code with the rook route:

* ``rewrite_normal`` applies aA -> Aa + I directly to sums of words until
  every word is normally ordered.
* ``apply_to_monomial`` / ``equal_by_action`` use the polynomial
  representation, a = d/dx and A = multiplication by x, which is faithful.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from math import perm
from typing import Dict, Iterator, Mapping, Optional, Tuple

from .algebra import NormalForm
from .config import DEFAULT_REWRITE_LIMIT
from .word_path import Letter, Word

_A = Letter.ANNIHILATOR
_C = Letter.CREATOR


class RewriteStrategy(Enum):
    LEFTMOST = "leftmost"
    RIGHTMOST = "rightmost"


class WordSum:
    """Finite linear combination of words with nonzero integer coefficients."""

    def __init__(self, terms: Optional[Mapping[Word, int]] = None):
        self._terms: Dict[Word, int] = {w: c for w, c in (terms or {}).items() if c}

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Word, int]]:
        return iter(sorted(self._terms.items(), key=lambda item: (len(item[0]), str(item[0]))))

    def __eq__(self, other) -> bool:
        return isinstance(other, WordSum) and self._terms == other._terms

    @property
    def terms(self) -> Dict[Word, int]:
        return dict(self._terms)


@dataclass(frozen=True)
class RewriteStats:
    rounds: int
    rewrites: int
    peak_terms: int


def _find_redex(letters: Tuple[Letter, ...], strategy: RewriteStrategy) -> int:
    indices = range(len(letters) - 1)
    if strategy is RewriteStrategy.RIGHTMOST:
        indices = reversed(indices)
    for i in indices:
        if letters[i] is _A and letters[i + 1] is _C:
            return i
    return -1


def _rewrite_round(words: WordSum, strategy: RewriteStrategy) -> Tuple[WordSum, int]:
    out: Dict[Word, int] = defaultdict(int)
    rewrites = 0
    for word, coeff in words.terms.items():
        letters = word.letters
        i = _find_redex(letters, strategy)
        if i < 0:
            out[word] += coeff
            continue
        rewrites += 1
        out[Word(letters[:i] + (_C, _A) + letters[i + 2:])] += coeff
        out[Word(letters[:i] + letters[i + 2:])] += coeff
    return WordSum(out), rewrites


def rewrite_step(
    words: WordSum, strategy: RewriteStrategy = RewriteStrategy.LEFTMOST
) -> WordSum:
    """Rewrite one redex in every word that still has one."""
    return _rewrite_round(words, strategy)[0]


def rewrite_normal_with_stats(
    word: Word,
    limit: int = DEFAULT_REWRITE_LIMIT,
    strategy: RewriteStrategy = RewriteStrategy.LEFTMOST,
) -> Tuple[NormalForm, RewriteStats]:
    """Normal-order ``word`` by naive rewriting, counting the work done.

    Applies ``rewrite_step`` until a round rewrites nothing; the last round
    only confirms that every word is normally ordered.

    Raises:
        ValueError: If the word is longer than ``limit``; the number of
            intermediate words grows exponentially with length.
    """
    if len(word) > limit:
        raise ValueError(f"word length {len(word)} exceeds rewrite limit {limit}")

    current = WordSum({word: 1})
    rounds = rewrites = 0
    peak = 1
    while True:
        peak = max(peak, len(current))
        rounds += 1
        current, done = _rewrite_round(current, strategy)
        if not done:
            break
        rewrites += done

    result: Dict[Tuple[int, int], int] = defaultdict(int)
    for ordered, coeff in current.terms.items():
        creators = sum(1 for x in ordered.letters if x is _C)
        result[(creators, len(ordered) - creators)] += coeff
    return NormalForm(result), RewriteStats(rounds=rounds, rewrites=rewrites, peak_terms=peak)


def rewrite_normal(
    word: Word,
    limit: int = DEFAULT_REWRITE_LIMIT,
    strategy: RewriteStrategy = RewriteStrategy.LEFTMOST,
) -> NormalForm:
    return rewrite_normal_with_stats(word, limit, strategy)[0]


# --- POLYNOMIAL REPRESENTATION ---


class IntPolynomial:
    """Single-variable polynomial with integer coefficients, zero terms dropped."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Optional[Mapping[int, int]] = None):
        self._coefficients = {
            int(d): int(c) for d, c in (coefficients or {}).items() if c
        }

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "IntPolynomial":
        return cls({degree: coeff})

    @property
    def coefficients(self) -> Dict[int, int]:
        return dict(self._coefficients)

    @property
    def degree(self) -> int:
        return max(self._coefficients, default=-1)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = dict(self._coefficients)
        for d, c in other._coefficients.items():
            out[d] = out.get(d, 0) + c
        return IntPolynomial(out)

    def __str__(self) -> str:
        if not self._coefficients:
            return "0"
        parts = []
        for d in sorted(self._coefficients, reverse=True):
            c = self._coefficients[d]
            power = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            if d and abs(c) == 1:
                body = power
            else:
                body = f"{abs(c)}{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coefficients!r})"


def apply_to_monomial(x: NormalForm, m: int) -> IntPolynomial:
    """Act with ``x`` on x^m: A^r a^s sends x^m to m!/(m-s)! x^(m-s+r)."""
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    out: Dict[int, int] = defaultdict(int)
    for (r, s), coeff in x.terms.items():
        if s > m:
            continue
        out[m - s + r] += coeff * perm(m, s)
    return IntPolynomial(out)


def apply_to_polynomial(x: NormalForm, p: IntPolynomial) -> IntPolynomial:
    total = IntPolynomial()
    for degree, coeff in p.coefficients.items():
        image = apply_to_monomial(x, degree)
        total = total + IntPolynomial({d: coeff * c for d, c in image.coefficients.items()})
    return total


def equal_by_action(x: NormalForm, y: NormalForm) -> bool:
    """Compare two elements by their action on x^0 .. x^S, S the top annihilator power.

    Checking up to S suffices: the action on x^m determines every
    coefficient with annihilator power m once the lower ones are known.
    """
    top = max(x.max_annihilator_power, y.max_annihilator_power)
    return all(apply_to_monomial(x, m) == apply_to_monomial(y, m) for m in range(top + 1))
