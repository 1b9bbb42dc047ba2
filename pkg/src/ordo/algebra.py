"""Normally ordered elements of the Heisenberg-Weyl algebra.

Every element is stored as its unique expansion in the basis
b(r, s) = A^r a^s with integer coefficients. Words are normal-ordered through
the rook numbers of their Ferrers board; products of basis elements use the
closed-form structure constants of rectangular boards.
"""

from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Mapping, NamedTuple, Tuple

from .rook import RookVector, rook_numbers, rook_numbers_rect
from .word_path import FerrersBoard, Word, board_of, excess_counts


class MonomialIndex(NamedTuple):
    """Exponents of the basis element A^r a^s; (0, 0) is the identity."""

    r: int
    s: int


def _term_order(index: MonomialIndex) -> Tuple[int, int]:
    return index.r + index.s, index.r


class NormalForm:
    """Finite map MonomialIndex -> nonzero int, immutable after construction."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], int] = None):
        clean: Dict[MonomialIndex, int] = {}
        for (r, s), coeff in (terms or {}).items():
            if r < 0 or s < 0:
                raise ValueError(f"monomial exponents must be nonnegative, got ({r}, {s})")
            coeff = int(coeff)
            if coeff:
                clean[MonomialIndex(r, s)] = coeff
        self._terms = clean

    # --- constructors ---

    @classmethod
    def identity(cls) -> "NormalForm":
        return cls({(0, 0): 1})

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls()

    @classmethod
    def monomial(cls, r: int, s: int, coeff: int = 1) -> "NormalForm":
        return cls({(r, s): coeff})

    @classmethod
    def from_json(cls, payload: Mapping) -> "NormalForm":
        terms: Dict[Tuple[int, int], int] = {}
        for term in payload.get("terms", []):
            key = (int(term["r"]), int(term["s"]))
            terms[key] = terms.get(key, 0) + int(term["coeff"])
        return cls(terms)

    # --- mapping view ---

    @property
    def terms(self) -> Dict[MonomialIndex, int]:
        return dict(self._terms)

    def coefficient(self, r: int, s: int) -> int:
        return self._terms.get(MonomialIndex(r, s), 0)

    def sorted_terms(self) -> List[Tuple[MonomialIndex, int]]:
        """Terms in canonical order: ascending (r + s, r)."""
        return sorted(self._terms.items(), key=lambda item: _term_order(item[0]))

    def __iter__(self) -> Iterator[Tuple[MonomialIndex, int]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def max_annihilator_power(self) -> int:
        return max((index.s for index in self._terms), default=0)

    # --- equality ---

    def __eq__(self, other) -> bool:
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # --- arithmetic ---

    def __add__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else subtract(self, other)

    def __rsub__(self, other):
        other = _coerce(other)
        return NotImplemented if other is None else subtract(other, self)

    def __neg__(self) -> "NormalForm":
        return scalar_mul(-1, self)

    def __mul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        if isinstance(other, NormalForm):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return scalar_mul(other, self)
        return NotImplemented

    def __pow__(self, n: int) -> "NormalForm":
        if not isinstance(n, int):
            return NotImplemented
        return power(self, n)

    # --- rendering ---

    def to_text(self) -> str:
        """Render highest degree first, e.g. ``A^2 a^2 + 4 A a + 2 I``."""
        if not self._terms:
            return "0"
        pieces = []
        for index, coeff in reversed(self.sorted_terms()):
            magnitude = abs(coeff)
            body = _monomial_text(index)
            if magnitude != 1:
                body = f"{magnitude} {body}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(pieces)

    def to_json(self) -> Dict[str, list]:
        return {
            "terms": [
                {"r": index.r, "s": index.s, "coeff": str(coeff)}
                for index, coeff in self.sorted_terms()
            ]
        }

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"NormalForm({dict(self.sorted_terms())!r})"


def _coerce(value):
    if isinstance(value, NormalForm):
        return value
    if isinstance(value, int):
        return NormalForm({(0, 0): value})
    return None


def _monomial_text(index: MonomialIndex) -> str:
    if index == (0, 0):
        return "I"
    parts = []
    if index.r:
        parts.append("A" if index.r == 1 else f"A^{index.r}")
    if index.s:
        parts.append("a" if index.s == 1 else f"a^{index.s}")
    return " ".join(parts)


# --- WORDS ---


def crossed_monomial(word: Word, k: int) -> MonomialIndex:
    """The monomial left after crossing out ``k`` (a, A) pairs and commuting the rest."""
    creators, annihilators = excess_counts(word)
    if k < 0 or k > min(creators, annihilators):
        raise ValueError(
            f"cannot cross out {k} pairs from a word with {creators} creators "
            f"and {annihilators} annihilators"
        )
    return MonomialIndex(creators - k, annihilators - k)


def normal_order_word(
    word: Word, rook_fn: Callable[[FerrersBoard], RookVector] = rook_numbers
) -> NormalForm:
    """Normal-order ``word`` as sum_k r_B(k) * A^(R-k) a^(S-k) over its board B.

    ``rook_fn`` defaults to the memoized recursion; the selftest passes a
    corrupted one to check that mismatches are caught.
    """
    creators, annihilators = excess_counts(word)
    counts = rook_fn(board_of(word))
    return NormalForm(
        {(creators - k, annihilators - k): c for k, c in enumerate(counts)}
    )


# --- STRUCTURE CONSTANTS ---


@lru_cache(maxsize=4096)
def _gammas(s: int, k: int) -> Tuple[int, ...]:
    return rook_numbers_rect(s, k).counts


def structure_constants(x: Tuple[int, int], y: Tuple[int, int]) -> Dict[MonomialIndex, int]:
    """Nonzero gamma coefficients of b(x) * b(y), keyed by the resulting monomial.

    The coefficient of A^(r+k-i) a^(s+l-i) is i! C(s, i) C(k, i); it depends on
    the inner exponents s and k only.
    """
    r, s = x
    k, l = y
    if min(r, s, k, l) < 0:
        raise ValueError(f"monomial exponents must be nonnegative, got {x} and {y}")
    return {
        MonomialIndex(r + k - i, s + l - i): gamma
        for i, gamma in enumerate(_gammas(s, k))
    }


def multiply_basis(x: Tuple[int, int], y: Tuple[int, int]) -> NormalForm:
    return NormalForm(structure_constants(x, y))


# --- RING OPERATIONS ---


def add(x: NormalForm, y: NormalForm) -> NormalForm:
    terms = dict(x._terms)
    for index, coeff in y._terms.items():
        terms[index] = terms.get(index, 0) + coeff
    return NormalForm(terms)


def subtract(x: NormalForm, y: NormalForm) -> NormalForm:
    return add(x, scalar_mul(-1, y))


def scalar_mul(c: int, x: NormalForm) -> NormalForm:
    if c == 0:
        return NormalForm()
    return NormalForm({index: c * coeff for index, coeff in x._terms.items()})


def multiply(x: NormalForm, y: NormalForm) -> NormalForm:
    terms: Dict[Tuple[int, int], int] = {}
    for left, left_coeff in x._terms.items():
        for right, right_coeff in y._terms.items():
            scale = left_coeff * right_coeff
            for index, gamma in structure_constants(left, right).items():
                terms[index] = terms.get(index, 0) + scale * gamma
    return NormalForm(terms)


def power(x: NormalForm, n: int) -> NormalForm:
    """``x`` multiplied by itself ``n`` times; ``power(x, 0)`` is the identity."""
    if n < 0:
        raise ValueError(f"exponent must be nonnegative, got {n}")
    result = NormalForm.identity()
    base = x
    # Square-and-multiply.
    while n:
        if n & 1:
            result = multiply(result, base)
        n >>= 1
        if n:
            base = multiply(base, base)
    return result


def commutator(x: NormalForm, y: NormalForm) -> NormalForm:
    return subtract(multiply(x, y), multiply(y, x))
