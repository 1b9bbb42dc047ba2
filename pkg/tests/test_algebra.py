"""Tests for ordo.algebra: normal forms, structure constants and ring laws.

Examples are checked exactly; the ring laws run as hypothesis properties over
small random normal forms.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ordo.algebra import (
    MonomialIndex,
    NormalForm,
    add,
    commutator,
    crossed_monomial,
    multiply,
    multiply_basis,
    normal_order_word,
    power,
    scalar_mul,
    structure_constants,
    subtract,
)
from ordo.oracle import rewrite_normal
from ordo.word_path import Word

GOLDEN_FORM = {(5, 4): 1, (4, 3): 10, (3, 2): 23, (2, 1): 9}

a = NormalForm.monomial(0, 1)
A = NormalForm.monomial(1, 0)

exponents = st.integers(min_value=0, max_value=6)
coefficients = st.integers(min_value=-9, max_value=9)
normal_forms = st.dictionaries(
    st.tuples(exponents, exponents), coefficients, max_size=4
).map(NormalForm)
words = st.lists(st.sampled_from("aA"), max_size=8).map(lambda letters: Word.parse("".join(letters)))


def _basis_word(r: int, s: int) -> str:
    return "A" * r + "a" * s


# --- WORDS ---


def test_normal_order_golden_word():
    assert normal_order_word(Word.parse("aAaAAAaAa")) == NormalForm(GOLDEN_FORM)


def test_normal_order_defining_relation():
    assert normal_order_word(Word.parse("aA")) == NormalForm({(1, 1): 1, (0, 0): 1})
    assert normal_order_word(Word.parse("Aa")) == NormalForm({(1, 1): 1})
    assert normal_order_word(Word.parse("")) == NormalForm.identity()


def test_crossed_monomial():
    word = Word.parse("aAaAAAaAa")
    assert crossed_monomial(word, 0) == MonomialIndex(5, 4)
    assert crossed_monomial(word, 3) == MonomialIndex(2, 1)
    with pytest.raises(ValueError, match="cannot cross out"):
        crossed_monomial(word, 5)


def test_normal_order_is_positive():
    """Every coefficient of a normal-ordered word is a positive rook number."""
    for text in ("aAaAAAaAa", "aaAA", "aAaAaAaA", "aaaAAA"):
        assert all(coeff > 0 for _, coeff in normal_order_word(Word.parse(text)))


@settings(max_examples=200)
@given(u=words, v=words)
def test_concatenation_homomorphism(u, v):
    assert normal_order_word(u + v) == multiply(normal_order_word(u), normal_order_word(v))


# --- STRUCTURE CONSTANTS ---


def test_multiply_basis_examples():
    assert multiply_basis((1, 1), (1, 1)) == NormalForm({(2, 2): 1, (1, 1): 1})
    assert multiply_basis((0, 2), (2, 0)) == NormalForm({(2, 2): 1, (1, 1): 4, (0, 0): 2})
    for r in range(4):
        for k in range(4):
            for l in range(4):
                assert multiply_basis((r, 0), (k, l)) == NormalForm({(r + k, l): 1})


def test_structure_constants_match_rewriting():
    """All 1296 products with exponents up to 5 against the naive rewriter."""
    for r in range(6):
        for s in range(6):
            for k in range(6):
                for l in range(6):
                    word = Word.parse(_basis_word(r, s) + _basis_word(k, l))
                    assert multiply_basis((r, s), (k, l)) == rewrite_normal(word), (r, s, k, l)


def test_gammas_depend_only_on_inner_exponents():
    for s in range(5):
        for k in range(5):
            reference = sorted(structure_constants((0, s), (k, 0)).values())
            for r in range(4):
                for l in range(4):
                    assert sorted(structure_constants((r, s), (k, l)).values()) == reference


def test_structure_constants_reject_negative():
    with pytest.raises(ValueError):
        structure_constants((-1, 0), (0, 0))


# --- RING OPERATIONS ---


def test_add_examples():
    assert add(NormalForm({(1, 1): 1}), NormalForm({(1, 1): -1})) == NormalForm.zero()
    assert add(NormalForm({(0, 0): 2}), NormalForm({(1, 0): 3})) == NormalForm({(0, 0): 2, (1, 0): 3})
    assert normal_order_word(Word.parse("aA")) + NormalForm({(1, 1): -1}) == NormalForm.identity()


def test_scalar_mul_examples():
    x = NormalForm({(1, 1): 2})
    assert scalar_mul(0, x) == NormalForm.zero()
    assert scalar_mul(1, x) == x
    assert scalar_mul(3, x) == NormalForm({(1, 1): 6})
    assert 3 * x == x * 3 == scalar_mul(3, x)


def test_multiply_examples():
    assert multiply(NormalForm.identity(), NormalForm(GOLDEN_FORM)) == NormalForm(GOLDEN_FORM)
    assert multiply(a, A) == NormalForm({(1, 1): 1, (0, 0): 1})
    assert (a + A) * (a + A) == NormalForm({(0, 2): 1, (1, 1): 2, (2, 0): 1, (0, 0): 1})


def test_power_examples():
    assert power(NormalForm(GOLDEN_FORM), 0) == NormalForm.identity()
    assert power(NormalForm({(1, 1): 1}), 2) == multiply_basis((1, 1), (1, 1))
    assert a**3 == NormalForm({(0, 3): 1})
    with pytest.raises(ValueError):
        power(a, -1)


def test_canonical_commutation_relation():
    assert commutator(a, A) == NormalForm.identity()
    assert commutator(A, a) == -NormalForm.identity()
    assert subtract(a * A, A * a) == NormalForm.identity()


def test_zero_coefficients_are_dropped():
    x = NormalForm({(1, 0): 0, (0, 1): 4})
    assert len(x) == 1
    assert x.coefficient(1, 0) == 0
    with pytest.raises(ValueError):
        NormalForm({(-1, 0): 1})


@settings(max_examples=200, deadline=None)
@given(x=normal_forms, y=normal_forms, z=normal_forms)
def test_multiply_is_associative(x, y, z):
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@settings(max_examples=200, deadline=None)
@given(x=normal_forms, y=normal_forms, z=normal_forms)
def test_multiply_distributes_over_add(x, y, z):
    assert multiply(x, add(y, z)) == add(multiply(x, y), multiply(x, z))
    assert multiply(add(x, y), z) == add(multiply(x, z), multiply(y, z))


@settings(max_examples=200, deadline=None)
@given(x=normal_forms)
def test_unit_and_zero_laws(x):
    one = NormalForm.identity()
    assert multiply(one, x) == x == multiply(x, one)
    assert add(x, NormalForm.zero()) == x
    assert subtract(x, x) == NormalForm.zero()


@settings(max_examples=200, deadline=None)
@given(x=normal_forms, n=st.integers(min_value=0, max_value=4))
def test_power_matches_repeated_multiply(x, n):
    expected = NormalForm.identity()
    for _ in range(n):
        expected = multiply(expected, x)
    assert power(x, n) == expected


# --- RENDERING ---


def test_to_text_highest_term_first():
    assert NormalForm(GOLDEN_FORM).to_text() == "A^5 a^4 + 10 A^4 a^3 + 23 A^3 a^2 + 9 A^2 a"
    assert multiply_basis((0, 2), (2, 0)).to_text() == "A^2 a^2 + 4 A a + 2 I"
    assert NormalForm.zero().to_text() == "0"
    assert NormalForm({(1, 0): -1, (0, 0): 2}).to_text() == "-A + 2 I"
    assert NormalForm({(1, 1): 1, (0, 0): -3}).to_text() == "A a - 3 I"


def test_to_json_is_ascending_and_round_trips():
    x = multiply_basis((0, 2), (2, 0))
    payload = x.to_json()
    assert payload["terms"][0] == {"r": 0, "s": 0, "coeff": "2"}
    assert [(t["r"], t["s"]) for t in payload["terms"]] == [(0, 0), (1, 1), (2, 2)]
    assert NormalForm.from_json(payload) == x


def test_big_coefficients_stay_exact():
    x = power(a + A, 30)
    assert x.coefficient(0, 0) == 6190283353629375  # 29!!
    assert NormalForm.from_json(x.to_json()) == x
