"""Algebraic laws on random elements of the catalog algebras."""

import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from helpers import base_elements, elements, letters, words
from rtgw.catalog.so3 import so3_datum
from rtgw.catalog.su3 import I11, I21, I22, su3_datum
from rtgw.tgw import alg_star, bracket_closed_form, grade, reduce_word, symmetric_bracket

SU3 = su3_datum()
SO3 = so3_datum()


@given(words(SU3), words(SU3), words(SU3))
@settings(max_examples=200)
def test_associativity_su3(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(words(SO3), words(SO3), words(SO3))
@settings(max_examples=100)
def test_associativity_so3(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(elements(SU3), elements(SU3), elements(SU3))
@settings(max_examples=50)
def test_distributivity(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(elements(SU3), elements(SU3))
@settings(max_examples=100)
def test_star_is_involutive_homomorphism(a, b):
    assert alg_star(alg_star(a)) == a
    assert alg_star(a * b) == alg_star(a) * alg_star(b)


@given(elements(SO3), elements(SO3))
@settings(max_examples=100)
def test_star_homomorphism_so3(a, b):
    assert alg_star(alg_star(a)) == a
    assert alg_star(a * b) == alg_star(a) * alg_star(b)


@given(base_elements(SU3), st.lists(st.integers(-2, 2), min_size=6, max_size=6))
@settings(max_examples=100)
def test_star_conjugates_shift(f, s):
    assert f.shift(s).star() == f.star().shift([-k for k in s])


@given(words(SU3), words(SU3))
@settings(max_examples=100)
def test_grading_is_additive(a, b):
    ab = a * b
    if a.is_zero() or b.is_zero():
        assert ab.is_zero()
        return
    (u,), (v,) = grade(a), grade(b)
    assert grade(ab) == {tuple(x + y for x, y in zip(u, v))}


@given(seq=letters(SU3, 6), seed=st.integers(0, 10 ** 6))
@settings(max_examples=100)
def test_confluence_without_memo(monkeypatch_env, seq, seed):
    f = SU3.ring.one()
    d = SU3.with_entries()
    expect = reduce_word(seq, f, SU3)
    assert reduce_word(seq, f, d, rng=random.Random(seed)) == expect
    assert d._cocycle == {}


@pytest.fixture(scope="module")
def monkeypatch_env():
    mp = pytest.MonkeyPatch()
    mp.setenv("RTGW_MEMO", "0")
    yield
    mp.undo()


GRADES = list(product(range(-2, 3), repeat=3))


@pytest.mark.parametrize("block,alpha", [((I21, I22), 1), ((I21, I22), 2), ((I11,), 1), ((3, 4, 5), 1),
                                         ((3, 4, 5), 2)])
def test_symmetric_bracket_enumeration(block, alpha):
    for k in GRADES:
        w = SU3.element({k: SU3.ring.one()})
        assert symmetric_bracket(w, block, alpha) == bracket_closed_form(SU3, k, block, alpha), k
