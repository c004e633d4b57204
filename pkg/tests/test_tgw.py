import threading

import pytest

from rtgw.catalog.su3 import I11, I21, I22, sl3_generators
from rtgw.poly import GroupElement
from rtgw.tgw import (X, Y, InconsistentDatum, alg_mul, alg_star, bracket_closed_form, canonical_word, commutator,
                      derive_mu, g_act, g_invariant, grade, is_central, is_homogeneous, reduce_word,
                      symmetric_bracket, tgwa_identities, validate)


def test_validate_catalog(su3, so3):
    r = validate(su3)
    assert r.passed, r.to_text(verbose=False)
    assert len(r.records) == 159
    r = validate(so3)
    assert r.passed, r.to_text(verbose=False)
    assert "three-index identities are vacuous for q < 3" in r.notes


def test_collapse_relations(su3):
    for i in range(3):
        assert su3.y(i) * su3.x(i) == su3.t[i]
        assert su3.x(i) * su3.y(i) == su3.tbar(i)


def test_coefficient_pushing(su3):
    l11 = su3.lam(I11)
    # x_i f = sigma_i(f) x_i with sigma_i: l_i -> l_i - 1
    assert su3.x(I11) * l11 == (l11 - 1) * su3.x(I11)
    assert su3.y(I11) * l11 == (l11 + 1) * su3.y(I11)
    assert su3.x(I21) * l11 == l11 * su3.x(I21)


def test_skew_commutation(su3):
    mu = su3.mu
    for a, b in ((X, X), (X, Y), (Y, X), (Y, Y)):
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                lhs = su3.word([(i, a), (j, b)])
                rhs = su3.word([(j, b), (i, a)], mu.get(a, b, i, j))
                assert lhs == rhs


def test_mixed_factors_are_one(su3):
    # derived from t alone; off-diagonal mixed factors collapse to 1 for this datum
    mu = derive_mu(su3)
    for i in range(3):
        for j in range(3):
            if i != j:
                assert mu.xy[i][j] == su3.ring.one()
        assert mu.xy[i][i] == su3.tbar(i) / su3.t[i]


def test_derived_tables_are_stars(su3):
    mu = su3.mu
    for i in range(3):
        for j in range(3):
            assert mu.yy[i][j] == mu.xx[i][j].star()
            assert mu.yx[i][j] == mu.xy[i][j].star()


def test_unit_and_normal_form(su3):
    one = su3.one()
    assert one.terms == {(0, 0, 0): su3.ring.one()}
    w = su3.word([(I21, X), (I11, X)])
    assert grade(w) == {(1, 1, 0)}
    assert canonical_word((1, -2, 0)) == [(0, X), (1, Y), (1, Y)]


def test_grades(su3):
    g = sl3_generators(su3)
    assert grade(su3.word([(I11, X), (I21, X)])) == {(1, 1, 0)}
    assert grade(g["H1"]) == {(0, 0, 0)}
    assert grade(g["X2"]) == {(0, 1, 0), (0, 0, 1)}
    assert grade(g["X3"]) == {(1, 1, 0), (1, 0, 1)}
    assert is_homogeneous(g["X1"]) and not is_homogeneous(g["X2"])


def test_star_examples(su3):
    assert alg_star(su3.x(I11)) == su3.y(I11)
    u1 = su3.x(I11) + su3.y(I11)
    assert alg_star(u1) == u1
    g = sl3_generators(su3)
    assert alg_star(g["X3"]) == -g["Y3"]
    for i in (I21, I22):
        rho = g["X3"].datum.ring(1) / su3.ring(su3.ctx.var(I11) + 1 - su3.ctx.var(i))
        lhs = alg_star(su3.word([(I11, Y), (i, Y)], rho))
        assert lhs == -su3.word([(i, X), (I11, X)], rho)


def test_star_reverses_brackets(su3):
    # star is a conjugate-linear homomorphism, so [a, b]* = [a*, b*]
    g = sl3_generators(su3)
    lhs = alg_star(commutator(g["Y1"], g["X1"]))
    assert lhs == commutator(g["X1"], g["Y1"])
    assert alg_star(g["H1"]) == -g["H1"]


def test_centrality(so3, su3):
    assert is_central(so3.lam(2))
    assert is_central(so3.lam(3))
    assert not is_central(so3.lam(0))
    assert is_central(so3.scalar(5))
    # x f = sigma(f) x with sigma: l -> l - 1
    assert commutator(so3.x(0), so3.lam(0)) == -so3.x(0)


def test_group_action(su3):
    g = sl3_generators(su3)
    swap = GroupElement.transposition(su3.ctx.p, I21, I22)
    assert g_act(su3.x(I21), swap) == su3.x(I22)
    assert g_invariant(g["X2"], swap)
    star = GroupElement(tuple(range(su3.ctx.p)), True)
    assert g_invariant(su3.x(I11) + su3.y(I11), star)
    # X1 and X2 are fixed by the swap, hence so is X3 = [X2, X1]
    assert g_act(g["X3"], swap) == commutator(g_act(g["X2"], swap), g_act(g["X1"], swap))
    assert g_act(g["X3"], swap) == g["X3"]


def test_symmetric_bracket_examples(su3):
    g = sl3_generators(su3)
    assert symmetric_bracket(su3.x(I21), (I21, I22), 1) == su3.x(I21)
    assert symmetric_bracket(g["H1"], (I21, I22), 1).is_zero()
    assert symmetric_bracket(su3.x(I21), (3, 4, 5), 2).is_zero()
    a = su3.word([(I11, Y), (I21, Y)], su3.ring(1) / su3.ring(su3.ctx.var(I11) + 1 - su3.ctx.var(I21)))
    b = su3.word([(I22, X), (I11, X)], su3.ring(1) / su3.ring(su3.ctx.var(I11) + 1 - su3.ctx.var(I22)))
    assert commutator(a, b).is_zero()
    assert bracket_closed_form(su3, (0, 1, 0), (I21, I22), 1) == su3.x(I21)
    with pytest.raises(ValueError):
        symmetric_bracket(su3.x(0), (0,), 3)


def test_tgwa_identities(su3, so3):
    assert tgwa_identities(su3).passed
    r = tgwa_identities(so3)
    assert r.passed and r.count("tgwa_t_quotient") == 0


def test_corrupted_mixed_factor_fails(su3):
    mu = [list(r) for r in su3.mu_xx]
    mu[0][1] = mu[0][1] * su3.ring(-1)
    bad = su3.with_entries(mu_xx=mu)
    assert not validate(bad).passed


def test_inconsistent_datum_raises(su3):
    t = list(su3.t)
    t[0] = t[0] + su3.ring(1)
    with pytest.raises(InconsistentDatum):
        derive_mu(su3.with_entries(t=t), check=True)


def test_memo_can_be_disabled(su3, monkeypatch):
    monkeypatch.setenv("RTGW_MEMO", "0")
    d = su3.with_entries()
    w = d.word([(I11, X), (I21, Y)])
    assert alg_mul(w, w.star()) == su3.word([(I11, X), (I21, Y)]) * su3.word([(I11, X), (I21, Y)]).star()
    assert d._cocycle == {}


def test_threads_share_memo(su3):
    d = su3.with_entries()
    words = [d.word([(i, a), (j, b)]) for i in range(3) for j in range(3) for a in (X, Y) for b in (X, Y)]
    out = {}

    def work(k):
        out[k] = [alg_mul(u, v) for u in words[:6] for v in words[:6]]

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(out[k] == out[0] for k in out)


def test_reduce_word_random_order(su3):
    import random

    letters = [(I22, Y), (I11, X), (I21, X), (I11, Y), (I22, X)]
    base = reduce_word(letters, su3.ring.one(), su3)
    for seed in range(5):
        assert reduce_word(letters, su3.ring.one(), su3, rng=random.Random(seed)) == base
