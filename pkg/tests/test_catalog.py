from fractions import Fraction
from itertools import combinations

import pytest

from rtgw.catalog import builtin, casimir_report, invariant_ring_generators, so3 as SO, su3 as SU, verify
from rtgw.catalog.common import bracket_coordinates, consistent_scalings, decompose
from rtgw.catalog.matrices import E, Matrix3, bracket, d_tensor, gell_mann, invariant_d_tensor, structure_constants
from rtgw.poly import I, SQRT3, Coefficient, group_generators, perm_apply
from rtgw.tgw import commutator, is_central


@pytest.fixture(scope="module")
def gens():
    return SU.sl3_generators()


# --- su(3) datum ----------------------------------------------------------

def test_su3_t_values(su3):
    ctx = su3.ctx
    l = ctx.var
    assert su3.t[SU.I11] == su3.ring((l(0) - l(1) + 1) * (l(0) - l(2) + 1))
    assert SU.rg(ctx, SU.I11, 3) == ctx.one()  # storeys two apart


def test_su3_mu_closed_form(su3):
    rep = SU.verify_su3()
    for rel in ("su3_mu_closed_form", "su3_mu_xy_is_one", "su3_mu_form_tbar", "su3_mu_form_t", "su3_tbar_is_star",
                "su3_rg_bar", "derive_mu_consistent", "su3_invariant_ring"):
        recs = rep.by_relation(rel)
        assert recs and all(r.verdict for r in recs), rel


def test_invariant_rings():
    su = invariant_ring_generators("su3")
    ctx = SU.context()
    assert su[1] == (ctx.var(1) + ctx.var(2) - 1).scale(I)
    so = invariant_ring_generators("so3")
    sctx = SO.context()
    assert so[3] == sctx.var(2) * sctx.var(3)
    assert so[3].star() == so[3]
    for ring, c in ((su, ctx), (so, sctx)):
        for f in ring:
            for _, g in group_generators(c):
                assert perm_apply(g, f) == f
    with pytest.raises(ValueError):
        invariant_ring_generators("g2")


def test_builtin_lookup():
    assert builtin("su3").q == 3
    with pytest.raises(KeyError):
        builtin("sp4")


# --- sl(3) table ------------------------------------------------------------

SIGN_ONLY = {"[Y1,X3]=-X2", "[X1,Y3]=Y2", "[Y2,X3]=X1", "[X2,Y3]=-Y1"}


def test_table_entries(gens):
    rep = SU.verify_sl3_table()
    table = rep.by_relation("sl3_table")
    assert len(table) == 8 + 7 + 6 + 5 + 4 + 3  # upper-triangular printed cells
    failing = {r.indices for r in table if not r.verdict}
    assert failing == SIGN_ONLY


def test_sign_only_entries_follow_from_jacobi(gens):
    g = gens
    # [Y1, X3] with X3 = [X2, X1], expanded by Jacobi from entries that hold as printed
    via_jacobi = commutator(commutator(g["Y1"], g["X2"]), g["X1"]) + commutator(g["X2"], commutator(g["Y1"], g["X1"]))
    assert commutator(g["Y1"], g["X2"]).is_zero()
    assert commutator(g["X2"], g["H1"]) == g["X2"]
    assert commutator(g["Y1"], g["X3"]) == via_jacobi == g["X2"]


def test_auxiliary_steps():
    rep = SU.verify_sl3_table()
    for rel in ("sl3_basic_product_yx", "sl3_basic_product_xy", "sl3_mixed_product_yx", "sl3_mixed_product_xy",
                "sl3_vanishing_bracket", "sl3_bracket_Y3_X3", "sl3_rho_from_mu", "sl3_mu_from_rho",
                "sl3_rho_star_step", "sl3_X3_definition", "sl3_Y3_definition", "sl3_bracket_X1_X2", "sl3_jacobi",
                "sl3_cartan_commutative", "sl3_cartan_self_normalizing", "sl3_S_invariant"):
        recs = rep.by_relation(rel)
        assert recs and all(r.verdict for r in recs), rel
    assert len(rep.by_relation("sl3_jacobi")) == 120
    sums = {r.indices: r.verdict for r in rep.by_relation("sl3_diagonal_bracket_sum")}
    assert sums == {"=-H3": False, "=H3": True}


def test_anticommutator_value(gens, su3):
    ctx = su3.ctx
    rho = {i: su3.ring(1) / su3.ring(ctx.var(SU.I11) + 1 - ctx.var(i)) for i in (SU.I21, SU.I22)}
    a = su3.word([(SU.I11, -1), (SU.I21, -1)], rho[SU.I21])
    b = su3.word([(SU.I22, 1), (SU.I11, 1)], rho[SU.I22])
    # rho1 rho2 t11 = 1 and its star is 1, so the anticommutator is 2 * y21 x22
    assert rho[SU.I21] * rho[SU.I22] * su3.t[SU.I11] == su3.ring.one()
    assert a * b + b * a == su3.word([(SU.I21, -1), (SU.I22, 1)]).scale(2)


# --- matrix oracles -------------------------------------------------------------

def test_matrix_brackets():
    assert bracket(E(2, 1), E(1, 2)) == E(2, 2) - E(1, 1)
    assert bracket(E(3, 2), E(2, 1)) == E(3, 1)
    m = E(1, 3).scale(I) + E(2, 2)
    assert bracket(m, m).is_zero()


def test_gell_mann_structure_constants():
    F = gell_mann()
    f = structure_constants(F)
    half = Coefficient.coerce(Fraction(1, 2))
    expected = {(0, 1, 2): Coefficient(1), (0, 3, 6): half, (0, 4, 5): -half, (1, 3, 5): half, (1, 4, 6): half,
                (2, 3, 4): half, (2, 5, 6): -half, (3, 4, 7): SQRT3 / 2, (5, 6, 7): SQRT3 / 2}
    assert {k: v for k, v in f.items() if k[0] < k[1] < k[2]} == expected
    assert (F[2] * F[2]).trace() == Coefficient(2)
    assert all(F[a].trace().is_zero() for a in range(8))
    assert d_tensor() == invariant_d_tensor(F)


def test_sl3_matrix_oracle():
    rep = SU.matrix_sl3_oracle()
    recs = rep.by_relation("sl3_matrix_map")
    assert len(recs) == 29
    assert sum(not r.verdict for r in recs) == 18
    imgs = SU.sl3_consistent_images()
    mats = SU.sl3_matrices()
    for a, b in combinations(range(8), 2):
        c = decompose(commutator(imgs[a], imgs[b]), imgs)
        assert c is not None
        assert sum((m.scale(x) for m, x in zip(mats, c)), Matrix3.zero()) == bracket(mats[a], mats[b])


def test_sign_patterns_for_matrix_map(gens):
    images = [gens[n] for n in SU.SL3_BASIS]
    from rtgw.catalog.common import matrix_bracket_coordinates

    sols = consistent_scalings(bracket_coordinates(images), matrix_bracket_coordinates(SU.sl3_matrices()), 8,
                               (Coefficient(1), Coefficient(-1)))
    pats = {tuple(int(s.to_complex().real) for s in sol) for sol in sols}
    assert pats == {(1, -1, 1, -1, 1, 1, -1, -1), (1, -1, -1, 1, -1, -1, -1, -1),
                    (-1, 1, 1, -1, -1, -1, -1, -1), (-1, 1, -1, 1, 1, 1, -1, -1)}


def test_gell_mann_map():
    rep = SU.gell_mann_check()
    failing = {r.indices for r in rep.by_relation("gell_mann_map") if not r.verdict}
    assert failing == {f"F{a},F{b}" for a, b in [(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (4, 5), (4, 6), (4, 7),
                                                   (4, 8), (5, 6), (5, 7), (5, 8), (6, 7), (6, 8), (7, 8)]}
    for rel in ("gell_mann_matrix_bracket", "gell_mann_trace_form", "gell_mann_d_tensor", "g_invariant"):
        assert all(r.verdict for r in rep.by_relation(rel)), rel
    assert len(SU._psi_scalings(SU.su3_datum())) == 8


def test_consistent_gell_mann_images():
    imgs = SU.psi_consistent_images()
    f = structure_constants(gell_mann())
    for a, b in combinations(range(8), 2):
        rhs = imgs[0].datum.zero()
        for c in range(8):
            if (a, b, c) in f:
                rhs = rhs + imgs[c].scale(I * 2 * f[a, b, c])
        assert commutator(imgs[a], imgs[b]) == rhs


def test_u_v_h_relations():
    s = SU.su3_generators()
    assert commutator(s["U1"], s["U2"]) == s["U3"]
    assert commutator(s["V1"], s["V2"]) == -s["U3"]
    # forced by [Y1, X1] = H1; the printed display has +2 cH1
    assert commutator(s["U1"], s["V1"]) == s["cH1"].scale(-2)


# --- Casimirs -----------------------------------------------------------------

@pytest.fixture(scope="module")
def c2():
    return SU.casimir(2)


def test_quadratic_casimir(c2):
    assert c2.equal and c2.is_central
    assert c2.sum_form == SU.casimir_closed_form(2)


def test_cubic_casimir():
    c3 = SU.casimir(3)
    assert c3.is_central
    assert not c3.equal
    assert c3.sum_form == SU.casimir_closed_form(3).scale(I)
    rep = c3.report()
    assert any("(i) * printed closed form" in n for n in rep.notes)


def test_quadratic_casimir_all_consistent_maps():
    d = SU.su3_datum()
    base = SU.psi_images(d)
    ref = SU.casimir_closed_form(2, d)
    for sol in SU._psi_scalings(d):
        total = d.zero()
        for p, s in zip(base, sol):
            total = total + (p * p).scale(s * s)
        assert total.scale(Fraction(1, 4)) == ref


def test_printed_map_casimir_is_not_central():
    r = SU.casimir(2, correspondence="printed")
    assert not r.equal and not r.is_central
    with pytest.raises(ValueError):
        SU.casimir(2, correspondence="other")
    with pytest.raises(ValueError):
        SU.casimir(4)


# --- so(3) ------------------------------------------------------------------------

def test_so3_structure(so3):
    ctx = so3.ctx
    l21 = ctx.var(SO.I21)
    assert SO.h21(ctx) == l21 ** 2 * (l21.scale(2) - 1) * (l21.scale(2) + 1)
    assert so3.t[0] == so3.ring(SO.rg(ctx, SO.I11, SO.I21)).scale(Fraction(1, 4))
    u = SO.so3_generators(so3)
    assert commutator(u["U1"], u["U2"]) == u["U3"]
    assert commutator(u["U3"], u["U1"]) == u["U2"]
    assert commutator(u["U3"], u["U2"]) == -u["U1"]
    assert is_central(so3.lam(SO.I31)) and not is_central(so3.lam(SO.I11))


def test_so3_derivation_terms():
    rep = SO.proof_terms()
    assert rep.passed, rep.to_text(verbose=False)
    assert rep.count("so3_Qx") == 2


def test_so3_assignments():
    sols = SO.matrix_assignments()
    assert ((0, 1, 2), (1, 1, 1)) in sols
    assert len(sols) == 24


def test_verify_entry_points():
    assert verify("so3").passed
    with pytest.raises(ValueError):
        verify("e8")


def test_casimir_report_lists_both_maps():
    rep = casimir_report(2)
    idx = {r.indices for r in rep.records if r.relation == "casimir2_closed_form"}
    assert idx == {"consistent", "printed"}
