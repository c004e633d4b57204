"""The rank-three orthogonal instance: datum, generators and their checks."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from ..loc import Localization, MultSetSpec
from ..poly import I, RingContext, elem_sym, group_generators, perm_apply
from ..report import Report
from ..tgw import X, Y, AlgebraElement, Datum, commutator, derive_mu, g_orbit_check, is_central, validate, \
    InconsistentDatum
from .common import combine
from .matrices import bracket, coordinates, so3_matrices

NAMES = ("11", "21", "31", "32")
ZETA = (0, 1, 0, 0)
BLOCKS = ((0,), (1,), (2, 3))
I11, I21, I31, I32 = range(4)


def context() -> RingContext:
    return RingContext(NAMES, ZETA, BLOCKS, 2)


def bar(ctx: RingContext, i: int):
    return ctx.const(ctx.zeta[i]) - ctx.var(i)


def rg(ctx: RingContext, a: int, b: int):
    la, lb = ctx.var(a), ctx.var(b)
    return (la + lb) * (la + bar(ctx, b))


def rg_bar(ctx: RingContext, a: int, b: int):
    return (bar(ctx, a) + ctx.var(b)) * (bar(ctx, a) + bar(ctx, b))


def h21(ctx: RingContext):
    l = ctx.var(I21)
    d = l - bar(ctx, I21)
    return l * l * d * d.shift(ctx.unit_shift(I21, -1))


def omega(ctx: RingContext) -> list:
    l21 = ctx.var(I21)
    gens = [l21]
    for k in (I11, I31, I32):
        gens += [l21 + ctx.var(k), l21 - ctx.var(k)]
    gens.append(l21.scale(2) - 1)
    return gens


def multiplicative_set(ctx: RingContext) -> MultSetSpec:
    # the shift group is generated by sigma_11 and sigma_21 only
    return MultSetSpec.from_polys(ctx, omega(ctx), shift_indices=(I11, I21))


def mu_tables(L: Localization) -> dict:
    ctx = L.ctx
    l, b = ctx.var, lambda i: bar(ctx, i)
    one = L.one()
    out = {}
    for label, f in (
        ("mu_xx", lambda i, j: -(L(l(j) + b(i)) / L(l(i) + b(j)))),
        ("mu_xy", lambda i, j: -(L(b(j) + b(i)) / L(l(i) + l(j)))),
        ("mu_yx", lambda i, j: -(L(l(j) + l(i)) / L(b(i) + b(j)))),
        ("mu_yy", lambda i, j: -(L(b(j) + l(i)) / L(b(i) + l(j)))),
    ):
        out[label] = [[one if i == j else f(i, j) for j in range(2)] for i in range(2)]
    return out


def t_values(L: Localization) -> list:
    ctx = L.ctx
    t11 = L(rg(ctx, I11, I21)).scale(Fraction(1, 4))
    num = rg(ctx, I21, I11) * rg(ctx, I21, I31) * rg(ctx, I21, I32)
    t21 = L(num) / L(h21(ctx))
    return [t11, t21]


@lru_cache(maxsize=None)
def so3_datum() -> Datum:
    ctx = context()
    L = Localization(ctx, multiplicative_set(ctx))
    mu = mu_tables(L)
    # diagonal of the mixed tables is fixed by t, not printed
    return Datum(L, t_values(L), mu["mu_xx"], name="so3", **{k: v for k, v in mu.items() if k != "mu_xx"})


def constant_c(d: Datum, over_l11: bool = False):
    """``C = -i l11 l31 l32 / (l21 (1 - l21))``; ``over_l11`` drops the ``l11`` factor."""
    ctx = d.ctx
    num = ctx.var(I31) * ctx.var(I32)
    if not over_l11:
        num = ctx.var(I11) * num
    den = ctx.var(I21) * (ctx.one() - ctx.var(I21))
    return (d.ring(num) / d.ring(den)).scale(-I)


@lru_cache(maxsize=None)
def so3_generators(d: Datum | None = None) -> dict[str, AlgebraElement]:
    d = d or so3_datum()
    mu = d.mu
    one = d.ring.one()
    C = constant_c(d)
    r_xx = one - mu.xx[I21][I11]
    r_yx = one - mu.xy[I21][I11]
    r_xy = one - mu.yx[I21][I11]
    r_yy = one - mu.yy[I21][I11]
    U1 = d.x(I11) + d.y(I11)
    U2 = d.x(I21) + d.y(I21) + d.scalar(C)
    U3 = (d.word([(I11, X), (I21, X)], r_xx) + d.word([(I11, X), (I21, Y)], r_xy)
          + d.word([(I11, Y), (I21, X)], r_yx) + d.word([(I11, Y), (I21, Y)], r_yy)
          - (d.x(I11) - d.y(I11)).scale(constant_c(d, over_l11=True)))
    return {"U1": U1, "U2": U2, "U3": U3}


def invariant_ring(ctx: RingContext | None = None) -> list:
    ctx = ctx or context()
    return [
        elem_sym(ctx, (I11,), 1, hatted=True),
        elem_sym(ctx, (I21,), 1, hatted=True),
        elem_sym(ctx, (I31, I32), 1, hatted=True),
        elem_sym(ctx, (I31, I32), 2),
    ]


def _rhos(d: Datum) -> dict:
    mu, one = d.mu, d.ring.one()
    return {"xx": one - mu.xx[I21][I11], "yx": one - mu.xy[I21][I11],
            "xy": one - mu.yx[I21][I11], "yy": one - mu.yy[I21][I11]}


def bracket_report(d: Datum | None = None) -> Report:
    d = d or so3_datum()
    u = so3_generators(d)
    rep = Report("so(3) brackets")
    rep.check_equal("so3_bracket", "[U1,U2]=U3", commutator(u["U1"], u["U2"]), u["U3"])
    rep.check_equal("so3_bracket", "[U3,U1]=U2", commutator(u["U3"], u["U1"]), u["U2"])
    rep.check_equal("so3_bracket", "[U3,U2]=-U1", commutator(u["U3"], u["U2"]), -u["U1"])
    return rep


def proof_terms(d: Datum | None = None) -> Report:
    """The coefficient collapse and the four partial brackets behind ``[U3, U2] = -U1``."""
    d = d or so3_datum()
    ctx, sv = d.ctx, d.shift_vec
    u = so3_generators(d)
    r = _rhos(d)
    mu, t21, tb21 = d.mu, d.t[I21], d.tbar(I21)
    C, Cp = constant_c(d), constant_c(d, over_l11=True)
    rep = Report("so(3) bracket derivation")
    qx = (r["xx"] * tb21.shift(sv(I11)) - r["xx"].shift(sv(I21, -1)) * mu.xx[I11][I21].shift(sv(I21, -1)) * t21
          + r["xy"] * t21.shift(sv(I11)) - r["xy"].shift(sv(I21)) * mu.xy[I11][I21].shift(sv(I21)) * tb21
          - Cp * C.shift(sv(I11)) + Cp * C)
    rep.check_equal("so3_Qx", "expanded=-1", qx, -d.ring.one())
    dl = d.ring(ctx.var(I21) - bar(ctx, I21))
    qx2 = (tb21 / d.ring(rg_bar(ctx, I21, I11)) * dl.shift(sv(I21))
           + t21 / d.ring(rg(ctx, I21, I11)) * (-dl).shift(sv(I21, -1)) + Cp * Cp)
    rep.check_equal("so3_Qx", "collapsed=-1", qx2, -d.ring.one())
    rep.check_equal("so3_Qy", "Qx*=-1", qx.star(), -d.ring.one())
    x11, x21, y21 = d.x(I11), d.x(I21), d.y(I21)
    wxx = d.word([(I11, X), (I21, X)], r["xx"])
    wxy = d.word([(I11, X), (I21, Y)], r["xy"])
    cx = x11.scale(Cp)
    Cs = d.scalar(C)
    S1 = commutator(wxx, y21) + commutator(wxy, x21) - commutator(cx, Cs)
    S2 = commutator(wxx, x21) + commutator(wxy, y21)
    S3 = commutator(wxx, Cs) - commutator(cx, x21)
    S4 = commutator(wxy, Cs) - commutator(cx, y21)
    rep.check_equal("so3_S1", "=-x11", S1, -x11)
    rep.check_equal("so3_S2", "=0", S2, d.zero())
    rep.check_equal("so3_S3", "=0", S3, d.zero())
    rep.check_equal("so3_S4", "=0", S4, d.zero())
    total = S1 + S1.star() + S2 + S2.star() + S3 + S3.star() + S4 + S4.star()
    rep.check_equal("so3_S_sum", "[U3,U2]=sum S+S*", commutator(u["U3"], u["U2"]), total)
    return rep


def matrix_assignments(d: Datum | None = None) -> list[tuple]:
    """All ``(perm, signs)`` with ``L_k -> sign_k U_perm(k)`` a bracket homomorphism."""
    d = d or so3_datum()
    u = so3_generators(d)
    U = [u["U1"], u["U2"], u["U3"]]
    m = so3_matrices()
    mats = [m["Lx"], m["Ly"], m["Lz"]]
    coords = {(a, b): coordinates(bracket(mats[a], mats[b]), mats) for a in range(3) for b in range(a + 1, 3)}
    found = []
    for perm in permutations(range(3)):
        for signs in product((1, -1), repeat=3):
            imgs = [U[perm[k]].scale(signs[k]) for k in range(3)]
            ok = all(commutator(imgs[a], imgs[b]) == combine(coords[a, b], imgs) for a, b in coords)
            if ok:
                found.append((perm, signs))
    return found


def matrix_oracle(d: Datum | None = None) -> Report:
    d = d or so3_datum()
    rep = Report("so(3) matrix correspondence")
    sols = matrix_assignments(d)
    names = ("Lx", "Ly", "Lz")
    rep.add("so3_matrix_assignment", "Lx->U1, Ly->U2, Lz->U3", ((0, 1, 2), (1, 1, 1)) in sols)
    rep.notes.append(f"{len(sols)} signed permutations of U1, U2, U3 give bracket-consistent assignments")
    rep.notes.append("printed assignment sends Lx, Ly, Lz all to U1, which is not injective; "
                     "resolved to Lx->U1, Ly->U2, Lz->U3")
    m = so3_matrices()
    mats = [m["Lx"], m["Ly"], m["Lz"]]
    gens = so3_generators(d)
    U = [gens["U1"], gens["U2"], gens["U3"]]
    for a in range(3):
        for b in range(a + 1, 3):
            lhs = commutator(U[a], U[b])
            rhs = combine(coordinates(bracket(mats[a], mats[b]), mats), U)
            rep.check_equal("so3_matrix_map", f"{names[a]},{names[b]}", lhs, rhs)
    return rep


def verify_so3(d: Datum | None = None) -> Report:
    d = d or so3_datum()
    ctx = d.ctx
    rep = Report("so3")
    rep.extend(validate(d))
    try:
        derive_mu(d, check=True)
        rep.add("so3_mu_routes_agree", "explicit vs derived", True)
    except InconsistentDatum as exc:
        rep.add("so3_mu_routes_agree", "explicit vs derived", False, str(exc), "")
    rep.check_equal("so3_h21", "", h21(ctx),
                    ctx.var(I21) ** 2 * (ctx.var(I21).scale(2) - 1) * (ctx.var(I21).scale(2) + 1))
    rep.extend(bracket_report(d))
    rep.extend(proof_terms(d))
    u = so3_generators(d)
    for n in ("U1", "U2", "U3"):
        rep.extend(g_orbit_check(u[n], n))
    for i, expect in ((I31, True), (I32, True), (I11, False), (I21, False)):
        rep.add("so3_central", f"l{NAMES[i]} {'central' if expect else 'not central'}",
                is_central(d.lam(i)) == expect)
    U1, U2, U3 = u["U1"], u["U2"], u["U3"]
    jac = commutator(U1, commutator(U2, U3)) + commutator(U2, commutator(U3, U1)) + commutator(U3, commutator(U1, U2))
    rep.check_equal("so3_jacobi", "U1,U2,U3", jac, d.zero())
    rep.extend(matrix_oracle(d))
    for f in invariant_ring(ctx):
        for label, g in group_generators(ctx):
            rep.check_equal("so3_invariant_ring", f"{f} {label}", perm_apply(g, f), f)
    return rep
