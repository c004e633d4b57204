"""Datum, validation and the graded normal form of an RTGW algebra.

Elements are finite sums ``sum_k f_k * w_k`` where ``w_k`` is the standard
bimonomial of ``k in Z^q`` (indices ascending, ``x_i^{k_i}`` for positive
``k_i`` and ``y_i^{-k_i}`` for negative ones) and ``f_k`` lies in the
localized base ring.
"""

from __future__ import annotations

import os
import random
import threading
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Mapping, Sequence

from .loc import Localization, NotInvertible, RationalElement
from .poly import Coefficient, GroupElement, Polynomial, elem_sym, group_generators
from .report import Report

__all__ = [
    "Datum",
    "MuTable",
    "AlgebraElement",
    "InconsistentDatum",
    "derive_mu",
    "validate",
    "reduce_word",
    "alg_mul",
    "alg_star",
    "commutator",
    "anticommutator",
    "grade",
    "is_homogeneous",
    "is_central",
    "g_invariant",
    "g_orbit_check",
    "tgwa_identities",
    "symmetric_bracket",
    "canonical_word",
]

X, Y = 1, -1
Letter = tuple[int, int]  # (index, X or Y)


class InconsistentDatum(ValueError):
    pass


def _memo_enabled() -> bool:
    return os.environ.get("RTGW_MEMO", "1") != "0"


@dataclass(frozen=True)
class MuTable:
    """Skew-commutation factors: ``a_i b_j = mu[a, b][i][j] b_j a_i``."""

    xx: tuple[tuple[RationalElement, ...], ...]
    xy: tuple[tuple[RationalElement, ...], ...]
    yx: tuple[tuple[RationalElement, ...], ...]
    yy: tuple[tuple[RationalElement, ...], ...]

    def get(self, a: int, b: int, i: int, j: int) -> RationalElement:
        if a == X:
            return (self.xx if b == X else self.xy)[i][j]
        return (self.yx if b == X else self.yy)[i][j]


def _matrix(rows) -> tuple[tuple[RationalElement, ...], ...]:
    return tuple(tuple(r) for r in rows)


class Datum:
    """An RTGW datum over a localization.

    Only shapes are checked here; mathematical consistency is the job of
    :func:`validate`. ``mu_xy``, ``mu_yx``, ``mu_yy`` may be given explicitly,
    otherwise they are derived from ``mu_xx`` and ``t``.
    """

    def __init__(self, ring: Localization, t: Sequence, mu_xx: Sequence[Sequence], mu_xy=None, mu_yx=None,
                 mu_yy=None, name: str = "datum"):
        self.ring = ring
        self.ctx = ring.ctx
        self.q = self.ctx.q
        self.name = name
        q = self.q
        if len(t) != q:
            raise ValueError(f"t must have {q} entries, got {len(t)}")
        self.t = tuple(ring(v) for v in t)
        self.mu_xx = self._square(mu_xx, "mu_xx")
        self.explicit = {k: self._square(m, k) for k, m in
                         (("mu_xy", mu_xy), ("mu_yx", mu_yx), ("mu_yy", mu_yy)) if m is not None}
        self._mu: MuTable | None = None
        self._cocycle: dict = {}
        self._lock = threading.Lock()

    def _square(self, m, label):
        q = self.q
        if len(m) != q or any(len(r) != q for r in m):
            raise ValueError(f"{label} must be a {q}x{q} matrix")
        return _matrix([[self.ring(v) for v in r] for r in m])

    # --- helpers ------------------------------------------------------
    def shift_vec(self, i: int, n: int = 1) -> tuple[int, ...]:
        return self.ctx.unit_shift(i, n)

    def grade_shift(self, k: Sequence[int]) -> tuple[int, ...]:
        return tuple(k) + (0,) * (self.ctx.p - self.q)

    def tbar(self, i: int) -> RationalElement:
        return self.t[i].shift(self.shift_vec(i))

    def label(self, *idx: int) -> str:
        return ",".join(self.ctx.var_names[i] for i in idx)

    @property
    def mu(self) -> MuTable:
        if self._mu is None:
            self._mu = derive_mu(self, check=False)
        return self._mu

    def with_entries(self, t=None, mu_xx=None, **explicit) -> "Datum":
        """Copy with some parameters replaced (used for perturbation tests)."""
        ex = dict(self.explicit)
        ex.update(explicit)
        return Datum(self.ring, t if t is not None else self.t, mu_xx if mu_xx is not None else self.mu_xx,
                     ex.get("mu_xy"), ex.get("mu_yx"), ex.get("mu_yy"), self.name + "'")

    # --- element constructors -----------------------------------------
    def element(self, terms: Mapping) -> "AlgebraElement":
        return AlgebraElement(self, terms)

    def scalar(self, f) -> "AlgebraElement":
        return AlgebraElement(self, {self.zero_grade: self.ring(f)})

    def lam(self, i) -> "AlgebraElement":
        return self.scalar(self.ctx.var(i))

    def gen(self, i: int, kind: int) -> "AlgebraElement":
        k = [0] * self.q
        k[i] = kind
        return AlgebraElement(self, {tuple(k): self.ring.one()})

    def x(self, i: int) -> "AlgebraElement":
        return self.gen(i, X)

    def y(self, i: int) -> "AlgebraElement":
        return self.gen(i, Y)

    def word(self, letters: Sequence[Letter], coeff=None, **kw) -> "AlgebraElement":
        coeff = self.ring.one() if coeff is None else self.ring(coeff)
        return reduce_word(letters, coeff, self, **kw)

    @property
    def zero_grade(self) -> tuple[int, ...]:
        return (0,) * self.q

    def one(self) -> "AlgebraElement":
        return self.scalar(1)

    def zero(self) -> "AlgebraElement":
        return AlgebraElement(self, {})

    def cocycle(self, v: tuple[int, ...], w: tuple[int, ...]) -> RationalElement:
        """``c(v, w)`` with ``w_v * w_w = c(v, w) * w_{v+w}``."""
        memo = _memo_enabled()
        key = (v, w)
        if memo:
            c = self._cocycle.get(key)
            if c is not None:
                return c
        letters = canonical_word(v) + canonical_word(w)
        c, k = _reduce_letters(letters, self.ring.one(), self)
        assert k == tuple(a + b for a, b in zip(v, w))
        if memo:
            with self._lock:
                self._cocycle.setdefault(key, c)
        return c

    def clear_memo(self) -> None:
        with self._lock:
            self._cocycle.clear()


def canonical_word(k: Sequence[int]) -> list[Letter]:
    out: list[Letter] = []
    for i, n in enumerate(k):
        if n:
            out.extend([(i, X if n > 0 else Y)] * abs(n))
    return out


# --- factors derived from t and mu_xx ---------------------------------

def derive_mu(datum: Datum, check: bool = True) -> MuTable:
    """Full skew-commutation table; explicit matrices of the datum take precedence.

    With ``check`` the alternative expression for ``mu_xy`` and the two
    ``mu``/``t`` dependencies are compared and a mismatch raises
    :class:`InconsistentDatum`.
    """
    try:
        return _derive_mu(datum, check)
    except (NotInvertible, ZeroDivisionError) as exc:
        if not check:
            raise
        raise InconsistentDatum(f"factors not defined in the localization: {exc}") from exc


def _derive_mu(datum: Datum, check: bool) -> MuTable:
    q = datum.q
    t, tb = datum.t, [datum.tbar(i) for i in range(q)]
    sv = datum.shift_vec
    xx = datum.mu_xx
    yy = datum.explicit.get("mu_yy") or _matrix([[m.star() for m in r] for r in xx])
    if "mu_xy" in datum.explicit:
        xy = datum.explicit["mu_xy"]
    else:
        xy = _matrix([[xx[i][j].shift(sv(i)) * tb[i] / tb[i].shift(sv(j, -1)) for j in range(q)]
                      for i in range(q)])
    yx = datum.explicit.get("mu_yx") or _matrix([[m.star() for m in r] for r in xy])
    table = MuTable(xx, xy, yx, yy)
    if check:
        for i in range(q):
            for j in range(q):
                if i == j:
                    continue
                alt = xx[j][i].shift(sv(j, -1)) * t[j].shift(sv(i)) / t[j]
                if alt != xy[i][j]:
                    raise InconsistentDatum(f"mu_xy[{datum.label(i, j)}]: {xy[i][j]} != {alt}")
                a = t[i] / t[i].shift(sv(j)) * xx[j][i].shift(sv(i, -1))
                if a != yx[i][j]:
                    raise InconsistentDatum(f"mu_yx[{datum.label(i, j)}] from t: {yx[i][j]} != {a}")
                b = t[i] * t[j].shift(sv(i, -1)) / (t[i].shift(sv(j, -1)) * t[j]) * xx[i][j]
                if b != yy[i][j]:
                    raise InconsistentDatum(f"mu_yy[{datum.label(i, j)}] from t: {yy[i][j]} != {b}")
    return table


# --- validation --------------------------------------------------------

def _evaluate(fn: Callable[[], tuple]) -> tuple[bool, str, str]:
    try:
        lhs, rhs = fn()
    except (NotInvertible, ZeroDivisionError) as exc:
        return False, f"not evaluable in the localization: {exc}", ""
    return lhs == rhs, str(lhs), str(rhs)


def _check(report: Report, relation: str, indices: str, fn: Callable[[], tuple]) -> None:
    ok, lhs, rhs = _evaluate(fn)
    report.add(relation, indices, ok, lhs, rhs)


def _triples(q: int):
    for i, j, k in permutations(range(q), 3):
        yield i, j, k


def validate(datum: Datum) -> Report:
    """Evaluate every consistency relation instance of the datum exactly."""
    rep = Report(f"validate {datum.name}")
    q, ring = datum.q, datum.ring
    t, xx = datum.t, datum.mu_xx
    sv = datum.shift_vec
    L = datum.label

    units_ok = True
    for i in range(q):
        def inv(i=i):
            return t[i] * t[i].inverse(), ring.one()
        ok, lhs, rhs = _evaluate(inv)
        units_ok &= ok
        rep.add("t_invertible", L(i), ok, lhs, rhs)
        _check(rep, "t_star_is_shift", L(i), lambda i=i: (t[i].star(), t[i].shift(sv(i))))
    for i in range(q):
        rep.check_equal("mu_diagonal", L(i), xx[i][i], ring.one())
        for j in range(q):
            if i < j:
                rep.check_equal("mu_reciprocal", L(i, j), xx[i][j] * xx[j][i], ring.one())
            if i != j:
                def unit(i=i, j=j):
                    return xx[i][j] * xx[i][j].inverse(), ring.one()
                _check(rep, "mu_invertible", L(i, j), unit)

    tb = [t[i].shift(sv(i)) for i in range(q)]
    for i in range(q):
        for j in range(q):
            if i == j:
                continue
            m = xx[i][j]
            _check(rep, "mu_inverse_is_star", L(i, j), lambda m=m: (m.inverse(), m.star()))
            _check(rep, "mu_shift_ij_invariant", L(i, j),
                   lambda m=m, i=i, j=j: (m.shift(sv(i)).shift(sv(j)), m))
            _check(rep, "mu_t_product_plus", L(i, j), lambda m=m, i=i, j=j: (
                m.shift(sv(i)) * m.shift(sv(j)),
                tb[i].shift(sv(j, -1)) * tb[j] / (tb[i] * tb[j].shift(sv(i, -1)))))
            _check(rep, "mu_t_product_minus", L(i, j), lambda m=m, i=i, j=j: (
                m.shift(sv(i)) * m.shift(sv(j, -1)),
                tb[i].shift(sv(j, -1)) * t[j].shift(sv(i)) / (tb[i] * t[j])))
    for i, j, k in _triples(q):
        m = xx[i][j]
        _check(rep, "mu_shift_k_invariant", L(i, j, k), lambda m=m, k=k: (m.shift(sv(k)), m))
        for e in (1, -1):
            _check(rep, "t_shift_separable", L(i, j, k) + (" +" if e > 0 else " -"),
                   lambda i=i, j=j, k=k, e=e: (
                       t[j].shift(sv(i)) * t[j].shift(sv(k, e)),
                       t[j] * t[j].shift(sv(i)).shift(sv(k, e))))

    # dependencies among the four factor matrices
    try:
        mu = derive_mu(datum, check=False)
        derived = derive_mu(Datum(ring, t, xx, name=datum.name), check=False) if datum.explicit else mu
    except (NotInvertible, ZeroDivisionError) as exc:
        rep.add("mu_derivable", "", False, f"not evaluable in the localization: {exc}", "")
        return rep
    for i in range(q):
        _check(rep, "mu_xy_diagonal", L(i), lambda i=i: (mu.xy[i][i] if "mu_xy" not in datum.explicit
                                                         else derived.xy[i][i], tb[i] / t[i]))
        for j in range(q):
            if i == j:
                continue
            idx = L(i, j)
            _check(rep, "mu_yy_is_star", idx, lambda i=i, j=j: (mu.yy[i][j], mu.xx[i][j].star()))
            _check(rep, "mu_yx_is_star", idx, lambda i=i, j=j: (mu.yx[i][j], mu.xy[i][j].star()))
            _check(rep, "mu_xy_formula", idx, lambda i=i, j=j: (mu.xy[i][j], derived.xy[i][j]))
            _check(rep, "mu_xy_alt_formula", idx, lambda i=i, j=j: (
                mu.xy[i][j], xx[j][i].shift(sv(j, -1)) * t[j].shift(sv(i)) / t[j]))
            _check(rep, "mu_xy_symmetric", idx, lambda i=i, j=j: (mu.xy[i][j], mu.xy[j][i]))
            _check(rep, "mu_xy_shift_balance", idx, lambda i=i, j=j: (
                mu.xy[i][j].shift(sv(i)), mu.xy[i][j].shift(sv(j))))
            _check(rep, "mu_xy_yx_reciprocal", idx, lambda i=i, j=j: (mu.xy[i][j] * mu.yx[j][i], ring.one()))
            _check(rep, "mu_yy_reciprocal", idx, lambda i=i, j=j: (mu.yy[i][j] * mu.yy[j][i], ring.one()))
            _check(rep, "mu_yx_from_t", idx, lambda i=i, j=j: (
                mu.yx[i][j], t[i] / t[i].shift(sv(j)) * xx[j][i].shift(sv(i, -1))))
            _check(rep, "mu_yy_from_t", idx, lambda i=i, j=j: (
                mu.yy[i][j], t[i] * t[j].shift(sv(i, -1)) / (t[i].shift(sv(j, -1)) * t[j]) * xx[i][j]))
    for i, j, k in _triples(q):
        _check(rep, "mu_xy_shift_k_invariant", L(i, j, k), lambda i=i, j=j, k=k: (
            mu.xy[i][j].shift(sv(k)), mu.xy[i][j]))
    rep.extend(tgwa_identities(datum))
    return rep


def tgwa_identities(datum: Datum) -> Report:
    """Identities relating ``t`` and the mixed factors (two- and three-index forms)."""
    rep = Report(f"tgwa identities {datum.name}")
    q, t, mu = datum.q, datum.t, datum.mu
    sv = datum.shift_vec
    tb = [datum.tbar(i) for i in range(q)]
    for i in range(q):
        for j in range(q):
            if i == j:
                continue
            _check(rep, "tgwa_t_product", datum.label(i, j), lambda i=i, j=j: (
                (t[i] * t[j]).shift(sv(i)).shift(sv(j)),
                mu.xy[i][j].shift(sv(j)) * mu.xy[j][i].shift(sv(i)) * tb[i] * tb[j]))
    for i, j, k in _triples(q):
        for e in (1, -1):
            idx = datum.label(i, j, k) + (" +" if e > 0 else " -")

            def quotient(f, i=i, j=j, k=k, e=e):
                return f.shift(sv(i)) * f.shift(sv(k, e)) / (f * f.shift(sv(i)).shift(sv(k, e)))

            def t_rhs(i=i, j=j, k=k, e=e):
                g = mu.xx[i][j].shift(sv(j, -1)) * mu.xy[i][j]
                return g / g.shift(sv(k, e))

            def tb_rhs(i=i, j=j, k=k, e=e):
                g = mu.xx[i][j] * mu.xy[i][j].shift(sv(j))
                return g / g.shift(sv(k, e))

            _check(rep, "tgwa_t_quotient", idx, lambda j=j, f=quotient, r=t_rhs: (f(t[j]), r()))
            _check(rep, "tgwa_tbar_quotient", idx, lambda j=j, f=quotient, r=tb_rhs: (f(tb[j]), r()))
    if q < 3:
        rep.notes.append("three-index identities are vacuous for q < 3")
    return rep


# --- rewriting ---------------------------------------------------------

def _prefix_shift(letters: Sequence[Letter], n: int, p: int) -> tuple[int, ...]:
    s = [0] * p
    for i, a in letters[:n]:
        s[i] += a
    return tuple(s)


def _applicable(letters: Sequence[Letter]) -> list[int]:
    out = []
    for pos in range(len(letters) - 1):
        (i, a), (j, b) = letters[pos], letters[pos + 1]
        if i > j or (i == j and a != b):
            out.append(pos)
    return out


def _reduce_letters(letters: Sequence[Letter], coeff: RationalElement, datum: Datum,
                    rng: random.Random | None = None) -> tuple[RationalElement, tuple[int, ...]]:
    letters = list(letters)
    p = datum.ctx.p
    mu = datum.mu
    while True:
        spots = _applicable(letters)
        if not spots:
            break
        pos = spots[0] if rng is None else rng.choice(spots)
        (i, a), (j, b) = letters[pos], letters[pos + 1]
        pre = _prefix_shift(letters, pos, p)
        if i == j:
            # y_i x_i = t_i, x_i y_i = sigma_i(t_i)
            f = datum.t[i] if a == Y else datum.tbar(i)
            letters[pos:pos + 2] = []
        else:
            f = mu.get(a, b, i, j)
            letters[pos], letters[pos + 1] = letters[pos + 1], letters[pos]
        coeff = coeff * f.shift(pre)
        if coeff.is_zero():
            break
    k = [0] * datum.q
    for i, a in letters:
        k[i] += a
    return coeff, tuple(k)


def reduce_word(letters: Sequence[Letter], coeff: RationalElement, datum: Datum,
                rng: random.Random | None = None) -> "AlgebraElement":
    """Normal form of ``coeff * letters``; ``rng`` picks rewrite positions at random."""
    c, k = _reduce_letters(letters, coeff, datum, rng)
    return AlgebraElement(datum, {k: c})


class AlgebraElement:
    __slots__ = ("datum", "terms")

    def __init__(self, datum: Datum, terms: Mapping):
        self.datum = datum
        self.terms = {tuple(k): v for k, v in terms.items() if not v.is_zero()}

    # --- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def grade(self) -> set[tuple[int, ...]]:
        return set(self.terms)

    def is_homogeneous(self) -> bool:
        return len(self.terms) <= 1

    def coefficient(self, k: Sequence[int]) -> RationalElement:
        return self.terms.get(tuple(k), self.datum.ring.zero())

    def scalar_part(self) -> RationalElement:
        return self.coefficient(self.datum.zero_grade)

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.terms == other.terms
        if isinstance(other, (int, RationalElement, Polynomial, Coefficient)):
            return self == self.datum.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # --- arithmetic ---------------------------------------------------
    def _lift(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            if other.datum is not self.datum:
                raise ValueError("elements of different algebras")
            return other
        return self.datum.scalar(other)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.datum, {k: -v for k, v in self.terms.items()})

    def __add__(self, other) -> "AlgebraElement":
        other = self._lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            cur = out.get(k)
            out[k] = v if cur is None else cur + v
        return AlgebraElement(self.datum, out)

    __radd__ = __add__

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "AlgebraElement":
        return self._lift(other) - self

    def scale(self, c) -> "AlgebraElement":
        if isinstance(c, RationalElement):
            return AlgebraElement(self.datum, {k: c * v for k, v in self.terms.items()})
        return AlgebraElement(self.datum, {k: v.scale(c) for k, v in self.terms.items()})

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return alg_mul(self, self._lift(other))

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, Coefficient)):
            return self.scale(other)
        return alg_mul(self._lift(other), self)

    def __pow__(self, n: int) -> "AlgebraElement":
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.datum.one()
        for _ in range(n):
            out = out * self
        return out

    def star(self) -> "AlgebraElement":
        return alg_star(self)

    def act(self, g: GroupElement) -> "AlgebraElement":
        return g_act(self, g)

    # --- rendering ----------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        if set(self.terms) == {self.datum.zero_grade}:
            return str(self.scalar_part())
        names = self.datum.ctx.var_names
        out = ""
        for k in sorted(self.terms, key=lambda k: (sum(map(abs, k)), tuple(-v for v in k))):
            c = self.terms[k]
            word = "*".join(
                f"{'x' if n > 0 else 'y'}{names[i]}" + (f"^{abs(n)}" if abs(n) > 1 else "")
                for i, n in enumerate(k) if n)
            if not word:
                term = f"({c})"
            elif c == 1:
                term = word
            elif c == -1:
                term = "-" + word
            else:
                term = f"({c})*{word}"
            if not out:
                out = term
            elif term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    d = a.datum
    out: dict = {}
    for v, f in a.terms.items():
        sv = d.grade_shift(v)
        for w, g in b.terms.items():
            c = d.cocycle(v, w)
            val = f * g.shift(sv) * c
            key = tuple(x + y for x, y in zip(v, w))
            cur = out.get(key)
            out[key] = val if cur is None else cur + val
    return AlgebraElement(d, out)


def commutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b - b * a


def anticommutator(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    return a * b + b * a


def alg_star(a: AlgebraElement) -> AlgebraElement:
    """Conjugate-linear homomorphism swapping ``x_i`` and ``y_i``."""
    return AlgebraElement(a.datum, {tuple(-v for v in k): f.star() for k, f in a.terms.items()})


def g_act(a: AlgebraElement, g: GroupElement) -> AlgebraElement:
    d = a.datum
    g.check(d.ctx)
    out = d.zero()
    for k, f in a.terms.items():
        letters = [(g.perm[i], s) for i, s in canonical_word(k)]
        out = out + reduce_word(letters, f.permute(g.perm), d)
    return alg_star(out) if g.star else out


def grade(a: AlgebraElement) -> set[tuple[int, ...]]:
    return a.grade()


def is_homogeneous(a: AlgebraElement) -> bool:
    return a.is_homogeneous()


def is_central(a: AlgebraElement) -> bool:
    d = a.datum
    for i in range(d.q):
        for g in (d.lam(i), d.x(i), d.y(i)):
            if not commutator(a, g).is_zero():
                return False
    return True


def g_invariant(a: AlgebraElement, g: GroupElement) -> bool:
    return g_act(a, g) == a


def g_orbit_check(a: AlgebraElement, name: str = "element", gens=None) -> Report:
    d = a.datum
    rep = Report(f"G-invariance of {name}")
    for label, g in gens or group_generators(d.ctx):
        image = g_act(a, g)
        rep.add("g_invariant", f"{name} {label}", image == a, image, a)
    return rep


def gamma(datum: Datum, block: Iterable[int], alpha: int) -> AlgebraElement:
    return datum.scalar(elem_sym(datum.ctx, block, alpha, centered=False))


def symmetric_bracket(a: AlgebraElement, block: Iterable[int], alpha: int) -> AlgebraElement:
    if alpha not in (1, 2):
        raise ValueError("alpha must be 1 or 2")
    return commutator(gamma(a.datum, block, alpha), a)


def bracket_closed_form(datum: Datum, k: Sequence[int], block: Sequence[int], alpha: int) -> AlgebraElement:
    """Closed form of ``[gamma_alpha(block), w_k]`` from the shift action."""
    ctx = datum.ctx
    kb = [k[i] if i < datum.q else 0 for i in block]
    kbar = sum(kb)
    w = datum.element({tuple(k): datum.ring.one()})
    if alpha == 1:
        return w.scale(kbar)
    lin = ctx.zero()
    for i, ki in zip(block, kb):
        lin = lin + ctx.var(i).scale(kbar - ki)
    e2 = sum(kb[a] * kb[b] for a in range(len(kb)) for b in range(a + 1, len(kb)))
    return w.scale(datum.ring(lin - e2))
