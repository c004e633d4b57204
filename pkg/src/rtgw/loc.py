"""Localization of the base ring at a shift- and star-stable set of linear atoms.

A :class:`RationalElement` is ``num / prod(atoms)``. Denominators never hold
general polynomials: every admissible denominator factors into linear atoms
of the shapes ``+-l_i + c``, ``+-2 l_i + c`` and ``+-l_i +- l_j + c``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .poly import Coefficient, ContextMismatch, GroupElement, Polynomial, RingContext

__all__ = [
    "Atom",
    "AtomShapeError",
    "NotInvertible",
    "MultSetSpec",
    "Localization",
    "RationalElement",
    "atom_normalize",
    "member",
    "defining_polynomial",
    "generating_atoms",
]


class AtomShapeError(ValueError):
    pass


class NotInvertible(ArithmeticError):
    pass


@dataclass(frozen=True, order=True)
class Atom:
    """Primitive integer linear form with positive leading coefficient."""

    coeffs: tuple[tuple[int, int], ...]  # sorted (index, coefficient) pairs
    const: int

    @property
    def pattern(self) -> tuple[tuple[int, int], ...]:
        return self.coeffs

    def to_poly(self, ctx: RingContext) -> Polynomial:
        out = ctx.const(self.const)
        for i, a in self.coeffs:
            out = out + ctx.var(i).scale(a)
        return out

    def shift(self, s: Sequence[int]) -> "Atom":
        delta = sum(a * s[i] for i, a in self.coeffs)
        return Atom(self.coeffs, self.const - delta) if delta else self

    def star(self, ctx: RingContext) -> tuple[int, "Atom"]:
        # P.(zeta - l) + c = -(P.l - P.zeta - c)
        return -1, Atom(self.coeffs, -(self.const + sum(a * ctx.zeta[i] for i, a in self.coeffs)))

    def permute(self, perm: Sequence[int]) -> tuple[int, "Atom"]:
        moved = sorted((perm[i], a) for i, a in self.coeffs)
        if moved[0][1] < 0:
            return -1, Atom(tuple((i, -a) for i, a in moved), -self.const)
        return 1, Atom(tuple(moved), self.const)

    def render(self, ctx: RingContext) -> str:
        return str(self.to_poly(ctx))


def _check_shape(coeffs: tuple[tuple[int, int], ...]) -> None:
    if not coeffs:
        raise AtomShapeError("constant is not an atom")
    if len(coeffs) > 2:
        raise AtomShapeError("linear form in more than two variables")
    if len(coeffs) == 1:
        if abs(coeffs[0][1]) not in (1, 2):
            raise AtomShapeError("single-variable coefficient must be 1 or 2")
    elif any(abs(a) != 1 for _, a in coeffs):
        raise AtomShapeError("two-variable form must have coefficients +-1")


def atom_normalize(linear: Polynomial) -> tuple[Coefficient, Atom]:
    """Split a linear polynomial as ``unit * atom``."""
    p = linear.ctx.p
    if linear.degree() != 1:
        raise AtomShapeError("not a linear form")
    lin: list[tuple[int, Coefficient]] = []
    for e, c in linear.terms.items():
        if sum(e) == 1:
            lin.append((e.index(1), c))
        elif any(e):
            raise AtomShapeError("not a linear form")
    lin.sort()
    u0 = lin[0][1]
    inv = u0.inverse()
    rats: list[Fraction] = []
    for _, c in lin:
        r = c * inv
        if not r.is_rational():
            raise AtomShapeError("coefficients are not rational multiples of a common unit")
        rats.append(r.parts[0])
    c0 = linear.terms.get((0,) * p)
    if c0 is not None:
        r = c0 * inv
        if not r.is_rational():
            raise AtomShapeError("constant is not a rational multiple of the leading unit")
        const = r.parts[0]
    else:
        const = Fraction(0)
    den = 1
    for r in rats + [const]:
        den = den * r.denominator // gcd(den, r.denominator)
    ints = [int(r * den) for r in rats]
    ic = int(const * den)
    g = gcd(*ints, ic)
    ints = [v // g for v in ints]
    ic //= g
    coeffs = tuple((i, a) for (i, _), a in zip(lin, ints))
    _check_shape(coeffs)
    unit = u0 * Coefficient(g, 0, 0, 0, den)
    return unit, Atom(coeffs, ic)


@dataclass(frozen=True)
class MultSetSpec:
    """Finite generators of a multiplicative set closed under shifts, star and products.

    ``shift_indices`` lists the variables the shift group acts on; membership
    is decided without materializing the closure.
    """

    ctx: RingContext
    generators: tuple[Atom, ...]
    shift_indices: tuple[int, ...]
    _patterns: dict = field(default=None, repr=False, compare=False, hash=False)

    def __post_init__(self):
        table: dict[tuple, set[int]] = {}
        for g in self.generators:
            for a in (g, g.star(self.ctx)[1]):
                table.setdefault(a.coeffs, set()).add(a.const)
        object.__setattr__(self, "_patterns", table)

    @classmethod
    def from_polys(cls, ctx: RingContext, polys: Iterable[Polynomial], shift_indices=None) -> "MultSetSpec":
        atoms = []
        for f in polys:
            _, a = atom_normalize(f)
            if a not in atoms:
                atoms.append(a)
        if shift_indices is None:
            shift_indices = tuple(range(ctx.p))
        return cls(ctx, tuple(atoms), tuple(shift_indices))

    @property
    def patterns(self) -> dict:
        return self._patterns

    def contains(self, a: Atom) -> bool:
        consts = self._patterns.get(a.coeffs)
        if not consts:
            return False
        step = 0
        for i, c in a.coeffs:
            if i in self.shift_indices:
                step = gcd(step, c)
        if step == 0:
            return a.const in consts
        return any((a.const - c) % step == 0 for c in consts)


def member(a: Atom, spec: MultSetSpec) -> bool:
    return spec.contains(a)


def _restriction_point(ctx: RingContext, attempt: int) -> list[int]:
    base = (3, 7, 13, 23, 37, 53, 71, 97, 113, 131, 151, 173)
    return [base[i % len(base)] * (attempt + 1) + 17 * i for i in range(ctx.p)]


def _candidate_constants(f: Polynomial, pattern, attempt: int) -> set[int]:
    """Integer ``c`` with a plausible root ``pattern.l + c`` of ``f``; verified later."""
    ctx = f.ctx
    v, a = pattern[0]
    pt = _restriction_point(ctx, attempt)
    K = sum(c * pt[i] for i, c in pattern[1:])
    # univariate restriction in l_v
    n = f.degree_in(v)
    coeffs = [0j] * (n + 1)
    for e, c in f.terms.items():
        val = c.to_complex()
        for i, k in enumerate(e):
            if k and i != v:
                val *= pt[i] ** k
        coeffs[n - e[v]] += val
    while coeffs and abs(coeffs[0]) == 0:
        coeffs.pop(0)
    if len(coeffs) < 2:
        return set()
    scale = max(abs(x) for x in coeffs)
    roots = np.roots(np.array(coeffs) / scale)
    out = set()
    for r in roots:
        if abs(r.imag) > 1e-3 * (1 + abs(r)):
            continue
        c = -a * r.real - K
        base = round(c)
        out.update((base - 1, base, base + 1))
    return out


def factor_atoms(f: Polynomial, spec: MultSetSpec) -> tuple[Coefficient, Counter] | None:
    """Write ``f = unit * prod(atoms)`` with atoms in ``spec``, else ``None``."""
    from .poly import exact_div

    if f.is_zero():
        return None
    found: Counter = Counter()
    rest = f
    for attempt in range(3):
        progress = True
        while progress and not rest.is_constant():
            progress = False
            for pattern in spec.patterns:
                if rest.degree_in(pattern[0][0]) <= 0:
                    continue
                for c in sorted(_candidate_constants(rest, pattern, attempt)):
                    atom = Atom(pattern, c)
                    if not spec.contains(atom):
                        continue
                    dp = atom.to_poly(f.ctx)
                    while True:
                        q = exact_div(rest, dp)
                        if q is None:
                            break
                        rest = q
                        found[atom] += 1
                        progress = True
        if rest.is_constant():
            return rest.constant_value(), found
    return None


@dataclass(frozen=True)
class Localization:
    """The ring ``S^{-1} Lambda`` for a context and a multiplicative set."""

    ctx: RingContext
    spec: MultSetSpec

    def __call__(self, value) -> "RationalElement":
        if isinstance(value, RationalElement):
            return value
        if isinstance(value, Polynomial):
            return RationalElement(self, value, ())
        return RationalElement(self, self.ctx.const(value), ())

    def var(self, name_or_index) -> "RationalElement":
        return self(self.ctx.var(name_or_index))

    def one(self) -> "RationalElement":
        return self(1)

    def zero(self) -> "RationalElement":
        return self(0)

    def atom_inverse(self, a: Atom) -> "RationalElement":
        if not self.spec.contains(a):
            raise NotInvertible(f"atom {a.render(self.ctx)} is not in the multiplicative set")
        return RationalElement(self, self.ctx.one(), ((a, 1),))

    def linear_inverse(self, f: Polynomial) -> "RationalElement":
        unit, a = atom_normalize(f)
        return self.atom_inverse(a).scale(unit.inverse())

    def quotient(self, num: Polynomial, den: Polynomial) -> "RationalElement":
        return self(num) / self(den)


def _merge_den(d1, d2):
    c = Counter(dict(d1))
    for a, m in d2:
        c[a] += m
    return tuple(sorted(c.items()))


class RationalElement:
    """``num / prod(den)``, kept reduced: no denominator atom divides ``num``."""

    __slots__ = ("ring", "num", "den", "_hash")

    def __init__(self, ring: Localization, num: Polynomial, den=(), reduce: bool = True):
        self.ring = ring
        if isinstance(den, dict) or isinstance(den, Counter):
            den = tuple(sorted((a, m) for a, m in den.items() if m))
        else:
            den = tuple(sorted(den))
        if num.is_zero():
            den = ()
        self.num = num
        self.den = den
        self._hash = None
        if reduce and den:
            self._reduce()

    def _reduce(self):
        from .poly import exact_div

        num = self.num
        den = []
        ctx = self.ring.ctx
        for a, m in self.den:
            dp = a.to_poly(ctx)
            while m:
                q = exact_div(num, dp)
                if q is None:
                    break
                num = q
                m -= 1
            if m:
                den.append((a, m))
        self.num = num
        self.den = tuple(den)

    def reduce(self) -> "RationalElement":
        out = RationalElement(self.ring, self.num, self.den, reduce=False)
        out._reduce()
        return out

    # --- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def den_poly(self) -> Polynomial:
        out = self.ring.ctx.one()
        for a, m in self.den:
            out = out * a.to_poly(self.ring.ctx) ** m
        return out

    def variables(self) -> set[int]:
        out = set(self.num.variables())
        for a, _ in self.den:
            out.update(i for i, _ in a.coeffs)
        return out

    def _check(self, other: "RationalElement"):
        if other.ring is not self.ring and other.ring != self.ring:
            raise ContextMismatch("elements belong to different localizations")

    def _lift(self, other) -> "RationalElement":
        if isinstance(other, RationalElement):
            self._check(other)
            return other
        return self.ring(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalElement):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Coefficient, Polynomial)):
            return self == self.ring(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # --- arithmetic ---------------------------------------------------
    def __neg__(self) -> "RationalElement":
        return RationalElement(self.ring, -self.num, self.den, reduce=False)

    def scale(self, c) -> "RationalElement":
        return RationalElement(self.ring, self.num.scale(c), self.den, reduce=False)

    def __add__(self, other) -> "RationalElement":
        other = self._lift(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RationalElement(self.ring, self.num + other.num, self.den)
        d1, d2 = dict(self.den), dict(other.den)
        ctx = self.ring.ctx
        common = {}
        n1, n2 = self.num, other.num
        for a in set(d1) | set(d2):
            m1, m2 = d1.get(a, 0), d2.get(a, 0)
            m = max(m1, m2)
            common[a] = m
            if m > m1:
                n1 = n1 * a.to_poly(ctx) ** (m - m1)
            if m > m2:
                n2 = n2 * a.to_poly(ctx) ** (m - m2)
        return RationalElement(self.ring, n1 + n2, common)

    __radd__ = __add__

    def __sub__(self, other) -> "RationalElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "RationalElement":
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        other = self._lift(other)
        if self.num.is_zero() or other.num.is_zero():
            return self.ring.zero()
        if not self.den and not other.den:
            return RationalElement(self.ring, self.num * other.num, (), reduce=False)
        # cancel crosswise before multiplying out
        a = RationalElement(self.ring, self.num, other.den)
        b = RationalElement(self.ring, other.num, self.den)
        return RationalElement(self.ring, a.num * b.num, _merge_den(a.den, b.den), reduce=False)

    __rmul__ = __mul__

    def inverse(self) -> "RationalElement":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        fac = factor_atoms(self.num, self.ring.spec)
        if fac is None:
            raise NotInvertible(f"{self} is not a unit of the localization")
        unit, atoms = fac
        return RationalElement(self.ring, self.den_poly().scale(unit.inverse()), atoms)

    def __truediv__(self, other) -> "RationalElement":
        other = self._lift(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "RationalElement":
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int) -> "RationalElement":
        if k < 0:
            return self.inverse() ** (-k)
        num = self.num ** k
        return RationalElement(self.ring, num, tuple((a, m * k) for a, m in self.den), reduce=False)

    # --- ring maps ----------------------------------------------------
    def shift(self, s: Sequence[int]) -> "RationalElement":
        if not any(s):
            return self
        return RationalElement(self.ring, self.num.shift(s), tuple((a.shift(s), m) for a, m in self.den),
                               reduce=False)

    def star(self) -> "RationalElement":
        ctx = self.ring.ctx
        sign = 1
        den = []
        for a, m in self.den:
            u, b = a.star(ctx)
            if u < 0 and m & 1:
                sign = -sign
            den.append((b, m))
        num = self.num.star()
        return RationalElement(self.ring, -num if sign < 0 else num, den, reduce=False)

    def permute(self, perm: Sequence[int]) -> "RationalElement":
        sign = 1
        den = []
        for a, m in self.den:
            u, b = a.permute(perm)
            if u < 0 and m & 1:
                sign = -sign
            den.append((b, m))
        num = self.num.permute(perm)
        return RationalElement(self.ring, -num if sign < 0 else num, den, reduce=False)

    def act(self, g: GroupElement) -> "RationalElement":
        g.check(self.ring.ctx)
        out = self.permute(g.perm)
        return out.star() if g.star else out

    def evaluate(self, point: Sequence) -> Coefficient:
        val = self.num.evaluate(point)
        den = self.den_poly().evaluate(point)
        return val / den

    # --- rendering ----------------------------------------------------
    def __str__(self) -> str:
        if not self.den:
            return str(self.num)
        ctx = self.ring.ctx
        parts = []
        for a, m in self.den:
            s = f"({a.render(ctx)})"
            parts.append(s if m == 1 else f"{s}^{m}")
        return f"({self.num}) / [{' * '.join(parts)}]"

    def __repr__(self) -> str:
        return f"RationalElement({self})"


def frac_mul(a: RationalElement, b: RationalElement) -> RationalElement:
    return a * b


def frac_add(a: RationalElement, b: RationalElement) -> RationalElement:
    return a + b


def frac_neg(a: RationalElement) -> RationalElement:
    return -a


def frac_inv(a: RationalElement) -> RationalElement:
    return a.inverse()


def frac_shift(s: Sequence[int], a: RationalElement) -> RationalElement:
    return a.shift(s)


def frac_star(a: RationalElement) -> RationalElement:
    return a.star()


def frac_perm(g: GroupElement, a: RationalElement) -> RationalElement:
    return a.act(g)


# --- defining polynomial -------------------------------------------------

def _bar(ctx: RingContext, i: int) -> Polynomial:
    return ctx.const(ctx.zeta[i]) - ctx.var(i)


def _block_index(ctx: RingContext, i: int) -> int:
    for k, b in enumerate(ctx.blocks):
        if i in b:
            return k
    raise IndexError(i)


def _pairs(ctx: RingContext, partial: bool):
    for i in range(ctx.p):
        for j in range(i + 1, ctx.p):
            if partial and abs(_block_index(ctx, i) - _block_index(ctx, j)) > 1:
                continue
            yield i, j


def defining_polynomial(ctx: RingContext, partial: bool = False) -> Polynomial:
    """Product of the per-variable and per-pair discriminant factors.

    ``partial`` keeps only pairs from the same or neighbouring storey blocks.
    """
    out = ctx.one()
    for i in range(ctx.p):
        li, bi = ctx.var(i), _bar(ctx, i)
        out = out * li * bi * (li - bi) * (bi - li)
    for i, j in _pairs(ctx, partial):
        li, bi, lj, bj = ctx.var(i), _bar(ctx, i), ctx.var(j), _bar(ctx, j)
        out = out * (li + lj) * (li + bj) * (bi + lj) * (bi + bj)
    return out


def generating_atoms(ctx: RingContext, partial: bool = False, shift_indices=None) -> MultSetSpec:
    """Finite generating set ``{l_i, 2l_i - 1, l_i + l_j, l_i - l_j}``."""
    polys = []
    for i in range(ctx.p):
        polys += [ctx.var(i), ctx.var(i).scale(2) - 1]
    for i, j in _pairs(ctx, partial):
        polys += [ctx.var(i) + ctx.var(j), ctx.var(i) - ctx.var(j)]
    return MultSetSpec.from_polys(ctx, polys, shift_indices)


def linear_divisors(f: Polynomial, spec: MultSetSpec) -> Counter:
    """Atoms of ``f`` when it splits completely over ``spec`` (used for cross-checks)."""
    fac = factor_atoms(f, spec)
    if fac is None:
        raise AtomShapeError("polynomial does not split into atoms of the set")
    return fac[1]
