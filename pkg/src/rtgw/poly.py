"""Exact coefficients in Q(i, sqrt3) and the polynomial ring with involution.

Polynomials are sparse maps from exponent tuples to :class:`Coefficient`.
Every operation returns a new value; nothing is mutated after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd
from typing import Iterable, Mapping, Sequence

__all__ = [
    "Coefficient",
    "RingContext",
    "Polynomial",
    "GroupElement",
    "ContextMismatch",
    "add",
    "mul",
    "shift_apply",
    "star",
    "perm_apply",
    "elem_sym",
    "exact_div",
]


class ContextMismatch(ValueError):
    pass


def _rational_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Coefficient:
    """``(a + b*i + c*sqrt3 + d*i*sqrt3) / n`` with integers and ``n > 0``.

    The common denominator is kept in lowest terms, so each of the four
    rational parts (see :attr:`parts`) is in lowest terms as well.
    """

    __slots__ = ("a", "b", "c", "d", "n")

    def __init__(self, a: int = 0, b: int = 0, c: int = 0, d: int = 0, n: int = 1):
        if n == 0:
            raise ZeroDivisionError("zero denominator")
        if n < 0:
            a, b, c, d, n = -a, -b, -c, -d, -n
        if n != 1:
            g = gcd(a, b, c, d, n)
            if g != 1:
                a, b, c, d, n = a // g, b // g, c // g, d // g, n // g
        self.a, self.b, self.c, self.d, self.n = a, b, c, d, n

    @classmethod
    def from_parts(cls, a=0, b=0, c=0, d=0) -> "Coefficient":
        fa, fb, fc, fd = (Fraction(v) for v in (a, b, c, d))
        n = 1
        for f in (fa, fb, fc, fd):
            n = n * f.denominator // gcd(n, f.denominator)
        return cls(*(int(f * n) for f in (fa, fb, fc, fd)), n)

    @classmethod
    def coerce(cls, v) -> "Coefficient":
        if isinstance(v, Coefficient):
            return v
        if isinstance(v, int):
            return cls(v)
        if isinstance(v, Fraction):
            return cls(v.numerator, 0, 0, 0, v.denominator)
        raise TypeError(f"cannot coerce {type(v).__name__} to Coefficient")

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        n = self.n
        return (Fraction(self.a, n), Fraction(self.b, n), Fraction(self.c, n), Fraction(self.d, n))

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def is_one(self) -> bool:
        return self.a == 1 and self.n == 1 and not (self.b or self.c or self.d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Coefficient):
            try:
                other = Coefficient.coerce(other)
            except TypeError:
                return NotImplemented
        return (self.a, self.b, self.c, self.d, self.n) == (other.a, other.b, other.c, other.d, other.n)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d, self.n))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __neg__(self) -> "Coefficient":
        return Coefficient(-self.a, -self.b, -self.c, -self.d, self.n)

    def __add__(self, other) -> "Coefficient":
        o = other if isinstance(other, Coefficient) else Coefficient.coerce(other)
        n1, n2 = self.n, o.n
        if n1 == n2:
            return Coefficient(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d, n1)
        return Coefficient(
            self.a * n2 + o.a * n1,
            self.b * n2 + o.b * n1,
            self.c * n2 + o.c * n1,
            self.d * n2 + o.d * n1,
            n1 * n2,
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Coefficient":
        o = other if isinstance(other, Coefficient) else Coefficient.coerce(other)
        return self + (-o)

    def __rsub__(self, other) -> "Coefficient":
        return Coefficient.coerce(other) - self

    def __mul__(self, other) -> "Coefficient":
        if isinstance(other, int):
            return Coefficient(self.a * other, self.b * other, self.c * other, self.d * other, self.n)
        o = other if isinstance(other, Coefficient) else Coefficient.coerce(other)
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = o.a, o.b, o.c, o.d
        if not (b or c or d or f or g or h):
            return Coefficient(a * e, 0, 0, 0, self.n * o.n)
        return Coefficient(
            a * e - b * f + 3 * (c * g - d * h),
            a * f + b * e + 3 * (c * h + d * g),
            a * g + c * e - b * h - d * f,
            a * h + d * e + b * g + c * f,
            self.n * o.n,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Coefficient":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero coefficient")
        a, b, c, d, n = self.a, self.b, self.c, self.d, self.n
        if not (b or c or d):
            return Coefficient(n, 0, 0, 0, a)
        # z = u + v*sqrt3 with u, v in Z[i]; z * (u - v*sqrt3) = w in Z[i]
        wr = a * a - b * b - 3 * (c * c - d * d)
        wi = 2 * (a * b - 3 * c * d)
        norm = wr * wr + wi * wi
        # (u - v*sqrt3) * conj(w)
        cr, ci = wr, -wi
        num = Coefficient(a * cr - b * ci, a * ci + b * cr, -(c * cr - d * ci), -(c * ci + d * cr))
        return num * Coefficient(n, 0, 0, 0, norm)

    def __truediv__(self, other) -> "Coefficient":
        return self * Coefficient.coerce(other).inverse()

    def __rtruediv__(self, other) -> "Coefficient":
        return Coefficient.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Coefficient":
        if k < 0:
            return self.inverse() ** (-k)
        out = Coefficient(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self) -> "Coefficient":
        """Complex conjugation: ``i -> -i``, ``sqrt3`` fixed."""
        return Coefficient(self.a, -self.b, self.c, -self.d, self.n)

    def to_complex(self) -> complex:
        r3 = 3 ** 0.5
        return complex((self.a + self.c * r3) / self.n, (self.b + self.d * r3) / self.n)

    def __repr__(self) -> str:
        return f"Coefficient({self})"

    def __str__(self) -> str:
        pieces = []
        for part, unit in zip(self.parts, ("", "i", "sqrt3", "i*sqrt3")):
            if not part:
                continue
            if not unit:
                pieces.append(_rational_str(part))
                continue
            mag = abs(part)
            sign = "-" if part < 0 else ""
            if mag == 1:
                pieces.append(f"{sign}{unit}")
            elif mag.denominator == 1:
                pieces.append(f"{sign}{mag.numerator}*{unit}")
            elif mag.numerator == 1:
                pieces.append(f"{sign}{unit}/{mag.denominator}")
            else:
                pieces.append(f"{sign}{mag.numerator}*{unit}/{mag.denominator}")
        if not pieces:
            return "0"
        out = pieces[0]
        for p in pieces[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def is_simple(self) -> bool:
        """True when at most one of the four parts is nonzero."""
        return sum(1 for v in (self.a, self.b, self.c, self.d) if v) <= 1


ZERO = Coefficient(0)
ONE = Coefficient(1)
I = Coefficient(0, 1)
SQRT3 = Coefficient(0, 0, 1)


@dataclass(frozen=True)
class RingContext:
    """Variables, involution parameters and storey partition of the base ring.

    ``blocks`` holds 0-based index tuples; the first blocks cover exactly
    ``range(q)`` and the remaining ones hold the central variables.
    """

    var_names: tuple[str, ...]
    zeta: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    q: int

    def __post_init__(self):
        p = len(self.var_names)
        if len(self.zeta) != p:
            raise ValueError("zeta must have one entry per variable")
        if any(z not in (0, 1) for z in self.zeta):
            raise ValueError("zeta entries must be 0 or 1")
        if len(set(self.var_names)) != p:
            raise ValueError("variable names must be distinct")
        flat = sorted(i for b in self.blocks for i in b)
        if flat != list(range(p)):
            raise ValueError("blocks must partition the variable indices")
        if not 0 < self.q <= p:
            raise ValueError("q must satisfy 0 < q <= p")
        covered = 0
        for b in self.blocks:
            if covered == self.q:
                break
            if sorted(b) != list(range(covered, covered + len(b))):
                raise ValueError("the first blocks must cover exactly the first q indices in order")
            covered += len(b)
        if covered != self.q:
            raise ValueError("no run of leading blocks covers exactly the first q indices")
        for b in self.blocks:
            if len({self.zeta[i] for i in b}) > 1:
                raise ValueError(f"zeta is not constant on block {[self.var_names[i] for i in b]}")

    @property
    def p(self) -> int:
        return len(self.var_names)

    def index(self, name: str) -> int:
        try:
            return self.var_names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable index {name!r}") from None

    def block_of(self, i: int) -> tuple[int, ...]:
        for b in self.blocks:
            if i in b:
                return b
        raise IndexError(i)

    def noncentral_blocks(self) -> list[tuple[int, ...]]:
        return [b for b in self.blocks if max(b) < self.q]

    def var(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.index(name_or_index)
        e = [0] * self.p
        e[i] = 1
        return Polynomial(self, {tuple(e): ONE})

    def const(self, c) -> "Polynomial":
        c = Coefficient.coerce(c)
        return Polynomial(self, {(0,) * self.p: c} if c else {})

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def unit_shift(self, i: int, power: int = 1) -> tuple[int, ...]:
        s = [0] * self.p
        s[i] = power
        return tuple(s)


def _grlex_key(e: tuple[int, ...]):
    # larger key = larger monomial; lower variable index dominates
    return (sum(e), e)


class Polynomial:
    """Sparse polynomial over :class:`Coefficient` with the variables of a context."""

    __slots__ = ("ctx", "terms", "_hash")

    def __init__(self, ctx: RingContext, terms: Mapping[tuple[int, ...], Coefficient] | None = None):
        self.ctx = ctx
        self.terms = {} if terms is None else {e: c for e, c in terms.items() if not c.is_zero()}
        self._hash = None

    @classmethod
    def _raw(cls, ctx, terms):
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        p._hash = None
        return p

    # --- inspection ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Coefficient:
        return self.terms.get((0,) * self.ctx.p, ZERO)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {i for e in self.terms for i, k in enumerate(e) if k}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Coefficient]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], Coefficient]:
        e = max(self.terms, key=_grlex_key)
        return e, self.terms[e]

    def evaluate(self, point: Sequence) -> Coefficient:
        total = ZERO
        pt = [Coefficient.coerce(v) for v in point]
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = v * pt[i] ** k
            total = total + v
        return total

    # --- arithmetic ---------------------------------------------------
    def _check(self, other: "Polynomial"):
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ContextMismatch("polynomials belong to different ring contexts")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return self.ctx.const(other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.terms == self.ctx.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.ctx, {e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        if len(other.terms) > len(self.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for e, c in small.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v.is_zero():
                    del out[e]
                else:
                    out[e] = v
        return Polynomial._raw(self.ctx, out)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def scale(self, c) -> "Polynomial":
        c = Coefficient.coerce(c)
        if c.is_zero():
            return Polynomial._raw(self.ctx, {})
        if c.is_one():
            return self
        return Polynomial._raw(self.ctx, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.ctx, {e: c for e, c in out.items() if not c.is_zero()})

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ctx.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # --- ring maps ----------------------------------------------------
    def shift(self, s: Sequence[int]) -> "Polynomial":
        """Apply ``prod sigma_i^{s_i}``: every ``l_i`` becomes ``l_i - s_i``."""
        out = self.terms
        for i, si in enumerate(s):
            if si:
                out = _substitute_affine(out, i, 1, -si)
        return Polynomial._raw(self.ctx, out) if out is not self.terms else self

    def conj(self) -> "Polynomial":
        return Polynomial._raw(self.ctx, {e: c.conj() for e, c in self.terms.items()})

    def star(self) -> "Polynomial":
        """Involution ``l_i -> zeta_i - l_i`` with conjugated coefficients."""
        out = {}
        for e, c in self.terms.items():
            c = c.conj()
            out[e] = -c if sum(e) & 1 else c
        # f(-l) shifted by zeta gives f(zeta - l)
        return Polynomial._raw(self.ctx, out).shift(self.ctx.zeta)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename ``l_i`` to ``l_{perm[i]}``."""
        p = self.ctx.p
        out = {}
        for e, c in self.terms.items():
            ne = [0] * p
            for i, k in enumerate(e):
                ne[perm[i]] = k
            out[tuple(ne)] = c
        return Polynomial._raw(self.ctx, out)

    def substitute(self, i: int, value: Coefficient) -> "Polynomial":
        """Set ``l_i`` to a constant."""
        out: dict = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                c = c * value ** k
                e = e[:i] + (0,) + e[i + 1:]
            v = out.get(e)
            out[e] = c if v is None else v + c
        return Polynomial._raw(self.ctx, {e: c for e, c in out.items() if not c.is_zero()})

    # --- rendering ----------------------------------------------------
    def monomial_str(self, e: tuple[int, ...]) -> str:
        parts = []
        for i, k in enumerate(e):
            if k == 1:
                parts.append(f"l{self.ctx.var_names[i]}")
            elif k:
                parts.append(f"l{self.ctx.var_names[i]}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for idx, (e, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_str(e)
            neg = False
            if c.is_simple() and next(v for v in (c.a, c.b, c.c, c.d) if v) < 0:
                neg, c = True, -c
            if not mono:
                body = str(c) if c.is_simple() else f"({c})"
            elif c.is_one():
                body = mono
            elif c.is_simple():
                body = f"{c}*{mono}"
            else:
                body = f"({c})*{mono}"
            if idx == 0:
                out = f"-{body}" if neg else body
            else:
                out += f" - {body}" if neg else f" + {body}"
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"


_BINOM_CACHE: dict = {}


def _substitute_affine(terms, i, a, b):
    """Replace ``l_i`` by ``a*l_i + b`` (integers) in a term map."""
    out: dict = {}
    get = out.get
    for e, c in terms.items():
        k = e[i]
        if not k:
            v = get(e)
            out[e] = c if v is None else v + c
            continue
        key = (k, a, b)
        row = _BINOM_CACHE.get(key)
        if row is None:
            row = [(j, comb(k, j) * a ** j * b ** (k - j)) for j in range(k + 1)]
            row = [(j, w) for j, w in row if w]
            _BINOM_CACHE[key] = row
        pre, post = e[:i], e[i + 1:]
        for j, w in row:
            ne = pre + (j,) + post
            v = get(ne)
            cw = c * w
            out[ne] = cw if v is None else v + cw
    return {e: c for e, c in out.items() if not c.is_zero()}


@dataclass(frozen=True)
class GroupElement:
    """Element of ``S x <*>``: a block-preserving permutation and a star flag."""

    perm: tuple[int, ...]
    star: bool = False

    @classmethod
    def identity(cls, p: int) -> "GroupElement":
        return cls(tuple(range(p)), False)

    @classmethod
    def transposition(cls, p: int, i: int, j: int, star: bool = False) -> "GroupElement":
        perm = list(range(p))
        perm[i], perm[j] = j, i
        return cls(tuple(perm), star)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        # (g*h)(v) = g(h(v)); star commutes with permutations
        return GroupElement(tuple(self.perm[k] for k in other.perm), self.star != other.star)

    def check(self, ctx: RingContext) -> None:
        if sorted(self.perm) != list(range(ctx.p)):
            raise ValueError("not a permutation of the variable indices")
        for b in ctx.blocks:
            if {self.perm[i] for i in b} != set(b):
                raise ValueError("permutation crosses storey blocks")


def group_generators(ctx: RingContext) -> list[tuple[str, GroupElement]]:
    """Adjacent transpositions inside each block, plus the involution."""
    gens = []
    for b in ctx.blocks:
        for i, j in zip(b, b[1:]):
            gens.append((f"perm{{{ctx.var_names[i]},{ctx.var_names[j]}}}", GroupElement.transposition(ctx.p, i, j)))
    gens.append(("star", GroupElement(tuple(range(ctx.p)), True)))
    return gens


def group_transpositions(ctx: RingContext) -> list[tuple[str, GroupElement]]:
    out = []
    for b in ctx.blocks:
        for i, j in combinations(b, 2):
            out.append((f"perm{{{ctx.var_names[i]},{ctx.var_names[j]}}}", GroupElement.transposition(ctx.p, i, j)))
    return out


# --- functional surface ------------------------------------------------

def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def shift_apply(s: Sequence[int], a: Polynomial) -> Polynomial:
    return a.shift(s)


def star(a: Polynomial) -> Polynomial:
    return a.star()


def perm_apply(g: GroupElement, a: Polynomial) -> Polynomial:
    g.check(a.ctx)
    out = a.permute(g.perm)
    return out.star() if g.star else out


def elementary(polys: Sequence[Polynomial], alpha: int, ctx: RingContext) -> Polynomial:
    total = ctx.zero()
    for combo in combinations(polys, alpha):
        term = ctx.one()
        for f in combo:
            term = term * f
        total = total + term
    return total


def elem_sym(ctx: RingContext, block: Iterable[int], alpha: int, hatted: bool = False,
             centered: bool = True) -> Polynomial:
    """Elementary symmetric polynomial of a block.

    With ``centered`` the variables are ``l_i - zeta_i/2``; ``hatted``
    multiplies by ``i**alpha`` which makes the result star-invariant.
    """
    block = list(block)
    if not 1 <= alpha <= len(block):
        raise ValueError(f"alpha={alpha} out of range for a block of size {len(block)}")
    half = Fraction(1, 2)
    polys = [ctx.var(i) - (ctx.zeta[i] * half if centered else 0) for i in block]
    out = elementary(polys, alpha, ctx)
    return out.scale(I ** alpha) if hatted else out


def _divide_linear(a: Polynomial, d: Polynomial) -> Polynomial | None:
    ctx = a.ctx
    v = min(d.variables())
    unit = [0] * ctx.p
    unit[v] = 1
    lead = d.terms.get(tuple(unit))
    if lead is None:
        return None
    rest = {e: c for e, c in d.terms.items() if e[v] == 0}
    inv = lead.inverse()
    n = a.degree_in(v)
    chunks: dict[int, dict] = {}
    for e, c in a.terms.items():
        base = e[:v] + (0,) + e[v + 1:]
        chunks.setdefault(e[v], {})[base] = c
    quot: dict = {}
    carry: dict = {}
    for k in range(n, 0, -1):
        cur = chunks.get(k, {})
        if carry:
            cur = _merge(cur, carry)
        if not cur:
            carry = {}
            continue
        qk = {e: c * inv for e, c in cur.items()}
        for e, c in qk.items():
            quot[e[:v] + (k - 1,) + e[v + 1:]] = c
        carry = {}
        for e1, c1 in qk.items():
            for e2, c2 in rest.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                w = carry.get(e)
                val = -(c1 * c2)
                carry[e] = val if w is None else w + val
        carry = {e: c for e, c in carry.items() if not c.is_zero()}
    remainder = _merge(chunks.get(0, {}), carry)
    if remainder:
        return None
    return Polynomial._raw(ctx, quot)


def _merge(x: dict, y: dict) -> dict:
    out = dict(x)
    for e, c in y.items():
        v = out.get(e)
        if v is None:
            out[e] = c
        else:
            v = v + c
            if v.is_zero():
                del out[e]
            else:
                out[e] = v
    return out


def exact_div(a: Polynomial, d: Polynomial) -> Polynomial | None:
    """Return ``q`` with ``a == q*d``, or ``None`` when ``d`` does not divide ``a``."""
    a._check(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return a
    if d.is_constant():
        return a.scale(d.constant_value().inverse())
    if d.degree() == 1:
        return _divide_linear(a, d)
    ld, lc = d.leading_term()
    inv = lc.inverse()
    rem = dict(a.terms)
    quot: dict = {}
    while rem:
        e = max(rem, key=_grlex_key)
        if any(x < y for x, y in zip(e, ld)):
            return None
        qe = tuple(x - y for x, y in zip(e, ld))
        qc = rem[e] * inv
        quot[qe] = qc
        for e2, c2 in d.terms.items():
            t = tuple(x + y for x, y in zip(qe, e2))
            v = rem.get(t, ZERO) - qc * c2
            if v.is_zero():
                rem.pop(t, None)
            else:
                rem[t] = v
    return Polynomial._raw(a.ctx, quot)
