"""Expression parser and datum file loader.

Grammar (whitespace insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-')* factor
    factor := atom ('^' signed-int)?
    atom   := NUMBER | 'i' | 'sqrt3' | VAR | GEN | '(' expr ')' | '[' expr ']'
            | FUNC '(' expr ')'
    VAR    := 'l' INDEX          GEN := ('x' | 'y') INDEX
    FUNC   := 's' INDEX ('^' signed-int)? | 'star' | 'perm' '{' INDEX ',' INDEX '}'

Square brackets group like parentheses; the renderer uses them around
denominators.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .loc import Localization, MultSetSpec, NotInvertible, RationalElement
from .poly import SQRT3, GroupElement, I, RingContext
from .tgw import X, Y, AlgebraElement, Datum

Value = Union[RationalElement, AlgebraElement]


class ParseError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.message = message
        self.pos = pos
        super().__init__(message if pos is None else f"{message} at position {pos}")


class DatumError(ValueError):
    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


@dataclass(frozen=True)
class Token:
    kind: str  # num, name, op, end
    text: str
    pos: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        num, name, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            out.append(Token("num", num, start))
        elif name is not None:
            out.append(Token("name", name, start))
        else:
            if op not in "+-*/^()[]{},":
                raise ParseError(f"unexpected character {op!r}", start)
            out.append(Token("op", op, start))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class Parser:
    """Recursive-descent evaluator over a localization, optionally with a datum for generators."""

    def __init__(self, text: str, ring: Localization, datum: Datum | None = None):
        self.text = text
        self.ring = ring
        self.ctx: RingContext = ring.ctx
        self.datum = datum
        self.toks = tokenize(text)
        self.k = 0

    # --- token helpers ---------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.k]

    def advance(self) -> Token:
        t = self.toks[self.k]
        self.k += 1
        return t

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.k += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            raise ParseError(f"expected {op!r}", self.tok.pos)

    def parse(self) -> Value:
        if self.tok.kind == "end":
            raise ParseError("empty expression", 0)
        v = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos)
        return v

    # --- value helpers ---------------------------------------------------
    def lift(self, v: Value) -> AlgebraElement:
        if isinstance(v, AlgebraElement):
            return v
        if self.datum is None:
            raise AssertionError("lift without datum")
        return self.datum.scalar(v)

    def combine(self, a: Value, b: Value, op: str) -> Value:
        if isinstance(a, RationalElement) and isinstance(b, RationalElement):
            return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__}[op](b)
        a, b = self.lift(a), self.lift(b)
        return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__}[op](b)

    def as_scalar(self, v: Value, pos: int, what: str) -> RationalElement:
        if isinstance(v, RationalElement):
            return v
        if set(v.terms) <= {v.datum.zero_grade}:
            return v.scalar_part()
        raise ParseError(f"{what} must be an element of the base ring", pos)

    def invert(self, v: Value, pos: int) -> RationalElement:
        f = self.as_scalar(v, pos, "a denominator")
        if f.is_zero():
            raise ParseError("division by zero", pos)
        try:
            return f.inverse()
        except NotInvertible as exc:
            raise ParseError(f"denominator not in multiplicative set ({exc})", pos) from None

    # --- grammar ---------------------------------------------------------
    def expr(self) -> Value:
        v = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            v = self.combine(v, self.term(), op)
        return v

    def term(self) -> Value:
        v = self.unary()
        while self.tok.kind == "op" and self.tok.text in "*/":
            op = self.advance().text
            pos = self.tok.pos
            rhs = self.unary()
            if op == "*":
                v = self.combine(v, rhs, "*")
            else:
                inv = self.invert(rhs, pos)
                v = v * inv if isinstance(v, RationalElement) else v.scale(inv)
        return v

    def unary(self) -> Value:
        neg = False
        while self.tok.kind == "op" and self.tok.text in "+-":
            neg ^= self.advance().text == "-"
        v = self.factor()
        return -v if neg else v

    def signed_int(self) -> int:
        sign = 1
        while self.tok.kind == "op" and self.tok.text in "+-":
            if self.advance().text == "-":
                sign = -sign
        if self.tok.kind != "num":
            raise ParseError("expected an integer exponent", self.tok.pos)
        return sign * int(self.advance().text)

    def factor(self) -> Value:
        pos = self.tok.pos
        v = self.atom()
        if self.accept("^"):
            n = self.signed_int()
            if isinstance(v, AlgebraElement) and not set(v.terms) <= {v.datum.zero_grade}:
                if n <= 0:
                    raise ParseError("powers of non-scalar elements must be positive", pos)
                return v ** n
            f = self.as_scalar(v, pos, "base")
            if n < 0:
                f = self.invert(f, pos)
                n = -n
            return f ** n
        return v

    def index(self, text: str, pos: int, generator: bool = False) -> int:
        try:
            i = self.ctx.index(text)
        except KeyError:
            raise ParseError(f"unknown index {text!r}", pos) from None
        if generator and i >= self.ctx.q:
            raise ParseError(f"no generator with index {text!r}", pos)
        return i

    def read_index(self) -> tuple[str, int]:
        t = self.advance()
        if t.kind not in ("num", "name"):
            raise ParseError("expected an index", t.pos)
        return t.text, t.pos

    def atom(self) -> Value:
        t = self.tok
        if t.kind == "num":
            self.advance()
            return self.ring(int(t.text))
        if t.kind == "op" and t.text in "([":
            self.advance()
            v = self.expr()
            self.expect(")" if t.text == "(" else "]")
            return v
        if t.kind != "name":
            raise ParseError(f"unexpected {t.text!r}" if t.text else "unexpected end of input", t.pos)
        self.advance()
        name = t.text
        if name == "i":
            return self.ring(I)
        if name == "sqrt3":
            return self.ring(SQRT3)
        if name == "star":
            return self.call(lambda v, pos: v.star())
        if name == "perm":
            self.expect("{")
            a, pa = self.read_index()
            self.expect(",")
            b, pb = self.read_index()
            self.expect("}")
            g = GroupElement.transposition(self.ctx.p, self.index(a, pa), self.index(b, pb))
            try:
                g.check(self.ctx)
            except ValueError as exc:
                raise ParseError(str(exc), pa) from None
            return self.call(lambda v, pos: v.act(g) if isinstance(v, AlgebraElement) else v.permute(g.perm))
        head, rest = name[0], name[1:]
        if head == "l" and rest:
            return self.ring.var(self.index(rest, t.pos))
        if head in "xy" and rest:
            if self.datum is None:
                raise ParseError("generators are not allowed here", t.pos)
            i = self.index(rest, t.pos, generator=True)
            return self.datum.gen(i, X if head == "x" else Y)
        if head == "s" and rest:
            i = self.index(rest, t.pos)
            n = self.signed_int() if self.accept("^") else 1
            s = self.ctx.unit_shift(i, n)
            return self.call(lambda v, pos: self.as_scalar(v, pos, "a shifted argument").shift(s))
        raise ParseError(f"unknown identifier {name!r}", t.pos)

    def call(self, fn) -> Value:
        self.expect("(")
        pos = self.tok.pos
        v = self.expr()
        self.expect(")")
        return fn(v, pos)


def parse_scalar(text: str, ring: Localization) -> RationalElement:
    v = Parser(text, ring).parse()
    assert isinstance(v, RationalElement)
    return v


def parse_expr(text: str, datum: Datum) -> AlgebraElement:
    p = Parser(text, datum.ring, datum)
    return p.lift(p.parse())


# --- datum files ----------------------------------------------------------

def _require(doc: dict, key: str, kind, path: str = ""):
    if key not in doc:
        raise DatumError(path + key, "missing field")
    v = doc[key]
    if not isinstance(v, kind):
        raise DatumError(path + key, f"expected {kind.__name__ if isinstance(kind, type) else kind}")
    return v


def _matrix(ring: Localization, m, q: int, key: str) -> list[list[RationalElement]]:
    if not isinstance(m, list) or len(m) != q:
        raise DatumError(key, f"expected a {q}x{q} matrix")
    out = []
    for i, row in enumerate(m):
        if not isinstance(row, list) or len(row) != q:
            raise DatumError(f"{key}[{i}]", f"expected {q} entries")
        out.append([_scalar(ring, e, f"{key}[{i}][{j}]") for j, e in enumerate(row)])
    return out


def _scalar(ring: Localization, text, path: str) -> RationalElement:
    if isinstance(text, int):
        text = str(text)
    if not isinstance(text, str):
        raise DatumError(path, "expected an expression string")
    try:
        return parse_scalar(text, ring)
    except ParseError as exc:
        raise DatumError(path, str(exc)) from None


def datum_from_dict(doc: dict, name: str = "datum") -> Datum:
    if not isinstance(doc, dict):
        raise DatumError("$", "expected an object")
    blocks = _require(doc, "blocks", list)
    zeta = _require(doc, "zeta", list)
    q = _require(doc, "q", int)
    p = doc.get("p", len(zeta))
    names = doc.get("var_names") or doc.get("names") or [str(k) for k in range(1, p + 1)]
    if len(names) != p or len(zeta) != p:
        raise DatumError("var_names", f"expected {p} names and {p} zeta entries")
    if any(z not in (0, 1) for z in zeta):
        raise DatumError("zeta", "entries must be 0 or 1")
    try:
        # blocks may list indices or names
        blk = tuple(tuple(names.index(str(v)) if not isinstance(v, int) else v for v in b) for b in blocks)
        ctx = RingContext(tuple(str(n) for n in names), tuple(zeta), blk, q)
    except (ValueError, TypeError) as exc:
        raise DatumError("blocks", str(exc)) from None

    gens = doc.get("mult_set", [])
    if not isinstance(gens, list):
        raise DatumError("mult_set", "expected a list of expression strings")
    scratch = Localization(ctx, MultSetSpec(ctx, (), tuple(range(p))))
    polys = []
    for k, g in enumerate(gens):
        f = _scalar(scratch, g, f"mult_set[{k}]")
        if not f.is_polynomial():
            raise DatumError(f"mult_set[{k}]", "generators must be polynomials")
        polys.append(f.num)
    shift_indices = doc.get("shift_indices")
    if shift_indices is not None:
        shift_indices = tuple(names.index(str(v)) if not isinstance(v, int) else v for v in shift_indices)
    try:
        spec = MultSetSpec.from_polys(ctx, polys, shift_indices=shift_indices)
    except ValueError as exc:
        raise DatumError("mult_set", str(exc)) from None
    ring = Localization(ctx, spec)

    t = _require(doc, "t", list)
    if len(t) != q:
        raise DatumError("t", f"expected {q} entries")
    tv = [_scalar(ring, e, f"t[{k}]") for k, e in enumerate(t)]
    mu_xx = _matrix(ring, _require(doc, "mu_xx", list), q, "mu_xx")
    explicit = {k: _matrix(ring, doc[k], q, k) for k in ("mu_xy", "mu_yx", "mu_yy") if k in doc}

    for k, f in enumerate(tv):
        if f.is_zero():
            raise DatumError(f"t[{k}]", "t entries must be invertible")
        try:
            f.inverse()
        except NotInvertible:
            raise DatumError(f"t[{k}]", "not invertible in the localization") from None
    for i in range(q):
        if mu_xx[i][i] != ring.one():
            raise DatumError(f"mu_xx[{i}][{i}]", "diagonal entries must be 1")
        for j in range(i + 1, q):
            if mu_xx[i][j] * mu_xx[j][i] != ring.one():
                raise DatumError(f"mu_xx[{i}][{j}]",
                                 f"mu_xx[{i}][{j}] * mu_xx[{j}][{i}] != 1 (pair {names[i]},{names[j]})")
    return Datum(ring, tv, mu_xx, explicit.get("mu_xy"), explicit.get("mu_yx"), explicit.get("mu_yy"),
                 name=doc.get("name", name))


def load_datum(path_or_name: str) -> Datum:
    """Builtin catalog name (``su3``, ``so3``) or a path to a JSON datum file."""
    from .catalog import BUILTINS

    if path_or_name in BUILTINS:
        return BUILTINS[path_or_name]()
    path = Path(path_or_name)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise DatumError("$", f"no builtin or file named {path_or_name!r}") from None
    except json.JSONDecodeError as exc:
        raise DatumError("$", f"invalid JSON: {exc}") from None
    return datum_from_dict(doc, name=path.stem)


__all__ = ["ParseError", "DatumError", "tokenize", "Parser", "parse_scalar", "parse_expr", "datum_from_dict",
           "load_datum"]
