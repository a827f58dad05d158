"""Scalar literal grammar and file formats for signatures, sets, and grids.

Scalar literals:  expr := term (('+'|'-') term)*;  term := factor ('*'
factor | '/' factor)*;  factor := base ('^' int)?;  base := rational | 'i'
| 'a' | 'w' int | '(' expr ')'.  Here 'a' is the primitive 8th root of
unity and 'w M' the primitive M-th root.  The output-only atom 'y' denotes
the adjoined radical and is accepted on input only when a radical
declaration is supplied alongside.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cyclotomic import CyclotomicScalar
from .errors import ParseError
from .holant import GridVertex, SignatureGrid
from .scalars import AlgebraicScalar, rational
from .signatures import DenseSignature, SignatureSet, SymmetricSignature, Transform

_TOKEN = re.compile(r"\s*(?:(\d+)|([iay])|w(\d+)|([()+\-*/^]))")


class _Parser:
    def __init__(self, text: str, radical: AlgebraicScalar | None = None):
        self.tokens = self._tokenize(text)
        self.pos = 0
        self.radical = radical

    @staticmethod
    def _tokenize(text: str):
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise ParseError(f"bad scalar literal near {text[pos:pos+10]!r}")
            if m.group(1) is not None:
                tokens.append(("num", int(m.group(1))))
            elif m.group(2) is not None:
                tokens.append(("atom", m.group(2)))
            elif m.group(3) is not None:
                tokens.append(("zeta", int(m.group(3))))
            else:
                tokens.append(("op", m.group(4)))
            pos = m.end()
        return tokens

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self):
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of scalar literal")
        self.pos += 1
        return tok

    def parse(self) -> AlgebraicScalar:
        value = self._expr()
        if self._peek() is not None:
            raise ParseError(f"trailing input in scalar literal: {self.tokens[self.pos:]}")
        return value

    def _expr(self) -> AlgebraicScalar:
        tok = self._peek()
        negate = False
        if tok == ("op", "-"):
            self._next()
            negate = True
        elif tok == ("op", "+"):
            self._next()
        value = self._term()
        if negate:
            value = -value
        while True:
            tok = self._peek()
            if tok == ("op", "+"):
                self._next()
                value = value + self._term()
            elif tok == ("op", "-"):
                self._next()
                value = value - self._term()
            else:
                return value

    def _term(self) -> AlgebraicScalar:
        value = self._factor()
        while True:
            tok = self._peek()
            if tok == ("op", "*"):
                self._next()
                value = value * self._factor()
            elif tok == ("op", "/"):
                self._next()
                value = value / self._factor()
            else:
                return value

    def _factor(self) -> AlgebraicScalar:
        value = self._base()
        if self._peek() == ("op", "^"):
            self._next()
            sign = 1
            if self._peek() == ("op", "-"):
                self._next()
                sign = -1
            kind, num = self._next()
            if kind != "num":
                raise ParseError("exponent must be an integer")
            value = value ** (sign * num)
        return value

    def _base(self) -> AlgebraicScalar:
        kind, data = self._next()
        if kind == "num":
            return rational(data)
        if kind == "atom":
            if data == "i":
                return AlgebraicScalar.zeta(8, 2)
            if data == "a":
                return AlgebraicScalar.zeta(8)
            if self.radical is None:
                raise ParseError("radical atom 'y' without a radical declaration")
            return self.radical
        if kind == "zeta":
            return AlgebraicScalar.zeta(data)
        if (kind, data) == ("op", "("):
            value = self._expr()
            if self._next() != ("op", ")"):
                raise ParseError("unbalanced parenthesis in scalar literal")
            return value
        raise ParseError(f"unexpected token {data!r} in scalar literal")


def parse_scalar(text: str, radical: AlgebraicScalar | None = None) -> AlgebraicScalar:
    """Parse a scalar literal; `radical` supplies the value of the atom y."""
    if not isinstance(text, str):
        return rational(Fraction(text))
    return _Parser(text, radical).parse()


def parse_radical_declaration(decl: dict) -> AlgebraicScalar:
    """Build the radical atom from {"declaration": "y^k = expr", "branch": j}."""
    m = re.match(r"\s*y\s*\^\s*(\d+)\s*=\s*(.*)", decl["declaration"])
    if m is None:
        raise ParseError("radical declaration must have the form 'y^k = <expr>'")
    k = int(m.group(1))
    value = parse_scalar(m.group(2))
    if not value.is_cyclotomic():
        raise ParseError("radical radicand must be cyclotomic")
    v = value.cyclotomic_part()
    branch = int(decl.get("branch", 0))
    order = v.order
    from math import lcm

    order = lcm(order, k, 8)
    zero_c = CyclotomicScalar.from_rational(0, order)
    one_c = CyclotomicScalar.from_rational(1, order)
    coeffs = [zero_c] * k
    coeffs[1] = one_c
    return AlgebraicScalar(order, k, v.promote(order), tuple(coeffs), branch)


def _format_fraction(q: Fraction) -> str:
    return str(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyclotomic(c: CyclotomicScalar) -> str:
    from .scalars import demote_cyclotomic

    c = demote_cyclotomic(c)
    terms = []
    for j, coeff in enumerate(c.coeffs):
        if coeff == 0:
            continue
        q = Fraction(coeff)
        mag = _format_fraction(abs(q))
        if j == 0:
            body = mag
        else:
            atom = f"a^{j}" if c.order == 8 else f"w{c.order}^{j}"
            atom = atom[:-2] if j == 1 else atom
            body = atom if mag == "1" else f"{mag}*{atom}"
        terms.append(("-" if q < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(s: AlgebraicScalar) -> str:
    """Literal for a scalar; radical parts reference the output atom y."""
    if s.is_cyclotomic():
        return format_cyclotomic(s.cyclotomic_part())
    parts = []
    for j, coeff in enumerate(s.coeffs):
        if coeff.is_zero():
            continue
        body = format_cyclotomic(coeff)
        if j == 0:
            parts.append(body)
        else:
            y = "y" if j == 1 else f"y^{j}"
            parts.append(y if body == "1" else f"({body})*{y}")
    return " + ".join(parts) if parts else "0"


def radical_declaration(s: AlgebraicScalar) -> dict | None:
    """The side declaration for a radical-valued scalar, if any."""
    if s.is_cyclotomic():
        return None
    return {
        "declaration": f"y^{s.radical_degree} = {format_cyclotomic(s.radical_value)}",
        "branch": s.root_selector,
    }


def transform_to_json(t: Transform) -> dict:
    entries = t.entries()
    decl = None
    for e in entries:
        decl = decl or radical_declaration(e)
    return {
        "matrix": [format_scalar(e) for e in entries],
        "radical": decl,
    }


def transform_from_json(data: dict) -> Transform:
    radical = None
    if data.get("radical"):
        radical = parse_radical_declaration(data["radical"])
    e = [parse_scalar(x, radical) for x in data["matrix"]]
    return Transform(*e)


# -- signature / set / grid files -------------------------------------------


def signature_to_json(f) -> dict:
    if isinstance(f, SymmetricSignature):
        return {
            "kind": "symmetric",
            "arity": f.arity,
            "values": [format_scalar(v) for v in f.values],
        }
    return {
        "kind": "dense",
        "arity": f.arity,
        "entries": [format_scalar(e) for e in f.entries],
    }


def signature_from_json(data: dict, max_arity: int | None = None):
    """Parse {"kind":"dense"|"symmetric", ...}; arity 0 is rejected."""
    kind = data.get("kind")
    arity = int(data.get("arity", -1))
    if arity < 1:
        raise ParseError("signature arity must be at least 1")
    if kind == "dense":
        entries = [parse_scalar(e) for e in data["entries"]]
        if len(entries) != 1 << arity:
            raise ParseError("dense signature needs 2^arity entries")
        kwargs = {} if max_arity is None else {"max_arity": max_arity}
        return DenseSignature(arity, entries, **kwargs)
    if kind == "symmetric":
        values = [parse_scalar(v) for v in data["values"]]
        if len(values) != arity + 1:
            raise ParseError("symmetric signature needs arity+1 values")
        return SymmetricSignature(values)
    raise ParseError(f"unknown signature kind {kind!r}")


def set_from_json(data: dict, max_arity: int | None = None) -> SignatureSet:
    members = []
    for idx, item in enumerate(data.get("signatures", [])):
        if "sig" in item:
            name = item.get("name", f"sig{idx}")
            members.append((name, signature_from_json(item["sig"], max_arity)))
        else:
            members.append((f"sig{idx}", signature_from_json(item, max_arity)))
    if not members:
        raise ParseError("signature set must be nonempty")
    return SignatureSet(members)


def set_to_json(sigs: SignatureSet) -> dict:
    return {
        "signatures": [{"name": nm, "sig": signature_to_json(f)} for nm, f in sigs]
    }


def grid_from_json(data: dict, max_arity: int | None = None) -> SignatureGrid:
    edges = int(data["edges"])
    pool = [signature_from_json(s, max_arity) for s in data.get("signatures", [])]
    vertices = []
    for v in data["vertices"]:
        sig = v["sig"]
        if isinstance(sig, int):
            f = pool[sig]
        else:
            f = signature_from_json(sig, max_arity)
        if isinstance(f, SymmetricSignature):
            from .signatures import expand

            f = expand(f)
        vertices.append(GridVertex(f, tuple(int(e) for e in v["incident"])))
    bipartite = None
    if data.get("bipartite"):
        bipartite = (
            tuple(int(x) for x in data["bipartite"]["left"]),
            tuple(int(x) for x in data["bipartite"]["right"]),
        )
    return SignatureGrid(edges, vertices, bipartite)


def grid_to_json(grid: SignatureGrid) -> dict:
    out = {
        "edges": grid.edge_count,
        "vertices": [
            {"sig": signature_to_json(v.signature), "incident": list(v.incident)}
            for v in grid.vertices
        ],
    }
    if grid.bipartite is not None:
        out["bipartite"] = {
            "left": list(grid.bipartite[0]),
            "right": list(grid.bipartite[1]),
        }
    return out


def parse_signature_argument(text: str, max_arity: int | None = None):
    """CLI signature argument: a file path, inline JSON, or shorthand.

    '[...]' is a symmetric value list, '(...)' a dense entry tuple.
    """
    text = text.strip()
    if text.startswith("{"):
        return signature_from_json(json.loads(text), max_arity)
    if text.startswith("["):
        body = text[1:-1] if text.endswith("]") else text[1:]
        values = [parse_scalar(v.strip()) for v in body.split(",")]
        return SymmetricSignature(values)
    if text.startswith("("):
        body = text[1:-1] if text.endswith(")") else text[1:]
        entries = [parse_scalar(v.strip()) for v in body.split(",")]
        arity = (len(entries) - 1).bit_length()
        if len(entries) != 1 << arity:
            raise ParseError("dense shorthand needs a power-of-two entry count")
        kwargs = {} if max_arity is None else {"max_arity": max_arity}
        return DenseSignature(arity, entries, **kwargs)
    with open(text, "r", encoding="utf-8") as fh:
        return signature_from_json(json.load(fh), max_arity)
