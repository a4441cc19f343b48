"""Text syntax for formulas and polynomials.

Grammar, loosest binding first:

    formula := and_expr ('\\/' and_expr)*
    and_expr:= unary ('/\\' unary)*
    unary   := ('forall'|'exists') NAME+ '.' formula
             | '~' unary | 'true' | 'false'
             | '(' formula ')' | atom
    atom    := poly REL poly         REL in  =  !=  <  <=  >  >=
    poly    := term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := '-' factor | base ('^' NAT)?
    base    := NAT ('/' NAT)? | NAME | '(' poly ')'

Binding 'forall x y.' is the two-at-once binder form.  Named variables
become de Bruijn indices: bound names count binders outward from the use
site, free names continue above the binder depth in first-occurrence
order (or in the caller-supplied order).  Two-sided relations are folded
to comparisons with zero on the right.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .formula import (
    And,
    Atom,
    Exists,
    ExistsN,
    FalseF,
    Forall,
    ForallN,
    Formula,
    Neg,
    Or,
    Rel,
    TrueF,
)
from .mpoly import MPoly, format_mpoly


class ParseError(ValueError):
    pass


_KEYWORDS = {"forall", "exists", "true", "false"}

_TOKEN_RE = re.compile(
    r"""
      (?P<ws>\s+)
    | (?P<and>/\\) | (?P<or>\\/)
    | (?P<leq><=) | (?P<geq>>=) | (?P<neq>!=)
    | (?P<lt><) | (?P<gt>>) | (?P<eq>=)
    | (?P<plus>\+) | (?P<minus>-) | (?P<star>\*)
    | (?P<caret>\^) | (?P<slash>/)
    | (?P<lpar>\() | (?P<rpar>\)) | (?P<dot>\.) | (?P<tilde>~)
    | (?P<int>\d+)
    | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Tok]:
    out: list[_Tok] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r} at {pos}")
        kind = m.lastgroup or ""
        if kind != "ws":
            tok = m.group()
            if kind == "name" and tok in _KEYWORDS:
                kind = tok
            out.append(_Tok(kind, tok, pos))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, free: Sequence[str] | None, lock_free: bool):
        self.toks = _lex(text)
        self.pos = 0
        self.env: list[str] = []
        self.free: list[str] = list(free) if free else []
        self.lock_free = lock_free

    # -- token plumbing -----------------------------------------------------

    def _peek(self) -> _Tok:
        return self.toks[self.pos]

    def _next(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def _expect(self, kind: str) -> _Tok:
        t = self._peek()
        if t.kind != kind:
            raise ParseError(f"expected {kind} at {t.pos}, found {t.text!r}")
        return self._next()

    # -- formulas -----------------------------------------------------------

    def formula(self) -> Formula:
        out = self.and_expr()
        while self._peek().kind == "or":
            self._next()
            out = Or(out, self.and_expr())
        return out

    def and_expr(self) -> Formula:
        out = self.unary()
        while self._peek().kind == "and":
            self._next()
            out = And(out, self.unary())
        return out

    def unary(self) -> Formula:
        t = self._peek()
        if t.kind in ("forall", "exists"):
            self._next()
            names = [self._expect("name").text]
            while self._peek().kind == "name":
                names.append(self._next().text)
            self._expect("dot")
            for n in names:
                self.env.insert(0, n)
            body = self.formula()
            del self.env[: len(names)]
            if t.kind == "forall":
                return Forall(body) if len(names) == 1 else ForallN(len(names), body)
            return Exists(body) if len(names) == 1 else ExistsN(len(names), body)
        if t.kind == "tilde":
            self._next()
            return Neg(self.unary())
        if t.kind == "true":
            self._next()
            return TrueF()
        if t.kind == "false":
            self._next()
            return FalseF()
        if t.kind == "lpar":
            save = self.pos
            try:
                return self.atom()
            except ParseError:
                self.pos = save
            self._next()
            out = self.formula()
            self._expect("rpar")
            return out
        return self.atom()

    def atom(self) -> Formula:
        left = self.poly()
        t = self._peek()
        rels = {"eq", "neq", "lt", "leq", "gt", "geq"}
        if t.kind not in rels:
            raise ParseError(f"expected a relation at {t.pos}, found {t.text!r}")
        self._next()
        right = self.poly()
        if t.kind == "eq":
            return Atom(Rel.EQ, left - right)
        if t.kind == "neq":
            return Neg(Atom(Rel.EQ, left - right))
        if t.kind == "lt":
            return Atom(Rel.LESS, left - right)
        if t.kind == "leq":
            return Atom(Rel.LEQ, left - right)
        if t.kind == "gt":
            return Atom(Rel.LESS, right - left)
        return Atom(Rel.LEQ, right - left)

    # -- polynomials ---------------------------------------------------------

    def poly(self) -> MPoly:
        out = self.term()
        while self._peek().kind in ("plus", "minus"):
            op = self._next().kind
            rhs = self.term()
            out = out + rhs if op == "plus" else out - rhs
        return out

    def term(self) -> MPoly:
        out = self.factor()
        while self._peek().kind == "star":
            self._next()
            out = out * self.factor()
        return out

    def factor(self) -> MPoly:
        if self._peek().kind == "minus":
            self._next()
            return -self.factor()
        out = self.base()
        if self._peek().kind == "caret":
            self._next()
            e = int(self._expect("int").text)
            out = out**e
        return out

    def base(self) -> MPoly:
        t = self._peek()
        if t.kind == "int":
            self._next()
            num = int(t.text)
            if self._peek().kind == "slash":
                self._next()
                den = int(self._expect("int").text)
                if den == 0:
                    raise ParseError(f"zero denominator at {t.pos}")
                return MPoly.const(Fraction(num, den))
            return MPoly.const(num)
        if t.kind == "name":
            self._next()
            return MPoly.var(self._resolve(t))
        if t.kind == "lpar":
            self._next()
            out = self.poly()
            self._expect("rpar")
            return out
        raise ParseError(f"expected a polynomial at {t.pos}, found {t.text!r}")

    def _resolve(self, t: _Tok) -> int:
        name = t.text
        if name in self.env:
            return self.env.index(name)
        if name not in self.free:
            if self.lock_free:
                raise ParseError(f"unknown variable {name!r} at {t.pos}")
            self.free.append(name)
        return len(self.env) + self.free.index(name)

    def _done(self) -> None:
        t = self._peek()
        if t.kind != "end":
            raise ParseError(f"trailing input at {t.pos}: {t.text!r}")


def parse_formula(
    text: str, free: Sequence[str] | None = None, lock_free: bool = False
) -> tuple[Formula, list[str]]:
    """Parse a formula; returns it with the final free-variable name order."""
    p = _Parser(text, free, lock_free)
    f = p.formula()
    p._done()
    return f, p.free


def parse_poly(
    text: str, free: Sequence[str] | None = None, lock_free: bool = False
) -> tuple[MPoly, list[str]]:
    """Parse a bare polynomial; returns it with the free-variable name order."""
    p = _Parser(text, free, lock_free)
    out = p.poly()
    p._done()
    return out, p.free


# -- printing -----------------------------------------------------------------

_POOL = ("x", "y", "z", "w", "u", "v", "s", "t")


def _fresh(used: set[str]) -> str:
    for n in _POOL:
        if n not in used:
            return n
    i = 1
    while f"x{i}" in used:
        i += 1
    return f"x{i}"


def format_formula(f: Formula, free_names: Sequence[str] = ()) -> str:
    """Render a formula so that parsing it back gives the same tree.

    free_names[i] names free variable i; missing entries fall back to
    v{i}.  Binder names are drawn fresh against everything in scope.
    """
    free = list(free_names)

    def poly_names(env: list[str], needed: int) -> list[str]:
        names = list(env)
        k = 0
        while len(names) < needed:
            names.append(free[k] if k < len(free) else f"v{k}")
            k += 1
        return names

    def walk(g: Formula, env: list[str], minprec: int) -> str:
        if isinstance(g, TrueF):
            return "true"
        if isinstance(g, FalseF):
            return "false"
        if isinstance(g, Atom):
            body = format_mpoly(g.poly, poly_names(env, g.poly.max_var() + 1))
            return f"{body} {g.rel.value} 0"
        if isinstance(g, Neg):
            return _wrap(f"~{walk(g.arg, env, 3)}", 3, minprec)
        if isinstance(g, And):
            s = f"{walk(g.left, env, 2)} /\\ {walk(g.right, env, 3)}"
            return _wrap(s, 2, minprec)
        if isinstance(g, Or):
            s = f"{walk(g.left, env, 1)} \\/ {walk(g.right, env, 2)}"
            return _wrap(s, 1, minprec)
        if isinstance(g, (Forall, Exists, ForallN, ExistsN)):
            count = g.count if isinstance(g, (ForallN, ExistsN)) else 1
            used = set(env) | set(free)
            names: list[str] = []
            for _ in range(count):
                n = _fresh(used)
                used.add(n)
                names.append(n)
            # Leftmost printed name is the outermost binder.
            inner = list(reversed(names)) + env
            word = "forall" if isinstance(g, (Forall, ForallN)) else "exists"
            s = f"{word} {' '.join(names)}. {walk(g.body, inner, 0)}"
            return _wrap(s, 0, minprec)
        raise TypeError(f"not a formula: {g!r}")

    return walk(f, [], 0)


def _wrap(s: str, prec: int, minprec: int) -> str:
    return f"({s})" if prec < minprec else s


def formula_to_dict(f: Formula) -> dict:
    """JSON-ready recursive description of a formula.

    Polynomials print with positional names v0, v1, ... where the index is
    the de Bruijn index at the atom's own depth; pair with format_formula
    for a reading with real names.
    """
    if isinstance(f, TrueF):
        return {"kind": "true"}
    if isinstance(f, FalseF):
        return {"kind": "false"}
    if isinstance(f, Atom):
        return {"kind": "atom", "rel": f.rel.value, "poly": format_mpoly(f.poly)}
    if isinstance(f, And):
        return {
            "kind": "and",
            "left": formula_to_dict(f.left),
            "right": formula_to_dict(f.right),
        }
    if isinstance(f, Or):
        return {
            "kind": "or",
            "left": formula_to_dict(f.left),
            "right": formula_to_dict(f.right),
        }
    if isinstance(f, Neg):
        return {"kind": "not", "arg": formula_to_dict(f.arg)}
    if isinstance(f, (Forall, ForallN)):
        count = f.count if isinstance(f, ForallN) else 1
        return {"kind": "forall", "count": count, "body": formula_to_dict(f.body)}
    if isinstance(f, (Exists, ExistsN)):
        count = f.count if isinstance(f, ExistsN) else 1
        return {"kind": "exists", "count": count, "body": formula_to_dict(f.body)}
    raise TypeError(f"not a formula: {f!r}")
