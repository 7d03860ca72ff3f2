"""Terms, equations and quasi-equations over the residuated-lattice signature.

The signature is {*, \\, /, ^, v, e}: monoid product, left residual a\\b
(greatest c with a*c <= b), right residual a/b (greatest c with c*b <= a),
meet, join, and the monoid unit.

Concrete syntax (ASCII):

    term  := join
    join  := meet ("v" meet)*
    meet  := resid ("^" resid)*
    resid := prod (("\\" | "/") prod)*
    prod  := atom ("*"? atom)*
    atom  := "e" | ident | "(" term ")"
    ident := [a-z][a-z0-9]*        ("e" and "v" are reserved)

Product binds tightest, then the residuals (left-associative, equal
precedence), then meet, then join.  Equations are written "t = s" (or with
the unicode approx sign), quasi-equations "p1, p2 => c".
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

__all__ = [
    "Term",
    "Equation",
    "QuasiEquation",
    "Verdict",
    "TermSyntaxError",
    "EvalError",
    "var",
    "E",
    "mul",
    "ldiv",
    "rdiv",
    "meet",
    "join",
    "le_equation",
    "parse_term",
    "parse_equation",
    "parse_quasiequation",
    "term_to_str",
    "eval_term",
    "check_equation",
    "check_quasiequation",
    "check_equation_sampled",
    "gen_Lc",
]


class TermSyntaxError(ValueError):
    """Raised on malformed input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class EvalError(ValueError):
    pass


_BINOPS = ("*", "\\", "/", "^", "v")


@dataclass(frozen=True)
class Term:
    """AST node: kind is 'var', 'e', or one of the binary operators."""

    kind: str
    name: str = ""
    left: Optional["Term"] = None
    right: Optional["Term"] = None

    def __post_init__(self):
        if self.kind in ("var", "e"):
            if self.left is not None or self.right is not None:
                raise ValueError("leaf node with children")
            if self.kind == "var" and not re.fullmatch(r"[a-z][a-z0-9]*", self.name):
                raise ValueError(f"bad variable name {self.name!r}")
        elif self.kind in _BINOPS:
            if self.left is None or self.right is None:
                raise ValueError("binary node needs two children")
        else:
            raise ValueError(f"unknown node kind {self.kind!r}")

    def free_vars(self) -> frozenset[str]:
        if self.kind == "var":
            return frozenset((self.name,))
        if self.kind == "e":
            return frozenset()
        return self.left.free_vars() | self.right.free_vars()

    def atoms(self) -> int:
        """Number of leaves (term length)."""
        if self.kind in ("var", "e"):
            return 1
        return self.left.atoms() + self.right.atoms()

    def __str__(self) -> str:
        return term_to_str(self)


def var(name: str) -> Term:
    return Term("var", name=name)


E = Term("e")


def mul(a: Term, b: Term) -> Term:
    return Term("*", left=a, right=b)


def ldiv(a: Term, b: Term) -> Term:
    return Term("\\", left=a, right=b)


def rdiv(a: Term, b: Term) -> Term:
    return Term("/", left=a, right=b)


def meet(a: Term, b: Term) -> Term:
    return Term("^", left=a, right=b)


def join(a: Term, b: Term) -> Term:
    return Term("v", left=a, right=b)


@dataclass(frozen=True)
class Equation:
    lhs: Term
    rhs: Term

    def free_vars(self) -> frozenset[str]:
        return self.lhs.free_vars() | self.rhs.free_vars()

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class QuasiEquation:
    premises: tuple[Equation, ...]
    conclusion: Equation

    def free_vars(self) -> frozenset[str]:
        vs = self.conclusion.free_vars()
        for p in self.premises:
            vs |= p.free_vars()
        return vs

    def __str__(self) -> str:
        if not self.premises:
            return str(self.conclusion)
        return ", ".join(map(str, self.premises)) + " => " + str(self.conclusion)


def le_equation(t: Term, s: Term) -> Equation:
    """The inequality t <= s rendered as the equation t ^ s = t."""
    return Equation(meet(t, s), t)


# ---------------------------------------------------------------------------
# parsing


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> TermSyntaxError:
        return TermSyntaxError(msg, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take_ident(self) -> str:
        m = re.match(r"[a-z][a-z0-9]*", self.text[self.pos:])
        word = m.group(0)
        self.pos += len(word)
        return word

    def parse(self) -> Term:
        t = self.join_()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error(f"unexpected {self.text[self.pos]!r}")
        return t

    def join_(self) -> Term:
        t = self.meet_()
        while True:
            save = self.pos
            if self.peek() == "v":
                # only a bare "v" is the join operator; "v1" is an identifier
                if re.match(r"v(?![a-z0-9])", self.text[self.pos:]):
                    self.pos += 1
                    t = join(t, self.meet_())
                    continue
                self.pos = save
            return t

    def meet_(self) -> Term:
        t = self.resid_()
        while self.peek() == "^":
            self.pos += 1
            t = meet(t, self.resid_())
        return t

    def resid_(self) -> Term:
        t = self.prod_()
        while self.peek() in ("\\", "/"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.prod_()
            t = ldiv(t, rhs) if op == "\\" else rdiv(t, rhs)
        return t

    def prod_(self) -> Term:
        t = self.atom_()
        while True:
            c = self.peek()
            if c == "*":
                self.pos += 1
                t = mul(t, self.atom_())
            elif c == "(" or (c.isalpha() and c not in ("v",)) or (
                c == "v" and re.match(r"v[a-z0-9]", self.text[self.pos:])
            ):
                t = mul(t, self.atom_())
            else:
                return t

    def atom_(self) -> Term:
        c = self.peek()
        if c == "(":
            self.pos += 1
            t = self.join_()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.pos += 1
            return t
        if c.isalpha():
            word = self.take_ident()
            if word == "e":
                return E
            if word == "v":
                self.pos -= 1
                raise self.error("'v' is the join operator, not an identifier")
            return var(word)
        raise self.error("expected a term")


def parse_term(text: str) -> Term:
    """Parse `text` into a Term; raises TermSyntaxError with a byte offset."""
    return _Parser(text).parse()


def parse_equation(text: str) -> Equation:
    parts = re.split(r"≈|=", text)
    if len(parts) != 2:
        raise TermSyntaxError("an equation needs exactly one '='", text.find("="))
    return Equation(parse_term(parts[0]), parse_term(parts[1]))


def parse_quasiequation(text: str) -> QuasiEquation:
    pieces = text.split("=>")
    if len(pieces) == 1:
        return QuasiEquation((), parse_equation(text))
    if len(pieces) != 2:
        raise TermSyntaxError("at most one '=>' allowed", text.find("=>"))
    premtext, concl = pieces
    premises = tuple(parse_equation(p) for p in premtext.split(",") if p.strip())
    return QuasiEquation(premises, parse_equation(concl))


# ---------------------------------------------------------------------------
# printing

_PREC = {"v": 0, "^": 1, "\\": 2, "/": 2, "*": 3}


def term_to_str(t: Term) -> str:
    if t.kind == "var":
        return t.name
    if t.kind == "e":
        return "e"
    p = _PREC[t.kind]

    def side(child: Term, is_right: bool) -> str:
        s = term_to_str(child)
        if child.kind in ("var", "e"):
            return s
        cp = _PREC[child.kind]
        # parenthesize on lower precedence, and on equal precedence to the
        # right of a left-associative operator
        if cp < p or (cp == p and is_right):
            return "(" + s + ")"
        return s

    sep = t.kind if t.kind in ("*", "\\", "/") else f" {t.kind} "
    return side(t.left, False) + sep + side(t.right, True)


# ---------------------------------------------------------------------------
# evaluation and checking

_OPNAMES = {"*": "mul", "\\": "ldiv", "/": "rdiv", "^": "meet", "v": "join"}


def eval_term(t: Term, a: Mapping[str, object], s) -> object:
    """Evaluate `t` in the algebra `s` under the assignment `a`.

    `s` must provide mul/ldiv/rdiv/meet/join methods and a `unit` attribute.
    """
    if t.kind == "var":
        if t.name not in a:
            raise EvalError(f"unbound variable {t.name!r}")
        return a[t.name]
    if t.kind == "e":
        return s.unit
    x = eval_term(t.left, a, s)
    y = eval_term(t.right, a, s)
    return getattr(s, _OPNAMES[t.kind])(x, y)


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.holds


def _assignments(names: Sequence[str], elements: Sequence) -> Iterator[dict]:
    for combo in itertools.product(elements, repeat=len(names)):
        yield dict(zip(names, combo))


def check_equation(eq: Equation, s) -> Verdict:
    """Exhaustive check over a finite structure.

    On failure returns the lexicographically-first witness (variables in
    sorted name order, elements in carrier index order).
    """
    names = sorted(eq.free_vars())
    for a in _assignments(names, list(s.elements)):
        if eval_term(eq.lhs, a, s) != eval_term(eq.rhs, a, s):
            return Verdict(False, dict(a))
    return Verdict(True)


def check_quasiequation(q: QuasiEquation, s) -> Verdict:
    names = sorted(q.free_vars())
    for a in _assignments(names, list(s.elements)):
        if all(eval_term(p.lhs, a, s) == eval_term(p.rhs, a, s) for p in q.premises):
            if eval_term(q.conclusion.lhs, a, s) != eval_term(q.conclusion.rhs, a, s):
                return Verdict(False, dict(a))
    return Verdict(True)


def check_equation_sampled(eq: Equation, s, assignments: Iterable[Mapping]) -> Verdict:
    """Check `eq` on the given assignments only (for infinite structures)."""
    for a in assignments:
        if eval_term(eq.lhs, a, s) != eval_term(eq.rhs, a, s):
            return Verdict(False, dict(a))
    return Verdict(True)


# ---------------------------------------------------------------------------
# Malcev nilpotency laws


def _q(c: int, x: Term, y: Term, zs: Sequence[Term]) -> Term:
    if c == 1:
        return mul(x, y)
    return mul(mul(_q(c - 1, x, y, zs), zs[c - 2]), _q(c - 1, y, x, zs))


def gen_Lc(c: int) -> Equation:
    """The nilpotency-class-c law: the recursive commutation terms made equal.

    Uses variables x, y, z1..z(c-1); each side has 2**c + 2**(c-1) - 1 leaves.
    """
    if c < 1:
        raise ValueError("nilpotency class must be >= 1")
    x, y = var("x"), var("y")
    zs = [var(f"z{i}") for i in range(1, c)]
    return Equation(_q(c, x, y, zs), _q(c, y, x, zs))
