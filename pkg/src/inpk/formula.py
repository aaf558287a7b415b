"""Propositional language of the workbench.

Formulas are trees over named atoms with two primitive connectives:
negation (``!``) and implication (``->``).  The richer surface syntax is
sugar and is expanded while parsing, so an AST never contains a derived
connective:

    ``@f``      classicalize            (f -> f) -> f
    ``~f``      strong negation         !(@f)
    ``f | g``   join                    ~f -> g
    ``f & g``   meet                    ~(f -> ~g)
    ``f || g``  classical join          !f -> g
    ``f && g``  classical meet          !(f -> !g)
    ``f^*``     excluded-middle mark    !f | f
    ``f^o``     non-contradiction mark  !(!f & f)

Nodes are hash-consed: building the same shape twice returns the same
object.  Equality is therefore identity and never walks the tree, which
the proof checker and the evaluators lean on heavily.
"""

from __future__ import annotations

import re

__all__ = [
    "Formula", "Atom", "Neg", "Imp", "FormulaSyntaxError",
    "parse", "render", "expand", "atoms", "complexity",
    "classicalize", "strong_neg", "or_", "and_", "or_cl", "and_cl",
    "star", "circ", "iter_neg", "CONNECTIVES",
]

_ATOM_NAME = re.compile(r"[a-z][a-z0-9_]*\Z")


class Formula:
    """Immutable, interned formula node."""

    __slots__ = ()

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        text = render(self)
        if len(text) > 60:
            text = text[:57] + "..."
        return f"<formula {text}>"


_ATOMS: dict[str, "Atom"] = {}
_NEGS: dict["Formula", "Neg"] = {}
_IMPS: dict[tuple["Formula", "Formula"], "Imp"] = {}


class Atom(Formula):
    __slots__ = ("name", "comp", "atom_names")
    __match_args__ = ("name",)

    def __new__(cls, name: str) -> "Atom":
        found = _ATOMS.get(name)
        if found is None:
            if not _ATOM_NAME.match(name):
                raise ValueError(f"invalid atom name {name!r}")
            found = object.__new__(cls)
            found.name = name
            found.comp = 0
            found.atom_names = (name,)
            _ATOMS[name] = found
        return found


class Neg(Formula):
    __slots__ = ("body", "comp", "atom_names")
    __match_args__ = ("body",)

    def __new__(cls, body: Formula) -> "Neg":
        found = _NEGS.get(body)
        if found is None:
            found = object.__new__(cls)
            found.body = body
            found.comp = body.comp + 1
            found.atom_names = body.atom_names
            _NEGS[body] = found
        return found


class Imp(Formula):
    __slots__ = ("ant", "cons", "comp", "atom_names")
    __match_args__ = ("ant", "cons")

    def __new__(cls, ant: Formula, cons: Formula) -> "Imp":
        found = _IMPS.get((ant, cons))
        if found is None:
            found = object.__new__(cls)
            found.ant = ant
            found.cons = cons
            found.comp = ant.comp + cons.comp + 1
            names = ant.atom_names
            extra = tuple(a for a in cons.atom_names if a not in names)
            found.atom_names = names + extra if extra else names
            _IMPS[(ant, cons)] = found
        return found


def classicalize(f: Formula) -> Formula:
    return Imp(Imp(f, f), f)


def strong_neg(f: Formula) -> Formula:
    return Neg(classicalize(f))


def or_(a: Formula, b: Formula) -> Formula:
    return Imp(strong_neg(a), b)


def and_(a: Formula, b: Formula) -> Formula:
    return strong_neg(Imp(a, strong_neg(b)))


def or_cl(a: Formula, b: Formula) -> Formula:
    return Imp(Neg(a), b)


def and_cl(a: Formula, b: Formula) -> Formula:
    return Neg(Imp(a, Neg(b)))


def star(f: Formula) -> Formula:
    return or_(Neg(f), f)


def circ(f: Formula) -> Formula:
    return Neg(and_(Neg(f), f))


def iter_neg(q: int, f: Formula) -> Formula:
    """q-fold negation; q = 0 returns f unchanged."""
    if q < 0:
        raise ValueError("negative negation count")
    for _ in range(q):
        f = Neg(f)
    return f


# Connective name -> (arity, builder).  The same names drive truth tables
# and the CLI's `table` subcommand; "neg" and "imp" are the primitives.
CONNECTIVES: dict[str, tuple[int, object]] = {
    "neg": (1, Neg),
    "imp": (2, Imp),
    "classicalize": (1, classicalize),
    "strong": (1, strong_neg),
    "or": (2, or_),
    "and": (2, and_),
    "or_cl": (2, or_cl),
    "and_cl": (2, and_cl),
    "star": (1, star),
    "circ": (1, circ),
}


def expand(name: str, *args: Formula) -> Formula:
    """Build the primitive expansion of the named connective."""
    try:
        arity, build = CONNECTIVES[name]
    except KeyError:
        raise ValueError(f"unknown connective {name!r}") from None
    if len(args) != arity:
        raise ValueError(f"{name} takes {arity} argument(s), got {len(args)}")
    return build(*args)


def atoms(f: Formula) -> list[str]:
    """Distinct atom names in first-occurrence order."""
    return list(f.atom_names)


def complexity(f: Formula) -> int:
    """Number of connective nodes."""
    return f.comp


def render(f: Formula) -> str:
    """Primitive-only concrete syntax; parse(render(f)) is f."""
    parts: list[str] = []
    stack: list[object] = [f]
    while stack:
        item = stack.pop()
        if type(item) is str:
            parts.append(item)
        elif type(item) is Atom:
            parts.append(item.name)
        elif type(item) is Neg:
            parts.append("!")
            if type(item.body) is Imp:
                parts.append("(")
                stack.append(")")
            stack.append(item.body)
        else:
            stack.append(item.cons)
            stack.append(" -> ")
            if type(item.ant) is Imp:
                stack.append(")")
                stack.append(item.ant)
                parts.append("(")
            else:
                stack.append(item.ant)
    return "".join(parts)


class FormulaSyntaxError(ValueError):
    """Raised on malformed input; carries byte offset and expected tokens."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = expected
        if expected:
            message = f"{message}: expected {', '.join(expected)}"
        super().__init__(f"{message} (byte {offset})")


_TOKEN = re.compile(r"[ \t\r\n]+|(->|\|\||&&|\^\*|\^o|[!~@|&()])|([a-z][a-z0-9_]*)")

_PREFIX = {"!": Neg, "~": strong_neg, "@": classicalize}
_AND_OPS = {"&": and_, "&&": and_cl}
_OR_OPS = {"|": or_, "||": or_cl}


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def _scan(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise FormulaSyntaxError(
                f"unexpected character {text[pos]!r}", _byte_offset(text, pos))
        if m.group(1):
            tokens.append(("op", m.group(1), _byte_offset(text, pos)))
        elif m.group(2):
            tokens.append(("atom", m.group(2), _byte_offset(text, pos)))
        pos = m.end()
    tokens.append(("end", "", _byte_offset(text, len(text))))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _scan(text)
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, expected: tuple[str, ...]):
        kind, text, offset = self.peek()
        what = "end of input" if kind == "end" else repr(text)
        raise FormulaSyntaxError(f"unexpected {what}", offset, expected)

    def at_op(self, *ops: str) -> bool:
        kind, text, _ = self.peek()
        return kind == "op" and text in ops

    def implication(self) -> Formula:
        operands = [self.join()]
        while self.at_op("->"):
            self.take()
            operands.append(self.join())
        f = operands[-1]
        for g in reversed(operands[:-1]):
            f = Imp(g, f)
        return f

    def join(self) -> Formula:
        f = self.meet()
        while self.at_op("|", "||"):
            op = self.take()[1]
            f = _OR_OPS[op](f, self.meet())
        return f

    def meet(self) -> Formula:
        f = self.prefixed()
        while self.at_op("&", "&&"):
            op = self.take()[1]
            f = _AND_OPS[op](f, self.prefixed())
        return f

    def prefixed(self) -> Formula:
        ops = []
        while self.at_op("!", "~", "@"):
            ops.append(self.take()[1])
        f = self.postfixed()
        for op in reversed(ops):
            f = _PREFIX[op](f)
        return f

    def postfixed(self) -> Formula:
        f = self.primary()
        while self.at_op("^*", "^o"):
            op = self.take()[1]
            f = star(f) if op == "^*" else circ(f)
        return f

    def primary(self) -> Formula:
        kind, text, _ = self.peek()
        if kind == "atom":
            self.take()
            return Atom(text)
        if kind == "op" and text == "(":
            self.take()
            f = self.implication()
            if not self.at_op(")"):
                self.fail(("')'",))
            self.take()
            return f
        self.fail(("atom", "'('", "'!'", "'~'", "'@'"))


def parse(text: str) -> Formula:
    """Parse concrete syntax into a fully expanded primitive AST."""
    parser = _Parser(text)
    f = parser.implication()
    if parser.peek()[0] != "end":
        parser.fail(("'->'", "'|'", "'&'", "end of input"))
    return f
