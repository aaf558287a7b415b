"""Matrix semantics for the logic family.

A logic is fixed by a pair (n, k).  Its carrier has n+1 "false" grades
F0..Fn and k+1 "true" grades T0..Tk; the T's are designated.  Negation
walks each grade one step toward its classical shadow (F0 <-> T0 at the
bottom), and implication only ever yields T0 or F0: it is T0 unless the
antecedent is designated and the consequent is not.

Decision procedures enumerate valuations in a fixed lexicographic order
(F0 < ... < Fn < T0 < ... < Tk, first atom most significant), so the
first counterexample reported is deterministic.  Internally values are
encoded as integers 0..n for the F's and n+1..n+k+1 for the T's and
whole blocks of valuations are evaluated at once with numpy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

import numpy as np

from .formula import (
    CONNECTIVES, Atom, Neg, Imp, Formula, atoms, expand, iter_neg, or_, and_,
)

__all__ = [
    "TruthValue", "F", "T", "parse_value",
    "LogicParams", "Valuation", "parse_valuation", "render_valuation",
    "Verdict", "OrderVerdict", "TruthTable",
    "neg_value", "imp_value", "eval_formula", "is_designated",
    "enumerate_valuations", "is_tautology", "entails",
    "compare_logics", "separating_witness", "truth_table",
]

_VALUE_RE = re.compile(r"([FT])([0-9]+)\Z")


@dataclass(frozen=True)
class TruthValue:
    """One carrier element: F(r) or T(i)."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    def __repr__(self) -> str:
        return f"{self.kind}{self.index}"

    @property
    def designated(self) -> bool:
        return self.kind == "T"


def F(r: int) -> TruthValue:
    return TruthValue("F", r)


def T(i: int) -> TruthValue:
    return TruthValue("T", i)


def parse_value(text: str) -> TruthValue:
    m = _VALUE_RE.match(text.strip())
    if m is None:
        raise ValueError(f"bad truth value {text!r} (expected like F0 or T2)")
    return TruthValue(m.group(1), int(m.group(2)))


@dataclass(frozen=True)
class LogicParams:
    """The pair (n, k) selecting one logic of the family."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0 or self.k < 0:
            raise ValueError("n and k must be non-negative")

    @property
    def size(self) -> int:
        return self.n + self.k + 2

    def values(self) -> list[TruthValue]:
        """Carrier in canonical (enumeration) order."""
        return [F(r) for r in range(self.n + 1)] + [T(i) for i in range(self.k + 1)]

    def check_value(self, a: TruthValue) -> TruthValue:
        limit = self.n if a.kind == "F" else self.k
        if not 0 <= a.index <= limit:
            raise ValueError(f"value {a} out of range for (n={self.n}, k={self.k})")
        return a

    def code(self, a: TruthValue) -> int:
        self.check_value(a)
        return a.index if a.kind == "F" else self.n + 1 + a.index

    def value_of_code(self, c: int) -> TruthValue:
        return F(c) if c <= self.n else T(c - self.n - 1)


Valuation = dict[str, TruthValue]


def parse_valuation(text: str) -> Valuation:
    """Parse 'p=T1,q=F0' into a valuation."""
    v: Valuation = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        name, sep, val = part.partition("=")
        if sep != "=" or not name.strip():
            raise ValueError(f"bad valuation entry {part!r}")
        v[name.strip()] = parse_value(val)
    return v


def render_valuation(v: Valuation) -> str:
    return ",".join(f"{name}={val}" for name, val in v.items())


def neg_value(params: LogicParams, a: TruthValue) -> TruthValue:
    params.check_value(a)
    if a.kind == "F":
        return T(0) if a.index == 0 else F(a.index - 1)
    return F(0) if a.index == 0 else T(a.index - 1)


def imp_value(params: LogicParams, a: TruthValue, b: TruthValue) -> TruthValue:
    params.check_value(a)
    params.check_value(b)
    return T(0) if (not a.designated or b.designated) else F(0)


def is_designated(params: LogicParams, a: TruthValue) -> bool:
    params.check_value(a)
    return a.designated


def eval_formula(params: LogicParams, f: Formula, v: Valuation) -> TruthValue:
    """Homomorphic extension of v to f (single valuation, scalar path)."""
    cache: dict[Formula, TruthValue] = {}
    stack = [f]
    while stack:
        g = stack[-1]
        if g in cache:
            stack.pop()
            continue
        if type(g) is Atom:
            if g.name not in v:
                raise ValueError(f"unbound atom {g.name!r}")
            cache[g] = params.check_value(v[g.name])
            stack.pop()
        elif type(g) is Neg:
            got = cache.get(g.body)
            if got is None:
                stack.append(g.body)
            else:
                cache[g] = neg_value(params, got)
                stack.pop()
        else:
            a = cache.get(g.ant)
            b = cache.get(g.cons)
            if a is None or b is None:
                if a is None:
                    stack.append(g.ant)
                if b is None:
                    stack.append(g.cons)
            else:
                cache[g] = imp_value(params, a, b)
                stack.pop()
    return cache[f]


def enumerate_valuations(params: LogicParams, names: list[str]) -> Iterator[Valuation]:
    """All (n+k+2)^m valuations, lexicographic, first atom most significant."""
    values = params.values()
    m = len(names)
    size = params.size
    total = size ** m
    for idx in range(total):
        v: Valuation = {}
        for j, name in enumerate(names):
            v[name] = values[(idx // size ** (m - 1 - j)) % size]
        yield v


@dataclass(frozen=True)
class Verdict:
    """Outcome of a tautology / entailment decision."""

    valid: bool
    counterexample: Optional[Valuation] = None

    def __bool__(self) -> bool:
        return self.valid


# ---------------------------------------------------------------------------
# Vectorized decision core.

_CHUNK = 1 << 18


def _postorder(f: Formula) -> list[Formula]:
    """Distinct subformulas of f, children before parents."""
    order: list[Formula] = []
    seen: set[Formula] = set()
    stack: list[tuple[Formula, bool]] = [(f, False)]
    while stack:
        g, expanded = stack.pop()
        if g in seen:
            continue
        if expanded:
            seen.add(g)
            order.append(g)
        else:
            stack.append((g, True))
            if type(g) is Neg:
                stack.append((g.body, False))
            elif type(g) is Imp:
                stack.append((g.ant, False))
                stack.append((g.cons, False))
    return order


def _eval_block(params: LogicParams, roots: list[Formula],
                atom_codes: dict[str, np.ndarray]) -> list[np.ndarray]:
    """Evaluate all roots over a block of valuations given as code arrays."""
    n = params.n
    t0 = n + 1
    neg_table = np.empty(params.size, dtype=np.int16)
    neg_table[0] = t0
    for r in range(1, n + 1):
        neg_table[r] = r - 1
    neg_table[t0] = 0
    for i in range(1, params.k + 1):
        neg_table[t0 + i] = t0 + i - 1

    order: list[Formula] = []
    seen: set[Formula] = set()
    for root in roots:
        for g in _postorder(root):
            if g not in seen:
                seen.add(g)
                order.append(g)

    # Free each intermediate array after its last use.
    last_use: dict[Formula, int] = {}
    for pos, g in enumerate(order):
        last_use[g] = pos
        if type(g) is Neg:
            last_use[g.body] = pos
        elif type(g) is Imp:
            last_use[g.ant] = pos
            last_use[g.cons] = pos
    keep = set(roots)
    expiry: dict[int, list[Formula]] = {}
    for g, pos in last_use.items():
        if g not in keep:
            expiry.setdefault(pos, []).append(g)

    cache: dict[Formula, np.ndarray] = {}
    for pos, g in enumerate(order):
        if type(g) is Atom:
            cache[g] = atom_codes[g.name]
        elif type(g) is Neg:
            cache[g] = neg_table[cache[g.body]]
        else:
            a = cache[g.ant]
            b = cache[g.cons]
            cache[g] = np.where((a < t0) | (b >= t0), np.int16(t0), np.int16(0))
        for dead in expiry.get(pos, ()):
            if dead not in keep:
                del cache[dead]
    return [cache[root] for root in roots]


def _decide(params: LogicParams, hyps: list[Formula], goal: Formula,
            names: list[str]) -> Verdict:
    """First valuation (canonical order) designating hyps but not goal."""
    size = params.size
    m = len(names)
    total = size ** m
    t0 = params.n + 1
    roots = list(dict.fromkeys(hyps + [goal]))
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        atom_codes = {
            name: ((idx // size ** (m - 1 - j)) % size).astype(np.int16)
            for j, name in enumerate(names)
        }
        results = dict(zip(roots, _eval_block(params, roots, atom_codes)))
        bad = results[goal] < t0
        for h in hyps:
            if not bad.any():
                break
            bad &= results[h] >= t0
        hits = np.nonzero(bad)[0]
        if hits.size:
            at = int(idx[hits[0]])
            witness = {
                name: params.value_of_code((at // size ** (m - 1 - j)) % size)
                for j, name in enumerate(names)
            }
            return Verdict(False, witness)
    return Verdict(True)


def is_tautology(params: LogicParams, f: Formula) -> Verdict:
    """Valid iff f is designated under every valuation of its atoms."""
    return _decide(params, [], f, atoms(f))


def entails(params: LogicParams, hyps: list[Formula], f: Formula) -> Verdict:
    """Consequence over the union of atoms (hypotheses first)."""
    names: dict[str, None] = {}
    for h in hyps:
        for a in atoms(h):
            names[a] = None
    for a in atoms(f):
        names[a] = None
    return _decide(params, list(hyps), f, list(names))


# ---------------------------------------------------------------------------
# The hierarchy order.

class OrderVerdict(Enum):
    STRICTLY_BELOW = "below"
    STRICTLY_ABOVE = "above"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def compare_logics(a: LogicParams, b: LogicParams) -> OrderVerdict:
    """Position of logic a relative to logic b.

    a is (weakly) below b exactly when b.n <= a.n and b.k <= a.k: larger
    parameters mean a more permissive matrix, hence fewer tautologies.
    """
    if a == b:
        return OrderVerdict.EQUAL
    if b.n <= a.n and b.k <= a.k:
        return OrderVerdict.STRICTLY_BELOW
    if a.n <= b.n and a.k <= b.k:
        return OrderVerdict.STRICTLY_ABOVE
    return OrderVerdict.INCOMPARABLE


def separating_witness(a: LogicParams, b: LogicParams) -> Optional[Formula]:
    """A formula valid in logic a but refuted in logic b, when one exists.

    Exists iff b's matrix is strictly more permissive in some coordinate
    (b.n > a.n or b.k > a.k); otherwise everything valid in a holds in b.
    """
    p = Atom("p")
    if b.n > a.n:
        return or_(iter_neg(a.n + 1, p), iter_neg(a.n, p))
    if b.k > a.k:
        return Neg(and_(iter_neg(a.k + 1, p), iter_neg(a.k, p)))
    return None


@dataclass(frozen=True)
class TruthTable:
    """Computed table of one connective over a carrier."""

    params: LogicParams
    connective: str
    arity: int
    values: tuple[TruthValue, ...]
    entries: tuple  # arity 1: tuple of values; arity 2: tuple of rows

    def lookup(self, *args: TruthValue) -> TruthValue:
        pos = [self.values.index(a) for a in args]
        if self.arity == 1:
            return self.entries[pos[0]]
        return self.entries[pos[0]][pos[1]]


def truth_table(params: LogicParams, connective: str) -> TruthTable:
    """Table computed by expanding the connective and evaluating."""
    p, q = Atom("p"), Atom("q")
    values = tuple(params.values())
    if connective not in CONNECTIVES:
        raise ValueError(f"unknown connective {connective!r}")
    arity = CONNECTIVES[connective][0]
    if arity == 1:
        f = expand(connective, p)
        row = tuple(eval_formula(params, f, {"p": a}) for a in values)
        return TruthTable(params, connective, 1, values, row)
    f = expand(connective, p, q)
    rows = tuple(
        tuple(eval_formula(params, f, {"p": a, "q": b}) for b in values)
        for a in values
    )
    return TruthTable(params, connective, 2, values, rows)
