"""Hilbert-style proof machinery.

A proof is a finite sequence of lines over a fixed logic and a fixed
hypothesis list. Every line carries its own justification: an axiom
schema together with an explicit substitution, a hypothesis citation,
or modus ponens on two earlier lines. Checking therefore never
searches; it applies the declared substitution and compares.

Line references are 0-based inside the library and 1-based in the JSON
serialization. Hypothesis indices are 0-based in both.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence, Union

from .formula import (
    Atom,
    Formula,
    FormulaSyntaxError,
    Imp,
    Neg,
    circ,
    iter_neg,
    parse,
    render,
    star,
)
from .semantics import LogicParams

__all__ = [
    "AXIOM_IDS",
    "Axiom",
    "Hyp",
    "MP",
    "Justification",
    "ProofLine",
    "Proof",
    "CheckVerdict",
    "ProofBuilder",
    "ProofFormatError",
    "axiom_pattern",
    "axiom_metavariables",
    "axiom_proof",
    "match_axiom",
    "substitute",
    "check",
    "deduction_transform",
    "weaken",
    "replace_hyp_with_theorem",
    "substitute_proof",
    "prune",
    "rule_trans",
    "rule_perm",
    "rule_red",
    "proof_to_json",
    "proof_from_json",
]


# ---------------------------------------------------------------------------
# Axiom schemas

_PHI = Atom("phi")
_PSI = Atom("psi")
_THETA = Atom("theta")

# Patterns are stored fully expanded to the primitive connectives, with
# metavariables represented as the reserved atoms phi/psi/theta.
_FIXED_PATTERNS: dict[str, Formula] = {
    "Ax1": Imp(_PHI, Imp(_PSI, _PHI)),
    "Ax2": Imp(
        Imp(_PHI, Imp(_PSI, _THETA)),
        Imp(Imp(_PHI, _PSI), Imp(_PHI, _THETA)),
    ),
    "Ax3": star(Imp(_PHI, _PSI)),
    "Ax4": circ(Imp(_PHI, _PSI)),
    "Ax7": Imp(
        star(_PHI),
        Imp(
            circ(_PSI),
            Imp(Imp(Neg(_PHI), Neg(_PSI)), Imp(Imp(Neg(_PHI), _PSI), _PHI)),
        ),
    ),
    "Ax8": Imp(
        star(_PHI),
        Imp(
            circ(_PSI),
            Imp(Imp(_PHI, Neg(_PSI)), Imp(Imp(_PHI, _PSI), Neg(_PHI))),
        ),
    ),
    "Ax9": Imp(star(_PHI), Imp(Neg(Neg(_PHI)), _PHI)),
    "Ax10": Imp(circ(_PHI), Imp(_PHI, Neg(Neg(_PHI)))),
    "Ax11": Imp(star(_PHI), star(Neg(_PHI))),
    "Ax12": Imp(circ(_PHI), circ(Neg(_PHI))),
}

_METAVARS: dict[str, tuple[str, ...]] = {
    "Ax1": ("phi", "psi"),
    "Ax2": ("phi", "psi", "theta"),
    "Ax3": ("phi", "psi"),
    "Ax4": ("phi", "psi"),
    "Ax5": ("phi",),
    "Ax6": ("phi",),
    "Ax7": ("phi", "psi"),
    "Ax8": ("phi", "psi"),
    "Ax9": ("phi",),
    "Ax10": ("phi",),
    "Ax11": ("phi",),
    "Ax12": ("phi",),
}

AXIOM_IDS: tuple[str, ...] = tuple(f"Ax{i}" for i in range(1, 13))


def axiom_pattern(schema: str, params: LogicParams) -> Formula:
    """Pattern formula of a schema, with phi/psi/theta as metavariable slots.

    Ax5 and Ax6 are parameter-indexed families: their negation depth is
    the ambient n (resp. k), so the pattern is regenerated per params.
    """
    if schema == "Ax5":
        return star(iter_neg(params.n, _PHI))
    if schema == "Ax6":
        return circ(iter_neg(params.k, _PHI))
    try:
        return _FIXED_PATTERNS[schema]
    except KeyError:
        raise ValueError(f"unknown axiom schema {schema!r}") from None


def axiom_metavariables(schema: str) -> tuple[str, ...]:
    try:
        return _METAVARS[schema]
    except KeyError:
        raise ValueError(f"unknown axiom schema {schema!r}") from None


# Instantiating a schema is a pure function of (schema, params, binding),
# and the same instances recur heavily inside spliced and transformed
# proofs, so the results are memoized process-wide.
_INSTANCE_MEMO: dict[tuple, Formula] = {}


def _axiom_instance(
    schema: str,
    params: LogicParams,
    subst: Mapping[str, Formula],
    items: Optional[tuple] = None,
) -> Formula:
    if items is None:
        items = tuple(sorted(subst.items()))
    key = (schema, params, items)
    f = _INSTANCE_MEMO.get(key)
    if f is None:
        f = substitute(axiom_pattern(schema, params), subst)
        _INSTANCE_MEMO[key] = f
    return f


def substitute(f: Formula, subst: Mapping[str, Formula]) -> Formula:
    """Replace every atom whose name is bound in subst."""
    cache: dict[Formula, Formula] = {}
    stack = [f]
    while stack:
        g = stack[-1]
        if g in cache:
            stack.pop()
            continue
        if isinstance(g, Atom):
            cache[g] = subst.get(g.name, g)
            stack.pop()
        elif isinstance(g, Neg):
            if g.body in cache:
                cache[g] = Neg(cache[g.body])
                stack.pop()
            else:
                stack.append(g.body)
        else:
            assert isinstance(g, Imp)
            ant_done = g.ant in cache
            cons_done = g.cons in cache
            if ant_done and cons_done:
                cache[g] = Imp(cache[g.ant], cache[g.cons])
                stack.pop()
            else:
                if not ant_done:
                    stack.append(g.ant)
                if not cons_done:
                    stack.append(g.cons)
    return cache[f]


def match_pattern(
    pattern: Formula, f: Formula, subst: Optional[Mapping[str, Formula]] = None
) -> Optional[dict[str, Formula]]:
    """One-way match of a concrete formula against a pattern.

    Every atom occurring in the pattern is a metavariable slot; repeated
    slots must map to the identical subformula. Returns the binding or
    None. An initial binding may be supplied and is extended.
    """
    binding: dict[str, Formula] = dict(subst) if subst else {}
    stack = [(pattern, f)]
    while stack:
        p, g = stack.pop()
        if isinstance(p, Atom):
            bound = binding.get(p.name)
            if bound is None:
                binding[p.name] = g
            elif bound is not g:
                return None
        elif isinstance(p, Neg):
            if not isinstance(g, Neg):
                return None
            stack.append((p.body, g.body))
        else:
            assert isinstance(p, Imp)
            if not isinstance(g, Imp):
                return None
            stack.append((p.ant, g.ant))
            stack.append((p.cons, g.cons))
    return binding


def match_axiom(
    f: Formula, schema: str, params: LogicParams
) -> Optional[dict[str, Formula]]:
    """The unique substitution s with pattern[s] = f, if one exists."""
    return match_pattern(axiom_pattern(schema, params), f)


# ---------------------------------------------------------------------------
# Proof objects


@dataclass(frozen=True)
class Axiom:
    """Cites an axiom schema with an explicit metavariable substitution."""

    schema: str
    subst: Mapping[str, Formula]


@dataclass(frozen=True)
class Hyp:
    index: int


@dataclass(frozen=True)
class MP:
    """Modus ponens; major proves Imp(minor's formula, this formula)."""

    major: int
    minor: int


Justification = Union[Axiom, Hyp, MP]


@dataclass(frozen=True)
class ProofLine:
    formula: Formula
    just: Justification


@dataclass(frozen=True)
class Proof:
    params: LogicParams
    hypotheses: tuple[Formula, ...]
    lines: tuple[ProofLine, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "hypotheses", tuple(self.hypotheses))
        object.__setattr__(self, "lines", tuple(self.lines))

    @property
    def conclusion(self) -> Formula:
        return self.lines[-1].formula

    def __len__(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class CheckVerdict:
    accepted: bool
    line: Optional[int] = None  # 1-based; None for whole-proof faults
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.accepted

    def __str__(self) -> str:
        if self.accepted:
            return "accepted"
        if self.line is None:
            return f"rejected: {self.reason}"
        return f"rejected line {self.line}: {self.reason}"


_ACCEPTED = CheckVerdict(True)


def _reject(i: int, reason: str) -> CheckVerdict:
    return CheckVerdict(False, i + 1, reason)


def check(proof: Proof) -> CheckVerdict:
    """Validate every line of a proof.

    Accepts iff each line is the declared axiom instance, a verbatim
    hypothesis, or modus ponens over two strictly earlier lines whose
    shapes agree. Rejection reports the first offending line (1-based).
    """
    if not proof.lines:
        return CheckVerdict(False, None, "proof has no lines")
    hyps = proof.hypotheses
    lines = proof.lines
    params = proof.params
    for i, line in enumerate(lines):
        just = line.just
        if isinstance(just, Axiom):
            needed = _METAVARS.get(just.schema)
            if needed is None:
                return _reject(i, f"unknown axiom schema {just.schema!r}")
            for name in needed:
                if name not in just.subst:
                    return _reject(
                        i, f"substitution does not bind {name!r} for {just.schema}"
                    )
            for name in just.subst:
                if name not in needed:
                    return _reject(
                        i, f"substitution binds {name!r}, unused by {just.schema}"
                    )
            instance = _axiom_instance(just.schema, params, just.subst)
            if instance is not line.formula:
                return _reject(
                    i, f"formula is not the declared {just.schema} instance"
                )
        elif isinstance(just, Hyp):
            if not 0 <= just.index < len(hyps):
                return _reject(i, f"hypothesis index {just.index} out of range")
            if hyps[just.index] is not line.formula:
                return _reject(
                    i, f"formula does not match hypothesis {just.index}"
                )
        elif isinstance(just, MP):
            dangling = [r for r in (just.major, just.minor) if not 0 <= r < i]
            if dangling:
                return _reject(
                    i, f"reference to line {dangling[0] + 1} is not an earlier line"
                )
            major = lines[just.major].formula
            if not isinstance(major, Imp):
                return _reject(i, "major premise is not an implication")
            if major.ant is not lines[just.minor].formula:
                return _reject(
                    i, "minor premise does not match the major's antecedent"
                )
            if major.cons is not line.formula:
                return _reject(i, "formula is not the major's consequent")
        else:
            return _reject(i, f"unknown justification {type(just).__name__}")
    return _ACCEPTED


# ---------------------------------------------------------------------------
# Builder


class ProofBuilder:
    """Accumulates proof lines, deduplicating structurally identical ones.

    Deduplication means a spliced subproof that repeats material already
    emitted (the same axiom instance, the same hypothesis citation, the
    same modus ponens over the same lines) contributes no new lines.
    """

    def __init__(
        self, params: LogicParams, hypotheses: Sequence[Formula] = ()
    ) -> None:
        self.params = params
        self.hypotheses = tuple(hypotheses)
        self._lines: list[ProofLine] = []
        self._memo: dict[tuple, int] = {}

    def __len__(self) -> int:
        return len(self._lines)

    def formula_at(self, i: int) -> Formula:
        return self._lines[i].formula

    def axiom(self, schema: str, subst: Mapping[str, Formula]) -> int:
        items = tuple(sorted(subst.items()))
        key = ("ax", schema, items)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        f = _axiom_instance(schema, self.params, subst, items)
        self._lines.append(ProofLine(f, Axiom(schema, dict(subst))))
        i = len(self._lines) - 1
        self._memo[key] = i
        return i

    def hyp(self, index: int) -> int:
        if not 0 <= index < len(self.hypotheses):
            raise IndexError(f"hypothesis index {index} out of range")
        key = ("hyp", index)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        self._lines.append(ProofLine(self.hypotheses[index], Hyp(index)))
        i = len(self._lines) - 1
        self._memo[key] = i
        return i

    def mp(self, major: int, minor: int) -> int:
        key = ("mp", major, minor)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        maj = self._lines[major].formula
        if not isinstance(maj, Imp) or maj.ant is not self._lines[minor].formula:
            raise ValueError("modus ponens premises do not fit")
        self._lines.append(ProofLine(maj.cons, MP(major, minor)))
        i = len(self._lines) - 1
        self._memo[key] = i
        return i

    def splice(self, proof: Proof) -> int:
        """Inline another proof's lines; returns its conclusion's index.

        The spliced proof's hypotheses must all occur in this builder's
        hypothesis list (matched by formula).
        """
        if proof.params != self.params:
            raise ValueError("cannot splice a proof for different logic params")
        hyp_map = []
        for h in proof.hypotheses:
            try:
                hyp_map.append(self.hypotheses.index(h))
            except ValueError:
                raise ValueError(
                    "spliced proof uses a hypothesis absent from the target"
                ) from None
        index_map: list[int] = []
        for line in proof.lines:
            just = line.just
            if isinstance(just, Axiom):
                new = self.axiom(just.schema, just.subst)
            elif isinstance(just, Hyp):
                new = self.hyp(hyp_map[just.index])
            else:
                assert isinstance(just, MP)
                new = self.mp(index_map[just.major], index_map[just.minor])
            index_map.append(new)
        return index_map[-1]

    def build(self, conclusion: Optional[int] = None) -> Proof:
        """Freeze into a Proof ending at the given line (default: last).

        Lines the conclusion does not reach are dropped and references
        are renumbered.
        """
        if not self._lines:
            raise ValueError("a proof needs at least one line")
        root = len(self._lines) - 1 if conclusion is None else conclusion
        keep: set[int] = set()
        stack = [root]
        while stack:
            i = stack.pop()
            if i in keep:
                continue
            keep.add(i)
            just = self._lines[i].just
            if isinstance(just, MP):
                stack.append(just.major)
                stack.append(just.minor)
        order = sorted(keep)
        remap = {old: new for new, old in enumerate(order)}
        out: list[ProofLine] = []
        for old in order:
            line = self._lines[old]
            just = line.just
            if isinstance(just, MP):
                just = MP(remap[just.major], remap[just.minor])
            out.append(ProofLine(line.formula, just))
        return Proof(self.params, self.hypotheses, tuple(out))


def axiom_proof(
    params: LogicParams, schema: str, subst: Mapping[str, Formula]
) -> Proof:
    """One-line hypothesis-free proof of an axiom instance."""
    b = ProofBuilder(params)
    return b.build(b.axiom(schema, subst))


def prune(proof: Proof) -> Proof:
    """Drop lines the conclusion does not reach; hypotheses unchanged."""
    b = ProofBuilder(proof.params, proof.hypotheses)
    return b.build(b.splice(proof))


# ---------------------------------------------------------------------------
# Transformers


def _emit_refl(b: ProofBuilder, f: Formula) -> int:
    """Emit f -> f from Ax1/Ax2 alone; returns its line index."""
    ff = Imp(f, f)
    a2 = b.axiom("Ax2", {"phi": f, "psi": ff, "theta": f})
    a1 = b.axiom("Ax1", {"phi": f, "psi": ff})
    step = b.mp(a2, a1)
    a1b = b.axiom("Ax1", {"phi": f, "psi": f})
    return b.mp(step, a1b)


def deduction_transform(proof: Proof, discharge: int) -> Proof:
    """Discharge one hypothesis: from G,f |- c build G |- f -> c.

    The transformation is the standard Ax1/Ax2 rewrite, applied lazily:
    lines that never feed a use of the discharged hypothesis are copied
    untouched and lifted only at the point of consumption.
    """
    if not 0 <= discharge < len(proof.hypotheses):
        raise IndexError(f"hypothesis index {discharge} out of range")
    verdict = check(proof)
    if not verdict:
        raise ValueError(f"input proof does not check ({verdict})")
    phi = proof.hypotheses[discharge]
    new_hyps = (
        proof.hypotheses[:discharge] + proof.hypotheses[discharge + 1 :]
    )
    hyp_remap = {
        old: (old if old < discharge else old - 1)
        for old in range(len(proof.hypotheses))
        if old != discharge
    }
    b = ProofBuilder(proof.params, new_hyps)
    plain: dict[int, int] = {}
    dep: dict[int, int] = {}

    def lifted(i: int) -> int:
        # line index in b proving phi -> (old line i's formula)
        got = dep.get(i)
        if got is not None:
            return got
        f = proof.lines[i].formula
        a1 = b.axiom("Ax1", {"phi": f, "psi": phi})
        got = b.mp(a1, plain[i])
        dep[i] = got
        return got

    for i, line in enumerate(proof.lines):
        just = line.just
        if isinstance(just, Hyp):
            if just.index == discharge:
                dep[i] = _emit_refl(b, phi)
            else:
                plain[i] = b.hyp(hyp_remap[just.index])
        elif isinstance(just, Axiom):
            plain[i] = b.axiom(just.schema, just.subst)
        else:
            assert isinstance(just, MP)
            if just.major in plain and just.minor in plain:
                plain[i] = b.mp(plain[just.major], plain[just.minor])
            else:
                minor_f = proof.lines[just.minor].formula
                a2 = b.axiom(
                    "Ax2",
                    {"phi": phi, "psi": minor_f, "theta": line.formula},
                )
                dep[i] = b.mp(b.mp(a2, lifted(just.major)), lifted(just.minor))

    last = len(proof.lines) - 1
    return b.build(lifted(last))


def weaken(proof: Proof, hypotheses: Sequence[Formula]) -> Proof:
    """Re-host a proof on a wider or reordered hypothesis list."""
    b = ProofBuilder(proof.params, hypotheses)
    return b.build(b.splice(proof))


def replace_hyp_with_theorem(proof: Proof, index: int, theorem: Proof) -> Proof:
    """Cut: substitute a hypothesis-free proof for one hypothesis.

    theorem must conclude exactly hypotheses[index]; the result proves
    the same conclusion from the remaining hypotheses.
    """
    if not 0 <= index < len(proof.hypotheses):
        raise IndexError(f"hypothesis index {index} out of range")
    if theorem.params != proof.params:
        raise ValueError("theorem proved under different logic params")
    if theorem.hypotheses:
        raise ValueError("replacement theorem must be hypothesis-free")
    if theorem.conclusion is not proof.hypotheses[index]:
        raise ValueError("theorem does not conclude the replaced hypothesis")
    new_hyps = proof.hypotheses[:index] + proof.hypotheses[index + 1 :]
    hyp_remap = {
        old: (old if old < index else old - 1)
        for old in range(len(proof.hypotheses))
        if old != index
    }
    b = ProofBuilder(proof.params, new_hyps)
    index_map: list[int] = []
    for line in proof.lines:
        just = line.just
        if isinstance(just, Hyp):
            if just.index == index:
                index_map.append(b.splice(theorem))
            else:
                index_map.append(b.hyp(hyp_remap[just.index]))
        elif isinstance(just, Axiom):
            index_map.append(b.axiom(just.schema, just.subst))
        else:
            assert isinstance(just, MP)
            index_map.append(b.mp(index_map[just.major], index_map[just.minor]))
    return b.build(index_map[-1])


def substitute_proof(proof: Proof, subst: Mapping[str, Formula]) -> Proof:
    """Apply an atom substitution to every formula of a proof.

    Justification structure is preserved line for line; axiom
    substitutions are composed with the new one.
    """
    hyps = tuple(substitute(h, subst) for h in proof.hypotheses)
    out: list[ProofLine] = []
    for line in proof.lines:
        just = line.just
        if isinstance(just, Axiom):
            just = Axiom(
                just.schema,
                {v: substitute(f, subst) for v, f in just.subst.items()},
            )
        out.append(ProofLine(substitute(line.formula, subst), just))
    return Proof(proof.params, hyps, tuple(out))


# ---------------------------------------------------------------------------
# Secondary rules (Ax1/Ax2/MP glue)


def _merge_hypotheses(*proofs: Proof) -> tuple[Formula, ...]:
    seen: list[Formula] = []
    for p in proofs:
        for h in p.hypotheses:
            if h not in seen:
                seen.append(h)
    return tuple(seen)


def _chain(b: ProofBuilder, i_ab: int, i_bc: int) -> int:
    """From lines a->b and b->c emit a->c."""
    ab = b.formula_at(i_ab)
    bc = b.formula_at(i_bc)
    a, mid, c = ab.ant, ab.cons, bc.cons
    a1 = b.axiom("Ax1", {"phi": bc, "psi": a})
    lift = b.mp(a1, i_bc)  # a -> (b -> c)
    a2 = b.axiom("Ax2", {"phi": a, "psi": mid, "theta": c})
    return b.mp(b.mp(a2, lift), i_ab)


def _perm(b: ProofBuilder, i: int) -> int:
    """From line a->(b->c) emit b->(a->c)."""
    f = b.formula_at(i)
    a, mid, c = f.ant, f.cons.ant, f.cons.cons
    a2 = b.axiom("Ax2", {"phi": a, "psi": mid, "theta": c})
    dist = b.mp(a2, i)  # (a->b) -> (a->c)
    a1 = b.axiom("Ax1", {"phi": mid, "psi": a})  # b -> (a->b)
    return _chain(b, a1, dist)


def rule_trans(p1: Proof, p2: Proof) -> Proof:
    """From a->b and b->c conclude a->c."""
    c1, c2 = p1.conclusion, p2.conclusion
    if (
        not isinstance(c1, Imp)
        or not isinstance(c2, Imp)
        or c1.cons is not c2.ant
    ):
        raise ValueError("rule_trans expects proofs of a->b and b->c")
    if p1.params != p2.params:
        raise ValueError("mismatched logic params")
    b = ProofBuilder(p1.params, _merge_hypotheses(p1, p2))
    i1 = b.splice(p1)
    i2 = b.splice(p2)
    return b.build(_chain(b, i1, i2))


def rule_perm(p: Proof) -> Proof:
    """From a->(b->c) conclude b->(a->c)."""
    f = p.conclusion
    if not isinstance(f, Imp) or not isinstance(f.cons, Imp):
        raise ValueError("rule_perm expects a proof of a->(b->c)")
    b = ProofBuilder(p.params, p.hypotheses)
    return b.build(_perm(b, b.splice(p)))


def rule_red(p: Proof) -> Proof:
    """From (a->b)->c conclude b->c."""
    f = p.conclusion
    if not isinstance(f, Imp) or not isinstance(f.ant, Imp):
        raise ValueError("rule_red expects a proof of (a->b)->c")
    a, mid = f.ant.ant, f.ant.cons
    b = ProofBuilder(p.params, p.hypotheses)
    i = b.splice(p)
    a1 = b.axiom("Ax1", {"phi": mid, "psi": a})  # b -> (a->b)
    return b.build(_chain(b, a1, i))


# ---------------------------------------------------------------------------
# Serialization


class ProofFormatError(ValueError):
    """A proof document is structurally malformed.

    Invalid proofs (bad instances, dangling references) are not format
    errors; they parse fine and are rejected by check.
    """


def proof_to_json(proof: Proof) -> dict:
    """Plain-dict form of a proof; line references become 1-based."""
    lines = []
    for line in proof.lines:
        just = line.just
        if isinstance(just, Axiom):
            j = {
                "kind": "axiom",
                "schema": just.schema,
                "subst": {
                    v: render(f) for v, f in sorted(just.subst.items())
                },
            }
        elif isinstance(just, Hyp):
            j = {"kind": "hyp", "index": just.index}
        else:
            assert isinstance(just, MP)
            j = {"kind": "mp", "major": just.major + 1, "minor": just.minor + 1}
        lines.append({"formula": render(line.formula), "just": j})
    return {
        "logic": {"n": proof.params.n, "k": proof.params.k},
        "hypotheses": [render(h) for h in proof.hypotheses],
        "lines": lines,
    }


def _parse_formula_field(text: object, where: str) -> Formula:
    if not isinstance(text, str):
        raise ProofFormatError(f"{where}: expected a formula string")
    try:
        return parse(text)
    except FormulaSyntaxError as e:
        raise ProofFormatError(f"{where}: {e}") from None


def proof_from_json(data: Union[str, bytes, dict]) -> Proof:
    """Parse the JSON proof document format.

    Accepts a dict or raw JSON text. Only structural problems raise;
    whether the proof is correct is check's business.
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise ProofFormatError(f"not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise ProofFormatError("top level must be a JSON object")
    logic = data.get("logic")
    if (
        not isinstance(logic, dict)
        or not isinstance(logic.get("n"), int)
        or not isinstance(logic.get("k"), int)
        or isinstance(logic["n"], bool)
        or isinstance(logic["k"], bool)
    ):
        raise ProofFormatError('"logic" must be {"n": int, "k": int}')
    try:
        params = LogicParams(logic["n"], logic["k"])
    except ValueError as e:
        raise ProofFormatError(str(e)) from None
    raw_hyps = data.get("hypotheses", [])
    if not isinstance(raw_hyps, list):
        raise ProofFormatError('"hypotheses" must be a list')
    hyps = tuple(
        _parse_formula_field(h, f"hypothesis {i}") for i, h in enumerate(raw_hyps)
    )
    raw_lines = data.get("lines")
    if not isinstance(raw_lines, list) or not raw_lines:
        raise ProofFormatError('"lines" must be a nonempty list')
    lines: list[ProofLine] = []
    for num, raw in enumerate(raw_lines, start=1):
        where = f"line {num}"
        if not isinstance(raw, dict):
            raise ProofFormatError(f"{where}: expected an object")
        formula = _parse_formula_field(raw.get("formula"), where)
        j = raw.get("just")
        if not isinstance(j, dict):
            raise ProofFormatError(f'{where}: "just" must be an object')
        kind = j.get("kind")
        if kind == "axiom":
            schema = j.get("schema")
            if not isinstance(schema, str):
                raise ProofFormatError(f'{where}: "schema" must be a string')
            raw_subst = j.get("subst", {})
            if not isinstance(raw_subst, dict):
                raise ProofFormatError(f'{where}: "subst" must be an object')
            subst = {
                str(v): _parse_formula_field(t, f"{where} subst {v!r}")
                for v, t in raw_subst.items()
            }
            just: Justification = Axiom(schema, subst)
        elif kind == "hyp":
            idx = j.get("index")
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise ProofFormatError(f'{where}: "index" must be an integer')
            just = Hyp(idx)
        elif kind == "mp":
            refs = []
            for field_name in ("major", "minor"):
                r = j.get(field_name)
                if not isinstance(r, int) or isinstance(r, bool):
                    raise ProofFormatError(
                        f'{where}: "{field_name}" must be an integer'
                    )
                refs.append(r - 1)
            just = MP(refs[0], refs[1])
        else:
            raise ProofFormatError(f"{where}: unknown justification kind {kind!r}")
        lines.append(ProofLine(formula, just))
    return Proof(params, hyps, tuple(lines))
