"""Constructive completeness: synthesize a proof for any tautology.

The synthesis has three layers.  For a fixed valuation, every atom gets
a small set of designated "context" formulas that pin down its value
axiomatically; a structural recursion then proves, from those contexts,
either the formula itself or a negated form of it (``lemma1_derive``).
A case-elimination step (``lemma2_combine``) discharges all contexts of
one atom at once, merging the proofs obtained for its different values.
``complete_prove`` runs the recursion over every valuation and folds the
atoms away one by one, ending with a hypothesis-free proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .formula import (
    Atom,
    Formula,
    Imp,
    Neg,
    and_,
    atoms,
    circ,
    classicalize,
    iter_neg,
    star,
    strong_neg,
)
from .proofs import (
    Proof,
    ProofBuilder,
    _chain,
    _emit_refl,
    axiom_proof,
    check,
    deduction_transform,
    replace_hyp_with_theorem,
    weaken,
)
from .semantics import (
    F,
    LogicParams,
    T,
    TruthValue,
    Valuation,
    enumerate_valuations,
    eval_formula,
    is_tautology,
    render_valuation,
)
from .templates import derive_template

__all__ = [
    "AtomContext",
    "DeltaContext",
    "NotATautology",
    "phi_v",
    "build_q_set",
    "build_delta",
    "lemma1_derive",
    "lemma2_combine",
    "complete_prove",
]


class NotATautology(ValueError):
    """Raised when proof synthesis is asked for an invalid formula."""

    def __init__(self, params: LogicParams, f: Formula, counterexample: Valuation):
        self.params = params
        self.formula = f
        self.counterexample = counterexample
        super().__init__(
            f"not a tautology of ({params.n},{params.k}): fails at "
            + render_valuation(counterexample)
        )


@dataclass(frozen=True)
class AtomContext:
    """One atom's value, witnessed by its designated context formulas."""

    atom: str
    value: TruthValue
    q_set: tuple[Formula, ...]


@dataclass(frozen=True)
class DeltaContext:
    """All atom contexts of a valuation, in atom order."""

    params: LogicParams
    valuation: Valuation
    contexts: tuple[AtomContext, ...]

    @property
    def formulas(self) -> tuple[Formula, ...]:
        return tuple(g for ctx in self.contexts for g in ctx.q_set)


def phi_v(params: LogicParams, f: Formula, v: Valuation) -> Formula:
    """The witness form of f under v: f itself when its value is
    designated, otherwise f under r+1 negations for value F_r."""
    value = eval_formula(params, f, v)
    if value.designated:
        return f
    return iter_neg(value.index + 1, f)


def _psi_block(params: LogicParams, psi: Formula, value: TruthValue) -> tuple[Formula, ...]:
    """The hypothesis block asserting that psi takes the given value."""
    params.check_value(value)
    r = value.index
    if value.kind == "F":
        if r == 0:
            return (strong_neg(psi), star(psi))
        head = tuple(Neg(star(iter_neg(j, psi))) for j in range(r))
        return head + (star(iter_neg(r, psi)),)
    if r == 0:
        return (classicalize(psi), circ(psi))
    head = tuple(
        and_(iter_neg(j + 1, psi), iter_neg(j, psi)) for j in range(r)
    )
    return head + (circ(iter_neg(r, psi)),)


def build_q_set(params: LogicParams, atom: str, value: TruthValue) -> tuple[Formula, ...]:
    """Context formulas for an atom at a value, expanded to primitives.

    F_0 yields (~a, a^*); T_0 yields (@a, a^o); F_r climbs the negated
    star ladder and ends with (!^r a)^*; T_i lists the overlapping
    conjunctions !^j a && !^{j-1} a and ends with (!^i a)^o.
    """
    return _psi_block(params, Atom(atom), value)


def build_delta(
    params: LogicParams, names: Sequence[str], v: Valuation
) -> DeltaContext:
    ctxs = tuple(
        AtomContext(nm, v[nm], build_q_set(params, nm, v[nm])) for nm in names
    )
    return DeltaContext(params, dict(v), ctxs)


def _strip_negs(f: Formula) -> tuple[int, Formula]:
    q = 0
    while isinstance(f, Neg):
        q += 1
        f = f.body
    return q, f


def _star_theorem(params: LogicParams, f: Formula) -> Proof:
    """Hypothesis-free proof of f^* for f a negation chain over an
    implication (the shape of every tautology)."""
    q, core = _strip_negs(f)
    if not isinstance(core, Imp):
        raise ValueError("star theorem needs an implication under the negations")
    b = ProofBuilder(params)
    line = b.axiom("Ax3", {"phi": core.ant, "psi": core.cons})
    for j in range(q):
        line = b.mp(b.axiom("Ax11", {"phi": iter_neg(j, core)}), line)
    return b.build(line)


def _circ_theorem(params: LogicParams, f: Formula) -> Proof:
    """Hypothesis-free proof of f^o, same shape requirement."""
    q, core = _strip_negs(f)
    if not isinstance(core, Imp):
        raise ValueError("circle theorem needs an implication under the negations")
    b = ProofBuilder(params)
    line = b.axiom("Ax4", {"phi": core.ant, "psi": core.cons})
    for j in range(q):
        line = b.mp(b.axiom("Ax12", {"phi": iter_neg(j, core)}), line)
    return b.build(line)


def _star_of_strongneg(params: LogicParams, u: Formula) -> Proof:
    """Hypothesis-free proof of (~u)^*."""
    b = ProofBuilder(params)
    ax3 = b.axiom("Ax3", {"phi": Imp(u, u), "psi": u})  # (@u)^*
    return b.build(b.mp(b.axiom("Ax11", {"phi": classicalize(u)}), ax3))


# ---------------------------------------------------------------------------
# Per-valuation derivation
# ---------------------------------------------------------------------------


class _Lemma1:
    """Structural recursion proving the witness form of each subformula
    from the full context set, inside one shared builder."""

    def __init__(self, params: LogicParams, delta: DeltaContext):
        self.params = params
        self.v = delta.valuation
        self.b = ProofBuilder(params, delta.formulas)
        self.values: dict[Formula, TruthValue] = {}
        self.lines: dict[Formula, int] = {}
        self.circ_lines: dict[Formula, int] = {}
        # atom name -> (context, hyp offset of its first formula)
        self.ctx_of: dict[str, tuple[AtomContext, int]] = {}
        offset = 0
        for ctx in delta.contexts:
            self.ctx_of[ctx.atom] = (ctx, offset)
            offset += len(ctx.q_set)

    def value(self, f: Formula) -> TruthValue:
        w = self.values.get(f)
        if w is None:
            w = eval_formula(self.params, f, self.v)
            self.values[f] = w
        return w

    def q_hyp(self, name: str, j: int) -> int:
        """Builder line for the j-th context formula of an atom."""
        ctx, offset = self.ctx_of[name]
        return self.b.hyp(offset + j)

    def use(self, tid: str, **subst: Formula) -> int:
        return self.b.splice(derive_template(tid, subst, self.params))

    def circ_line(self, f: Formula) -> int:
        """Line proving f^o, from the contexts when f is an atom chain
        and from Ax4 plus the Ax12 ladder otherwise."""
        hit = self.circ_lines.get(f)
        if hit is not None:
            return hit
        b = self.b
        q, core = _strip_negs(f)
        if isinstance(core, Imp):
            line = b.axiom("Ax4", {"phi": core.ant, "psi": core.cons})
            base = 0
        else:
            name = core.name
            w = self.v[name]
            if w.kind == "F" and w.index == 0:
                tpl = self.use("strongneg_to_circ", phi=core)
                line = b.mp(tpl, self.q_hyp(name, 0))  # ~a gives a^o
                base = 0
            elif w.kind == "F":
                tpl = self.use("negstar_to_circ", phi=core)
                line = b.mp(tpl, self.q_hyp(name, 0))  # !(a^*) gives a^o
                base = 0
            elif w.index == 0:
                line = self.q_hyp(name, 1)  # a^o is in the context
                base = 0
            else:
                line = self.q_hyp(name, w.index)  # (!^i a)^o closes the block
                base = w.index
        if q < base:
            raise AssertionError("negation chain shorter than its context ladder")
        for j in range(base, q):
            line = b.mp(b.axiom("Ax12", {"phi": iter_neg(j, core)}), line)
        self.circ_lines[f] = line
        return line

    def derive(self, f: Formula) -> int:
        hit = self.lines.get(f)
        if hit is not None:
            return hit
        if isinstance(f, Atom):
            line = self._atom(f)
        elif isinstance(f, Neg):
            line = self._neg(f)
        else:
            line = self._imp(f)
        self.lines[f] = line
        return line

    def _atom(self, f: Atom) -> int:
        b = self.b
        name = f.name
        w = self.v[name]
        if w.kind == "F" and w.index == 0:
            tpl = self.use("star_strong_to_weak_neg", phi=f)
            return b.mp(b.mp(tpl, self.q_hyp(name, 1)), self.q_hyp(name, 0))
        if w.kind == "F":
            r = w.index
            # !((!^{r-1} a)^*) is literally !(!^r a || !^{r-1} a)
            tpl = self.use(
                "star_neg_or_left", phi=iter_neg(r, f), psi=iter_neg(r - 1, f)
            )
            s = b.mp(tpl, self.q_hyp(name, r))
            return b.mp(s, self.q_hyp(name, r - 1))
        if w.index == 0:
            return b.mp(self.q_hyp(name, 0), _emit_refl(b, f))  # @a and a->a
        tpl = self.use("and_elim_right", phi=Neg(f), psi=f)
        return b.mp(tpl, self.q_hyp(name, 0))  # from !a && a

    def _neg(self, f: Neg) -> int:
        b = self.b
        body = f.body
        w = self.value(body)
        if w.kind == "F":
            # the witness of the body already carries the extra negation
            return self.derive(body)
        if w.index > 0:
            q, core = _strip_negs(f)
            if not isinstance(core, Atom):
                raise AssertionError(
                    "only negation chains over atoms can sit strictly "
                    "inside the designated values"
                )
            # f = !^q a with v(a) = T_{w.index + q - 1}; the context block
            # holds the conjunction !^q a && !^{q-1} a
            tpl = self.use(
                "and_elim_left", phi=iter_neg(q, core), psi=iter_neg(q - 1, core)
            )
            return b.mp(tpl, self.q_hyp(core.name, q - 1))
        # v(body) = T_0, so the value of f is F_0 and the goal is !!body
        circ_b = self.circ_line(body)
        ax10 = b.axiom("Ax10", {"phi": body})
        return b.mp(b.mp(ax10, circ_b), self.derive(body))

    def _imp(self, f: Imp) -> int:
        b = self.b
        ant, cons = f.ant, f.cons
        wa, wc = self.value(ant), self.value(cons)
        if wa.kind == "F" and wa.index == 0:
            tpl = self.use("circ_explosion", phi=ant, psi=cons)
            s = b.mp(tpl, self.circ_line(ant))
            return b.mp(s, self.derive(ant))  # witness of ant is !ant
        if wa.kind == "F":
            s_ant, core = _strip_negs(ant)
            if not isinstance(core, Atom):
                raise AssertionError(
                    "only negation chains over atoms can sit strictly "
                    "inside the non-designated values"
                )
            # context holds !(ant^*) at position s_ant of the atom's block
            tpl = self.use("negstar_explosion", phi=ant, psi=cons)
            return b.mp(tpl, self.q_hyp(core.name, s_ant))
        if wc.designated:
            lift = b.axiom("Ax1", {"phi": cons, "psi": ant})
            return b.mp(lift, self.derive(cons))
        if wc.index > 0:
            s_cons, core = _strip_negs(cons)
            if not isinstance(core, Atom):
                raise AssertionError(
                    "only negation chains over atoms can sit strictly "
                    "inside the non-designated values"
                )
            # from ant, f itself yields cons, hence cons^*; but !(cons^*)
            # is in the context, so refute f by contraposition
            from .proofs import _perm

            pm = _perm(b, _emit_refl(b, f))  # ant -> (f -> cons)
            to_cons = b.mp(pm, self.derive(ant))  # f -> cons
            si = self.use("star_intro", phi=cons)
            to_star = _chain(b, to_cons, si)  # f -> cons^*
            cp = self.use("contraposition", phi=f, psi=star(cons))
            s = b.mp(cp, b.axiom("Ax3", {"phi": ant, "psi": cons}))
            s = b.mp(
                s, b.axiom("Ax4", {"phi": strong_neg(Neg(cons)), "psi": cons})
            )
            s = b.mp(s, to_star)  # !(cons^*) -> !f
            return b.mp(s, self.q_hyp(core.name, s_cons))
        # v(cons) = F_0 with designated antecedent: refute the arrow
        tpl = self.use("circ_refute_imp", phi=ant, psi=cons)
        s = b.mp(tpl, self.circ_line(cons))
        s = b.mp(s, self.derive(ant))
        return b.mp(s, self.derive(cons))  # witness of cons is !cons


def lemma1_derive(params: LogicParams, f: Formula, v: Valuation) -> Proof:
    """Prove the witness form of f from the full context set of v.

    The returned proof has hypotheses exactly the context formulas, in
    atom order, and conclusion phi_v(params, f, v).
    """
    delta = build_delta(params, atoms(f), v)
    engine = _Lemma1(params, delta)
    return engine.b.build(engine.derive(f))


# ---------------------------------------------------------------------------
# Case elimination
# ---------------------------------------------------------------------------


def _merge_complement(
    params: LogicParams,
    x: Formula,
    pf_neg: Proof,
    pf_pos: Proof,
    x_star: Proof,
    theta: Formula,
    theta_star: Proof,
    theta_circ: Proof,
) -> Proof:
    """From proofs of !x -> theta and x -> theta (same hypotheses),
    conclude theta: contrapose the positive arm into !theta -> !x, chain
    through the negative arm, and close with the case axiom at theta."""
    b = ProofBuilder(params, pf_neg.hypotheses)
    i_pos = b.splice(pf_pos)
    i_neg = b.splice(pf_neg)
    i_tstar = b.splice(theta_star)
    i_tcirc = b.splice(theta_circ)
    cp = b.splice(derive_template("contraposition", {"phi": x, "psi": theta}, params))
    s = b.mp(cp, b.splice(x_star))
    s = b.mp(s, i_tcirc)
    s = b.mp(s, i_pos)  # !theta -> !x
    loop = _chain(b, s, i_neg)  # !theta -> theta
    ax7 = b.axiom("Ax7", {"phi": theta, "psi": theta})
    s = b.mp(b.mp(ax7, i_tstar), i_tcirc)
    s = b.mp(s, _emit_refl(b, Neg(theta)))
    return b.build(b.mp(s, loop))


def lemma2_combine(
    params: LogicParams,
    delta: Sequence[Formula],
    psi: Formula,
    theta: Formula,
    branch_proofs: Sequence[Proof],
    theta_star: Proof,
    theta_circ: Proof,
    *,
    verify: bool = True,
) -> Proof:
    """Merge the per-value branch proofs for psi into a proof from delta.

    branch_proofs[j] must prove theta from delta plus the block for
    psi = F_{j+1} (j < n), T_{j-n+1} (n <= j < n+k), F_0 (j = n+k) or
    T_0 (j = n+k+1).  theta_star and theta_circ are hypothesis-free
    proofs of theta^* and theta^o.  When verify is set the inputs are
    run through the checker first.
    """
    n, k = params.n, params.k
    size = params.size
    if len(branch_proofs) != size:
        raise ValueError(f"expected {size} branch proofs, got {len(branch_proofs)}")
    delta = tuple(delta)

    order = [F(r) for r in range(1, n + 1)] + [T(i) for i in range(1, k + 1)]
    order += [F(0), T(0)]
    blocks = [_psi_block(params, psi, w) for w in order]

    for name, pf, goal in (
        ("theta_star", theta_star, star(theta)),
        ("theta_circ", theta_circ, circ(theta)),
    ):
        if pf.params != params or pf.hypotheses or pf.conclusion is not goal:
            raise ValueError(f"{name} must prove the bare goal with no hypotheses")
        if verify and not check(pf):
            raise ValueError(f"{name} does not check")

    normalized: list[Proof] = []
    for j, pf in enumerate(branch_proofs):
        if pf.params != params:
            raise ValueError(f"branch {j} built for a different logic")
        if pf.conclusion is not theta:
            raise ValueError(f"branch {j} does not conclude the goal")
        want = delta + blocks[j]
        if set(pf.hypotheses) - set(want):
            raise ValueError(f"branch {j} uses hypotheses outside its block")
        if verify:
            verdict = check(pf)
            if not verdict:
                raise ValueError(f"branch {j} does not check: {verdict}")
        normalized.append(weaken(pf, want))

    base = len(delta)

    def merge(x: Formula, pf_neg: Proof, pf_pos: Proof, x_star: Proof) -> Proof:
        return _merge_complement(
            params, x, pf_neg, pf_pos, x_star, theta, theta_star, theta_circ
        )

    # F side: collapse the ladder down to the F_0 block
    f0_branch = normalized[size - 2]  # hyps delta + (~psi, psi^*)
    ax5 = axiom_proof(params, "Ax5", {"phi": psi})  # (!^n psi)^*
    if n == 0:
        half_f = replace_hyp_with_theorem(f0_branch, base + 1, ax5)
    else:
        a = replace_hyp_with_theorem(normalized[n - 1], base + n, ax5)
        for j in range(n - 1, 0, -1):
            # a proves theta from delta + the first j+1 negated stars
            target = star(iter_neg(j, psi))
            pf_neg = deduction_transform(a, base + j)
            pf_pos = deduction_transform(normalized[j - 1], base + j)
            x_star = derive_template(
                "star_of_star", {"phi": iter_neg(j, psi)}, params
            )
            a = merge(target, pf_neg, pf_pos, x_star)
        # a now proves theta from delta + (!(psi^*),)
        pf_neg = weaken(
            deduction_transform(a, base), delta + (strong_neg(psi),)
        )
        pf_pos = deduction_transform(f0_branch, base + 1)
        x_star = derive_template("star_of_star", {"phi": psi}, params)
        half_f = merge(star(psi), pf_neg, pf_pos, x_star)
    # half_f: delta, ~psi |- theta

    # T side: collapse the conjunction ladder down to the T_0 block
    t0_branch = normalized[size - 1]  # hyps delta + (@psi, psi^o)
    ax6 = axiom_proof(params, "Ax6", {"phi": psi})  # (!^k psi)^o
    if k == 0:
        half_t = replace_hyp_with_theorem(t0_branch, base + 1, ax6)
    else:
        bpf = replace_hyp_with_theorem(normalized[n + k - 1], base + k, ax6)
        for j in range(k - 1, 0, -1):
            # bpf proves theta from delta + conjunctions 1..j+1; the
            # circle (!^j psi)^o is literally the negation of the
            # (j+1)-th conjunction
            conj = and_(iter_neg(j + 1, psi), iter_neg(j, psi))
            pf_neg = deduction_transform(normalized[n + j - 1], base + j)
            pf_pos = deduction_transform(bpf, base + j)
            x_star = _star_of_strongneg(
                params, Imp(iter_neg(j + 1, psi), strong_neg(iter_neg(j, psi)))
            )
            bpf = merge(conj, pf_neg, pf_pos, x_star)
        # bpf now proves theta from delta + (!psi && psi,)
        conj = and_(Neg(psi), psi)
        pf_neg = deduction_transform(t0_branch, base + 1)  # psi^o = !(conj)
        pf_pos = weaken(
            deduction_transform(bpf, base), delta + (classicalize(psi),)
        )
        x_star = _star_of_strongneg(params, Imp(Neg(psi), strong_neg(psi)))
        half_t = merge(conj, pf_neg, pf_pos, x_star)
    # half_t: delta, @psi |- theta

    # final join on @psi, whose negation is literally ~psi
    pf_neg = deduction_transform(half_f, base)
    pf_pos = deduction_transform(half_t, base)
    x_star = derive_template("star_of_classicalize", {"phi": psi}, params)
    result = merge(classicalize(psi), pf_neg, pf_pos, x_star)
    assert result.hypotheses == delta and result.conclusion is theta
    return result


# ---------------------------------------------------------------------------
# Weak completeness
# ---------------------------------------------------------------------------


def complete_prove(
    params: LogicParams,
    f: Formula,
    *,
    trace: Callable[[str], None] | None = None,
) -> Proof:
    """Synthesize a hypothesis-free proof of a tautology.

    Raises NotATautology (with the falsifying valuation) otherwise.  The
    optional trace callback receives one line per case-elimination step.
    """
    verdict = is_tautology(params, f)
    if not verdict:
        raise NotATautology(params, f, verdict.counterexample)

    names = atoms(f)
    m = len(names)
    size = params.size

    theta_star = _star_theorem(params, f)
    theta_circ = _circ_theorem(params, f)

    order = [F(r) for r in range(1, params.n + 1)]
    order += [T(i) for i in range(1, params.k + 1)]
    order += [F(0), T(0)]

    table: dict[tuple[TruthValue, ...], Proof] = {}
    for v in enumerate_valuations(params, names):
        key = tuple(v[nm] for nm in names)
        table[key] = lemma1_derive(params, f, v)
    assert len(table) == size**m

    for round_idx, nm in enumerate(names):
        remaining = names[round_idx + 1 :]
        classes: dict[tuple[TruthValue, ...], dict[TruthValue, Proof]] = {}
        for key, pf in table.items():
            classes.setdefault(key[1:], {})[key[0]] = pf
        assert len(classes) == size ** (m - 1 - round_idx)
        table = {}
        for class_idx, (tail, per_value) in enumerate(classes.items()):
            v_tail = dict(zip(remaining, tail))
            delta: tuple[Formula, ...] = ()
            for other in remaining:
                delta += build_q_set(params, other, v_tail[other])
            branches = [per_value[w] for w in order]
            merged = lemma2_combine(
                params,
                delta,
                Atom(nm),
                f,
                branches,
                theta_star,
                theta_circ,
                verify=False,
            )
            table[tail] = merged
            if trace is not None:
                trace(
                    f"eliminated {nm}: class {class_idx + 1}/{len(classes)}, "
                    f"{len(merged)} lines"
                )

    final = table[()]
    assert not final.hypotheses and final.conclusion is f
    outcome = check(final)
    if not outcome:
        raise AssertionError(f"synthesized proof failed the checker: {outcome}")
    return final
