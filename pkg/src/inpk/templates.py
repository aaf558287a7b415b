"""Registry of reusable derived theorems.

Thirty schematic theorems cover the recurring moves of proof synthesis:
properties of the star and circle modalities, contraposition in both
directions, case analysis through strong negation, and the lattice
rules for the defined conjunction and disjunction.  Every entry pairs a
statement over placeholder atoms with a derivation script; the generic
proof is built once per logic and instantiated by substitution, so a
caller pays for each script at most once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Mapping

from .formula import (
    Atom,
    Formula,
    Imp,
    Neg,
    and_,
    circ,
    classicalize,
    or_,
    star,
    strong_neg,
)
from .proofs import (
    Proof,
    ProofBuilder,
    _chain,
    _emit_refl,
    _perm,
    axiom_proof,
    deduction_transform,
    substitute_proof,
)
from .semantics import LogicParams

__all__ = ["TemplateInfo", "TEMPLATES", "template_ids", "derive_template"]

_A = Atom("phi")
_B = Atom("psi")
_C = Atom("theta")


@dataclass(frozen=True)
class TemplateInfo:
    """A named theorem schema: its placeholders and its statement."""

    id: str
    metavariables: tuple[str, ...]
    statement: Formula


def _derived(
    params: LogicParams,
    hyps: tuple[Formula, ...],
    script: Callable[[ProofBuilder], int],
) -> Proof:
    """Run a script under hypotheses, then discharge them all."""
    b = ProofBuilder(params, hyps)
    proof = b.build(script(b))
    for _ in range(len(hyps)):
        proof = deduction_transform(proof, len(proof.hypotheses) - 1)
    return proof


def _use(
    b: ProofBuilder,
    tid: str,
    subst: Mapping[str, Formula],
    params: LogicParams,
) -> int:
    """Splice an instance of another template; returns its line."""
    return b.splice(derive_template(tid, subst, params))


def _classical(params: LogicParams, skeleton: Formula) -> Proof:
    from .classical import classical_core

    return classical_core(params, skeleton)


# ---------------------------------------------------------------------------
# Derivation scripts
# ---------------------------------------------------------------------------


def _g_refl(params: LogicParams) -> Proof:
    b = ProofBuilder(params)
    return b.build(_emit_refl(b, _A))


def _g_elim_classicalize(params: LogicParams) -> Proof:
    def script(b: ProofBuilder) -> int:
        return b.mp(b.hyp(0), _emit_refl(b, _A))

    return _derived(params, (classicalize(_A),), script)


def _g_intro_classicalize(params: LogicParams) -> Proof:
    return axiom_proof(params, "Ax1", {"phi": _A, "psi": Imp(_A, _A)})


def _g_star_of_star(params: LogicParams) -> Proof:
    return axiom_proof(params, "Ax3", {"phi": strong_neg(Neg(_A)), "psi": _A})


def _g_circ_of_star(params: LogicParams) -> Proof:
    return axiom_proof(params, "Ax4", {"phi": strong_neg(Neg(_A)), "psi": _A})


def _g_star_of_classicalize(params: LogicParams) -> Proof:
    return axiom_proof(params, "Ax3", {"phi": Imp(_A, _A), "psi": _A})


def _g_circ_of_classicalize(params: LogicParams) -> Proof:
    return axiom_proof(params, "Ax4", {"phi": Imp(_A, _A), "psi": _A})


def _g_star_intro(params: LogicParams) -> Proof:
    # phi* is ~!phi -> phi, so this is a one-line Ax1 instance
    return axiom_proof(params, "Ax1", {"phi": _A, "psi": strong_neg(Neg(_A))})


def _g_or_intro_right(params: LogicParams) -> Proof:
    return axiom_proof(params, "Ax1", {"phi": _B, "psi": strong_neg(_A)})


def _g_star_strong_to_weak_neg(params: LogicParams) -> Proof:
    def script(b: ProofBuilder) -> int:
        cc = b.axiom("Ax4", {"phi": Imp(_A, _A), "psi": _A})  # (@phi)^o
        ax8 = b.axiom("Ax8", {"phi": _A, "psi": classicalize(_A)})
        s = b.mp(b.mp(ax8, b.hyp(0)), cc)  # (phi->~phi)->((phi->@phi)->!phi)
        s = _perm(b, s)
        intro = b.axiom("Ax1", {"phi": _A, "psi": Imp(_A, _A)})  # phi->@phi
        s = b.mp(s, intro)  # (phi->~phi)->!phi
        lift = b.axiom("Ax1", {"phi": strong_neg(_A), "psi": _A})
        return _chain(b, lift, s)

    return _derived(params, (star(_A),), script)


def _g_converse_contraposition(params: LogicParams) -> Proof:
    hyps = (star(_A), circ(_B), Imp(Neg(_A), Neg(_B)), _B)

    def script(b: ProofBuilder) -> int:
        lift = b.axiom("Ax1", {"phi": _B, "psi": Neg(_A)})
        minor = b.mp(lift, b.hyp(3))  # !phi -> psi
        s = b.mp(b.axiom("Ax7", {"phi": _A, "psi": _B}), b.hyp(0))
        s = b.mp(s, b.hyp(1))
        s = b.mp(s, b.hyp(2))
        return b.mp(s, minor)

    return _derived(params, hyps, script)


def _g_contraposition(params: LogicParams) -> Proof:
    hyps = (star(_A), circ(_B), Imp(_A, _B), Neg(_B))

    def script(b: ProofBuilder) -> int:
        lift = b.axiom("Ax1", {"phi": Neg(_B), "psi": _A})
        to_nb = b.mp(lift, b.hyp(3))  # phi -> !psi
        s = b.mp(b.axiom("Ax8", {"phi": _A, "psi": _B}), b.hyp(0))
        s = b.mp(s, b.hyp(1))
        s = b.mp(s, to_nb)
        return b.mp(s, b.hyp(2))

    return _derived(params, hyps, script)


def _emit_cases_classicalize(b: ProofBuilder) -> int:
    """Emit (~phi->~psi)->((~phi->@psi)->@phi); hypothesis-free."""
    s_star = b.axiom("Ax3", {"phi": Imp(_A, _A), "psi": _A})  # (@phi)^*
    c_circ = b.axiom("Ax4", {"phi": Imp(_B, _B), "psi": _B})  # (@psi)^o
    ax7 = b.axiom("Ax7", {"phi": classicalize(_A), "psi": classicalize(_B)})
    return b.mp(b.mp(ax7, s_star), c_circ)


def _g_strong_neg_cases_classicalize(params: LogicParams) -> Proof:
    b = ProofBuilder(params)
    return b.build(_emit_cases_classicalize(b))


def _g_strong_neg_cases(params: LogicParams) -> Proof:
    hyps = (Imp(strong_neg(_A), strong_neg(_B)), Imp(strong_neg(_A), _B))

    def script(b: ProofBuilder) -> int:
        intro = b.axiom("Ax1", {"phi": _B, "psi": Imp(_B, _B)})  # psi->@psi
        to_c = _chain(b, b.hyp(1), intro)  # ~phi -> @psi
        s = b.mp(_emit_cases_classicalize(b), b.hyp(0))
        s = b.mp(s, to_c)  # @phi
        return b.mp(s, _emit_refl(b, _A))

    return _derived(params, hyps, script)


def _g_or_intro_left(params: LogicParams) -> Proof:
    return _classical(params, Imp(_A, Imp(Neg(_A), _B)))


def _g_and_elim_left(params: LogicParams) -> Proof:
    return _classical(params, Imp(Neg(Imp(_A, Neg(_B))), _A))


def _g_and_elim_right(params: LogicParams) -> Proof:
    return _classical(params, Imp(Neg(Imp(_A, Neg(_B))), _B))


def _g_or_elim(params: LogicParams) -> Proof:
    skeleton = Imp(
        Imp(_A, _C), Imp(Imp(_B, _C), Imp(Imp(Neg(_A), _B), _C))
    )
    return _classical(params, skeleton)


def _g_and_intro(params: LogicParams) -> Proof:
    return _classical(params, Imp(_A, Imp(_B, Neg(Imp(_A, Neg(_B))))))


def _g_and_to_or(params: LogicParams) -> Proof:
    return _classical(params, Imp(Neg(Imp(_A, Neg(_B))), Imp(Neg(_A), _B)))


def _g_circ_explosion(params: LogicParams) -> Proof:
    nb = Imp(Neg(_A), _B)
    hyps = (circ(_A), Neg(_A))

    def script(b: ProofBuilder) -> int:
        ax3 = b.axiom("Ax3", {"phi": Neg(_A), "psi": _B})  # (!phi->psi)^*
        cc = _use(b, "converse_contraposition", {"phi": nb, "psi": _A}, params)
        s = b.mp(b.mp(cc, ax3), b.hyp(0))
        lift = b.axiom("Ax1", {"phi": Neg(_A), "psi": Neg(nb)})
        s = b.mp(s, b.mp(lift, b.hyp(1)))  # phi -> (!phi -> psi)
        return b.mp(_perm(b, s), b.hyp(1))

    return _derived(params, hyps, script)


def _g_circ_of_circ(params: LogicParams) -> Proof:
    # phi^o is !(!phi && phi) and !phi && phi is ~((!phi)->(~phi)),
    # so two Ax12 steps climb from (@u)^o to (phi^o)^o.
    u = Imp(Neg(_A), strong_neg(_A))
    b = ProofBuilder(params)
    s = b.axiom("Ax4", {"phi": Imp(u, u), "psi": u})
    s = b.mp(b.axiom("Ax12", {"phi": classicalize(u)}), s)
    s = b.mp(b.axiom("Ax12", {"phi": strong_neg(u)}), s)
    return b.build(s)


def _emit_star_negconj(b: ProofBuilder) -> int:
    """Emit (!phi && phi)^*; hypothesis-free."""
    u = Imp(Neg(_A), strong_neg(_A))
    ax3 = b.axiom("Ax3", {"phi": Imp(u, u), "psi": u})  # (@u)^*
    return b.mp(b.axiom("Ax11", {"phi": classicalize(u)}), ax3)


def _g_negstar_to_circ(params: LogicParams) -> Proof:
    conj = and_(Neg(_A), _A)
    b = ProofBuilder(params)
    star_conj = _emit_star_negconj(b)
    cp = _use(b, "contraposition", {"phi": conj, "psi": star(_A)}, params)
    s = b.mp(cp, star_conj)
    s = b.mp(s, b.axiom("Ax4", {"phi": strong_neg(Neg(_A)), "psi": _A}))
    ao = _use(b, "and_to_or", {"phi": Neg(_A), "psi": _A}, params)
    return b.build(b.mp(s, ao))


def _g_strongneg_to_circ(params: LogicParams) -> Proof:
    conj = and_(Neg(_A), _A)
    b = ProofBuilder(params)
    star_conj = _emit_star_negconj(b)
    cp = _use(b, "contraposition", {"phi": conj, "psi": classicalize(_A)}, params)
    s = b.mp(cp, star_conj)
    s = b.mp(s, b.axiom("Ax4", {"phi": Imp(_A, _A), "psi": _A}))
    ae = _use(b, "and_elim_right", {"phi": Neg(_A), "psi": _A}, params)
    intro = b.axiom("Ax1", {"phi": _A, "psi": Imp(_A, _A)})
    to_c = _chain(b, ae, intro)  # (!phi && phi) -> @phi
    return b.build(b.mp(s, to_c))


def _g_star_neg_or_left(params: LogicParams) -> Proof:
    disj = or_(_A, _B)

    def script(b: ProofBuilder) -> int:
        cdisj = b.axiom("Ax4", {"phi": strong_neg(_A), "psi": _B})  # (phi||psi)^o
        cp = _use(b, "contraposition", {"phi": _A, "psi": disj}, params)
        s = b.mp(b.mp(cp, b.hyp(0)), cdisj)
        oi = _use(b, "or_intro_left", {"phi": _A, "psi": _B}, params)
        return b.mp(s, oi)

    return _derived(params, (star(_A),), script)


def _g_circ_refute_imp(params: LogicParams) -> Proof:
    ab = Imp(_A, _B)

    def script(b: ProofBuilder) -> int:
        ax3 = b.axiom("Ax3", {"phi": _A, "psi": _B})
        cp = _use(b, "contraposition", {"phi": ab, "psi": _B}, params)
        s = b.mp(b.mp(cp, ax3), b.hyp(0))  # ((phi->psi)->psi)->(!psi->!(phi->psi))
        pm = _perm(b, _emit_refl(b, ab))  # phi -> ((phi->psi)->psi)
        return _chain(b, pm, s)

    return _derived(params, (circ(_B),), script)


def _g_star_of_neg_imp(params: LogicParams) -> Proof:
    b = ProofBuilder(params)
    ax3 = b.axiom("Ax3", {"phi": _A, "psi": _B})
    return b.build(b.mp(b.axiom("Ax11", {"phi": Imp(_A, _B)}), ax3))


def _g_circ_of_neg_imp(params: LogicParams) -> Proof:
    b = ProofBuilder(params)
    ax4 = b.axiom("Ax4", {"phi": _A, "psi": _B})
    return b.build(b.mp(b.axiom("Ax12", {"phi": Imp(_A, _B)}), ax4))


def _g_circ_of_negstar(params: LogicParams) -> Proof:
    return derive_template(
        "circ_of_neg_imp", {"phi": strong_neg(Neg(_A)), "psi": _A}, params
    )


def _g_negstar_explosion(params: LogicParams) -> Proof:
    hyps = (Neg(star(_A)), _A)

    def script(b: ProofBuilder) -> int:
        si = b.axiom("Ax1", {"phi": _A, "psi": strong_neg(Neg(_A))})
        st = b.mp(si, b.hyp(1))  # phi^*
        cs = b.axiom("Ax4", {"phi": strong_neg(Neg(_A)), "psi": _A})
        ce = _use(b, "circ_explosion", {"phi": star(_A), "psi": _B}, params)
        s = b.mp(b.mp(ce, cs), b.hyp(0))  # phi^* -> psi
        return b.mp(s, st)

    return _derived(params, hyps, script)


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

_P = ("phi",)
_PQ = ("phi", "psi")
_PQR = ("phi", "psi", "theta")

_REGISTRY: tuple[
    tuple[str, tuple[str, ...], Formula, Callable[[LogicParams], Proof]], ...
] = (
    ("refl", _P, Imp(_A, _A), _g_refl),
    ("elim_classicalize", _P, Imp(classicalize(_A), _A), _g_elim_classicalize),
    ("intro_classicalize", _P, Imp(_A, classicalize(_A)), _g_intro_classicalize),
    ("star_of_star", _P, star(star(_A)), _g_star_of_star),
    ("circ_of_star", _P, circ(star(_A)), _g_circ_of_star),
    ("star_of_classicalize", _P, star(classicalize(_A)), _g_star_of_classicalize),
    ("circ_of_classicalize", _P, circ(classicalize(_A)), _g_circ_of_classicalize),
    ("star_intro", _P, Imp(_A, star(_A)), _g_star_intro),
    (
        "star_strong_to_weak_neg",
        _P,
        Imp(star(_A), Imp(strong_neg(_A), Neg(_A))),
        _g_star_strong_to_weak_neg,
    ),
    (
        "converse_contraposition",
        _PQ,
        Imp(
            star(_A),
            Imp(circ(_B), Imp(Imp(Neg(_A), Neg(_B)), Imp(_B, _A))),
        ),
        _g_converse_contraposition,
    ),
    (
        "contraposition",
        _PQ,
        Imp(
            star(_A),
            Imp(circ(_B), Imp(Imp(_A, _B), Imp(Neg(_B), Neg(_A)))),
        ),
        _g_contraposition,
    ),
    (
        "strong_neg_cases_classicalize",
        _PQ,
        Imp(
            Imp(strong_neg(_A), strong_neg(_B)),
            Imp(Imp(strong_neg(_A), classicalize(_B)), classicalize(_A)),
        ),
        _g_strong_neg_cases_classicalize,
    ),
    (
        "strong_neg_cases",
        _PQ,
        Imp(
            Imp(strong_neg(_A), strong_neg(_B)),
            Imp(Imp(strong_neg(_A), _B), _A),
        ),
        _g_strong_neg_cases,
    ),
    ("or_intro_left", _PQ, Imp(_A, or_(_A, _B)), _g_or_intro_left),
    ("or_intro_right", _PQ, Imp(_B, or_(_A, _B)), _g_or_intro_right),
    ("and_elim_left", _PQ, Imp(and_(_A, _B), _A), _g_and_elim_left),
    ("and_elim_right", _PQ, Imp(and_(_A, _B), _B), _g_and_elim_right),
    (
        "or_elim",
        _PQR,
        Imp(Imp(_A, _C), Imp(Imp(_B, _C), Imp(or_(_A, _B), _C))),
        _g_or_elim,
    ),
    ("and_intro", _PQ, Imp(_A, Imp(_B, and_(_A, _B))), _g_and_intro),
    ("and_to_or", _PQ, Imp(and_(_A, _B), or_(_A, _B)), _g_and_to_or),
    (
        "circ_explosion",
        _PQ,
        Imp(circ(_A), Imp(Neg(_A), Imp(_A, _B))),
        _g_circ_explosion,
    ),
    ("circ_of_circ", _P, circ(circ(_A)), _g_circ_of_circ),
    ("negstar_to_circ", _P, Imp(Neg(star(_A)), circ(_A)), _g_negstar_to_circ),
    ("strongneg_to_circ", _P, Imp(strong_neg(_A), circ(_A)), _g_strongneg_to_circ),
    (
        "star_neg_or_left",
        _PQ,
        Imp(star(_A), Imp(Neg(or_(_A, _B)), Neg(_A))),
        _g_star_neg_or_left,
    ),
    (
        "circ_refute_imp",
        _PQ,
        Imp(circ(_B), Imp(_A, Imp(Neg(_B), Neg(Imp(_A, _B))))),
        _g_circ_refute_imp,
    ),
    ("star_of_neg_imp", _PQ, star(Neg(Imp(_A, _B))), _g_star_of_neg_imp),
    ("circ_of_neg_imp", _PQ, circ(Neg(Imp(_A, _B))), _g_circ_of_neg_imp),
    ("circ_of_negstar", _P, circ(Neg(star(_A))), _g_circ_of_negstar),
    (
        "negstar_explosion",
        _PQ,
        Imp(Neg(star(_A)), Imp(_A, _B)),
        _g_negstar_explosion,
    ),
)

TEMPLATES: dict[str, TemplateInfo] = {
    tid: TemplateInfo(tid, metavars, statement)
    for tid, metavars, statement, _ in _REGISTRY
}

_BUILDERS: dict[str, Callable[[LogicParams], Proof]] = {
    tid: builder for tid, _, _, builder in _REGISTRY
}

_GENERIC: dict[tuple[str, LogicParams], Proof] = {}
_INSTANCES: dict[tuple, Proof] = {}


def template_ids() -> tuple[str, ...]:
    return tuple(TEMPLATES)


def derive_template(
    template_id: str,
    subst: Mapping[str, Formula],
    params: LogicParams,
) -> Proof:
    """Instantiate a registered template as a hypothesis-free proof."""
    info = TEMPLATES.get(template_id)
    if info is None:
        raise ValueError(f"unknown template id '{template_id}'")
    try:
        bind = {v: subst[v] for v in info.metavariables}
    except KeyError as exc:
        raise ValueError(
            f"template '{template_id}' needs a binding for {exc.args[0]!r}"
        ) from None

    key = (template_id, params)
    generic = _GENERIC.get(key)
    if generic is None:
        generic = _BUILDERS[template_id](params)
        assert not generic.hypotheses
        assert generic.conclusion is info.statement
        _GENERIC[key] = generic

    if all(bind[v] is Atom(v) for v in info.metavariables):
        return generic
    ikey = (template_id, params, tuple(bind[v] for v in info.metavariables))
    inst = _INSTANCES.get(ikey)
    if inst is None:
        inst = substitute_proof(generic, bind)
        _INSTANCES[ikey] = inst
    return inst
