"""Proof objects, axiom matching, checking, and transformers."""

import json
import random

import pytest

from inpk.formula import Atom, Imp, Neg, circ, parse, star
from inpk.proofs import (
    AXIOM_IDS,
    Axiom,
    CheckVerdict,
    Hyp,
    MP,
    Proof,
    ProofBuilder,
    ProofFormatError,
    ProofLine,
    axiom_metavariables,
    axiom_pattern,
    axiom_proof,
    check,
    deduction_transform,
    match_axiom,
    proof_from_json,
    proof_to_json,
    prune,
    replace_hyp_with_theorem,
    rule_perm,
    rule_red,
    rule_trans,
    substitute,
    substitute_proof,
    weaken,
)
from inpk.semantics import LogicParams, entails, is_tautology

from helpers import random_formula, random_proof, random_subst

P00 = LogicParams(0, 0)
P10 = LogicParams(1, 0)
P11 = LogicParams(1, 1)

p, q, r = Atom("p"), Atom("q"), Atom("r")


def refl_proof(params, f):
    b = ProofBuilder(params)
    ff = Imp(f, f)
    a2 = b.axiom("Ax2", {"phi": f, "psi": ff, "theta": f})
    a1 = b.axiom("Ax1", {"phi": f, "psi": ff})
    step = b.mp(a2, a1)
    a1b = b.axiom("Ax1", {"phi": f, "psi": f})
    return b.build(b.mp(step, a1b))


# --- axiom schemas and matching ---


def test_pattern_ax1_shape():
    pat = axiom_pattern("Ax1", P00)
    assert pat is Imp(Atom("phi"), Imp(Atom("psi"), Atom("phi")))


def test_pattern_ax5_tracks_n():
    assert axiom_pattern("Ax5", P00) is star(Atom("phi"))
    assert axiom_pattern("Ax5", P10) is star(Neg(Atom("phi")))
    assert axiom_pattern("Ax6", P10) is circ(Atom("phi"))
    assert axiom_pattern("Ax6", LogicParams(0, 2)) is circ(Neg(Neg(Atom("phi"))))


def test_unknown_schema_rejected():
    with pytest.raises(ValueError):
        axiom_pattern("Ax13", P00)
    with pytest.raises(ValueError):
        axiom_metavariables("Bx1")


def test_match_ax1_example():
    got = match_axiom(parse("p -> (q -> p)"), "Ax1", P00)
    assert got == {"phi": p, "psi": q}


def test_match_ax5_example():
    got = match_axiom(star(Neg(p)), "Ax5", P10)
    assert got == {"phi": p}


def test_match_rejects_inconsistent_slots():
    assert match_axiom(parse("p -> p"), "Ax1", P00) is None


def test_match_is_left_inverse_of_substitution():
    rng = random.Random(7)
    for schema in AXIOM_IDS:
        metavars = axiom_metavariables(schema)
        for params in (P00, P10, P11):
            pat = axiom_pattern(schema, params)
            for _ in range(10):
                subst = random_subst(rng, metavars, ["p", "q", "r"], 3)
                inst = substitute(pat, subst)
                assert match_axiom(inst, schema, params) == subst


def test_axiom_instances_are_tautologies_small():
    rng = random.Random(11)
    for params in (P00, P10, LogicParams(0, 1), P11):
        for schema in AXIOM_IDS:
            pat = axiom_pattern(schema, params)
            for _ in range(5):
                subst = random_subst(rng, axiom_metavariables(schema), ["p", "q"], 2)
                assert is_tautology(params, substitute(pat, subst))


# --- checking ---


def test_refl_proof_accepted_and_shaped():
    pf = refl_proof(P00, p)
    assert len(pf) == 5
    assert pf.conclusion is Imp(p, p)
    assert check(pf)
    assert str(check(pf)) == "accepted"


def test_check_manual_line_list():
    f = Imp(p, Imp(q, p))
    pf = Proof(P00, (), (ProofLine(f, Axiom("Ax1", {"phi": p, "psi": q})),))
    assert check(pf)


def test_check_rejects_empty():
    v = check(Proof(P00, (), ()))
    assert not v and v.line is None


def test_check_rejects_forward_reference():
    lines = (
        ProofLine(q, MP(1, 2)),
        ProofLine(Imp(p, q), Hyp(0)),
        ProofLine(p, Hyp(1)),
    )
    v = check(Proof(P00, (Imp(p, q), p), lines))
    assert not v
    assert v.line == 1
    assert "earlier" in v.reason


def test_check_rejects_substitution_mismatch():
    f = Imp(q, Imp(p, q))
    pf = Proof(P00, (), (ProofLine(f, Axiom("Ax1", {"phi": p, "psi": q})),))
    v = check(pf)
    assert not v and v.line == 1 and "Ax1" in v.reason


def test_check_rejects_missing_and_unused_bindings():
    f = Imp(p, Imp(q, p))
    missing = Proof(P00, (), (ProofLine(f, Axiom("Ax1", {"phi": p})),))
    assert "does not bind" in check(missing).reason
    extra = Proof(
        P00,
        (),
        (ProofLine(f, Axiom("Ax1", {"phi": p, "psi": q, "theta": r})),),
    )
    assert "unused" in check(extra).reason


def test_check_rejects_unknown_schema():
    pf = Proof(P00, (), (ProofLine(p, Axiom("Ax99", {"phi": p})),))
    assert "unknown axiom schema" in check(pf).reason


def test_check_rejects_bad_hypothesis_use():
    out_of_range = Proof(P00, (p,), (ProofLine(p, Hyp(3)),))
    assert "out of range" in check(out_of_range).reason
    mismatch = Proof(P00, (p,), (ProofLine(q, Hyp(0)),))
    assert "does not match hypothesis" in check(mismatch).reason


def test_check_rejects_mp_shape_faults():
    bad_major = Proof(
        P00,
        (p, q),
        (ProofLine(p, Hyp(0)), ProofLine(q, Hyp(1)), ProofLine(r, MP(0, 1))),
    )
    assert "not an implication" in check(bad_major).reason
    bad_minor = Proof(
        P00,
        (Imp(p, q), r),
        (
            ProofLine(Imp(p, q), Hyp(0)),
            ProofLine(r, Hyp(1)),
            ProofLine(q, MP(0, 1)),
        ),
    )
    assert "antecedent" in check(bad_minor).reason
    bad_conclusion = Proof(
        P00,
        (Imp(p, q), p),
        (
            ProofLine(Imp(p, q), Hyp(0)),
            ProofLine(p, Hyp(1)),
            ProofLine(r, MP(0, 1)),
        ),
    )
    assert "consequent" in check(bad_conclusion).reason


def test_ax5_instance_checks_per_params():
    pf = axiom_proof(P10, "Ax5", {"phi": p})
    assert pf.conclusion is star(Neg(p))
    assert check(pf)
    wrong_params = Proof(P00, (), pf.lines)
    assert not check(wrong_params)


# --- builder ---


def test_builder_deduplicates_splices():
    inner = refl_proof(P00, p)
    b = ProofBuilder(P00)
    first = b.splice(inner)
    second = b.splice(inner)
    assert first == second
    assert len(b) == len(inner)


def test_builder_rejects_bad_mp():
    b = ProofBuilder(P00, (p, q))
    i = b.hyp(0)
    j = b.hyp(1)
    with pytest.raises(ValueError):
        b.mp(i, j)


def test_builder_requires_a_line():
    with pytest.raises(ValueError):
        ProofBuilder(P00).build()


def test_build_trims_unreachable_lines():
    b = ProofBuilder(P00, (p,))
    junk = b.axiom("Ax1", {"phi": q, "psi": q})
    kept = b.hyp(0)
    pf = b.build(kept)
    assert len(pf) == 1 and pf.conclusion is p
    assert check(pf)
    assert junk != kept


def test_prune_function_round_trip():
    full = Proof(
        P00,
        (p,),
        (
            ProofLine(Imp(q, Imp(q, q)), Axiom("Ax1", {"phi": q, "psi": q})),
            ProofLine(p, Hyp(0)),
        ),
    )
    trimmed = prune(full)
    assert len(trimmed) == 1
    assert trimmed.conclusion is p
    assert trimmed.hypotheses == (p,)


# --- deduction transformer ---


def test_dt_degenerate_identity():
    pf = Proof(P00, (p,), (ProofLine(p, Hyp(0)),))
    out = deduction_transform(pf, 0)
    assert out.hypotheses == ()
    assert out.conclusion is Imp(p, p)
    assert check(out)


def test_dt_discharges_minor_of_mp():
    b = ProofBuilder(P00, (p, Imp(p, q)))
    concl = b.mp(b.hyp(1), b.hyp(0))
    pf = b.build(concl)
    out = deduction_transform(pf, 0)
    assert out.hypotheses == (Imp(p, q),)
    assert out.conclusion is Imp(p, q)
    assert check(out)


def test_dt_reproduces_ax1_statement():
    b = ProofBuilder(P00, (p,))
    a1 = b.axiom("Ax1", {"phi": p, "psi": q})
    pf = b.build(b.mp(a1, b.hyp(0)))
    out = deduction_transform(pf, 0)
    assert out.hypotheses == ()
    assert out.conclusion is parse("p -> (q -> p)")
    assert check(out)


def test_dt_lifts_independent_conclusion():
    b = ProofBuilder(P00, (p, q))
    pf = b.build(b.hyp(1))
    out = deduction_transform(pf, 0)
    assert out.conclusion is Imp(p, q)
    assert out.hypotheses == (q,)
    assert check(out)


def test_dt_input_validation():
    pf = Proof(P00, (p,), (ProofLine(q, Hyp(0)),))
    with pytest.raises(ValueError):
        deduction_transform(pf, 0)
    good = Proof(P00, (p,), (ProofLine(p, Hyp(0)),))
    with pytest.raises(IndexError):
        deduction_transform(good, 2)


def test_dt_random_round_trip():
    rng = random.Random(23)
    hyp_pool = [p, q, Imp(p, q), Imp(q, r), Neg(p)]
    for _ in range(25):
        hyps = rng.sample(hyp_pool, rng.randint(1, 3))
        pf = random_proof(rng, P11, hyps, rng.randint(2, 10))
        idx = rng.randrange(len(hyps))
        out = deduction_transform(pf, idx)
        assert check(out), check(out).reason
        assert out.conclusion is Imp(hyps[idx], pf.conclusion)
        assert out.hypotheses == tuple(h for i, h in enumerate(hyps) if i != idx)


# --- weaken / cut / substitution ---


def test_weaken_reorders_and_extends():
    b = ProofBuilder(P00, (p, Imp(p, q)))
    pf = b.build(b.mp(b.hyp(1), b.hyp(0)))
    wide = weaken(pf, (r, Imp(p, q), p))
    assert wide.hypotheses == (r, Imp(p, q), p)
    assert wide.conclusion is q
    assert check(wide)
    with pytest.raises(ValueError):
        weaken(pf, (p,))


def test_replace_hyp_with_theorem():
    ff = Imp(p, p)
    b = ProofBuilder(P00, (ff, q))
    a1 = b.axiom("Ax1", {"phi": ff, "psi": q})
    pf = b.build(b.mp(a1, b.hyp(0)))  # q -> (p -> p)
    out = replace_hyp_with_theorem(pf, 0, refl_proof(P00, p))
    assert out.hypotheses == (q,)
    assert out.conclusion is Imp(q, ff)
    assert check(out)


def test_replace_hyp_validations():
    pf = Proof(P00, (p,), (ProofLine(p, Hyp(0)),))
    with pytest.raises(ValueError):
        replace_hyp_with_theorem(pf, 0, refl_proof(P00, p))
    hyp_proof = Proof(P00, (q,), (ProofLine(q, Hyp(0)),))
    with pytest.raises(ValueError):
        replace_hyp_with_theorem(
            Proof(P00, (q,), (ProofLine(q, Hyp(0)),)), 0, hyp_proof
        )


def test_substitute_proof():
    pf = refl_proof(P00, p)
    target = Imp(q, q)
    out = substitute_proof(pf, {"p": target})
    assert out.conclusion is Imp(target, target)
    assert len(out) == len(pf)
    assert check(out)


# --- secondary rules ---


def hyp_proof(params, f):
    b = ProofBuilder(params, (f,))
    return b.build(b.hyp(0))


def test_rule_trans():
    out = rule_trans(hyp_proof(P00, Imp(p, q)), hyp_proof(P00, Imp(q, r)))
    assert out.conclusion is Imp(p, r)
    assert out.hypotheses == (Imp(p, q), Imp(q, r))
    assert check(out)


def test_rule_perm():
    out = rule_perm(hyp_proof(P00, Imp(p, Imp(q, r))))
    assert out.conclusion is Imp(q, Imp(p, r))
    assert check(out)


def test_rule_red():
    out = rule_red(hyp_proof(P00, Imp(Imp(p, q), r)))
    assert out.conclusion is Imp(q, r)
    assert check(out)


def test_rule_shape_validation():
    with pytest.raises(ValueError):
        rule_trans(hyp_proof(P00, Imp(p, q)), hyp_proof(P00, Imp(r, p)))
    with pytest.raises(ValueError):
        rule_perm(hyp_proof(P00, p))
    with pytest.raises(ValueError):
        rule_red(hyp_proof(P00, Imp(p, q)))


def test_rules_are_semantically_sound():
    for params in (P00, P11):
        out = rule_trans(hyp_proof(params, Imp(p, q)), hyp_proof(params, Imp(q, r)))
        assert entails(params, list(out.hypotheses), out.conclusion)


# --- serialization ---


def test_json_round_trip():
    b = ProofBuilder(P11, (p,))
    a1 = b.axiom("Ax1", {"phi": p, "psi": q})
    pf = b.build(b.mp(a1, b.hyp(0)))
    doc = proof_to_json(pf)
    assert doc["logic"] == {"n": 1, "k": 1}
    assert doc["hypotheses"] == ["p"]
    kinds = [line["just"]["kind"] for line in doc["lines"]]
    assert kinds == ["axiom", "hyp", "mp"]
    assert doc["lines"][2]["just"] == {"kind": "mp", "major": 1, "minor": 2}
    back = proof_from_json(json.dumps(doc))
    assert back == pf
    assert check(back)


def test_json_hyp_index_is_zero_based():
    pf = Proof(P00, (p, q), (ProofLine(q, Hyp(1)),))
    doc = proof_to_json(pf)
    assert doc["lines"][0]["just"] == {"kind": "hyp", "index": 1}


def test_json_format_errors():
    with pytest.raises(ProofFormatError):
        proof_from_json("not json at all {")
    with pytest.raises(ProofFormatError):
        proof_from_json({"logic": {"n": 0}, "lines": []})
    with pytest.raises(ProofFormatError):
        proof_from_json({"logic": {"n": 0, "k": 0}, "lines": []})
    with pytest.raises(ProofFormatError):
        proof_from_json(
            {
                "logic": {"n": 0, "k": 0},
                "lines": [{"formula": "p ->", "just": {"kind": "hyp", "index": 0}}],
            }
        )
    with pytest.raises(ProofFormatError):
        proof_from_json(
            {
                "logic": {"n": 0, "k": 0},
                "lines": [{"formula": "p", "just": {"kind": "axiom", "schema": 3}}],
            }
        )
    with pytest.raises(ProofFormatError):
        proof_from_json(
            {
                "logic": {"n": 0, "k": 0},
                "lines": [{"formula": "p", "just": {"kind": "cut", "at": 1}}],
            }
        )


def test_json_parses_invalid_proof_for_checker():
    doc = {
        "logic": {"n": 0, "k": 0},
        "hypotheses": [],
        "lines": [
            {"formula": "q", "just": {"kind": "mp", "major": 0, "minor": 0}}
        ],
    }
    pf = proof_from_json(doc)
    v = check(pf)
    assert not v and v.line == 1


# --- soundness spot checks on produced proofs ---


def test_produced_proofs_are_sound():
    rng = random.Random(5)
    for _ in range(10):
        hyps = [random_formula(rng, ["p", "q"], rng.randint(0, 2)) for _ in range(2)]
        pf = random_proof(rng, P10, hyps, 8)
        assert check(pf)
        assert entails(P10, list(pf.hypotheses), pf.conclusion)
