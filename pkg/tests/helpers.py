"""Deterministic random generators shared across the test suite."""

from __future__ import annotations

import random

from inpk.formula import Atom, Formula, Imp, Neg
from inpk.proofs import (
    AXIOM_IDS,
    Proof,
    ProofBuilder,
    axiom_metavariables,
)
from inpk.semantics import LogicParams


def random_formula(rng: random.Random, names: list[str], comp: int) -> Formula:
    """A random formula with exactly comp primitive connectives."""
    if comp <= 0:
        return Atom(rng.choice(names))
    if rng.random() < 0.45:
        return Neg(random_formula(rng, names, comp - 1))
    split = rng.randint(0, comp - 1)
    return Imp(
        random_formula(rng, names, split),
        random_formula(rng, names, comp - 1 - split),
    )


def random_subst(
    rng: random.Random,
    metavars: tuple[str, ...],
    names: list[str],
    max_comp: int,
) -> dict[str, Formula]:
    return {
        v: random_formula(rng, names, rng.randint(0, max_comp)) for v in metavars
    }


def random_proof(
    rng: random.Random,
    params: LogicParams,
    hypotheses: list[Formula],
    steps: int,
    names: list[str] | None = None,
) -> Proof:
    """A random checking proof built from axiom/hyp/MP moves."""
    names = names or ["p", "q"]
    b = ProofBuilder(params, hypotheses)
    emitted: list[int] = []
    if hypotheses:
        emitted.append(b.hyp(rng.randrange(len(hypotheses))))
    while len(emitted) < steps:
        move = rng.random()
        if move < 0.25 and hypotheses:
            emitted.append(b.hyp(rng.randrange(len(hypotheses))))
        elif move < 0.55 or not emitted:
            schema = rng.choice(AXIOM_IDS)
            subst = random_subst(rng, axiom_metavariables(schema), names, 2)
            emitted.append(b.axiom(schema, subst))
        else:
            pairs = [
                (i, j)
                for i in emitted
                for j in emitted
                if isinstance(b.formula_at(i), Imp)
                and b.formula_at(i).ant is b.formula_at(j)
            ]
            if pairs:
                emitted.append(b.mp(*rng.choice(pairs)))
            else:
                schema = rng.choice(AXIOM_IDS)
                subst = random_subst(rng, axiom_metavariables(schema), names, 2)
                emitted.append(b.axiom(schema, subst))
    return b.build()
