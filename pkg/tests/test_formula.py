import pytest
from hypothesis import given, strategies as st

from inpk.formula import (
    Atom, Neg, Imp, FormulaSyntaxError,
    parse, render, expand, atoms, complexity,
    classicalize, strong_neg, or_, and_, or_cl, and_cl, star, circ, iter_neg,
)

p = Atom("p")
q = Atom("q")
r = Atom("r")


def test_parse_primitives():
    assert parse("p -> (q -> p)") is Imp(p, Imp(q, p))
    assert parse("!p") is Neg(p)
    assert parse("!!p") is Neg(Neg(p))


def test_parse_classicalize():
    assert parse("@p") is Imp(Imp(p, p), p)


def test_parse_strong_negation():
    assert parse("~p") is Neg(Imp(Imp(p, p), p))


def test_parse_star_expansion():
    # !p | p, written out to primitives by hand
    np_ = Neg(p)
    strong_np = Neg(Imp(Imp(np_, np_), np_))
    assert parse("p^*") is Imp(strong_np, p)


def test_parse_circ_expansion():
    u = Imp(Neg(p), strong_neg(p))
    assert parse("p^o") is Neg(Neg(Imp(Imp(u, u), u)))


def test_right_associativity():
    assert parse("p -> q -> r") is Imp(p, Imp(q, r))
    assert parse("(p -> q) -> r") is Imp(Imp(p, q), r)


def test_precedence_layers():
    assert parse("!p & q") is and_(Neg(p), q)
    assert parse("p & q | r") is or_(and_(p, q), r)
    assert parse("p | q -> r") is Imp(or_(p, q), r)
    assert parse("!p^*") is Neg(star(p))
    assert parse("~@p") is strong_neg(classicalize(p))
    assert parse("p || q") is or_cl(p, q)
    assert parse("p && q") is and_cl(p, q)
    assert parse("p^o^*") is star(circ(p))


def test_left_associativity_of_lattice_ops():
    assert parse("p | q | r") is or_(or_(p, q), r)
    assert parse("p & q & r") is and_(and_(p, q), r)


def test_interning():
    assert parse("p -> q") is parse("p -> q")
    assert Imp(p, q) is Imp(p, q)
    assert Neg(p) is Neg(p)
    assert Atom("p") is p


def test_render():
    assert render(Imp(p, p)) == "p -> p"
    assert render(Neg(Neg(p))) == "!!p"
    assert render(Imp(Neg(p), q)) == "!p -> q"
    assert render(Imp(Imp(p, q), r)) == "(p -> q) -> r"
    assert render(Imp(p, Imp(q, r))) == "p -> q -> r"
    assert render(Neg(Imp(p, q))) == "!(p -> q)"


def test_expand():
    assert expand("or", p, q) is Imp(strong_neg(p), q)
    assert expand("and_cl", p, q) is Neg(Imp(p, Neg(q)))
    assert expand("neg", p) is Neg(p)
    assert expand("imp", p, q) is Imp(p, q)
    assert expand("star", p) is star(p)


def test_iter_neg():
    assert iter_neg(0, p) is p
    assert iter_neg(3, p) is Neg(Neg(Neg(p)))
    with pytest.raises(ValueError):
        iter_neg(-1, p)


def test_expand_errors():
    with pytest.raises(ValueError, match="unknown connective"):
        expand("xor", p, q)
    with pytest.raises(ValueError, match="argument"):
        expand("or", p)


def test_atoms():
    assert atoms(p) == ["p"]
    assert atoms(Imp(q, Imp(p, q))) == ["q", "p"]
    assert atoms(Neg(Neg(p))) == ["p"]
    assert atoms(and_(p, q)) == ["p", "q"]


def test_complexity():
    assert complexity(p) == 0
    assert complexity(Neg(p)) == 1
    assert complexity(Imp(Neg(p), q)) == 2


def test_star_complexity_pinned():
    assert complexity(star(p)) == 7


def test_atom_name_validation():
    with pytest.raises(ValueError):
        Atom("P")
    with pytest.raises(ValueError):
        Atom("1x")


def test_syntax_error_offsets():
    with pytest.raises(FormulaSyntaxError) as exc:
        parse("p -> ")
    assert exc.value.offset == 5
    assert "atom" in exc.value.expected

    with pytest.raises(FormulaSyntaxError) as exc:
        parse("p q")
    assert exc.value.offset == 2

    with pytest.raises(FormulaSyntaxError) as exc:
        parse("(p")
    assert exc.value.expected == ("')'",)

    with pytest.raises(FormulaSyntaxError) as exc:
        parse("p -> P")
    assert exc.value.offset == 5

    with pytest.raises(FormulaSyntaxError):
        parse("")


formulas = st.recursive(
    st.sampled_from(["p", "q", "r"]).map(Atom),
    lambda sub: st.one_of(
        sub.map(Neg),
        st.tuples(sub, sub).map(lambda t: Imp(*t)),
    ),
    max_leaves=25,
)


@given(formulas)
def test_render_parse_round_trip(f):
    assert parse(render(f)) is f


@given(formulas)
def test_atoms_cover_leaves(f):
    found = atoms(f)
    assert len(found) == len(set(found))

    leaves = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            leaves.add(g.name)
        elif isinstance(g, Neg):
            stack.append(g.body)
        else:
            stack.extend((g.ant, g.cons))
    assert set(found) == leaves


@given(formulas)
def test_complexity_counts_connectives(f):
    count = 0
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Neg):
            count += 1
            stack.append(g.body)
        elif isinstance(g, Imp):
            count += 1
            stack.extend((g.ant, g.cons))
    assert complexity(f) == count
