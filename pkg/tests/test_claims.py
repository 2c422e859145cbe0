import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from topoideal.claims import (
    ALL_ATOMS,
    And,
    Atom,
    Implies,
    Not,
    Or,
    ParseError,
    UnknownAtom,
    atoms_for_scope,
    atoms_of,
    evaluate,
    parse_claim,
    print_claim,
)


def test_parse_and_not():
    ast = parse_claim("preopen & !pre_i_open")
    assert ast == And(Atom("preopen"), Not(Atom("pre_i_open")))


def test_parse_implies():
    assert parse_claim("i_open => pre_i_open") == Implies(Atom("i_open"), Atom("pre_i_open"))


def test_parse_error_at_end():
    with pytest.raises(ParseError) as err:
        parse_claim("preopen &")
    assert err.value.position == len("preopen &")


def test_implies_right_associative():
    ast = parse_claim("open => closed => dense")
    assert ast == Implies(Atom("open"), Implies(Atom("closed"), Atom("dense")))


def test_precedence_not_and_or_implies():
    assert parse_claim("!open & closed") == And(Not(Atom("open")), Atom("closed"))
    assert parse_claim("open | closed & dense") == Or(
        Atom("open"), And(Atom("closed"), Atom("dense")))
    assert parse_claim("open & closed => dense | preopen") == Implies(
        And(Atom("open"), Atom("closed")), Or(Atom("dense"), Atom("preopen")))


def test_parentheses_override():
    assert parse_claim("open & (closed | dense)") == And(
        Atom("open"), Or(Atom("closed"), Atom("dense")))
    assert parse_claim("(open => closed) => dense") == Implies(
        Implies(Atom("open"), Atom("closed")), Atom("dense"))


def test_whitespace_insensitive():
    assert parse_claim("open&!closed") == parse_claim("  open  &  !  closed ")


def test_unknown_atom():
    with pytest.raises(UnknownAtom) as err:
        parse_claim("open & frobnicate")
    assert err.value.name == "frobnicate"


def test_parse_error_position_of_bad_character():
    with pytest.raises(ParseError) as err:
        parse_claim("open @ closed")
    assert err.value.position == 5


def test_trailing_tokens_rejected():
    with pytest.raises(ParseError):
        parse_claim("open closed")
    with pytest.raises(ParseError):
        parse_claim("open )")


def test_evaluate():
    ast = parse_claim("open & !closed => dense")
    assert evaluate(ast, {"open": True, "closed": False, "dense": True})
    assert not evaluate(ast, {"open": True, "closed": False, "dense": False})
    assert evaluate(ast, {"open": False, "closed": False, "dense": False})
    assert atoms_of(ast) == {"open", "closed", "dense"}


def test_scope_vocabularies():
    sets = atoms_for_scope("sets")
    maps_ = atoms_for_scope("maps")
    assert "pre_i_open" in sets and "hayashi_samuels" in sets
    assert "pre_i_continuous" in maps_ and "hayashi_samuels" in maps_
    assert "pre_i_continuous" not in sets
    assert "i_open_map" not in maps_  # image-side classes need a codomain ideal


_atoms = st.sampled_from(sorted(ALL_ATOMS)).map(Atom)
_asts = st.recursive(
    _atoms,
    lambda kids: st.one_of(
        kids.map(Not),
        st.tuples(kids, kids).map(lambda p: And(*p)),
        st.tuples(kids, kids).map(lambda p: Or(*p)),
        st.tuples(kids, kids).map(lambda p: Implies(*p)),
    ),
    max_leaves=25,
)


@settings(max_examples=250, deadline=None)
@given(_asts)
def test_print_parse_round_trip(ast):
    assert parse_claim(print_claim(ast)) == ast


@settings(max_examples=100, deadline=None)
@given(_asts)
def test_print_is_stable_fixed_point(ast):
    text = print_claim(ast)
    assert print_claim(parse_claim(text)) == text
