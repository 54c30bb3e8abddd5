from fractions import Fraction as F

import pytest

from oracle import cone_atom_of, proj_atom_of
from scsp.cardinal import (
    SYMBOLS,
    abstract_to_atoms,
    cone_to_relation,
    converse_atom,
    converse_atoms,
    derive_table,
    format_table,
    proj_to_relation,
    to_relation,
)
from scsp.relations import (
    EQ_ONLY,
    UNIVERSAL,
    Arc,
    Relation,
    converse,
    intersect,
    member,
    ray,
    rel_from_basic,
    rel_union,
)


def test_cone_atoms():
    assert cone_to_relation("N") == rel_from_basic(F(3, 8), True, F(5, 8), False)
    assert cone_to_relation("EQ") == EQ_ONLY
    with pytest.raises(ValueError):
        cone_to_relation("NNE")


def test_proj_atoms():
    assert proj_to_relation("N") == ray(F(1, 2))
    assert proj_to_relation("NE") == Relation.from_arcs([Arc(F(0), F(1, 2), False, False)])


@pytest.mark.parametrize("calculus", ["cone", "proj"])
def test_partition(calculus):
    rels = [to_relation(s, calculus) for s in SYMBOLS]
    total = rels[0]
    for r in rels[1:]:
        total = rel_union(total, r)
    assert total == UNIVERSAL
    for a in range(9):
        for b in range(a + 1, 9):
            assert intersect(rels[a], rels[b]).is_empty


@pytest.mark.parametrize("calculus,oracle", [("cone", cone_atom_of), ("proj", proj_atom_of)])
def test_atoms_match_degree_oracle(calculus, oracle, nprng):
    pts = nprng.integers(-6, 7, size=(3000, 2)).astype(float)
    for dx, dy in pts:
        want = oracle(dx, dy)
        assert member((dx, dy), (0.0, 0.0), to_relation(want, calculus))


def test_abstract_examples():
    ne = Relation.from_arcs([Arc(F(0), F(1, 2), False, False)])
    assert abstract_to_atoms(ne, "proj") == (frozenset({"NE"}), True)
    assert abstract_to_atoms(rel_from_basic(F(3, 8), True, F(5, 8), False), "cone") == (frozenset({"N"}), True)
    assert abstract_to_atoms(UNIVERSAL, "cone") == (frozenset(SYMBOLS), True)
    atoms, exact = abstract_to_atoms(rel_from_basic(F(0), True, F(1, 12), True), "proj")
    assert atoms == {"E", "NE", "EQ"} and not exact


@pytest.mark.parametrize("calculus", ["cone", "proj"])
def test_converse_is_opposite(calculus):
    for s in SYMBOLS:
        atoms, exact = abstract_to_atoms(converse(to_relation(s, calculus)), calculus)
        assert atoms == {converse_atom(s)} and exact


@pytest.mark.parametrize("calculus", ["cone", "proj"])
def test_table_identities_and_symmetry(calculus):
    t = derive_table(calculus)
    for s in SYMBOLS:
        assert t["EQ", s] == {s} and t[s, "EQ"] == {s}
    for a in SYMBOLS:
        for b in SYMBOLS:
            assert t[a, b] == converse_atoms(t[converse_atom(b), converse_atom(a)])


def test_spot_entries():
    assert derive_table("cone")["N", "N"] == {"N"}
    assert derive_table("proj")["N", "N"] == {"N"}
    assert derive_table("proj")["N", "S"] == {"N", "S", "EQ"}


def test_format_is_deterministic():
    a, b = format_table(derive_table("proj")), format_table(derive_table("proj"))
    assert a == b
    assert a.splitlines()[0].split() == ["o", *SYMBOLS]
