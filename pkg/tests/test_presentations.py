"""Tests for presentation storage, abelianization, Tietze moves, and I/O."""

import random

import pytest

from bbgroups import (
    ParseError,
    Presentation,
    TietzeStatus,
    abelianization,
    exponent_matrix,
    parse_presentation,
    pi1_presentation,
    presentation_from_json,
    presentation_to_json,
    serialize_presentation,
    tietze_simplify,
)
from corpus import octahedron


def P(gens, rels, **kw):
    return Presentation(gens, [[*r] for r in rels], **kw)


def L(text):
    """Letters from a compact spec like 'a b- a' (trailing - = inverse)."""
    out = []
    for tok in text.split():
        if tok.endswith("-"):
            out.append((tok[:-1], -1))
        else:
            out.append((tok, 1))
    return out


# -- construction -----------------------------------------------------------


def test_relators_must_be_nonempty_and_in_alphabet():
    with pytest.raises(ValueError, match="empty"):
        P(["a"], [L("a a-")])
    with pytest.raises(ValueError, match="not in the named alphabet"):
        P(["a"], [L("b")])
    with pytest.raises(ValueError, match="bad generator name"):
        P(["a b"], [])
    with pytest.raises(ValueError, match="bad generator name"):
        P(["a^2"], [])


def test_equality_ignores_provenance():
    p = P(["a"], [L("a a")], provenance={"construction": "x"})
    q = P(["a"], [L("a a")])
    assert p == q
    assert p.provenance != q.provenance


# -- abelianization ----------------------------------------------------------


def test_abelianization_of_unfolded_triangle_relators():
    # the group on e, f, g with relators efg and e^-1 f^-1 g^-1 abelianizes
    # to a free abelian group of rank 2
    p = P(["e", "f", "g"], [L("e f g"), L("e- f- g-")])
    result = abelianization(p)
    assert (result.rank, result.torsion) == (2, ())


def test_abelianization_torsion():
    p = P(["x"], [L("x x")])
    result = abelianization(p)
    assert (result.rank, result.torsion) == (0, (2,))


def test_abelianization_of_free_group():
    assert abelianization(P(["x", "y"], [])).rank == 2


def test_exponent_matrix():
    p = P(["a", "b"], [L("a b a b-"), L("b b")])
    assert exponent_matrix(p) == [[2, 0], [0, 2]]


# -- Tietze simplification ----------------------------------------------------


def test_tietze_eliminates_killed_generator():
    p = P(["x", "y"], [L("y")])
    simplified, status = tietze_simplify(p, 100)
    assert status is TietzeStatus.FIXPOINT
    assert simplified.generators == ("x",)
    assert simplified.relators == ()


def test_tietze_certifies_octahedron_pi1_trivial():
    pres = pi1_presentation(octahedron())
    simplified, status = tietze_simplify(pres, 10000)
    assert status is TietzeStatus.FIXPOINT
    assert simplified.is_empty()


def test_tietze_budget_exhaustion():
    pres = pi1_presentation(octahedron())
    partial, status = tietze_simplify(pres, 1)
    assert status is TietzeStatus.BUDGET_EXHAUSTED
    assert partial.generators or partial.relators


def test_tietze_budget_must_be_positive():
    with pytest.raises(ValueError, match="positive"):
        tietze_simplify(P(["x"], []), 0)


def test_tietze_handles_cyclic_reduction_and_powers():
    # x is killed by x^2 = x^3 = 1; the untouched free generator y remains
    p = P(["x", "y"], [L("y x x y-"), L("x x x")])
    simplified, status = tietze_simplify(p, 1000)
    assert status is TietzeStatus.FIXPOINT
    assert simplified.generators == ("y",)
    assert simplified.relators == ()


def test_tietze_preserves_abelianization():
    rng = random.Random(21)
    gens = ["g0", "g1", "g2", "g3", "g4", "g5"]
    for _ in range(30):
        k = rng.randint(1, 6)
        names = gens[:k]
        rels = []
        for _ in range(rng.randint(0, 5)):
            letters = [
                (rng.choice(names), rng.choice((1, -1)))
                for _ in range(rng.randint(1, 8))
            ]
            rels.append(letters)
        try:
            p = Presentation(names, rels)
        except ValueError:
            continue  # a random relator reduced to nothing
        before = abelianization(p)
        after_p, _ = tietze_simplify(p, 500)
        after = abelianization(after_p)
        assert before.torsion == after.torsion
        assert before.rank == after.rank


# -- serialization -------------------------------------------------------------


def test_serialize_parse_roundtrip():
    p = P(
        ["a", "b"],
        [L("a b a- b-"), L("a a")],
        provenance={"construction": "test", "max_exp": 2},
    )
    text = serialize_presentation(p)
    q = parse_presentation(text)
    assert q == p
    assert q.provenance == p.provenance


def test_serialize_empty_presentation():
    p = P([], [])
    assert parse_presentation(serialize_presentation(p)) == p


def test_roundtrip_for_every_corpus_presentation():
    from bbgroups import BBContext, directed_cycle_presentation, finite_presentation
    from corpus import connected_corpus

    for name, complex in connected_corpus():
        ctx = BBContext(complex)
        for pres in (
            pi1_presentation(complex),
            finite_presentation(ctx),
            directed_cycle_presentation(ctx, 3, 1),
        ):
            parsed = parse_presentation(serialize_presentation(pres))
            assert parsed == pres, name
            assert parsed.provenance == pres.provenance, name
            mirrored = presentation_from_json(presentation_to_json(pres))
            assert mirrored == pres, name
            assert mirrored.provenance == pres.provenance, name


def test_parse_presentation_basic():
    p = parse_presentation("gens: a b\nrel: a b a^-1 b^-1\n# comment\n")
    assert p.generators == ("a", "b")
    assert len(p.relators) == 1
    assert len(p.relators[0]) == 4


def test_parse_presentation_errors():
    with pytest.raises(ParseError, match="empty"):
        parse_presentation("gens: a\nrel: a a^-1\n")
    with pytest.raises(ParseError, match="empty"):
        parse_presentation("gens: a\nrel:\n")
    with pytest.raises(ParseError, match="unknown generator"):
        parse_presentation("gens: a\nrel: b\n")
    with pytest.raises(ParseError, match="line 2"):
        parse_presentation("gens: a\nrel: b\n")
    with pytest.raises(ParseError, match="duplicate generator"):
        parse_presentation("gens: a a\n")
    with pytest.raises(ParseError, match="unrecognized line"):
        parse_presentation("generators: a\n")
    with pytest.raises(ParseError, match="provenance"):
        parse_presentation("# provenance: {nope}\ngens: a\n")


def test_json_mirror_roundtrip():
    p = P(["a", "b"], [L("a b- a")], provenance={"construction": "t"})
    data = presentation_to_json(p)
    assert data["gens"] == ["a", "b"]
    assert data["rel"] == ["a b^-1 a"]
    q = presentation_from_json(data)
    assert q == p and q.provenance == p.provenance


def test_json_mirror_errors():
    with pytest.raises(ParseError, match="unknown key"):
        presentation_from_json({"gens": [], "rel": [], "extra": 1})
    with pytest.raises(ParseError):
        presentation_from_json("{bad json")
    with pytest.raises(ParseError, match="'rel'"):
        presentation_from_json({"gens": ["a"], "rel": [1]})
