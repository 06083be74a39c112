"""Light ladders, neutral shuffles, double ladders, and the three
structural theorems: triangularity, basis, cellularity."""

import itertools
import random

import pytest

from c2webs import _golden, reps, webs
from c2webs.ladders import (
    DoubleLadder,
    LadderContext,
    NotADominantSubsequence,
    basis_check,
    cellularity_sweep,
    double_ladders,
    elementary_step,
    express_in_basis,
    light_ladder,
    neutral_swap,
    random_hom,
    triangularity_check,
    upside_down_check,
    x_word,
)
from c2webs.ring import PrimeField, Rationals, RingElem, SymbolicQq
from c2webs.weights import enumerate_E, hom_dim, word_weight

ONE = RingElem.one()


def words_up_to(n, include_empty=False):
    out = [""] if include_empty else []
    for k in range(1, n + 1):
        out.extend("".join(t) for t in itertools.product("12", repeat=k))
    return out


def apply_to_seq(diagram, word, seq):
    """Feed one tensor basis vector through a diagram; pretty output."""
    idx = reps.seq_to_index(word, seq)
    out = webs.apply_diagram(diagram, {idx: ONE})
    return {
        reps.index_to_seq(diagram.target, i): c for i, c in out.items()
    }


# ---------------------------------------------------------------------------
# elementary pieces

def test_x_word():
    assert x_word((0, 0)) == ""
    assert x_word((2, 1)) == "112"
    assert x_word((0, 3)) == "222"


def test_golden_tables_reproduce_exactly():
    assert _golden.check_all() == []


def test_golden_pins_the_divided_coefficients():
    # the -q/[2] coefficient produced by the bigon factor inside L_(-1,1)
    d = elementary_step((1, 0), (-1, 1))
    out = apply_to_seq(d, "11", ((1, 0), (-1, 0)))
    assert out[((0, 0),)] == RingElem.monomial(-1, 1).div_by_two()
    # and the q^-2/[2] coefficient in the flipped L_(-2,1)
    dd = elementary_step((2, 0), (-2, 1)).flip()
    back = apply_to_seq(dd, "2", ((0, 1),))
    assert back[((1, 0), (-1, 1), (0, 0))] == \
        RingElem.monomial(1, -2).div_by_two()


def test_elementary_step_boundaries():
    for lam, mu, src, tgt in [
        ((1, 0), (1, 0), "11", "11"),
        ((1, 0), (-1, 1), "11", "2"),
        ((0, 1), (1, -1), "21", "1"),
        ((0, 1), (2, -1), "22", "11"),
        ((2, 0), (-2, 1), "112", "2"),
        ((0, 1), (0, -1), "22", ""),
    ]:
        d = elementary_step(lam, mu)
        assert d.source == src
        assert d.target == tgt


def test_elementary_step_rejects_bad_drops():
    with pytest.raises(NotADominantSubsequence):
        elementary_step((0, 0), (-1, 0))
    with pytest.raises(NotADominantSubsequence):
        elementary_step((0, 0), (0, -1))


def test_neutral_swaps_are_mutually_inverse_up_to_units():
    # the braiding-free exchange maps: q N + q^-1 I one way and
    # q^-1 N + q I back compose to the identity both ways around
    n12 = webs.WebExpr.from_diagram(neutral_swap("12->21"))
    n21 = webs.WebExpr.from_diagram(neutral_swap("21->12"))
    ctx = LadderContext()
    i12 = ctx.light_ladder("12", ((1, 0), (0, 0))).then(
        ctx.light_ladder("21", ((0, 1), (1, -1))).flip()
    )
    i21 = ctx.light_ladder("21", ((0, 1), (1, -1))).then(
        ctx.light_ladder("12", ((1, 0), (0, 0))).flip()
    )
    q = RingElem.monomial(1, 1)
    qi = RingElem.monomial(1, -1)
    b12 = n12.scale(q) + webs.WebExpr.from_diagram(i12).scale(qi)
    b21 = n21.scale(qi) + webs.WebExpr.from_diagram(i21).scale(q)
    m12 = webs.eval_expr(b12)
    m21 = webs.eval_expr(b21)
    assert m12.then(m21) == reps.LinMap.identity("12")
    assert m21.then(m12) == reps.LinMap.identity("21")


# ---------------------------------------------------------------------------
# light ladders

def test_light_ladder_boundaries():
    for word in words_up_to(3):
        for seq in enumerate_E(word):
            d = light_ladder(word, seq)
            assert d.source == word
            assert d.target == x_word(word_weight(word, seq))


def test_light_ladder_frozen_value():
    d = light_ladder("21", ((0, 1), (1, -1)))
    out = apply_to_seq(d, "21", ((0, 1), (1, -1)))
    assert out == {((1, 0),): -ONE}


def test_light_ladder_rejects_invalid_sequences():
    with pytest.raises(NotADominantSubsequence):
        light_ladder("11", ((1, 0), (0, 1)))
    with pytest.raises(NotADominantSubsequence):
        light_ladder("11", ((1, 0),))


def test_triangularity_diagonal_values_on_11():
    # the three diagonal coefficients, exact: +1, -1, +1
    expected = {
        ((1, 0), (1, 0)): ONE,
        ((1, 0), (-1, 1)): -ONE,
        ((1, 0), (-1, 0)): ONE,
    }
    for f_seq, want in expected.items():
        d = light_ladder("11", f_seq)
        lam = word_weight("11", f_seq)
        out = apply_to_seq(d, "11", f_seq)
        top = reps.index_to_seq(x_word(lam), reps.top_index(x_word(lam)))
        assert out.get(top, RingElem.zero()) == want


@pytest.mark.parametrize("word", words_up_to(4))
def test_triangularity(word):
    rep = triangularity_check(word)
    assert rep["verdict"], rep["witnesses"][:3]


@pytest.mark.parametrize("word", ["112", "212", "122"])
def test_triangularity_full_agrees_with_graded_shortcut(word):
    fast = triangularity_check(word)
    full = triangularity_check(word, full=True)
    assert fast["verdict"] and full["verdict"]
    assert full["entries"] > fast["entries"]


@pytest.mark.parametrize("word", words_up_to(4))
def test_upside_down_expansion(word):
    rep = upside_down_check(word)
    assert rep["verdict"], rep["witnesses"][:3]


# ---------------------------------------------------------------------------
# double ladders

def test_double_ladder_counts_match_hom_dim():
    for w in words_up_to(3, include_empty=True):
        for u in words_up_to(3, include_empty=True):
            dls = double_ladders(w, u)
            assert len(dls) == hom_dim(w, u)


def test_double_ladder_shapes():
    dls = double_ladders("12", "21")
    assert len(dls) == 2
    for dl in dls:
        assert isinstance(dl, DoubleLadder)
        assert dl.bottom_word == "12" and dl.top_word == "21"
        assert dl.diagram.source == "12" and dl.diagram.target == "21"
        assert word_weight("12", dl.bottom_seq) == dl.lam
        assert word_weight("21", dl.top_seq) == dl.lam
        assert set(dl.label()) == {"lam", "bottom", "top"}


def test_double_ladders_flip_to_the_transposed_family():
    for w, u in [("12", "21"), ("11", "2"), ("112", "12")]:
        fwd = {dl.diagram.flip() for dl in double_ladders(w, u)}
        bwd = {dl.diagram for dl in double_ladders(u, w)}
        assert fwd == bwd


# ---------------------------------------------------------------------------
# the basis theorem at desk scale

FIELDS = [SymbolicQq(), Rationals(1), PrimeField(7, 2), PrimeField(5, 4)]


@pytest.mark.parametrize("field", FIELDS, ids=lambda f: f.describe())
@pytest.mark.parametrize("pair", [
    ("", ""), ("11", "11"), ("12", "21"), ("2", "11"), ("22", "22"),
])
def test_basis_check_small_pairs(field, pair):
    w, u = pair
    rep = basis_check(w, u, field=field)
    assert rep["verdict"], rep
    assert rep["rank"] == rep["count"] == hom_dim(w, u)


def test_express_in_basis_round_trip():
    field = PrimeField(7, 2)
    ctx = LadderContext()
    rng = random.Random(7)
    f, picks = random_hom("12", "12", rng, ctx=ctx)
    expansion = express_in_basis(f, field=field, ctx=ctx)
    dls = double_ladders("12", "12", ctx)
    got = {
        next(i for i, d in enumerate(dls) if d.diagram == dl.diagram): c
        for dl, c in expansion
    }
    expected = {
        i: field.specialize(c) for i, c in picks.items()
        if not field.is_zero(field.specialize(c))
    }
    assert got == expected


# ---------------------------------------------------------------------------
# cellularity

@pytest.mark.parametrize("word", ["1", "2", "11", "12", "21", "22"])
def test_cellularity_small_words(word):
    rep = cellularity_sweep(word, word, field=Rationals(1), seed=11, trials=2)
    assert rep["verdict"], rep["witnesses"][:3]
    assert rep["checks"] > 0


def test_cellularity_across_different_boundaries():
    rep = cellularity_sweep("112", "121", field=PrimeField(7, 2), seed=3,
                            trials=1)
    assert rep["verdict"], rep["witnesses"][:3]
