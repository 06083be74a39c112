"""Weight combinatorics: letter orders, tensor summands, dominant
subsequences, and hom dimensions, checked against independent oracles."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from c2webs import reps
from c2webs.linalg import GaussianSolver
from c2webs.ring import PrimeField
from c2webs.weights import (
    MismatchedWords,
    WeightNotInModule,
    check_word,
    dlex_compare,
    dominance_leq,
    dominance_less,
    enumerate_E,
    enumerate_E_lambda,
    enumerate_S,
    hom_dim,
    is_dominant,
    letter_weight_order,
    lex_compare,
    seq_rank_key,
    subsequence_space_size,
    tensor_summands,
    weight_from_str,
    weight_multiplicities,
    weight_to_str,
    word_weight,
)

SMALL = settings(max_examples=60, deadline=None)

LETTER1_CHAIN = ((-1, 0), (1, -1), (-1, 1), (1, 0))
LETTER2_CHAIN = ((0, -1), (-2, 1), (0, 0), (2, -1), (0, 1))


def words_up_to(n, include_empty=False):
    out = [""] if include_empty else []
    for k in range(1, n + 1):
        out.extend("".join(t) for t in itertools.product("12", repeat=k))
    return out


def weyl_dim(lam):
    """Dimension of the irreducible/Weyl module with highest weight lam."""
    a, b = lam
    return (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) // 6


# ---------------------------------------------------------------------------
# the two letter chains

def test_weyl_dim_on_fundamentals():
    assert weyl_dim((1, 0)) == 4
    assert weyl_dim((0, 1)) == 5
    assert weyl_dim((0, 0)) == 1


def test_letter_chains_are_total_orders():
    for letter, chain in (("1", LETTER1_CHAIN), ("2", LETTER2_CHAIN)):
        for i, mu in enumerate(chain):
            for j, nu in enumerate(chain):
                expect = (i > j) - (i < j)
                assert letter_weight_order(letter, mu, nu) == expect


def test_seq_rank_key_matches_chain_position():
    assert seq_rank_key("1", ((-1, 0),)) == (0,)
    assert seq_rank_key("1", ((1, 0),)) == (3,)
    assert seq_rank_key("2", ((0, 0),)) == (2,)
    assert seq_rank_key("12", ((1, -1), (2, -1))) == (1, 3)


def test_seq_rank_key_rejects_foreign_weights():
    with pytest.raises(WeightNotInModule):
        seq_rank_key("1", ((0, 1),))
    with pytest.raises(MismatchedWords):
        seq_rank_key("12", ((1, 0),))


def test_check_word_rejects_other_letters():
    check_word("1212")
    with pytest.raises(ValueError):
        check_word("13")


# ---------------------------------------------------------------------------
# tensor summands against the Weyl dimension bookkeeping

DOMINANTS = [(a, b) for a in range(6) for b in range(6)]


@pytest.mark.parametrize("letter", ["1", "2"])
@pytest.mark.parametrize("lam", DOMINANTS)
def test_tensor_summands_dimension_count(letter, lam):
    # a filtration of V(lam) (x) V(fundamental) by the modules V(lam + mu)
    # forces the dimensions to add up
    summands = tensor_summands(lam, letter)
    assert len(set(summands)) == len(summands)
    total = 0
    for mu in summands:
        nu = (lam[0] + mu[0], lam[1] + mu[1])
        assert is_dominant(nu)
        total += weyl_dim(nu)
    assert total == weyl_dim(lam) * weyl_dim((1, 0) if letter == "1" else (0, 1))


def test_tensor_summands_generic_cases():
    # far from the walls every chain weight survives
    assert tensor_summands((3, 3), "1") == LETTER1_CHAIN[::-1]
    assert tensor_summands((3, 3), "2") == LETTER2_CHAIN[::-1]
    # at the origin only the fundamental itself appears
    assert tensor_summands((0, 0), "1") == ((1, 0),)
    assert tensor_summands((0, 0), "2") == ((0, 1),)


# ---------------------------------------------------------------------------
# dominant subsequences

def test_enumerate_E_frozen_for_11():
    assert enumerate_E("11") == (
        ((1, 0), (1, 0)),
        ((1, 0), (-1, 1)),
        ((1, 0), (-1, 0)),
    )


@pytest.mark.parametrize("word", words_up_to(4))
def test_enumerate_E_structure(word):
    seqs = enumerate_E(word)
    # leading sequence is the all-highest one
    highest = tuple((1, 0) if c == "1" else (0, 1) for c in word)
    assert seqs[0] == highest
    # strictly descending in the positional order
    for a, b in zip(seqs, seqs[1:]):
        assert lex_compare(word, a, b) > 0
    # every step obeys the summand recursion
    for seq in seqs:
        lam = (0, 0)
        for letter, mu in zip(word, seq):
            assert mu in tensor_summands(lam, letter)
            lam = (lam[0] + mu[0], lam[1] + mu[1])
        assert lam == word_weight(word, seq)
        assert is_dominant(lam)
    # multiplicity bookkeeping agrees
    assert sum(weight_multiplicities(word).values()) == len(seqs)


def test_enumerate_E_lambda_ordering_example():
    # on the word 2121 at (2,0), these three sequences are strictly ordered
    seqs = enumerate_E_lambda("2121", (2, 0))
    first = ((0, 1), (1, 0), (2, -1), (-1, 0))
    second = ((0, 1), (1, 0), (0, -1), (1, 0))
    third = ((0, 1), (1, -1), (0, 0), (1, 0))
    assert seqs.index(first) < seqs.index(second) < seqs.index(third)
    assert lex_compare("2121", first, second) > 0
    assert lex_compare("2121", second, third) > 0


def test_lex_and_dlex_differ_somewhere():
    found = False
    for word in words_up_to(4):
        for a, b in itertools.combinations(enumerate_E(word), 2):
            if (lex_compare(word, a, b) > 0) != (dlex_compare(word, a, b) > 0):
                found = True
    assert found


def test_subsequence_space_size():
    for word in words_up_to(3, include_empty=True):
        a, b = word.count("1"), word.count("2")
        assert subsequence_space_size(word) == 4 ** a * 5 ** b
        assert len(tuple(enumerate_S(word))) == 4 ** a * 5 ** b


# ---------------------------------------------------------------------------
# hom dimensions

def test_hom_dim_examples():
    assert hom_dim("11", "11") == 3
    assert hom_dim("12", "21") == 2
    assert hom_dim("", "") == 1
    assert hom_dim("1", "2") == 0
    assert hom_dim("11", "2") == 1


def _commutant_dim(w, u, field):
    """Dimension of the space of matrices commuting with the six generator
    actions, by plain linear algebra over the field."""
    sdim, tdim = reps.dim_of_word(w), reps.dim_of_word(u)
    gens = ("Es", "Et", "Fs", "Ft", "Ks", "Kt")
    acts_w = {g: reps.act_map(g, w).specialize(field) for g in gens}
    acts_u = {g: reps.act_map(g, u).specialize(field) for g in gens}
    solver = GaussianSolver(field)
    ncols = 0
    for a in range(tdim):
        for b in range(sdim):
            # the unknown matrix entry f[a, b]; one sparse column of the
            # constraint system  f . act_w - act_u . f = 0
            col = {}
            for gi, g in enumerate(gens):
                base = gi * tdim * sdim
                for j, colj in acts_w[g].items():
                    c = colj.get(b)
                    if c is not None:
                        key = base + a * sdim + j
                        col[key] = field.add(col.get(key, field.zero), c)
                for i, c in acts_u[g].get(a, {}).items():
                    key = base + i * sdim + b
                    col[key] = field.sub(col.get(key, field.zero), c)
            ncols += 1
            solver.add_basis({k: v for k, v in col.items()
                              if not field.is_zero(v)})
    return ncols - solver.rank


@pytest.mark.parametrize("pair", [
    ("", ""), ("1", "1"), ("2", "2"), ("1", "2"),
    ("11", "2"), ("2", "11"), ("11", "11"), ("12", "21"), ("12", "12"),
])
def test_hom_dim_matches_commutant(pair):
    w, u = pair
    field = PrimeField(7, 2)
    assert hom_dim(w, u) == _commutant_dim(w, u, field)


def test_hom_dim_symmetry():
    for w in words_up_to(3):
        for u in words_up_to(3):
            assert hom_dim(w, u) == hom_dim(u, w)


# ---------------------------------------------------------------------------
# order and serialization helpers

small_weights = st.tuples(st.integers(0, 6), st.integers(0, 6))


@SMALL
@given(small_weights, small_weights, small_weights)
def test_dominance_is_a_partial_order(a, b, c):
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    if dominance_leq(a, b) and dominance_leq(b, c):
        assert dominance_leq(a, c)
    assert dominance_less(a, b) == (dominance_leq(a, b) and a != b)


def test_dominance_examples():
    # (a,b) -> root lattice coordinates: both partial sums must not decrease
    assert dominance_less((0, 0), (2, 0))
    assert dominance_less((0, 0), (0, 1))
    assert dominance_less((0, 1), (2, 0))
    assert not dominance_leq((2, 0), (0, 1))
    assert not dominance_leq((1, 0), (0, 1))


@SMALL
@given(small_weights)
def test_weight_str_round_trip(lam):
    assert weight_from_str(weight_to_str(lam)) == lam
