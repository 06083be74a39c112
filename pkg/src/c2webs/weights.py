"""Weight combinatorics for the rank-two symplectic root system.

Weights are (a, b) pairs in fundamental-weight coordinates.  The two simple
roots are (2, -1) and (-2, 2).  Words over the alphabet "1", "2" index tensor
products of the two fundamental modules (dims 4 and 5); a weight sequence
assigns to each letter a weight of that letter's module.

The central combinatorial objects are the dominant-weight subsequences E(w):
sequences whose partial sums stay dominant, with each step a summand of the
one-step decomposition (plethysm) of V(partial) (x) V(letter).
"""

from __future__ import annotations

from functools import lru_cache

ALPHA_S = (2, -1)
ALPHA_T = (-2, 2)

# chain order of each fundamental module, lowest weight first; the position in
# this tuple is the basis index used everywhere else
LETTER_WEIGHTS = {
    "1": ((-1, 0), (1, -1), (-1, 1), (1, 0)),
    "2": ((0, -1), (-2, 1), (0, 0), (2, -1), (0, 1)),
}
LETTER_RANK = {
    letter: {w: i for i, w in enumerate(ws)} for letter, ws in LETTER_WEIGHTS.items()
}
LETTER_DIM = {"1": 4, "2": 5}


class WeightNotInModule(ValueError):
    """A weight was used with a fundamental module it does not occur in."""


class MismatchedWords(ValueError):
    """Two weight sequences over different words were compared."""


class NotDominant(ValueError):
    """A dominant weight was required."""


def is_dominant(lam):
    return lam[0] >= 0 and lam[1] >= 0


def check_word(word):
    if any(c not in ("1", "2") for c in word):
        raise ValueError(f"bad word {word!r}; letters must be '1' or '2'")
    return word


def dominance_leq(lam, mu):
    """True iff mu - lam is a nonnegative integer sum of the simple roots."""
    x = mu[0] - lam[0]
    y = mu[1] - lam[1]
    # mu - lam = m*(2,-1) + n*(-2,2)  =>  m = x + y, 2n = x + 2y
    m = x + y
    two_n = x + 2 * y
    return m >= 0 and two_n >= 0 and two_n % 2 == 0


def dominance_less(lam, mu):
    return lam != mu and dominance_leq(lam, mu)


def letter_weight_order(letter, mu, nu):
    """Compare two weights of one fundamental module; -1, 0 or 1.

    The order is the chain order: for the 4-dim module
    (-1,0) < (1,-1) < (-1,1) < (1,0), for the 5-dim module
    (0,-1) < (-2,1) < (0,0) < (2,-1) < (0,1).
    """
    ranks = LETTER_RANK[letter]
    for w in (mu, nu):
        if w not in ranks:
            raise WeightNotInModule(f"{w} is not a weight of module {letter}")
    a, b = ranks[mu], ranks[nu]
    return (a > b) - (a < b)


def seq_rank_key(word, seq):
    """Per-position chain ranks; lex order on sequences equals tuple order."""
    if len(seq) != len(word):
        raise MismatchedWords(f"sequence length {len(seq)} vs word {word!r}")
    out = []
    for letter, w in zip(word, seq):
        ranks = LETTER_RANK[letter]
        if w not in ranks:
            raise WeightNotInModule(f"{w} is not a weight of module {letter}")
        out.append(ranks[w])
    return tuple(out)


def lex_compare(word, xs, ys):
    a = seq_rank_key(word, xs)
    b = seq_rank_key(word, ys)
    return (a > b) - (a < b)


def dlex_compare(word, xs, ys):
    """Lex order on the reversed sequences (the flipped-diagram order)."""
    a = seq_rank_key(word, xs)[::-1]
    b = seq_rank_key(word, ys)[::-1]
    return (a > b) - (a < b)


def tensor_summands(lam, letter):
    """Weights nu of module `letter` with V(lam + nu) a summand of
    V(lam) (x) V(letter), listed in descending chain order.

    Every returned lam + nu is dominant, each summand has multiplicity one.
    """
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    a, b = lam
    if letter == "1":
        if a == 0 and b == 0:
            out = ((1, 0),)
        elif b == 0:
            out = ((1, 0), (-1, 1), (-1, 0))
        elif a == 0:
            out = ((1, 0), (1, -1))
        else:
            out = ((1, 0), (-1, 1), (1, -1), (-1, 0))
    elif letter == "2":
        if a == 0 and b == 0:
            out = ((0, 1),)
        elif a == 0:
            out = ((0, 1), (2, -1), (0, -1))
        elif a == 1 and b == 0:
            out = ((0, 1), (0, 0))
        elif a == 1:
            out = ((0, 1), (2, -1), (0, 0), (0, -1))
        elif b == 0:
            out = ((0, 1), (0, 0), (-2, 1))
        else:
            out = ((0, 1), (2, -1), (0, 0), (-2, 1), (0, -1))
    else:
        raise ValueError(f"bad letter {letter!r}")
    assert len(set(out)) == len(out)
    assert all(is_dominant((a + n[0], b + n[1])) for n in out)
    return out


def word_weight(word, seq=None):
    """Total weight of a sequence (default: the all-highest sequence)."""
    a = b = 0
    if seq is None:
        for c in check_word(word):
            if c == "1":
                a += 1
            else:
                b += 1
    else:
        for da, db in seq:
            a += da
            b += db
    return (a, b)


@lru_cache(maxsize=None)
def enumerate_E(word):
    """All dominant-weight subsequences of `word`, descending lex.

    The first entry is always the all-highest-weight sequence.
    """
    check_word(word)
    out = []

    def go(i, lam, acc):
        if i == len(word):
            out.append(tuple(acc))
            return
        for nu in tensor_summands(lam, word[i]):
            acc.append(nu)
            go(i + 1, (lam[0] + nu[0], lam[1] + nu[1]), acc)
            acc.pop()

    go(0, (0, 0), [])
    return tuple(out)


def enumerate_E_lambda(word, lam):
    """The members of E(word) with total weight lam, descending lex."""
    return tuple(s for s in enumerate_E(word) if word_weight(word, s) == lam)


@lru_cache(maxsize=None)
def weight_multiplicities(word):
    """Map lam -> #E(word, lam); the multiplicity of V(lam) in V(word)."""
    mult = {}
    for s in enumerate_E(word):
        lam = word_weight(word, s)
        mult[lam] = mult.get(lam, 0) + 1
    return mult


def hom_dim(w, u):
    """dim Hom(V(w), V(u)) = sum over lam of #E(w,lam) * #E(u,lam)."""
    mw = weight_multiplicities(w)
    mu = weight_multiplicities(u)
    if len(mu) < len(mw):
        mw, mu = mu, mw
    return sum(n * mu.get(lam, 0) for lam, n in mw.items())


def subsequence_space_size(word):
    """#S(word) = 4^(number of 1s) * 5^(number of 2s)."""
    n1 = word.count("1")
    return 4**n1 * 5 ** (len(word) - n1)


def enumerate_S(word):
    """All weight sequences for `word` (the full tensor basis), desc lex."""
    check_word(word)
    out = [()]
    for letter in word:
        ws = LETTER_WEIGHTS[letter][::-1]
        out = [s + (w,) for s in out for w in ws]
    return out


def dominance_sort_key(lam):
    """A total order refining dominance: lam < mu implies key(lam) < key(mu)."""
    a, b = lam
    return (a + b, a + 2 * b, a, b)


# --- serialisation helpers -------------------------------------------------


def weight_to_str(lam):
    return f"{lam[0]},{lam[1]}"


def weight_from_str(text):
    a, _, b = text.partition(",")
    return (int(a), int(b))


def seq_to_jsonable(seq):
    return [list(w) for w in seq]


def seq_from_jsonable(data):
    return tuple((int(a), int(b)) for a, b in data)
