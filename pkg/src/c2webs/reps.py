"""The two fundamental modules and their tensor calculus.

Basis vectors of a tensor module V(w) are indexed by weight sequences; the
integer index is mixed-radix with the leftmost tensor factor most significant,
so index order equals lex order on weight sequences.

The eight displayed quantum-group generators act through the iterated
coproduct  E -> sum_i K x .. x K x E_i x 1 x .. x 1  and
F -> sum_i 1 x .. x 1 x F_i x K^-1 x .. x K^-1, with K grouplike.  Entries are
exact elements of A.  Divided powers are not represented; all certification
goes through these eight generators.

Also here: the invariant pairing maps (caps), their flips (cups), the two
trivalent vertex maps, and the antipode-twisted dual modules with the
chain-aligned self-duality isomorphisms.
"""

from __future__ import annotations

from .ring import LaurentPoly, RingElem, TWO, ring_from_str, unit_inverse
from .weights import LETTER_DIM, LETTER_WEIGHTS, check_word, seq_from_jsonable

ONE = RingElem.one()
TWO_E = RingElem.from_poly(TWO)


def _mono(e, c=1):
    """The element c*q^e of A."""
    return RingElem(LaurentPoly.qpow(e, c))


GENERATORS = ("Es", "Fs", "Et", "Ft", "Ks", "KsInv", "Kt", "KtInv")

# raising/lowering action on the fundamental chains; {src index: (dst, coeff)}
_LETTER_EF = {
    "1": {
        "Es": {0: (1, ONE), 2: (3, ONE)},
        "Fs": {1: (0, ONE), 3: (2, ONE)},
        "Et": {1: (2, ONE)},
        "Ft": {2: (1, ONE)},
    },
    "2": {
        "Es": {1: (2, ONE), 2: (3, TWO_E)},
        "Fs": {2: (1, TWO_E), 3: (2, ONE)},
        "Et": {0: (1, ONE), 3: (4, ONE)},
        "Ft": {1: (0, ONE), 4: (3, ONE)},
    },
}

# which K goes with which raising operator in the coproduct
_K_OF = {"Es": "Ks", "Fs": "Ks", "Et": "Kt", "Ft": "Kt"}


def _k_exponent(kgen, letter, idx):
    """Eigenvalue exponent of K_s (resp. K_t) on a chain basis vector."""
    a, b = LETTER_WEIGHTS[letter][idx]
    e = a if kgen in ("Ks", "KsInv") else 2 * b
    if kgen in ("KsInv", "KtInv"):
        e = -e
    return e


# --- tensor module indexing ------------------------------------------------


def dim_of_word(word):
    d = 1
    for c in check_word(word):
        d *= LETTER_DIM[c]
    return d


def index_to_digits(word, idx):
    digits = [0] * len(word)
    for i in range(len(word) - 1, -1, -1):
        d = LETTER_DIM[word[i]]
        digits[i] = idx % d
        idx //= d
    return digits


def digits_to_index(word, digits):
    idx = 0
    for c, g in zip(word, digits):
        idx = idx * LETTER_DIM[c] + g
    return idx


def index_to_seq(word, idx):
    return tuple(
        LETTER_WEIGHTS[c][g] for c, g in zip(word, index_to_digits(word, idx))
    )


def seq_to_index(word, seq):
    idx = 0
    for c, w in zip(word, seq):
        idx = idx * LETTER_DIM[c] + LETTER_WEIGHTS[c].index(w)
    return idx


def index_weight(word, idx):
    a = b = 0
    for c, g in zip(word, index_to_digits(word, idx)):
        wa, wb = LETTER_WEIGHTS[c][g]
        a += wa
        b += wb
    return (a, b)


def top_index(word):
    """Index of the all-highest-weight basis vector (always dim - 1)."""
    return dim_of_word(word) - 1


# --- generator action ------------------------------------------------------


def act_column(gen, word, idx):
    """Column of the generator action on V(word) at basis index `idx`."""
    digits = index_to_digits(word, idx)
    if gen in ("Ks", "KsInv", "Kt", "KtInv"):
        e = sum(_k_exponent(gen, c, g) for c, g in zip(word, digits))
        return {idx: _mono(e)}
    kgen = _K_OF[gen]
    raising = gen in ("Es", "Et")
    out = {}
    for i, (c, g) in enumerate(zip(word, digits)):
        hit = _LETTER_EF[c][gen].get(g)
        if hit is None:
            continue
        dst, coeff = hit
        e = 0
        if raising:
            for j in range(i):
                e += _k_exponent(kgen, word[j], digits[j])
        else:
            for j in range(i + 1, len(word)):
                e -= _k_exponent(kgen, word[j], digits[j])
        new_digits = list(digits)
        new_digits[i] = dst
        tgt = digits_to_index(word, new_digits)
        val = out.get(tgt)
        term = coeff * _mono(e)
        out[tgt] = term if val is None else val + term
        if not out[tgt]:
            del out[tgt]
    return out


def act_apply(gen, word, vec):
    """Apply the generator action to a sparse vector over A."""
    out = {}
    for idx, c in vec.items():
        for tgt, a in act_column(gen, word, idx).items():
            v = out.get(tgt)
            v = c * a if v is None else v + c * a
            if v:
                out[tgt] = v
            else:
                out.pop(tgt, None)
    return out


# --- sparse linear maps ----------------------------------------------------


class LinMap:
    """A sparse A-linear map between tensor modules, stored column-wise."""

    __slots__ = ("source", "target", "cols")

    def __init__(self, source, target, cols):
        check_word(source)
        check_word(target)
        clean = {}
        for j, col in cols.items():
            c = {i: v for i, v in col.items() if v}
            if c:
                clean[j] = c
        self.source = source
        self.target = target
        self.cols = clean

    @classmethod
    def identity(cls, word):
        return cls(word, word, {j: {j: ONE} for j in range(dim_of_word(word))})

    @classmethod
    def zero(cls, source, target):
        return cls(source, target, {})

    def apply(self, vec):
        out = {}
        for j, c in vec.items():
            col = self.cols.get(j)
            if not col:
                continue
            for i, a in col.items():
                v = out.get(i)
                v = c * a if v is None else v + c * a
                if v:
                    out[i] = v
                else:
                    out.pop(i, None)
        return out

    def then(self, other):
        """The composite `other after self` (self first)."""
        if self.target != other.source:
            raise ValueError(
                f"boundary mismatch: {self.target!r} then {other.source!r}"
            )
        cols = {j: other.apply(col) for j, col in self.cols.items()}
        return LinMap(self.source, other.target, cols)

    def tensor(self, other):
        sdim2 = dim_of_word(other.source)
        tdim2 = dim_of_word(other.target)
        cols = {}
        for j1, col1 in self.cols.items():
            for j2, col2 in other.cols.items():
                col = {}
                for i1, a1 in col1.items():
                    for i2, a2 in col2.items():
                        col[i1 * tdim2 + i2] = a1 * a2
                cols[j1 * sdim2 + j2] = col
        return LinMap(
            self.source + other.source, self.target + other.target, cols
        )

    def scale(self, c):
        return LinMap(
            self.source,
            self.target,
            {j: {i: c * v for i, v in col.items()} for j, col in self.cols.items()},
        )

    def __add__(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValueError("adding maps with different boundaries")
        cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            mine = cols.setdefault(j, {})
            for i, v in col.items():
                w = mine.get(i)
                mine[i] = v if w is None else w + v
        return LinMap(self.source, self.target, cols)

    def __sub__(self, other):
        return self + other.scale(-ONE)

    def __neg__(self):
        return self.scale(-ONE)

    def entry(self, i, j):
        return self.cols.get(j, {}).get(i, RingElem.zero())

    @property
    def is_zero(self):
        return not self.cols

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.cols == other.cols
        )

    def __repr__(self):
        nnz = sum(len(c) for c in self.cols.values())
        return f"<LinMap {self.source!r}->{self.target!r} nnz={nnz}>"

    def specialize(self, field):
        """Column dict with entries in the field; zeros dropped."""
        out = {}
        for j, col in self.cols.items():
            c = {}
            for i, v in col.items():
                fv = field.specialize(v)
                if not field.is_zero(fv):
                    c[i] = fv
            if c:
                out[j] = c
        return out

    def to_jsonable(self):
        entries = []
        for j in sorted(self.cols):
            col = self.cols[j]
            cseq = index_to_seq(self.source, j)
            for i in sorted(col):
                entries.append(
                    [
                        [list(w) for w in index_to_seq(self.target, i)],
                        [list(w) for w in cseq],
                        str(col[i]),
                    ]
                )
        return {"source": self.source, "target": self.target, "entries": entries}

    @classmethod
    def from_jsonable(cls, data):
        source = data["source"]
        target = data["target"]
        cols = {}
        for row, colseq, coeff in data["entries"]:
            i = seq_to_index(target, seq_from_jsonable(row))
            j = seq_to_index(source, seq_from_jsonable(colseq))
            cols.setdefault(j, {})[i] = ring_from_str(coeff)
        return cls(source, target, cols)


def act_map(gen, word):
    return LinMap(
        word, word, {j: act_column(gen, word, j) for j in range(dim_of_word(word))}
    )


def matrix_is_graded(m):
    """True iff every entry of the LinMap connects equal total weights."""
    for j, col in m.cols.items():
        wj = index_weight(m.source, j)
        for i in col:
            if index_weight(m.target, i) != wj:
                return False
    return True


def check_intertwiner(f, report=False):
    """Does f commute with all eight generator actions?

    With report=True returns (ok, witness) where witness names the generator
    and source index of the first failure, with both sides' columns.
    """
    for gen in GENERATORS:
        for j in range(dim_of_word(f.source)):
            lhs = f.apply(act_column(gen, f.source, j))
            rhs = act_apply(gen, f.target, f.cols.get(j, {}))
            if lhs != rhs:
                if report:
                    return False, {
                        "generator": gen,
                        "source_index": j,
                        "f_after_action": {i: str(v) for i, v in lhs.items()},
                        "action_after_f": {i: str(v) for i, v in rhs.items()},
                    }
                return False
    return (True, None) if report else True


# --- the published pairing and vertex matrices -----------------------------


def _seq_cols(source, target, table):
    """Build LinMap columns from {col seq: {row seq: RingElem}}."""
    cols = {}
    for cseq, col in table.items():
        j = seq_to_index(source, cseq)
        cols[j] = {seq_to_index(target, rseq): v for rseq, v in col.items()}
    return LinMap(source, target, cols)


def cup_map(letter):
    """The coevaluation web: empty word -> letter letter."""
    letter = str(letter)
    if letter == "1":
        table = {
            (): {
                ((1, 0), (-1, 0)): _mono(-4, -1),
                ((-1, 1), (1, -1)): _mono(-3),
                ((1, -1), (-1, 1)): _mono(-1, -1),
                ((-1, 0), (1, 0)): ONE,
            }
        }
        return _seq_cols("", "11", table)
    if letter == "2":
        table = {
            (): {
                ((0, 1), (0, -1)): _mono(-6),
                ((2, -1), (-2, 1)): _mono(-4, -1),
                ((0, 0), (0, 0)): RingElem(LaurentPoly.qpow(-2), 1),
                ((-2, 1), (2, -1)): _mono(-2, -1),
                ((0, -1), (0, 1)): ONE,
            }
        }
        return _seq_cols("", "22", table)
    raise ValueError(f"bad letter {letter!r}")


def cap_map(letter):
    """The evaluation web: letter letter -> empty word."""
    letter = str(letter)
    if letter == "1":
        table = {
            ((-1, 0), (1, 0)): {(): _mono(4, -1)},
            ((1, -1), (-1, 1)): {(): _mono(3)},
            ((-1, 1), (1, -1)): {(): _mono(1, -1)},
            ((1, 0), (-1, 0)): {(): ONE},
        }
        return _seq_cols("11", "", table)
    if letter == "2":
        table = {
            ((0, -1), (0, 1)): {(): _mono(6)},
            ((-2, 1), (2, -1)): {(): _mono(4, -1)},
            ((0, 0), (0, 0)): {(): RingElem(LaurentPoly({3: 1, 1: 1}))},
            ((2, -1), (-2, 1)): {(): _mono(2, -1)},
            ((0, 1), (0, -1)): {(): ONE},
        }
        return _seq_cols("22", "", table)
    raise ValueError(f"bad letter {letter!r}")


def ivertex_map():
    """The trivalent vertex splitting a 5-dim strand into two 4-dim strands."""
    m = _mono
    table = {
        ((0, 1),): {((1, 0), (-1, 1)): m(-1), ((-1, 1), (1, 0)): -ONE},
        ((2, -1),): {((1, 0), (1, -1)): m(-1), ((1, -1), (1, 0)): -ONE},
        ((0, 0),): {
            ((1, 0), (-1, 0)): m(-1),
            ((-1, 1), (1, -1)): m(-2),
            ((1, -1), (-1, 1)): -ONE,
            ((-1, 0), (1, 0)): m(-1, -1),
        },
        ((-2, 1),): {((-1, 1), (-1, 0)): m(-1), ((-1, 0), (-1, 1)): -ONE},
        ((0, -1),): {((1, -1), (-1, 0)): m(-1), ((-1, 0), (1, -1)): -ONE},
    }
    return _seq_cols("2", "11", table)


def pvertex_map():
    """The trivalent vertex merging two 4-dim strands into a 5-dim strand."""
    m = _mono
    half = lambda e, c=1: RingElem(LaurentPoly.qpow(e, c), 1)  # c*q^e / [2]
    table = {
        ((1, 0), (-1, 1)): {((0, 1),): -ONE},
        ((1, 0), (1, -1)): {((2, -1),): -ONE},
        ((1, 0), (-1, 0)): {((0, 0),): half(1, -1)},
        ((-1, 1), (1, 0)): {((0, 1),): m(1)},
        ((-1, 1), (1, -1)): {((0, 0),): half(0, -1)},
        ((-1, 1), (-1, 0)): {((-2, 1),): -ONE},
        ((1, -1), (1, 0)): {((2, -1),): m(1)},
        ((1, -1), (-1, 1)): {((0, 0),): half(2)},
        ((1, -1), (-1, 0)): {((0, -1),): -ONE},
        ((-1, 0), (1, 0)): {((0, 0),): half(1)},
        ((-1, 0), (-1, 1)): {((-2, 1),): m(1)},
        ((-1, 0), (1, -1)): {((0, -1),): m(1)},
    }
    return _seq_cols("11", "2", table)


# --- duals and the self-duality isomorphisms -------------------------------
#
# The dual module has basis the functionals dual to the chain basis; the
# action is (x.f)(v) = f(S(x).v) with antipode S(E) = -K^-1 E, S(F) = -F K,
# S(K) = K^-1.  The functional dual to basis vector i has weight minus that
# of vector i; position n-1-i carries the same weight as position i.


def dual_act_column(letter, gen, j):
    """Column j of the generator action on the dual of a fundamental module."""
    n = LETTER_DIM[letter]
    if gen in ("Ks", "KsInv", "Kt", "KtInv"):
        return {j: _mono(-_k_exponent(gen, letter, j))}
    out = {}
    for i in range(n):
        # coefficient of functional j applied to S(gen) . v_i
        hit = _LETTER_EF[letter][gen].get(i)
        if hit is None:
            continue
        dst, coeff = hit
        if gen in ("Es", "Et"):
            # S = -K^-1 E: apply E then K^-1 at the destination
            if dst == j:
                kg = _K_OF[gen]
                val = -(coeff * _mono(-_k_exponent(kg, letter, dst)))
                out[i] = val
        else:
            # S = -F K: scale by K at the source, then apply F
            if dst == j:
                kg = _K_OF[gen]
                val = -(coeff * _mono(_k_exponent(kg, letter, i)))
                out[i] = val
    return out


def self_duality_scalars(letter):
    """Chain-position scalars of the isomorphism V -> V* (exact units of A).

    Position i of the chain maps to the functional dual to position n-1-i,
    scaled by these.
    """
    letter = str(letter)
    if letter == "1":
        return (_mono(4, -1), _mono(3), _mono(1, -1), ONE)
    if letter == "2":
        return (
            _mono(6),
            _mono(4, -1),
            RingElem(LaurentPoly({3: 1, 1: 1})),  # q^2 [2]
            _mono(2, -1),
            ONE,
        )
    raise ValueError(f"bad letter {letter!r}")


def self_duality_cols(letter):
    """Columns of the iso V -> V* over the dual-functional basis."""
    n = LETTER_DIM[str(letter)]
    s = self_duality_scalars(letter)
    return {j: {n - 1 - j: s[j]} for j in range(n)}


def check_self_duality(letter, report=False):
    """Certify that the chain iso V -> V* intertwines all eight generators."""
    letter = str(letter)
    n = LETTER_DIM[letter]
    phi = self_duality_cols(letter)

    def phi_apply(vec):
        out = {}
        for i, c in vec.items():
            for k, s in phi[i].items():
                v = out.get(k)
                v = c * s if v is None else v + c * s
                if v:
                    out[k] = v
                else:
                    out.pop(k, None)
        return out

    for gen in GENERATORS:
        for j in range(n):
            if gen in ("Ks", "KsInv", "Kt", "KtInv"):
                fund_col = {j: _mono(_k_exponent(gen, letter, j))}
            else:
                hit = _LETTER_EF[letter][gen].get(j)
                fund_col = {} if hit is None else {hit[0]: hit[1]}
            lhs = phi_apply(fund_col)
            rhs = {}
            for k, s in phi[j].items():
                for i, c in dual_act_column(letter, gen, k).items():
                    v = rhs.get(i)
                    v = s * c if v is None else v + s * c
                    if v:
                        rhs[i] = v
                    else:
                        rhs.pop(i, None)
            if lhs != rhs:
                if report:
                    return False, {"generator": gen, "chain_index": j}
                return False
    return (True, None) if report else True


def cap_from_duality(letter):
    """The pairing rebuilt from the duality route: c' after (iso x id)."""
    letter = str(letter)
    n = LETTER_DIM[letter]
    s = self_duality_scalars(letter)
    word = letter + letter
    cols = {}
    for i in range(n):
        j = n - 1 - i
        cols[i * n + j] = {0: s[i]}
    return LinMap(word, "", cols)


def cup_from_duality(letter):
    """The copairing rebuilt from the duality route: (id x iso^-1) after u."""
    letter = str(letter)
    n = LETTER_DIM[letter]
    s = self_duality_scalars(letter)
    word = letter + letter
    col = {}
    for k in range(n):
        r = n - 1 - k
        col[k * n + r] = unit_inverse(s[r])
    return LinMap("", word, {0: col})
