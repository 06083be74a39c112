"""Exact coefficient arithmetic.

Four layers, all exact:

* ``LaurentPoly``: Z[q, q^-1] as {exponent: coefficient} dicts.
* ``RingElem``: the base ring A = Z[q, q^-1, [2]^-1], stored as a Laurent
  numerator with a power of the quantum two [2] = q + q^-1 in the denominator.
* ``RatFunc``: the fraction field Q(q), used for exact Gaussian elimination.
* ``FieldSpec``: where coefficients get specialised (symbolic Q(q), Q with a
  chosen rational q, or an odd prime field F_p with q an invertible residue).

Quantum integers [n] = (q^n - q^-n)/(q - q^-1) live here too.
"""

from __future__ import annotations

from fractions import Fraction

from ._backend import padd, pdivexact, pmul, pneg, pscale, pshift, psub


class NonDivisible(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class InvalidSpecialization(ValueError):
    """A field specialisation violates q != 0 or q + q^-1 != 0."""


class LaurentPoly:
    """An integer Laurent polynomial in q.

    Immutable by convention; the coefficient dict never contains zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            coeffs = {}
        clean = {}
        for e, c in coeffs.items():
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be ints")
            if c:
                clean[e] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def _raw(cls, coeffs):
        # internal: trusts `coeffs` to be clean already
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def const(cls, n):
        return cls._raw({0: n} if n else {})

    @classmethod
    def qpow(cls, k, c=1):
        return cls._raw({k: c} if c else {})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: 1})

    @property
    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def min_exp(self):
        return min(self.coeffs) if self.coeffs else None

    @property
    def max_exp(self):
        return max(self.coeffs) if self.coeffs else None

    def __add__(self, other):
        return LaurentPoly._raw(padd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return LaurentPoly._raw(psub(self.coeffs, other.coeffs))

    def __neg__(self):
        return LaurentPoly._raw(pneg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._raw(pscale(self.coeffs, other))
        return LaurentPoly._raw(pmul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly._raw(pshift(self.coeffs, k))

    def invert_q(self):
        """The image under q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self.coeffs.items()})

    def content(self):
        """Gcd of the integer coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs.values():
            g = _igcd(g, c)
        return g

    def eval_fraction(self, q):
        """Exact value at q given as a Fraction (q != 0)."""
        total = Fraction(0)
        for e, c in self.coeffs.items():
            total += c * q**e
        return total

    def eval_mod(self, q, p):
        """Exact value at q in F_p (q invertible mod p)."""
        total = 0
        for e, c in self.coeffs.items():
            total += c * pow(q, e, p)
        return total % p

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in sorted(self.coeffs.items()))

    def __repr__(self):
        return f"LaurentPoly({self.coeffs!r})"


def poly_from_str(text):
    """Inverse of str(LaurentPoly): parses "-1*q^-4 + 1*q^0" and "0"."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero()
    coeffs = {}
    for term in text.split(" + "):
        cpart, _, epart = term.partition("*q^")
        if not epart:
            raise ValueError(f"bad Laurent term {term!r}")
        e = int(epart)
        coeffs[e] = coeffs.get(e, 0) + int(cpart)
    return LaurentPoly(coeffs)


TWO = LaurentPoly({1: 1, -1: 1})  # the quantum two [2] = q + q^-1


def qint(n):
    """The quantum integer [n] as a LaurentPoly; [-n] = -[n], [0] = 0."""
    if n < 0:
        return -qint(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


def divide_exact(a, b):
    """Exact quotient of Laurent polynomials; raises NonDivisible."""
    q = pdivexact(a.coeffs, b.coeffs)
    if q is None:
        raise NonDivisible(f"({a}) is not divisible by ({b})")
    return LaurentPoly._raw(q)


_TWO_RAW = TWO.coeffs


class RingElem:
    """An element of A = Z[q, q^-1, [2]^-1]: num / [2]^locpow.

    Canonical form: when locpow > 0 the numerator is not divisible by [2],
    and zero is stored as 0 / [2]^0.
    """

    __slots__ = ("num", "locpow")

    def __init__(self, num, locpow=0):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if locpow < 0:
            raise ValueError("locpow must be >= 0")
        raw = num.coeffs
        if not raw:
            locpow = 0
        else:
            while locpow > 0:
                q = pdivexact(raw, _TWO_RAW)
                if q is None:
                    break
                raw = q
                locpow -= 1
        object.__setattr__(self, "num", LaurentPoly._raw(raw))
        object.__setattr__(self, "locpow", locpow)

    def __setattr__(self, name, value):
        raise AttributeError("RingElem is immutable")

    @classmethod
    def from_poly(cls, p):
        return cls(p, 0)

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one(), 0)

    @classmethod
    def zero(cls):
        return cls(LaurentPoly.zero(), 0)

    @classmethod
    def monomial(cls, c, e):
        return cls(LaurentPoly.qpow(e, c), 0)

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = _coerce_ring(other)
        if other is NotImplemented:
            return NotImplemented
        j, k = self.locpow, other.locpow
        if j == k:
            return RingElem(self.num + other.num, j)
        if j < k:
            return RingElem(self.num * TWO ** (k - j) + other.num, k)
        return RingElem(self.num + other.num * TWO ** (j - k), j)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_ring(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_ring(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        return RingElem(-self.num, self.locpow)

    def __mul__(self, other):
        other = _coerce_ring(other)
        if other is NotImplemented:
            return NotImplemented
        return RingElem(self.num * other.num, self.locpow + other.locpow)

    __rmul__ = __mul__

    def div_by_two(self, k=1):
        """Divide by [2]^k (always possible in A)."""
        return RingElem(self.num, self.locpow + k)

    def __eq__(self, other):
        other = _coerce_ring(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.locpow == other.locpow

    def __hash__(self):
        return hash((self.num, self.locpow))

    def _strip_two(self):
        """Return (core poly dict, multiplicity of [2] in the numerator)."""
        raw = self.num.coeffs
        t = 0
        while raw:
            q = pdivexact(raw, _TWO_RAW)
            if q is None:
                break
            raw = q
            t += 1
        return raw, t

    def __str__(self):
        if self.locpow == 0:
            return str(self.num)
        return f"({self.num})/[2]^{self.locpow}"

    def __repr__(self):
        return f"RingElem({self.num.coeffs!r}, {self.locpow})"


def _coerce_ring(x):
    if isinstance(x, RingElem):
        return x
    if isinstance(x, LaurentPoly):
        return RingElem(x, 0)
    if isinstance(x, int):
        return RingElem(LaurentPoly.const(x), 0)
    return NotImplemented


def ring_from_str(text):
    """Inverse of str(RingElem)."""
    text = text.strip()
    if text.startswith("(") and ")/[2]^" in text:
        inner, _, tail = text.rpartition(")/[2]^")
        return RingElem(poly_from_str(inner[1:]), int(tail))
    return RingElem(poly_from_str(text), 0)


def is_unit(x):
    """True iff x is a unit of A, i.e. x = +-q^a [2]^b with b in Z."""
    x = _coerce_ring(x)
    if x.is_zero:
        return False
    core, _ = x._strip_two()
    if len(core) != 1:
        return False
    (c,) = core.values()
    return c in (1, -1)


def unit_inverse(x):
    """Inverse of a unit of A; raises NonDivisible otherwise."""
    x = _coerce_ring(x)
    core, t = x._strip_two()
    if len(core) != 1:
        raise NonDivisible(f"{x} is not a unit of A")
    ((e, c),) = core.items()
    if c not in (1, -1):
        raise NonDivisible(f"{x} is not a unit of A")
    # x = c q^e [2]^(t - locpow)  =>  x^-1 = c q^-e [2]^(locpow - t)
    b = x.locpow - t
    num = LaurentPoly.qpow(-e, c)
    if b >= 0:
        return RingElem(num * TWO**b, 0)
    return RingElem(num, -b)


def ring_divide_exact(a, b):
    """Exact quotient a/b in A; raises NonDivisible when a/b is not in A."""
    a = _coerce_ring(a)
    b = _coerce_ring(b)
    if b.is_zero:
        raise ZeroDivisionError("division by zero in A")
    core, t = b._strip_two()
    q = pdivexact(a.num.coeffs, core)
    if q is None:
        raise NonDivisible(f"({a}) is not divisible by ({b}) in A")
    num = LaurentPoly._raw(q) * TWO**b.locpow
    return RingElem(num, a.locpow + t)


# ---------------------------------------------------------------------------
# polynomial gcd (dense, over Z after shifting exponents to be nonnegative)


def _igcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _to_dense(p):
    lo = p.min_exp
    hi = p.max_exp
    out = [0] * (hi - lo + 1)
    for e, c in p.coeffs.items():
        out[e - lo] = c
    return out


def _dense_content(v):
    g = 0
    for c in v:
        g = _igcd(g, c)
    return g


def _dense_primitive(v):
    g = _dense_content(v)
    if g > 1:
        v = [c // g for c in v]
    if v and v[-1] < 0:
        v = [-c for c in v]
    return v, g


def _dense_trim(v):
    while v and v[-1] == 0:
        v.pop()
    while v and v[0] == 0:
        v.pop(0)
    return v


def _dense_prem(a, b):
    """Pseudo-remainder of a by b (deg a >= deg b >= 0)."""
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
        la = a[-1]
        shift = len(a) - len(b)
        a = [c * lb for c in a]
        for i, c in enumerate(b):
            a[shift + i] -= la * c
        while a and a[-1] == 0:
            a.pop()
    return a

def poly_gcd(a, b):
    """Gcd in Z[q, q^-1], returned with lowest exponent 0 and positive lead."""
    if a.is_zero and b.is_zero:
        return LaurentPoly.zero()
    if a.is_zero or b.is_zero:
        p = b if a.is_zero else a
        v, _ = _dense_primitive(_dense_trim(_to_dense(p)))
        cont = abs(p.content())
        return LaurentPoly({i: c * cont for i, c in enumerate(v)})
    va, ca = _dense_primitive(_dense_trim(_to_dense(a)))
    vb, cb = _dense_primitive(_dense_trim(_to_dense(b)))
    if len(va) < len(vb):
        va, vb = vb, va
    while vb:
        r = _dense_prem(va, vb)
        r = _dense_trim(r)
        r, _ = _dense_primitive(r)
        va, vb = vb, r
    cont = _igcd(ca, cb)
    return LaurentPoly({i: c * cont for i, c in enumerate(va)})


class RatFunc:
    """An element of Q(q) as a reduced fraction of integer Laurent polys.

    Canonical form: num and den share no polynomial or content factor, the
    denominator has lowest exponent 0 and positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            num, den = LaurentPoly.zero(), LaurentPoly.one()
        else:
            g = poly_gcd(num, den)
            if g.coeffs != {0: 1}:
                num = divide_exact(num, g)
                den = divide_exact(den, g)
            # denominator: lowest exponent 0, leading coefficient positive
            k = den.min_exp
            if k:
                den = den.shift(-k)
                num = num.shift(-k)
            if den.coeffs[den.max_exp] < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def from_ring(cls, x):
        x = _coerce_ring(x)
        return cls(x.num, TWO**x.locpow)

    @classmethod
    def zero(cls):
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one())

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        out = object.__new__(RatFunc)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __mul__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(q)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        other = _coerce_rat(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFunc({self.num.coeffs!r}, {self.den.coeffs!r})"


def _coerce_rat(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (RingElem, LaurentPoly, int)):
        return RatFunc.from_ring(_coerce_ring(x))
    return NotImplemented


# ---------------------------------------------------------------------------
# field specialisations


class FieldSpec:
    """A coefficient field for evaluation: symbolic, rational, or prime.

    Subclasses provide element arithmetic (elements are RatFunc, Fraction or
    int residues respectively) plus `specialize` from RingElem.
    """

    kind = "abstract"

    def specialize(self, x):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return not a

    def describe(self):
        return self.kind

    def __repr__(self):
        return f"<FieldSpec {self.describe()}>"


class SymbolicQq(FieldSpec):
    """The generic field Q(q); no specialisation happens."""

    kind = "Qq"

    def __init__(self):
        self.zero = RatFunc.zero()
        self.one = RatFunc.one()

    def specialize(self, x):
        return RatFunc.from_ring(_coerce_ring(x))

    def __eq__(self, other):
        return isinstance(other, SymbolicQq)

    def __hash__(self):
        return hash(self.kind)


class Rationals(FieldSpec):
    """Q with q sent to a fixed nonzero rational."""

    kind = "QQ"

    def __init__(self, qval):
        qval = Fraction(qval)
        if qval == 0:
            raise InvalidSpecialization("q must be nonzero")
        # q + 1/q = 0 has no rational solution, so [2] is always invertible
        self.qval = qval
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def specialize(self, x):
        x = _coerce_ring(x)
        val = x.num.eval_fraction(self.qval)
        if x.locpow:
            val /= (self.qval + 1 / self.qval) ** x.locpow
        return val

    def describe(self):
        return f"QQ(q={self.qval})"

    def __eq__(self, other):
        return isinstance(other, Rationals) and self.qval == other.qval

    def __hash__(self):
        return hash((self.kind, self.qval))


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class PrimeField(FieldSpec):
    """F_p with q a fixed invertible residue such that q + q^-1 != 0.

    p = 2 is rejected implicitly: there q = 1 and q + q^-1 = 0.
    """

    kind = "Fp"

    def __init__(self, p, qval):
        if not _is_prime(p):
            raise InvalidSpecialization(f"{p} is not prime")
        qval %= p
        if qval == 0:
            raise InvalidSpecialization("q must be invertible mod p")
        if (qval + pow(qval, -1, p)) % p == 0:
            raise InvalidSpecialization(
                f"q + q^-1 = 0 in F_{p} at q = {qval}; [2] is not invertible"
            )
        self.p = p
        self.qval = qval
        self.zero = 0
        self.one = 1

    def specialize(self, x):
        x = _coerce_ring(x)
        p = self.p
        val = x.num.eval_mod(self.qval, p)
        if x.locpow:
            two = (self.qval + pow(self.qval, -1, p)) % p
            val = val * pow(two, -x.locpow, p) % p
        return val

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def div(self, a, b):
        return a * pow(b, -1, self.p) % self.p

    def describe(self):
        return f"F{self.p}(q={self.qval})"

    def __eq__(self, other):
        return (
            isinstance(other, PrimeField)
            and self.p == other.p
            and self.qval == other.qval
        )

    def __hash__(self):
        return hash((self.kind, self.p, self.qval))


def specialize(x, field):
    """Image of a RingElem (or int/LaurentPoly) in the given field."""
    return field.specialize(x)


def field_from_args(name, p=None, q=None):
    """Build a FieldSpec from CLI-style arguments."""
    if name == "Qq":
        return SymbolicQq()
    if name == "QQ":
        return Rationals(q if q is not None else 1)
    if name == "Fp":
        if p is None:
            raise InvalidSpecialization("prime field needs p")
        if q is None:
            raise InvalidSpecialization("prime field needs q")
        return PrimeField(p, int(q))
    raise InvalidSpecialization(f"unknown field kind {name!r}")
