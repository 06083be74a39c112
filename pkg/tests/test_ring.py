"""Exact arithmetic: Laurent polynomials, the localized ring, fractions,
field specializations, and the compiled/pure kernel pair."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from c2webs import _kernels_py
from c2webs.ring import (
    InvalidSpecialization,
    LaurentPoly,
    NonDivisible,
    PrimeField,
    RatFunc,
    Rationals,
    RingElem,
    SymbolicQq,
    divide_exact,
    field_from_args,
    is_unit,
    poly_from_str,
    qint,
    ring_divide_exact,
    ring_from_str,
    unit_inverse,
)

try:
    from c2webs import _kernels
except ImportError:
    _kernels = None


# ---------------------------------------------------------------------------
# hypothesis strategies

coeffs = st.integers(min_value=-9, max_value=9)
exponents = st.integers(min_value=-6, max_value=6)

poly_dicts = st.dictionaries(exponents, coeffs.filter(bool), max_size=6)
polys = poly_dicts.map(LaurentPoly)
nonzero_polys = polys.filter(bool)

ring_elems = st.builds(
    lambda p, k: RingElem.from_poly(p).div_by_two(k),
    polys,
    st.integers(min_value=0, max_value=3),
)

rat_funcs = st.builds(RatFunc, polys, nonzero_polys)

SMALL = settings(max_examples=60, deadline=None)


# ---------------------------------------------------------------------------
# quantum integers

def test_qint_small_values():
    assert qint(0) == LaurentPoly.zero()
    assert qint(1) == LaurentPoly.one()
    assert qint(2) == LaurentPoly({-1: 1, 1: 1})
    assert qint(3) == LaurentPoly({-2: 1, 0: 1, 2: 1})
    assert qint(-3) == -qint(3)


def test_qint_specializes_to_integer():
    # at q = 1 the quantum integer collapses to the ordinary one
    for n in range(-6, 7):
        assert qint(n).eval_fraction(Fraction(1)) == n


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("n", range(1, 7))
def test_qint_product_rule(m, n):
    # [m][n] is the sum of [m+n-1-2k] for 0 <= k < min(m, n)
    total = LaurentPoly.zero()
    for k in range(min(m, n)):
        total = total + qint(m + n - 1 - 2 * k)
    assert qint(m) * qint(n) == total


@pytest.mark.parametrize("n", range(1, 7))
def test_qint_doubling(n):
    # [2n] = [n] * (q^n + q^-n)
    assert qint(2 * n) == qint(n) * LaurentPoly({n: 1, -n: 1})
    assert divide_exact(qint(2 * n), qint(n)) == qint(n + 1) - qint(n - 1)


def test_circle_scalars():
    # the two loop removal scalars, written as exact ring identities
    assert divide_exact(qint(6) * qint(2), qint(3)) == qint(5) - qint(1)
    lhs = RatFunc(qint(6) * qint(5), qint(3) * qint(2))
    assert lhs == RatFunc(qint(7) - qint(5) + qint(3))
    # the second one lies in the localized ring: clear one [2]
    elem = ring_divide_exact(
        RingElem.from_poly(qint(6) * qint(5)),
        RingElem.from_poly(qint(3)),
    ).div_by_two()
    assert elem == RingElem.from_poly(qint(7) - qint(5) + qint(3))


# ---------------------------------------------------------------------------
# Laurent polynomial ring laws

@SMALL
@given(polys, polys, polys)
def test_poly_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + LaurentPoly.zero() == a
    assert a * LaurentPoly.one() == a
    assert a - a == LaurentPoly.zero()


@SMALL
@given(polys, nonzero_polys)
def test_divide_exact_inverts_multiplication(a, b):
    assert divide_exact(a * b, b) == a


def test_divide_exact_rejects_inexact():
    with pytest.raises(NonDivisible):
        divide_exact(qint(3), qint(2))
    with pytest.raises(ZeroDivisionError):
        divide_exact(qint(3), LaurentPoly.zero())


@SMALL
@given(polys, st.integers(min_value=-5, max_value=5))
def test_poly_shift_and_invert(a, k):
    assert a.shift(k) == a * LaurentPoly.qpow(k)
    assert a.invert_q().invert_q() == a


@SMALL
@given(polys)
def test_poly_str_round_trip(a):
    assert poly_from_str(str(a)) == a


# ---------------------------------------------------------------------------
# the localized ring

@SMALL
@given(ring_elems, ring_elems, ring_elems)
def test_ring_elem_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RingElem.zero()
    assert a * RingElem.one() == a


@SMALL
@given(ring_elems)
def test_ring_elem_canonical_form(a):
    # the [2]-power in the denominator is minimal: [2] never divides num
    # while a power of it remains below
    if a.locpow > 0:
        with pytest.raises(NonDivisible):
            divide_exact(a.num, qint(2))
    if not a.num:
        assert a.locpow == 0


@SMALL
@given(ring_elems)
def test_ring_elem_str_round_trip(a):
    assert ring_from_str(str(a)) == a


@SMALL
@given(ring_elems, st.integers(min_value=0, max_value=3))
def test_div_by_two_cancels(a, k):
    b = a.div_by_two(k)
    two = RingElem.from_poly(qint(2))
    scaled = b
    for _ in range(k):
        scaled = scaled * two
    assert scaled == a


def _unit_samples():
    two = RingElem.from_poly(qint(2))
    for sign in (1, -1):
        for a in range(-3, 4):
            for k in range(-2, 3):
                u = RingElem.monomial(sign, a)
                for _ in range(max(k, 0)):
                    u = u * two
                u = u.div_by_two(max(-k, 0))
                yield u


def test_is_unit_matches_unit_family():
    # units are exactly the monomials times integer powers of [2]
    for u in _unit_samples():
        assert is_unit(u)
        assert u * unit_inverse(u) == RingElem.one()
    for bad in (
        RingElem.zero(),
        RingElem.from_poly(LaurentPoly.const(2)),
        RingElem.from_poly(qint(3)),
        RingElem.from_poly(LaurentPoly({0: 1, 1: 1})),
        RingElem.from_poly(qint(2)) + RingElem.one(),
    ):
        assert not is_unit(bad)
        with pytest.raises(NonDivisible):
            unit_inverse(bad)


@SMALL
@given(ring_elems, ring_elems)
def test_ring_divide_exact_round_trip(a, b):
    if not b:
        return
    assert ring_divide_exact(a * b, b) == a


# ---------------------------------------------------------------------------
# rational functions

@SMALL
@given(rat_funcs, rat_funcs, rat_funcs)
def test_rat_func_field_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RatFunc.zero()
    if b:
        assert (a / b) * b == a
        assert b * b.inverse() == RatFunc.one()


@SMALL
@given(polys, nonzero_polys, nonzero_polys)
def test_rat_func_reduction(a, b, s):
    # common factors never change the value
    assert RatFunc(a * s, b * s) == RatFunc(a, b)


def test_rat_func_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RatFunc(qint(1), LaurentPoly.zero())


# ---------------------------------------------------------------------------
# field specializations

def test_symbolic_field_keeps_exact_values():
    f = SymbolicQq()
    v = f.specialize(RingElem.from_poly(qint(5)).div_by_two())
    assert isinstance(v, RatFunc)
    assert v == RatFunc(qint(5), qint(2))
    assert f.is_zero(f.sub(v, v))
    assert f.zero == RatFunc.zero() and f.one == RatFunc.one()


def test_rational_specialization_values():
    f = Rationals(1)
    r = RingElem.from_poly(qint(5)).div_by_two()
    assert f.specialize(r) == Fraction(5, 2)
    g = Rationals(Fraction(2))
    # [2] at q = 2 is 5/2; [3] is 21/4
    assert g.specialize(RingElem.from_poly(qint(2))) == Fraction(5, 2)
    assert g.specialize(RingElem.from_poly(qint(3))) == Fraction(21, 4)
    with pytest.raises(InvalidSpecialization):
        Rationals(0)


def test_prime_field_frozen_value():
    f = PrimeField(7, 2)
    # [4]/[2] = q^2 + q^-2, which at q = 2 in F_7 is 4 + 2 = 6
    assert f.specialize(RingElem.from_poly(qint(4)).div_by_two()) == 6
    assert f.one == 1 and f.zero == 0


def test_prime_field_rejects_vanishing_two():
    # q + q^-1 = 0 mod 5 at q = 2 and q = 3, so [2] is not invertible there
    for q in (2, 3):
        with pytest.raises(InvalidSpecialization):
            PrimeField(5, q)
    # but q = 4 is fine: 4 + 4^-1 = 4 + 4 = 3 mod 5
    f = PrimeField(5, 4)
    assert f.specialize(RingElem.from_poly(qint(2))) == 3


def test_prime_field_rejects_bad_parameters():
    with pytest.raises(InvalidSpecialization):
        PrimeField(6, 2)
    with pytest.raises(InvalidSpecialization):
        PrimeField(7, 0)


def test_field_from_args():
    assert field_from_args("Qq") == SymbolicQq()
    assert field_from_args("QQ", q="3/2") == Rationals(Fraction(3, 2))
    assert field_from_args("Fp", p=7, q=2) == PrimeField(7, 2)


@SMALL
@given(ring_elems, ring_elems)
def test_specialization_is_a_homomorphism(a, b):
    for f in (Rationals(1), Rationals(Fraction(-2, 3)), PrimeField(7, 3)):
        assert f.specialize(a + b) == f.add(f.specialize(a), f.specialize(b))
        assert f.specialize(a * b) == f.mul(f.specialize(a), f.specialize(b))


# ---------------------------------------------------------------------------
# kernel backends

@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
@SMALL
@given(poly_dicts, poly_dicts, st.integers(-4, 4), st.integers(-6, 6))
def test_kernel_backends_agree(a, b, n, k):
    assert _kernels.padd(a, b) == _kernels_py.padd(a, b)
    assert _kernels.psub(a, b) == _kernels_py.psub(a, b)
    assert _kernels.pneg(a) == _kernels_py.pneg(a)
    assert _kernels.pscale(a, n) == _kernels_py.pscale(a, n)
    assert _kernels.pshift(a, k) == _kernels_py.pshift(a, k)
    assert _kernels.pmul(a, b) == _kernels_py.pmul(a, b)
    if b:
        assert _kernels.pdivexact(a, b) == _kernels_py.pdivexact(a, b)
        assert _kernels.pdivexact(_kernels.pmul(a, b), b) == a


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
def test_kernel_backend_names():
    assert _kernels.BACKEND == "cython"
    assert _kernels_py.BACKEND == "python"


def _backend_in_subprocess(force_pure):
    import os
    import subprocess
    import sys

    env = dict(os.environ)
    env.pop("C2WEBS_PURE", None)
    if force_pure:
        env["C2WEBS_PURE"] = "1"
    proc = subprocess.run(
        [sys.executable, "-c",
         "from c2webs._backend import backend_name; print(backend_name())"],
        capture_output=True, text=True, env=env, check=True, timeout=120,
    )
    return proc.stdout.strip()


def test_environment_flag_forces_pure_backend():
    assert _backend_in_subprocess(force_pure=True) == "python"


@pytest.mark.skipif(_kernels is None, reason="compiled kernels not built")
def test_compiled_backend_selected_by_default():
    assert _backend_in_subprocess(force_pure=False) == "cython"
