"""Window arithmetic, ring laws, and serialization of QSeries."""

import random
from fractions import Fraction

import pytest

from qhecke.errors import EmptyWindow, NotInvertible, OutOfWindow
from qhecke.qseries import QSeries, _conv_packed, _conv_schoolbook, _convolve


def series(lo, terms, hi=None):
    hi = (max(terms) + 1 if terms else lo + 1) if hi is None else hi
    return QSeries.from_terms(lo, hi, terms)


def naive_product(f, g):
    """Dict-based reference product, independent of the _convolve code path."""
    lo = f.lo + g.lo
    hi = min(f.hi + g.lo, g.hi + f.lo)
    out = {}
    for ef, cf in f.terms():
        for eg, cg in g.terms():
            e = ef + eg
            if lo <= e < hi:
                out[e] = out.get(e, 0) + cf * cg
    return QSeries.from_terms(lo, hi, out)


def random_series(rng, rational=False, span=8):
    lo = rng.randint(-4, 3)
    width = rng.randint(2, span)
    c = []
    for _ in range(width):
        num = rng.randint(-30, 30)
        if rational and rng.random() < 0.4:
            c.append(Fraction(num, rng.randint(1, 12)))
        else:
            c.append(num)
    return QSeries(lo, lo + width, c)


class TestWindows:
    def test_add_window_and_values(self):
        f = series(-1, {-1: 1, 1: 2})
        g = series(-1, {-1: -1, 1: 3})
        s = f + g
        assert (s.lo, s.hi) == (-1, 2)
        assert [s.coeff(e) for e in range(-1, 2)] == [0, 0, 5]

    def test_add_identity_restricts_to_smaller_window(self):
        f = series(0, {0: 4, 2: 7}, hi=3)
        z = QSeries.zero(0, 2)
        s = f + z
        assert (s.lo, s.hi) == (0, 2)
        assert s.coeff(0) == 4

    def test_add_eisenstein_prefixes(self):
        # hand sum of the weight-2 and weight-4 prefixes on the shared window
        e2 = QSeries(0, 2, [1, -24])
        e4 = QSeries(0, 3, [1, 240, 2160])
        s = e2 + e4
        assert (s.lo, s.hi) == (0, 2)
        assert [s.coeff(0), s.coeff(1)] == [2, 216]

    def test_mul_window_rule(self):
        f = QSeries(-1, 0, [1])   # q^-1
        g = QSeries(1, 2, [1])    # q
        p = f * g
        assert (p.lo, p.hi) == (0, 1)
        assert p.coeff(0) == 1

    def test_mul_hand_product(self):
        g = QSeries(1, 5, [1, -8, 12, 64])
        ell = QSeries(-1, 2, [1, -24, 276])
        p = g * ell
        assert (p.lo, p.hi) == (0, 3)
        assert [p.coeff(e) for e in range(3)] == [1, -32, 480]

    def test_mul_by_one(self):
        f = series(-2, {-2: 3, 0: -5}, hi=4)
        assert (f * QSeries.one(6)).equal_on_overlap(f)

    def test_scale(self):
        f = QSeries(0, 3, [4, 24, 24])
        assert f.scale(Fraction(1, 4)).coefficients == (1, 6, 6)
        assert f.scale(0).coefficients == (0, 0, 0)
        assert f.scale(1) is f

    def test_shift(self):
        f = QSeries(0, 2, [1, 1])
        s = f.shift(-2)
        assert (s.lo, s.hi) == (-2, 0)
        assert s.coeff(-2) == 1 and s.coeff(-1) == 1
        assert f.shift(0) is f

    def test_coeff_out_of_window(self):
        f = QSeries(0, 2, [1, 2])
        assert f.coeff(-10) == 0
        with pytest.raises(OutOfWindow):
            f.coeff(2)

    def test_empty_window_rejected(self):
        with pytest.raises(EmptyWindow):
            QSeries(3, 3, [])


class TestInversionAndPowers:
    def test_geometric(self):
        f = QSeries(0, 6, [1, -1, 0, 0, 0, 0])
        assert f.invert().coefficients == (1, 1, 1, 1, 1, 1)

    def test_invert_monomial(self):
        q = QSeries(1, 2, [1])
        inv = q.invert()
        assert (inv.lo, inv.hi) == (-1, 0)
        assert inv.coeff(-1) == 1

    def test_invert_discriminant_prefix(self):
        # unit part of the discriminant; reference values from the linear
        # recurrence b_k = -(sum a_i b_{k-i}) run by hand
        f = QSeries(0, 4, [1, -24, 252, -1472])
        assert f.invert().coefficients == (1, 24, 324, 3200)

    def test_invert_window_rule(self):
        f = QSeries(2, 6, [3, 1, 0, 5])
        inv = f.invert()
        assert (inv.lo, inv.hi) == (-2, 2)
        assert (f * inv).equal_on_overlap(QSeries.one(8))

    def test_invert_requires_unit(self):
        with pytest.raises(NotInvertible):
            QSeries(0, 3, [0, 1, 1]).invert()

    def test_newton_matches_quadratic_path(self):
        rng = random.Random(7)
        # width above the Newton threshold, exercised against small widths
        c = [1] + [rng.randint(-9, 9) for _ in range(99)]
        big = QSeries(0, 100, c).invert()
        small = QSeries(0, 30, c[:30]).invert()
        assert big.coefficients[:30] == small.coefficients

    def test_pow_zero_and_squares(self):
        f = QSeries(0, 3, [1, -1, 0])
        assert (f ** 0) == QSeries.one(3)
        assert (f ** 2).coefficients == (1, -2, 1)

    def test_pow_eta_eighth(self):
        # direct 8-fold product as the oracle
        pent = QSeries.from_terms(0, 8, {0: 1, 1: -1, 2: -1, 5: 1, 7: 1})
        direct = pent
        for _ in range(7):
            direct = direct * pent
        assert (pent ** 8) == direct
        assert (pent ** 8).coefficients[:3] == (1, -8, 20)

    def test_pow_negative(self):
        f = QSeries(0, 5, [1, -1, 0, 0, 0])
        assert (f ** -2).equal_on_overlap(f.invert() * f.invert())


class TestRingLaws:
    def test_commutative_associative_distributive(self):
        rng = random.Random(20240811)
        for _ in range(40):
            f = random_series(rng, rational=True)
            g = random_series(rng, rational=True)
            h = random_series(rng, rational=True)
            assert (f + g).equal_on_overlap(g + f)
            assert (f * g).equal_on_overlap(g * f)
            assert ((f + g) + h).equal_on_overlap(f + (g + h))
            assert ((f * g) * h).equal_on_overlap(f * (g * h))
            assert (f * (g + h)).equal_on_overlap(f * g + f * h)

    def test_mul_matches_naive(self):
        rng = random.Random(99)
        for _ in range(60):
            f = random_series(rng, rational=rng.random() < 0.5)
            g = random_series(rng, rational=rng.random() < 0.5)
            assert (f * g) == naive_product(f, g)

    def test_invert_round_trip(self):
        rng = random.Random(5)
        for _ in range(30):
            f = random_series(rng, rational=True)
            if f.coefficients[0] == 0:
                continue
            assert (f * f.invert()).equal_on_overlap(QSeries.one(20))

    def test_precision_soundness(self):
        # recomputing with wider inputs never changes a guaranteed coefficient
        rng = random.Random(31)
        for _ in range(25):
            lo = rng.randint(-3, 2)
            c = [rng.randint(-20, 20) for _ in range(14)]
            d = [rng.randint(-20, 20) for _ in range(14)]
            f_hi = QSeries(lo, lo + 14, c)
            g_hi = QSeries(0, 14, d)
            f_lo = f_hi.restrict(hi=lo + 7)
            g_lo = g_hi.restrict(hi=7)
            assert (f_hi * g_hi).equal_on_overlap(f_lo * g_lo)
            assert (f_hi + g_hi).equal_on_overlap(f_lo + g_lo)

    def test_canonical_coefficients(self):
        f = QSeries(0, 2, [Fraction(1, 2), 1])
        g = f + f
        assert all(isinstance(c, int) for c in g.coefficients)
        assert g.coeff(0) == 1


class TestConvolutionKernels:
    def test_packed_matches_schoolbook(self):
        rng = random.Random(424242)
        for trial in range(12):
            n = rng.randint(40, 90)
            m = rng.randint(40, 90)
            a = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(n)]
            b = [rng.randint(-10 ** 6, 10 ** 6) for _ in range(m)]
            assert _conv_packed(a, b) == _conv_schoolbook(a, b)

    def test_packed_handles_sparse_and_zero(self):
        a = [0] * 50
        b = [1] * 50
        assert _conv_packed(a, b) == [0] * 99
        a[0] = -1
        a[49] = 1
        assert _conv_packed(a, b) == _conv_schoolbook(a, b)

    def test_convolve_rational_lift(self):
        a = [Fraction(1, 3), 1]
        b = [Fraction(3, 2), 2]
        assert _convolve(a, b) == [Fraction(1, 2), Fraction(13, 6), 2]


class TestIntegralityAndSerialization:
    def test_is_integral(self):
        assert QSeries(0, 2, [1, -3]).is_integral()
        assert not QSeries(0, 2, [Fraction(1, 2), 1]).is_integral()

    def test_json_round_trip(self):
        f = QSeries(-2, 3, [1, 0, Fraction(-7, 3), 0, 12])
        obj = f.to_json_obj()
        assert obj == {"lo": -2, "hi": 3, "coeffs": [[-2, "1"], [0, "-7/3"], [2, "12"]]}
        assert QSeries.from_json_obj(obj) == f

    def test_str(self):
        f = QSeries(-1, 2, [1, -24, 276])
        assert str(f) == "q^-1 - 24 + 276*q + O(q^2)"


class TestRestrict:
    def test_extend_lo_with_known_zeros(self):
        f = QSeries(1, 3, [5, 6])
        w = f.restrict(lo=-1)
        assert (w.lo, w.hi) == (-1, 3)
        assert w.coeff(-1) == 0 and w.coeff(1) == 5

    def test_cannot_drop_nonzero(self):
        f = QSeries(0, 2, [1, 1])
        with pytest.raises(ValueError):
            f.restrict(lo=1)

    def test_normalize_lo(self):
        f = QSeries(-2, 2, [0, 0, 3, 1])
        assert f.normalize_lo().lo == 0
