"""Canonical family construction, duality, uniqueness, and the cache."""

import json

import pytest

from qhecke.basis import (
    BasisCache,
    build_f,
    build_phi,
    duality_residuals,
    residue_pairing,
)
from qhecke.errors import PrecisionExhausted, UnknownPair
from qhecke.forms import catalog_form


class TestFFamily:
    def test_f_minus_one_is_negated_cusp_form(self):
        elem = build_f(8, 2, -1, 8)
        g = catalog_form(8, 2, "g", 10)
        assert elem.series.equal_on_overlap(-g)
        assert elem.elimination_coeffs == ()

    def test_published_f0(self):
        elem = build_f(8, 2, 0, 5)
        assert [elem.series.coeff(e) for e in range(0, 5)] == [-1, 0, -224, 4096, -31200]
        assert elem.elimination_coeffs == ((-1, 32),)

    def test_published_f1(self):
        elem = build_f(8, 2, 1, 5)
        assert elem.series.coeff(-1) == -1
        assert [elem.series.coeff(e) for e in range(2, 5)] == [2144, -98226, 1817856]
        assert elem.elimination_coeffs == ((0, 24), (-1, -500))

    def test_shape_and_integrality(self):
        for k, n in ((8, 2), (4, 6), (12, 1)):
            for m in (-1, 0, 1, 2, 5, 9):
                elem = build_f(k, n, m, 6)
                s = elem.series
                assert s.coeff(-m) == -1
                for e in range(-m + 1, 2):
                    assert s.coeff(e) == 0
                assert elem.integral and s.is_integral()

    def test_unknown_pair(self):
        with pytest.raises(UnknownPair):
            build_f(2, 32, 1, 6)

    def test_too_small_window(self):
        with pytest.raises(PrecisionExhausted):
            build_f(8, 2, 1, 1)


class TestPhiFamily:
    def test_phi2_matches_catalog(self):
        elem = build_phi(12, 1, 2, 2)
        assert [elem.series.coeff(e) for e in (-2, -1, 0)] == [1, 24, -196560]

    def test_phi3_phi4_via_duality_anchors(self):
        # for (8,2) the coefficients A_n(m) must reproduce the published
        # F_0 and F_1 columns: A_n(0) = C_0(n), A_n(1) = C_1(n), and
        # A_n(-1) = -a(n)
        phi3 = build_phi(8, 2, 3, 3)
        assert phi3.series.coeff(-3) == 1
        assert phi3.series.coeff(-2) == 0
        assert phi3.series.coeff(-1) == -12   # -a(3)
        assert phi3.series.coeff(0) == 4096   # C_0(3)
        assert phi3.series.coeff(1) == -98226  # C_1(3)
        phi4 = build_phi(8, 2, 4, 3)
        assert phi4.series.coeff(-1) == -64      # -a(4)
        assert phi4.series.coeff(0) == -31200    # C_0(4)
        assert phi4.series.coeff(1) == 1817856   # C_1(4)

    def test_elimination_multipliers_recorded(self):
        phi3 = build_phi(8, 2, 3, 3)
        assert phi3.elimination_coeffs == ((2, 16),)
        phi4 = build_phi(8, 2, 4, 3)
        assert phi4.elimination_coeffs == ((3, 24), (2, -264))

    def test_shape_zeros(self):
        elem = build_phi(6, 5, 3, 4)
        assert elem.series.coeff(-3) == 1
        assert elem.series.coeff(-2) == 0

    def test_exact_elimination(self):
        # the reduction ends with exact zeros, never small residues
        for n in range(3, 9):
            elem = build_phi(12, 1, n, 4)
            for e in range(-n + 1, -1):
                assert elem.series.coeff(e) == 0


class TestDuality:
    def test_residuals_zero_small(self):
        for k, n in ((8, 2), (12, 1), (4, 7), (6, 4)):
            res = duality_residuals(k, n, 8, 8)
            assert all(v == 0 for v in res.values()), (k, n)

    def test_pairing_constant_terms_vanish(self):
        for k, n in ((8, 2), (4, 5), (26, 1)):
            pair = residue_pairing(k, n, 6, 6)
            assert all(v == 0 for v in pair.values()), (k, n)

    def test_first_row_is_negated_eigenform(self):
        # C_{-1}(n) = -a(n), so A_n(-1) = -a(n) by duality
        g = catalog_form(8, 2, "g", 12)
        for n in range(2, 11):
            phi = build_phi(8, 2, n, 2)
            assert phi.series.coeff(-1) == -g.coeff(n)

    def test_tau_duality_instance(self):
        phi2 = build_phi(12, 1, 2, 2)
        fneg = build_f(12, 1, -1, 8)
        assert phi2.series.coeff(-1) == 24
        assert fneg.series.coeff(2) == 24  # -tau(2)


class TestUniqueness:
    def test_rebuild_at_two_precisions(self):
        a = build_f(8, 2, 4, 10, cache=BasisCache())
        b = build_f(8, 2, 4, 30, cache=BasisCache())
        assert a.series.equal_on_overlap(b.series)

    def test_phi_rebuild_stability(self):
        a = build_phi(6, 3, 6, 5, cache=BasisCache())
        b = build_phi(6, 3, 6, 25, cache=BasisCache())
        assert a.series.equal_on_overlap(b.series)


class TestCache:
    def test_memory_hit_returns_wider(self):
        cache = BasisCache()
        wide = build_f(8, 2, 1, 40, cache=cache)
        hit = build_f(8, 2, 1, 10, cache=cache)
        assert hit is wide

    def test_disk_round_trip(self, tmp_path):
        cache = BasisCache(tmp_path)
        elem = build_f(8, 2, 1, 12, cache=cache)
        path = tmp_path / "N2_k8" / "F1.json"
        assert path.exists()
        obj = json.loads(path.read_text())
        assert obj["family"] == "F" and obj["index"] == 1

        fresh = BasisCache(tmp_path)
        loaded = fresh.get(8, 2, "F", 1)
        assert loaded is not None
        assert loaded.series == elem.series
        assert loaded.elimination_coeffs == elem.elimination_coeffs

    def test_disk_files_for_negative_index(self, tmp_path):
        cache = BasisCache(tmp_path)
        build_f(4, 5, 0, 8, cache=cache)
        assert (tmp_path / "N5_k4" / "F-1.json").exists()
        assert (tmp_path / "N5_k4" / "F0.json").exists()

    def test_no_partial_files(self, tmp_path):
        cache = BasisCache(tmp_path)
        build_phi(8, 2, 3, 6, cache=cache)
        leftovers = [p for p in (tmp_path / "N2_k8").iterdir() if p.suffix != ".json"]
        assert leftovers == []

    def test_cache_and_fresh_agree(self, tmp_path):
        cache = BasisCache(tmp_path)
        warm = build_f(6, 4, 3, 20, cache=cache)
        again = build_f(6, 4, 3, 20, cache=BasisCache(tmp_path))
        cold = build_f(6, 4, 3, 20, cache=BasisCache())
        assert warm.series.equal_on_overlap(cold.series)
        assert again.series.equal_on_overlap(cold.series)
