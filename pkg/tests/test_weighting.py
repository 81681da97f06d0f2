import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import BENEFIT, matrices
from mcdm_compare import (
    DegeneratePV,
    InputError,
    WeightingMethod,
    WeightVector,
    ZeroCriteria,
    entropy_weights,
    equal_weights,
    lopcow_weights,
    merec_weights,
    spc_weights,
    validate_matrix,
)
from mcdm_compare.errors import InvalidWeights
from mcdm_compare.weighting import (
    OBJECTIVE_METHODS,
    compute_weights,
    entropy_intermediates,
    lopcow_intermediates,
    max_min_ratios,
    merec_intermediates,
    spc_intermediates,
)


def mat(values, dirs=None):
    values = np.asarray(values, dtype=float)
    m, n = values.shape
    return validate_matrix(
        [f"A{i}" for i in range(m)], [f"C{j}" for j in range(n)], values,
        directions=dirs or ["max"] * n,
    )


def benefit_of(matrix):
    return [bool(b) for b in matrix.benefit]


class TestFrozenOracles:
    def test_equal(self):
        np.testing.assert_array_equal(equal_weights(4).weights, [0.25] * 4)
        with pytest.raises(ZeroCriteria):
            equal_weights(0)

    def test_entropy_2x2(self):
        w = entropy_weights(mat([[1, 2], [3, 4]])).weights
        np.testing.assert_allclose(w, [0.4974797481062085, 0.5025202518937915], rtol=1e-12)

    def test_merec_proportional_columns(self):
        w = merec_weights(mat([[1, 2], [2, 4], [4, 8]])).weights
        np.testing.assert_allclose(w, [0.5, 0.5], rtol=1e-12)

    def test_lopcow_scaled_columns(self):
        m = mat([[1, 10], [2, 20], [3, 30]])
        np.testing.assert_allclose(lopcow_weights(m, std_scaled=False).weights, [0.5, 0.5], rtol=1e-12)
        np.testing.assert_allclose(
            lopcow_weights(m).weights, [0.0847589881390797, 0.9152410118609202], rtol=1e-12
        )

    def test_spc_single_column(self):
        i = spc_intermediates(mat([[1], [3]]))
        np.testing.assert_allclose(i.SPC_j, [2.0])
        np.testing.assert_allclose(i.R[:, 0], [1.0, 1 / 3])
        np.testing.assert_allclose(i.Q, [2 / 3])
        np.testing.assert_allclose(spc_weights(mat([[1], [3]])).weights, [1.0])


class TestBankAgainstOracles:
    def test_entropy(self, bank, bank_rows):
        np.testing.assert_allclose(
            entropy_weights(bank).weights, oracles.entropy_weights(bank_rows), rtol=1e-10
        )

    def test_merec(self, bank, bank_rows):
        np.testing.assert_allclose(
            merec_weights(bank).weights, oracles.merec_weights(bank_rows, BENEFIT), rtol=1e-10
        )

    @pytest.mark.parametrize("std_scaled", [True, False])
    def test_lopcow(self, bank, bank_rows, std_scaled):
        np.testing.assert_allclose(
            lopcow_weights(bank, std_scaled).weights,
            oracles.lopcow_weights(bank_rows, BENEFIT, std_scaled),
            rtol=1e-10,
        )

    def test_spc(self, bank, bank_rows):
        np.testing.assert_allclose(spc_weights(bank).weights, oracles.spc_weights(bank_rows), rtol=1e-10)

    def test_entropy_frozen(self, bank):
        expected = [0.18094296443774296, 0.19257839213616557, 0.1115698749015363,
                    0.09202040357029273, 0.15349296491336406, 0.0949220598261418,
                    0.17447334021475666]
        np.testing.assert_allclose(entropy_weights(bank).weights, expected, rtol=1e-12)


class TestIntermediates:
    def test_entropy_nij(self, bank):
        i = entropy_intermediates(bank)
        x = bank.values[:, 0]
        assert i.n_ij[0, 0] == pytest.approx(x[0] / (19 + (x**2).sum()))
        assert np.all(i.e_j < 1)

    def test_entropy_sign_variant_differs(self, bank):
        a = entropy_weights(bank, "minus").weights
        b = entropy_weights(bank, "plus").weights
        assert np.abs(a - b).max() > 1e-3

    def test_merec(self, bank):
        i = merec_intermediates(bank)
        assert i.n_ij.max() == pytest.approx(1.0) and i.n_ij.min() > 0
        # best value in each column maps to 1
        assert np.allclose(i.n_ij.max(axis=0), 1.0)
        assert i.S_prime.shape == (19, 7)
        assert np.all(i.S_prime <= i.S_i[:, None] + 1e-15)

    def test_lopcow(self, bank):
        i = lopcow_intermediates(bank)
        assert i.r_ij.min() == 0 and i.r_ij.max() == 1
        assert np.all(i.PV_j >= 0)

    def test_spc(self, bank):
        i = spc_intermediates(bank)
        assert i.D.shape == i.R.shape == (19, 7)
        np.testing.assert_allclose(i.Q, i.R.mean(axis=0))


class TestWeightVector:
    def test_simplex_enforced(self):
        with pytest.raises(InvalidWeights):
            WeightVector(WeightingMethod.EXTERNAL, np.array([0.5, 0.6]))
        with pytest.raises(InvalidWeights):
            WeightVector(WeightingMethod.EXTERNAL, np.array([1.5, -0.5]))

    def test_external_normalize(self):
        w = WeightVector.external([1, 3], normalize=True)
        np.testing.assert_allclose(w.weights, [0.25, 0.75])
        assert w.method is WeightingMethod.EXTERNAL

    def test_external_cannot_be_computed(self, bank):
        with pytest.raises(InvalidWeights):
            compute_weights(bank, "external")

    def test_parse_names(self):
        assert WeightingMethod.parse("lopcow") is WeightingMethod.LOPCOW
        with pytest.raises(InputError):
            WeightingMethod.parse("critic")

    def test_max_min_ratios(self):
        a = WeightVector.external([0.2, 0.8])
        b = WeightVector.external([0.4, 0.6])
        np.testing.assert_allclose(max_min_ratios([a, b]), [2.0, 0.8 / 0.6])


class TestDegenerate:
    def test_lopcow_all_pv_zero(self):
        # two rows a, a + sqrt(2): rms of (0, 1) equals the population std
        b = 1 + np.sqrt(2)
        with pytest.raises(DegeneratePV):
            lopcow_weights(mat([[b - np.sqrt(2), 0.5], [b, 0.5 + np.sqrt(2)]]))


class TestProperties:
    @given(matrices(), st.sampled_from(OBJECTIVE_METHODS))
    def test_simplex(self, m, method):
        try:
            w = compute_weights(m, method).weights
        except DegeneratePV:
            return
        assert np.all(w >= 0)
        assert abs(w.sum() - 1) <= 1e-9

    @given(matrices(min_n=2), st.sampled_from(OBJECTIVE_METHODS), st.randoms())
    def test_column_permutation_equivariance(self, m, method, rnd):
        perm = list(range(m.n))
        rnd.shuffle(perm)
        try:
            w = compute_weights(m, method).weights
        except DegeneratePV:
            return
        wp = compute_weights(m.take_columns(perm), method).weights
        np.testing.assert_allclose(wp, w[perm], rtol=1e-9, atol=1e-12)

    @given(matrices(), st.sampled_from(OBJECTIVE_METHODS), st.randoms())
    def test_row_order_invariance(self, m, method, rnd):
        perm = list(range(m.m))
        rnd.shuffle(perm)
        try:
            w = compute_weights(m, method).weights
        except DegeneratePV:
            return
        np.testing.assert_allclose(
            compute_weights(m.take_rows(perm), method).weights, w, rtol=1e-9, atol=1e-12
        )

    @given(matrices(max_n=1), st.integers(2, 6))
    def test_identical_columns_equal_weights(self, m, k):
        col = m.values[:, 0]
        dup = validate_matrix(
            m.alternatives, [f"C{j}" for j in range(k)], np.tile(col[:, None], (1, k)),
            directions=[m.directions[0].value] * k,
        )
        for method in OBJECTIVE_METHODS:
            try:
                w = compute_weights(dup, method).weights
            except DegeneratePV:
                continue
            np.testing.assert_allclose(w, 1 / k, rtol=1e-9)

    @given(matrices(min_n=2, max_n=4), st.floats(0.1, 10), st.sampled_from(OBJECTIVE_METHODS))
    def test_oracle_agreement(self, m, _, method):
        rows = m.values.tolist()
        b = benefit_of(m)
        expected = {
            "Equal": lambda: [1 / m.n] * m.n,
            "Entropy": lambda: oracles.entropy_weights(rows),
            "MEREC": lambda: oracles.merec_weights(rows, b),
            "LOPCOW": lambda: oracles.lopcow_weights(rows, b),
            "SPC": lambda: oracles.spc_weights(rows),
        }[method.value]
        try:
            got = compute_weights(m, method).weights
        except DegeneratePV:
            return
        np.testing.assert_allclose(got, expected(), rtol=1e-8, atol=1e-12)

    @given(matrices(min_n=2), st.lists(st.floats(0.1, 10), min_size=8, max_size=8))
    def test_scale_invariance(self, m, factors):
        # MEREC, SPC and unscaled LOPCOW depend only on within-column ratios
        f = np.asarray(factors[: m.n])
        scaled = validate_matrix(m.alternatives, m.criteria, m.values * f)
        for fn in (merec_weights, spc_weights, lambda x: lopcow_weights(x, std_scaled=False)):
            try:
                w = fn(m).weights
            except DegeneratePV:
                continue
            np.testing.assert_allclose(fn(scaled).weights, w, rtol=1e-7, atol=1e-10)
